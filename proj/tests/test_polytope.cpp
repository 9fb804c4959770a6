#include <doctest.h>

#include <algorithm>
#include <random>

#include "dwork/polytope.hpp"

using namespace dwork;

namespace {

LaurentPoly trinomial_centered() {
    LaurentPoly L(1, 0);
    L.add_term(ExpVector({-1}, {}), 1);
    L.add_term(ExpVector({0}, {}), 1);
    L.add_term(ExpVector({1}, {}), 1);
    return L;
}

LaurentPoly trinomial_shifted() {
    LaurentPoly L(1, 0);
    L.add_term(ExpVector({0}, {}), 1);
    L.add_term(ExpVector({1}, {}), 1);
    L.add_term(ExpVector({2}, {}), 1);
    return L;
}

}  // namespace

TEST_CASE("dimension-1 membership agrees with the interval and the LP path") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        std::set<LatticePolytope::Point> gens;
        const unsigned n = 1 + rng() % 4;
        for (unsigned i = 0; i < n; ++i)
            gens.insert({static_cast<int64_t>(rng() % 21) - 10});
        LatticePolytope P(1, gens);
        const int64_t lo = P.box_min()[0], hi = P.box_max()[0];
        for (int64_t x = -12; x <= 12; ++x) {
            const bool expect = (x >= lo && x <= hi);
            CHECK(P.contains({x}) == expect);
            CHECK(P.contains_lp({x}) == expect);
        }
    }
}

TEST_CASE("two-dimensional hull membership via the LP path") {
    LatticePolytope tri(2, {{0, 0}, {4, 0}, {0, 4}});
    CHECK(tri.contains_lp({1, 1}));
    CHECK(tri.contains_lp({2, 2}));
    CHECK(tri.contains_lp({0, 4}));
    CHECK_FALSE(tri.contains_lp({3, 2}));
    CHECK_FALSE(tri.contains_lp({-1, 0}));
    CHECK(tri.box_min() == LatticePolytope::Point{0, 0});
    CHECK(tri.box_max() == LatticePolytope::Point{4, 4});
}

TEST_CASE("weighted Minkowski sums add scaled bounding boxes") {
    LatticePolytope A(1, {{-1}, {1}});
    LatticePolytope B(1, {{0}, {2}});
    const LatticePolytope S = weighted_minkowski_sum({A, B}, {1, 3});
    CHECK(S.box_min() == LatticePolytope::Point{-1});
    CHECK(S.box_max() == LatticePolytope::Point{7});
    CHECK(S.contains({3}));
    CHECK_FALSE(S.contains({8}));
}

TEST_CASE("lattice intersection triviality in dimension 1") {
    CHECK(polytope_lattice_intersection_trivial(LatticePolytope(1, {{-2}, {2}}), 3));
    CHECK_FALSE(polytope_lattice_intersection_trivial(LatticePolytope(1, {{0}, {4}}), 3));
    CHECK(polytope_lattice_intersection_trivial(LatticePolytope(1, {{-1}, {1}}), 2));
    // Origin outside the hull also fails the test.
    CHECK_FALSE(polytope_lattice_intersection_trivial(LatticePolytope(1, {{1}, {2}}), 5));
}

TEST_CASE("newton polytope tracks the t support") {
    const LatticePolytope P = newton_polytope_t(trinomial_centered());
    CHECK(P.dim() == 1);
    CHECK(P.box_min() == LatticePolytope::Point{-1});
    CHECK(P.box_max() == LatticePolytope::Point{1});
}

TEST_CASE("admissibility of singleton and repeated tuples") {
    const LaurentPoly c = trinomial_centered();
    const LaurentPoly sh = trinomial_shifted();
    CHECK(is_admissible_tuple({c}, 3));
    CHECK(is_admissible_tuple({sh}, 5));
    CHECK(is_admissible_tuple({c, c, c}, 3));
    // Support {0, 3} meets 3Z away from the origin.
    LaurentPoly bad(1, 0);
    bad.add_term(ExpVector({0}, {}), 1);
    bad.add_term(ExpVector({3}, {}), 1);
    CHECK_FALSE(is_admissible_tuple({bad}, 3));
    CHECK(admissibility_failure({bad}, 3) == std::pair<int, int>(0, 0));
    CHECK(admissibility_failure({c, c}, 3) == std::pair<int, int>(-1, -1));
    // A good first entry does not rescue a bad second: the first failing
    // window ends at the bad position.
    const auto w = admissibility_failure({c, bad}, 3);
    CHECK(w != std::pair<int, int>(-1, -1));
    CHECK(w.second == 1);
}
