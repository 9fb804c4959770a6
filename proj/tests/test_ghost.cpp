#include <doctest.h>

#include <algorithm>

#include "dwork/ghost.hpp"
#include "dwork/polytope.hpp"

using namespace dwork;

namespace {

LaurentPoly trinomial_centered() {
    LaurentPoly L(1, 1);
    L.add_term(ExpVector({-1}, {0}), 1);
    L.add_term(ExpVector({0}, {0}), 1);
    L.add_term(ExpVector({1}, {0}), 1);
    return L;
}

LaurentPoly binomial_z() {
    LaurentPoly L(1, 1);
    L.add_term(ExpVector({0}, {0}), 1);
    L.add_term(ExpVector({1}, {1}), 1);  // 1 + z t
    return L;
}

bool divisible_by(const LaurentPoly& a, uint64_t p, unsigned m) {
    mpz_class pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
    for (const auto& [e, c] : a.terms())
        if (!mpz_divisible_p(c.get_mpz_t(), pm.get_mpz_t())) return false;
    return true;
}

unsigned factorial(unsigned k) { return k == 0 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST_CASE("index tuple enumeration counts and validity") {
    for (unsigned k = 1; k <= 6; ++k) {
        const auto all = enumerate_index_tuples(k, false);
        CHECK(all.size() == factorial(k));
        for (const auto& m : all) CHECK(index_tuple_valid(m));
        const auto ind = enumerate_index_tuples(k, true);
        // Cross-check: a tuple is indecomposable iff its factorization is itself.
        size_t brute = 0;
        for (const auto& m : all)
            if (factor_index_tuple(m).size() == 1) ++brute;
        CHECK(ind.size() == brute);
        for (const auto& m : ind) CHECK(index_tuple_indecomposable(m));
    }
    CHECK_FALSE(index_tuple_valid({0, 2}));  // m_1 must be <= 1
}

TEST_CASE("indecomposable tuples have large weight") {
    for (unsigned k = 1; k <= 6; ++k) {
        for (const auto& m : enumerate_index_tuples(k, true)) {
            unsigned total = 0;
            for (unsigned v : m) total += v;
            CHECK(total >= k - 1);
        }
    }
}

TEST_CASE("a weight-2 tuple of length 3 can still be indecomposable") {
    CHECK(index_tuple_indecomposable({0, 0, 2}));
    CHECK(factor_index_tuple({0, 0, 2}).size() == 1);
}

TEST_CASE("factorization concatenates back to the original tuple") {
    for (unsigned k = 1; k <= 5; ++k) {
        for (const auto& m : enumerate_index_tuples(k, false)) {
            IndexTuple joined;
            for (const auto& f : factor_index_tuple(m)) {
                CHECK(index_tuple_indecomposable(f));
                joined.insert(joined.end(), f.begin(), f.end());
            }
            CHECK(joined == m);
        }
    }
}

TEST_CASE("ghost terms are divisible by the expected prime power") {
    const LaurentPoly L = trinomial_centered();
    const LaurentPoly Z = binomial_z();
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned m = 1; m <= 3; ++m) {
            CHECK(divisible_by(ghost_term(L, m, p), p, m));
            if (m <= 2) CHECK(divisible_by(ghost_term(Z, m, p), p, m));
        }
    }
    // R_0 is the polynomial itself.
    CHECK(ghost_term(L, 0, 3) == L);
}

TEST_CASE("ghost term of the centered trinomial has bounded support") {
    const LaurentPoly R = ghost_term(trinomial_centered(), 2, 3);
    const auto P = newton_polytope_t(R);
    CHECK(P.box_min()[0] >= -9);
    CHECK(P.box_max()[0] <= 9);
}

TEST_CASE("composed ghosts over full index sets are divisible by p^|m|") {
    const PolyTuple lambda = {trinomial_centered(), trinomial_centered(), binomial_z()};
    for (const auto& m : enumerate_index_tuples(3, false)) {
        unsigned total = 0;
        for (unsigned v : m) total += v;
        CHECK(divisible_by(composed_ghost(lambda, m, 3), 3, total));
    }
}

TEST_CASE("tuple sums of indecomposable ghosts gain one extra power") {
    const PolyTuple l2 = {trinomial_centered(), binomial_z()};
    const PolyTuple l3 = {trinomial_centered(), trinomial_centered(), trinomial_centered()};
    CHECK(divisible_by(i_lambda(l2, 3), 3, 1));
    CHECK(divisible_by(i_lambda(l3, 3), 3, 2));
    CHECK(divisible_by(i_lambda(l3, 5), 5, 2));
}

TEST_CASE("exact decomposition and constant-term factorization") {
    const PolyTuple tuples[] = {
        {trinomial_centered()},
        {trinomial_centered(), binomial_z()},
        {binomial_z(), binomial_z(), binomial_z()},
    };
    for (uint64_t p : {3ull, 5ull}) {
        for (const auto& lambda : tuples) {
            CHECK(verify_ghost_decomposition(lambda, p).pass);
            CHECK(verify_ct_factorization(lambda, p).pass);
        }
    }
}

TEST_CASE("tuple congruence rejects inadmissible inputs") {
    LaurentPoly bad(1, 1);
    bad.add_term(ExpVector({0}, {0}), 1);
    bad.add_term(ExpVector({3}, {0}), 1);
    const PolyTuple a = {bad};
    const PolyTuple b = {trinomial_centered()};
    CHECK_THROWS_AS(verify_dwork_tuple_congruence(a, b, b, 3), std::invalid_argument);
}

TEST_CASE("tuple congruence holds on admissible examples") {
    const PolyTuple a = {binomial_z(), trinomial_centered()};
    const PolyTuple b = {trinomial_centered()};
    const PolyTuple c = {trinomial_centered(), trinomial_centered()};
    for (uint64_t p : {3ull, 5ull}) {
        const auto rep = verify_dwork_tuple_congruence(a, b, c, p);
        CHECK(rep.pass);
        CHECK(rep.s == 2);  // modulus is p^{l(a)}
    }
}

TEST_CASE("digit-power constant-term congruence") {
    // This check wants a polynomial in t alone.
    LaurentPoly L(1, 0);
    L.add_term(ExpVector({-1}, {}), 1);
    L.add_term(ExpVector({0}, {}), 1);
    L.add_term(ExpVector({1}, {}), 1);
    CHECK(verify_mellit(L, {1, 2}, {1}, {2}, 3).pass);
    CHECK(verify_mellit(L, {2, 1, 2}, {1, 1}, {2}, 3).pass);
    CHECK(verify_mellit(L, {3, 4}, {2}, {1, 3}, 5).pass);
    // Digits must stay in [1, p-1].
    CHECK_THROWS_AS(verify_mellit(L, {0, 1}, {1}, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(verify_mellit(L, {1}, {3}, {1}, 3), std::invalid_argument);
}
