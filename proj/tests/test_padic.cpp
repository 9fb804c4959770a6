#include <doctest.h>

#include "dwork/padic.hpp"

using namespace dwork;

TEST_CASE("finite-precision integers: arithmetic, valuation, truncation") {
    PadicInt a(3, 3, 18), b(3, 3, 5);
    CHECK(a.modulus() == 27);
    CHECK(a.valuation() == 2);
    CHECK_FALSE(a.is_unit());
    CHECK(b.is_unit());
    CHECK((a + b).residue() == 23);
    CHECK((a * b).residue() == 9);
    CHECK((b - b).valuation() == 3);  // zero residue is capped at the precision
    CHECK(a.truncate(1).residue() == 0);
    CHECK(b.truncate(2).residue() == 5);
    CHECK_THROWS_AS(b.truncate(4), std::invalid_argument);
    CHECK_THROWS_AS(PadicInt(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PadicInt(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(a + PadicInt(5, 3, 1), std::invalid_argument);
}

TEST_CASE("inverses of units") {
    CHECK(unit_inverse(PadicInt(5, 2, 2)).residue() == 13);
    CHECK(PadicInt(7, 3, 3).inverse().residue() * 3 % 343 == 1);
    CHECK_THROWS(PadicInt(5, 2, 10).inverse());
}

TEST_CASE("multiplicative lifts are fixed by the Frobenius") {
    CHECK(teichmuller(2, 5, 2).residue() == 7);
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (unsigned prec = 1; prec <= 6; ++prec) {
            for (uint64_t a = 1; a < p; ++a) {
                const PadicInt w = teichmuller(a, p, prec);
                PadicInt wp = w;
                for (uint64_t i = 1; i < p; ++i) wp = wp * w;
                CHECK(wp == w);
                CHECK(w.residue() % p == a);
            }
        }
    }
    CHECK_THROWS_AS(teichmuller(10, 5, 2), std::invalid_argument);
}

TEST_CASE("convergence-domain membership") {
    // Level-1 half polynomial at p=3 is 1 + x, vanishing at x = 2.
    CHECK(domain_membership(PadicInt(3, 1, 1), DomainTag::HalfD));
    CHECK_FALSE(domain_membership(PadicInt(3, 1, 2), DomainTag::HalfD));
    // At p=5 the level-1 half polynomial 1 + 4x + x^2 has no root.
    for (uint64_t a = 0; a < 5; ++a)
        CHECK(domain_membership(PadicInt(5, 1, a), DomainTag::HalfD));
    CHECK(domain_membership({PadicInt(5, 1, 1), PadicInt(5, 1, 2), PadicInt(5, 1, 3)},
                            DomainTag::KzD));
}

TEST_CASE("unit-root ratios form a Cauchy sequence of units") {
    const PadicInt x = teichmuller(2, 5, 4);
    const UnitRootTrace tr = unit_root(x, FamilyTag::Half, 3);
    CHECK(tr.unit_ok);
    CHECK(tr.cauchy_ok);
    CHECK(tr.ratios.size() == 3);
    for (unsigned s = 1; s < 3; ++s) CHECK(tr.delta_valuations[s - 1] >= s);
    CHECK_THROWS_AS(unit_root(PadicInt(5, 2, 2), FamilyTag::Half, 3), std::invalid_argument);
}

TEST_CASE("point counts on Legendre curves") {
    CHECK(legendre_point_count(2, 5) == -2);
    CHECK_THROWS_AS(legendre_point_count(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(legendre_point_count(6, 5), std::invalid_argument);
    // Hasse bound.
    for (uint64_t p : {3ull, 7ull, 11ull}) {
        for (int64_t a = 2; a < static_cast<int64_t>(p); ++a) {
            const int64_t ap = legendre_point_count(a, p);
            CHECK(ap * ap <= 4 * static_cast<int64_t>(p));
        }
    }
}

TEST_CASE("unit root satisfies the Frobenius quadratic from the point count") {
    CHECK(frobenius_quadratic_check(2, 5, 3).pass);
    CHECK(frobenius_quadratic_check(3, 7, 2).pass);
    CHECK(frobenius_quadratic_check(3, 11, 2).pass);
}

TEST_CASE("series truncation has the expected low-order coefficients") {
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            const DworkTruncation tr = dwork_truncation(p, s);
            mpz_class mod;
            mpz_ui_pow_ui(mod.get_mpz_t(), p, s);
            CHECK(tr.F.coeff(0) == 1);
            // Coefficient of x is C(2,1)^2 / 16 = 1/4.
            mpz_class inv4;
            mpz_invert(inv4.get_mpz_t(), mpz_class(4).get_mpz_t(), mod.get_mpz_t());
            CHECK(tr.F.coeff(1) == inv4);
            CHECK(tr.g.degree() == static_cast<long>((p - 1) / 2));
        }
    }
}

TEST_CASE("ratio of full series matches the polynomial ratio one level down") {
    CHECK(limits_agree_check(3, 2, {PadicInt(3, 2, 1)}).pass);
    CHECK(limits_agree_check(5, 2, {PadicInt(5, 2, 1), PadicInt(5, 2, 2), PadicInt(5, 2, 3)})
              .pass);
    CHECK_THROWS_AS(limits_agree_check(3, 2, {PadicInt(3, 2, 2)}), std::invalid_argument);
}
