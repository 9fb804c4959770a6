#include <doctest.h>

#include "dwork/hyperg.hpp"

using namespace dwork;

TEST_CASE("base-p digit expansions of negative rationals") {
    const auto d = padic_digit_expansion(-1, 3, 5, 1);
    CHECK(d.digits == std::vector<unsigned>{3});
    CHECK(d.truncated == 3);
    const auto e = padic_digit_expansion(-1, 2, 3, 3);
    CHECK(e.digits == std::vector<unsigned>{1, 1, 1});
    CHECK(e.truncated == 13);  // (3^3 - 1) / 2
    CHECK_THROWS_AS(padic_digit_expansion(1, 3, 3, 2), std::invalid_argument);
}

TEST_CASE("exponent residues land in [1, p^s]") {
    const auto r = exponent_residues(family_triple(FamilyTag::Half), 3, 2);
    CHECK(r[0] == 4);
    CHECK(r[1] == 4);
    CHECK(r[2] == 4);
    const auto q = exponent_residues(family_triple(FamilyTag::ThirdQ), 7, 1);
    CHECK(q[0] == 2);
    CHECK(q[1] == 2);
    CHECK(q[2] == 4);
}

TEST_CASE("family metadata") {
    CHECK(family_has_master(FamilyTag::Half));
    CHECK_FALSE(family_has_master(FamilyTag::Fifth41));
    CHECK(family_compatible(FamilyTag::Half, 3));
    CHECK_FALSE(family_compatible(FamilyTag::ThirdQ, 3));
    CHECK_FALSE(family_compatible(FamilyTag::Fifth32, 5));
    CHECK(family_compatible(FamilyTag::Fifth41, 7));
}

TEST_CASE("known small family polynomials") {
    CHECK(family_polynomial(FamilyTag::Half, 5, 1) == Upoly({1, 4, 1}));
    CHECK(family_polynomial(FamilyTag::Half, 3, 2) == Upoly({1, 16, 36, 16, 1}));
    CHECK(family_polynomial(FamilyTag::ThirdQ, 7, 1) == Upoly({1, 8, 6}));
    CHECK(family_polynomial(FamilyTag::ThirdQ, 5, 1) == Upoly({-1, -3}));
    CHECK(family_polynomial(FamilyTag::Half, 3, 0) == Upoly::constant(1));
    CHECK(qbar_polynomial(5, 1) == Upoly({1, 3}));
    CHECK(pbar_polynomial(5, 1) == Upoly({1, 4, 1}));
}

TEST_CASE("the two thirds families give the same polynomial") {
    for (uint64_t p : {5ull, 7ull})
        for (unsigned s = 1; s <= 2; ++s)
            CHECK(family_polynomial(FamilyTag::ThirdQ, p, s) ==
                  family_polynomial(FamilyTag::ThirdR, p, s));
}

TEST_CASE("closed form and expansion agree inside approx_polynomial") {
    // approx_polynomial throws if its two internal routes disagree.
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            for (FamilyTag tag : {FamilyTag::Half, FamilyTag::ThirdQ, FamilyTag::ThirdR}) {
                if (!family_compatible(tag, p)) continue;
                CHECK_NOTHROW(approx_polynomial(family_triple(tag), p, s));
            }
        }
    }
}

TEST_CASE("product congruence between consecutive levels") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            const Upoly Pn = family_polynomial(FamilyTag::Half, p, s + 1);
            const Upoly Pm = family_polynomial(FamilyTag::Half, p, s - 1);
            const Upoly Ps = family_polynomial(FamilyTag::Half, p, s);
            CHECK(product_congruence(Pn, Pm, Ps, Ps, p, s, "half product").pass);
        }
    }
}

TEST_CASE("shifted coefficients satisfy the reflection identity") {
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            for (int64_t j = 0; j <= 3; ++j) {
                std::vector<mpz_class> mono(static_cast<size_t>(j) + 1, 0);
                mono.back() = 1;
                CHECK(c_coefficient(p, s, -j) == c_coefficient(p, s, j) * Upoly(mono));
            }
        }
    }
}

TEST_CASE("refined coefficient congruences") {
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            mpz_class bound = 1;
            for (unsigned i = 0; i + 1 < s; ++i) bound *= static_cast<unsigned long>(p);
            const int64_t K = mpz_class((bound - 1) / 2).get_si();
            for (int64_t k = -K; k <= K; ++k) CHECK(verify_Ck(p, s, k).pass);
        }
    }
}

TEST_CASE("Lucas-type factorization of the unsigned polynomial mod p") {
    for (uint64_t p : {3ull, 5ull}) {
        for (unsigned s = 2; s <= 3; ++s) {
            Upoly prod = Upoly::constant(1);
            unsigned q = 1;
            for (unsigned i = 0; i < s; ++i) {
                prod = prod * pbar_polynomial(p, 1).substitute_power(q);
                q *= static_cast<unsigned>(p);
            }
            CHECK((pbar_polynomial(p, s) - prod).is_zero_mod(static_cast<unsigned long>(p)));
        }
    }
}

TEST_CASE("differential operator annihilates the family polynomials mod p^s") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (unsigned s = 1; s <= 2; ++s) {
            const Upoly P = family_polynomial(FamilyTag::Half, p, s);
            CHECK(hyp_ode_residual(family_triple(FamilyTag::Half), P, p, s).pass);
            // A perturbed polynomial must fail.
            Upoly bad = P + Upoly::x();
            CHECK_FALSE(hyp_ode_residual(family_triple(FamilyTag::Half), bad, p, s).pass);
        }
    }
    CHECK(hyp_ode_residual(family_triple(FamilyTag::ThirdQ),
                           family_polynomial(FamilyTag::ThirdQ, 7, 2), 7, 2)
              .pass);
}

TEST_CASE("squared-binomial polynomials and the shifted-index congruence") {
    CHECK(a_poly(2) == Upoly({1, 4, 1}));
    CHECK(typeII_check(1, 1, 3, 1).pass);
    CHECK(typeII_check(2, 1, 5, 1).pass);
    CHECK(typeII_check(5, 2, 3, 2).pass);
    CHECK(typeII_check(7, 1, 5, 2).pass);
    CHECK(typeII_check(12, 3, 3, 2).pass);
}

TEST_CASE("fifths suite across both residue classes") {
    for (uint64_t p : {7ull, 11ull}) {
        for (const auto& rep : fifths_suite(p, 2)) CHECK(rep.pass);
    }
}
