#include <doctest.h>

#include <random>

#include "dwork/laurent.hpp"

using namespace dwork;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, unsigned terms = 4) {
    LaurentPoly a(1, 1);
    for (unsigned i = 0; i < terms; ++i) {
        const int64_t te = static_cast<int64_t>(rng() % 7) - 3;
        const int64_t ze = static_cast<int64_t>(rng() % 7) - 3;
        const long c = static_cast<long>(rng() % 19) - 9;
        a.add_term(ExpVector({te}, {ze}), c);
    }
    return a;
}

}  // namespace

TEST_CASE("exponent vectors add componentwise") {
    ExpVector a({1, -2}, {3});
    ExpVector b({0, 5}, {-1});
    ExpVector c = a + b;
    CHECK(c.t == std::vector<int64_t>{1, 3});
    CHECK(c.z == std::vector<int64_t>{2});
    CHECK(a.scaled(3).t == std::vector<int64_t>{3, -6});
}

TEST_CASE("modulus context validates the prime") {
    CHECK_THROWS_AS(ModulusContext(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(ModulusContext(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ModulusContext(9, 1), std::invalid_argument);
    CHECK_THROWS_AS(ModulusContext(5, 0), std::invalid_argument);
    CHECK(ModulusContext(5, 3).modulus() == 125);
}

TEST_CASE("ring axioms on random sparse polynomials") {
    std::mt19937_64 rng(42);
    const LaurentPoly one = LaurentPoly::constant(1, 1, 1);
    for (int iter = 0; iter < 60; ++iter) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK(-(-a) == a);
    }
}

TEST_CASE("powers and power substitution are multiplicative") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.pow(0) == LaurentPoly::constant(1, 1, 1));
        CHECK((a * b).substitute_power(3) == a.substitute_power(3) * b.substitute_power(3));
        CHECK((a + b).substitute_power(5) == a.substitute_power(5) + b.substitute_power(5));
    }
}

TEST_CASE("Frobenius: a(t,z)^p matches a(t^p,z^p) mod p") {
    std::mt19937_64 rng(11);
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        const ModulusContext m(p, 1);
        for (int iter = 0; iter < 10; ++iter) {
            const LaurentPoly a = random_poly(rng);
            const auto rep = lp_congruent(a.pow(p), a.substitute_power(static_cast<int64_t>(p)),
                                          m, "frobenius");
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("t-coefficient extraction and constant term") {
    LaurentPoly a(1, 1);
    a.add_term(ExpVector({2}, {1}), 5);
    a.add_term(ExpVector({2}, {0}), -1);
    a.add_term(ExpVector({0}, {3}), 7);
    const LaurentPoly c2 = a.coeff_t({2});
    CHECK(c2.term_count() == 2);
    CHECK(c2.terms().begin()->first.t == std::vector<int64_t>{0});
    const LaurentPoly ct = a.ct_t();
    CHECK(ct.term_count() == 1);
    CHECK(ct.terms().begin()->second == 7);
}

TEST_CASE("derivatives satisfy the product rule") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).derivative_z(0) == a.derivative_z(0) * b + a * b.derivative_z(0));
    }
}

TEST_CASE("substitution of z values and modular evaluation") {
    LaurentPoly a(0, 2);
    a.add_term(ExpVector({}, {1, 0}), 2);   // 2 z1
    a.add_term(ExpVector({}, {0, 2}), 1);   // z2^2
    const LaurentPoly at1 = a.substitute_z({true, false}, {mpz_class(3), 0});
    CHECK(at1.z_vars() == 1);
    CHECK(at1.eval_z_mod({mpz_class(2)}, 100) == 10);  // 6 + 4
    CHECK(a.eval_z_mod({mpz_class(3), mpz_class(2)}, 7) == 3);
}

TEST_CASE("congruence reports carry the first offending monomial") {
    LaurentPoly a = LaurentPoly::constant(3, 1, 1);
    LaurentPoly b(1, 1);
    const ModulusContext m(3, 2);
    auto rep = lp_congruent(a, b, m, "three vs zero");
    CHECK_FALSE(rep.pass);
    CHECK(rep.has_witness);
    CHECK(rep.witness.residue == "3");
    auto ok = lp_congruent(LaurentPoly::constant(9, 1, 1), b, m, "nine vs zero mod 9");
    CHECK(ok.pass);
}

TEST_CASE("reduce_mod canonicalizes coefficients") {
    LaurentPoly a(1, 0);
    a.add_term(ExpVector({1}, {}), -1);
    a.add_term(ExpVector({0}, {}), 10);
    const LaurentPoly r = a.reduce_mod(ModulusContext(3, 2));
    for (const auto& [e, c] : r.terms()) {
        CHECK(c >= 0);
        CHECK(c < 9);
    }
    CHECK(r.coeff_t({1}).terms().begin()->second == 8);
}
