#include <doctest.h>

#include <random>

#include "dwork/upoly.hpp"

using namespace dwork;

namespace {

Upoly random_upoly(std::mt19937_64& rng, unsigned deg = 5) {
    std::vector<mpz_class> c(deg + 1);
    for (auto& v : c) v = static_cast<long>(rng() % 21) - 10;
    return Upoly(std::move(c));
}

}  // namespace

TEST_CASE("normalization trims trailing zeros") {
    Upoly a({1, 2, 0, 0});
    CHECK(a.degree() == 1);
    Upoly z({0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(Upoly::x().degree() == 1);
    CHECK(Upoly::constant(5).coeff(0) == 5);
    CHECK(a.coeff(10) == 0);
}

TEST_CASE("arithmetic axioms on random dense polynomials") {
    std::mt19937_64 rng(99);
    const Upoly one = Upoly::constant(1);
    for (int iter = 0; iter < 50; ++iter) {
        const Upoly a = random_upoly(rng), b = random_upoly(rng), c = random_upoly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
        CHECK(a * mpz_class(3) == a + a + a);
    }
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        const Upoly a = random_upoly(rng), b = random_upoly(rng);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(Upoly::constant(7).derivative().is_zero());
}

TEST_CASE("power substitution stretches exponents") {
    Upoly a({1, 2, 3});
    const Upoly a3 = a.substitute_power(3);
    CHECK(a3.degree() == 6);
    CHECK(a3.coeff(3) == 2);
    CHECK(a3.coeff(6) == 3);
    CHECK(a3.coeff(1) == 0);
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 10; ++iter) {
        const Upoly u = random_upoly(rng), v = random_upoly(rng);
        CHECK((u * v).substitute_power(5) == u.substitute_power(5) * v.substitute_power(5));
    }
}

TEST_CASE("frobenius-twisted product matches the naive route") {
    std::mt19937_64 rng(31);
    for (uint64_t p : {3ull, 7ull}) {
        const mpz_class m = mpz_class(static_cast<unsigned long>(p)) *
                            static_cast<unsigned long>(p);
        for (int iter = 0; iter < 10; ++iter) {
            const Upoly a = random_upoly(rng, 8), b = random_upoly(rng, 8);
            const Upoly fast = mul_frobenius_mod(a, b, static_cast<unsigned>(p), m);
            const Upoly slow = (a * b.substitute_power(static_cast<unsigned>(p))).reduce_mod(m);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("modular reduction, evaluation and content") {
    Upoly a({10, -1, 9});
    const Upoly r = a.reduce_mod(9);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == 8);
    CHECK(r.degree() == 1);
    CHECK(a.is_zero_mod(1));
    CHECK_FALSE(a.is_zero_mod(9));
    CHECK(Upoly({9, 18}).is_zero_mod(9));
    CHECK(a.eval_mod(2, 100) == 44);  // 10 - 2 + 36
    CHECK(Upoly({6, -9, 12}).content_gcd() == 3);
}
