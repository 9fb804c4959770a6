#ifndef DWORK_UPOLY_HPP
#define DWORK_UPOLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace dwork {

/// Dense univariate polynomial over Z.  Coefficient vector is normalized
/// (no trailing zeros); the zero polynomial has an empty vector.
class Upoly {
public:
    Upoly() = default;
    explicit Upoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Upoly constant(const mpz_class& v);
    static Upoly x();

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& coeff(size_t k) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    void set_coeff(size_t k, const mpz_class& v);

    Upoly operator+(const Upoly& o) const;
    Upoly operator-(const Upoly& o) const;
    Upoly operator-() const;
    Upoly operator*(const Upoly& o) const;
    Upoly operator*(const mpz_class& v) const;
    bool operator==(const Upoly& o) const = default;

    Upoly derivative() const;
    /// x -> x^q.
    Upoly substitute_power(unsigned q) const;
    Upoly reduce_mod(const mpz_class& m) const;
    bool is_zero_mod(const mpz_class& m) const;
    mpz_class eval_mod(const mpz_class& x, const mpz_class& m) const;
    mpz_class content_gcd() const;

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// a(x) * b(x^q) modulo m, with coefficients first reduced into machine
/// words.  Requires m to fit well within 32 bits (moduli here are p^s with
/// p <= 13, s <= 4).
Upoly mul_frobenius_mod(const Upoly& a, const Upoly& b, unsigned q, const mpz_class& m);

}  // namespace dwork

#endif
