#ifndef DWORK_PADIC_HPP
#define DWORK_PADIC_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dwork/hyperg.hpp"
#include "dwork/laurent.hpp"
#include "dwork/upoly.hpp"

namespace dwork {

/// Element of Z/p^S as a finite-precision model of Z_p.
class PadicInt {
public:
    PadicInt(uint64_t p, unsigned precision, const mpz_class& value);

    uint64_t prime() const { return p_; }
    unsigned precision() const { return prec_; }
    const mpz_class& residue() const { return r_; }
    mpz_class modulus() const;

    bool is_unit() const;
    /// p-adic valuation, capped at the precision for zero residues.
    unsigned valuation() const;

    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;
    bool operator==(const PadicInt& o) const = default;

    PadicInt inverse() const;
    /// Truncation to a lower precision.
    PadicInt truncate(unsigned precision) const;

private:
    void check_compatible(const PadicInt& o) const;
    uint64_t p_;
    unsigned prec_;
    mpz_class r_;
};

/// The unique root of w^p = w with w = a mod p, at the given precision.
PadicInt teichmuller(const mpz_class& a, uint64_t p, unsigned precision);

PadicInt unit_inverse(const PadicInt& u);

/// Convergence domains:
///  HalfD  - half-family truncation of level 1 is a unit at x
///  ThirdD - thirds truncation of level 1 is a unit at x
///  KzD    - three-variable trinomial polynomial of level 1 is a unit at z
///  IgusaHat - some coordinate permutation gives an integral cross-ratio at
///             which the degree-(p-1)/2 Igusa polynomial is a unit
enum class DomainTag { HalfD, ThirdD, KzD, IgusaHat };

bool domain_membership(const PadicInt& x, DomainTag which);
bool domain_membership(const std::array<PadicInt, 3>& z, DomainTag which);

/// Successive ratios f_s = bar_{s+1}(x) / bar_s(x^p) of truncation values.
struct UnitRootTrace {
    FamilyTag family = FamilyTag::Half;
    uint64_t p = 0;
    unsigned s_max = 0;
    std::vector<PadicInt> ratios;             // f_s mod p^s, s = 1..s_max
    std::vector<unsigned> delta_valuations;   // val(f_{s+1} - f_s), s = 1..s_max-1
    bool cauchy_ok = false;                   // every delta valuation >= s
    bool unit_ok = false;                     // every f_s a unit
};

/// Requires x.precision() >= s_max + 1 and x in the family's domain.
UnitRootTrace unit_root(const PadicInt& x, FamilyTag family, unsigned s_max);

/// a_p = p + 1 - #E(F_p) for y^2 = x(x-1)(x-alpha), by exhaustive count.
int64_t legendre_point_count(int64_t alpha, uint64_t p);

/// With u = (-1)^{(p-1)/2} f_s at the Teichmuller lift of alpha, pass iff
/// u^2 - a_p u + p = 0 mod p^s, with a_p from the point count; also checks
/// that u is a unit (the other root of the quadratic has valuation 1).
CongruenceReport frobenius_quadratic_check(int64_t alpha, uint64_t p, unsigned s);

/// F_s(x) = sum_{k<p^s} C(-1/2,k)^2 x^k reduced mod p^s, plus the
/// degree-(p-1)/2 Igusa polynomial g(x) mod p.
struct DworkTruncation {
    Upoly F;
    Upoly g;
};
DworkTruncation dwork_truncation(uint64_t p, unsigned s);

/// Pass iff bar_{s+1}(x)/bar_s(x^p) and F_{s+1}(x)/F_s(x^p) agree mod
/// p^{s-1} at every sample (the two limits coincide; one step of the
/// triangle inequality is lost at finite level).
CongruenceReport limits_agree_check(uint64_t p, unsigned s, const std::vector<PadicInt>& samples);

}  // namespace dwork

#endif
