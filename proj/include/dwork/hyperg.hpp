#ifndef DWORK_HYPERG_HPP
#define DWORK_HYPERG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dwork/laurent.hpp"
#include "dwork/upoly.hpp"

namespace dwork {

/// Exponents (alpha, beta, gamma) of t^alpha (t-1)^beta (t-x)^gamma; each
/// must be a p-adic unit for the primes it is used with.
struct ExponentTriple {
    mpq_class alpha, beta, gamma;
};

/// Approximation-polynomial families:
///  Half     - exponents (-1/2, -1/2, -1/2), polynomials P_s
///  ThirdQ   - (-1/3, -1/3, -2/3), polynomials Q_s
///  ThirdR   - (-2/3, -2/3, -1/3), polynomials R_s
///  Fifth41  - truncation pair ([-4/5]_s, [-1/5]_s), no master polynomial
///  Fifth32  - truncation pair ([-3/5]_s, [-2/5]_s), no master polynomial
enum class FamilyTag { Half, ThirdQ, ThirdR, Fifth41, Fifth32 };

const char* family_name(FamilyTag tag);
bool family_has_master(FamilyTag tag);
/// Tag usable at p: thirds need p != 3, fifths need p != 5.
bool family_compatible(FamilyTag tag, uint64_t p);
ExponentTriple family_triple(FamilyTag tag);

struct DigitExpansion {
    std::vector<unsigned> digits;  // base-p, least significant first
    mpz_class truncated;           // sum of digits[i] p^i
};

/// First s base-p digits of num/den in Z_p; den must be prime to p.
DigitExpansion padic_digit_expansion(const mpz_class& num, const mpz_class& den,
                                     uint64_t p, unsigned s);

/// Truncated hypergeometric sum 2F1(-M,-N;1;x) = sum_k C(M,k)C(N,k) x^k.
Upoly hyp2f1_trunc(const mpz_class& M, const mpz_class& N);

/// Residues (alpha_s, beta_s, gamma_s) in [1, p^s].
std::array<mpz_class, 3> exponent_residues(const ExponentTriple& e, uint64_t p, unsigned s);

/// Master polynomial t^{alpha_s}(t-1)^{beta_s}(t-x)^{gamma_s} as a Laurent
/// polynomial in (t; x).
LaurentPoly master_polynomial(const ExponentTriple& e, uint64_t p, unsigned s);

/// Coefficient of t^{p^s-1} in the master polynomial, computed both by the
/// binomial closed form and by expanding the master polynomial; the two
/// routes must agree exactly.
Upoly approx_polynomial(const ExponentTriple& e, uint64_t p, unsigned s);

/// Signed family polynomial (P_s, Q_s, R_s, or a fifths truncation);
/// s = 0 gives 1.  Memoized; set VERIFY_CACHE_DIR for an on-disk cache.
Upoly family_polynomial(FamilyTag tag, uint64_t p, unsigned s);

/// Unsigned variants used for p-adic limits:
/// pbar = 2F1([-1/2]_s,[-1/2]_s;1;x), qbar = 2F1([-2/3]_s,[-1/3]_s;1;x).
Upoly pbar_polynomial(uint64_t p, unsigned s);
Upoly qbar_polynomial(uint64_t p, unsigned s);

/// Residual of the hypergeometric operator
///   x(1-x) d^2 + ((a+b+2g)x - (a+g)) d - g(a+b+g+1)
/// applied to f, with denominators cleared; pass iff it lies in p^s Z[x].
CongruenceReport hyp_ode_residual(const ExponentTriple& e, const Upoly& f,
                                  uint64_t p, unsigned s);

/// Pass iff A(x) B(x^p) = C(x) D(x^p) mod p^s.
CongruenceReport product_congruence(const Upoly& A, const Upoly& B, const Upoly& C,
                                    const Upoly& D, uint64_t p, unsigned s,
                                    std::string description);

/// Coefficient of t^j in t^{-(p^s-1)} Phi_s(t,x) for the half family:
///   C_{s,j}(x) = (-1)^{M-j} sum_m C(M, m+j) C(M, m) x^m,  M = (p^s-1)/2.
Upoly c_coefficient(uint64_t p, unsigned s, int64_t j);

/// Refined coefficient congruence
///   C_{s+1,kp}(x) C_{s-1,-k}(x^p) = C_{s,kp}(x) C_{s,-k}(x^p) mod p^s
/// for |k| <= (p^{s-1}-1)/2.
CongruenceReport verify_Ck(uint64_t p, unsigned s, int64_t k);

/// A(n,x) = sum_k C(n,k)^2 x^k.
Upoly a_poly(const mpz_class& n);

/// Type-II congruence
///   A(n+mp^s,x) A([n/p],x^p) = A(n,x) A([n/p]+mp^{s-1},x^p) mod p^s.
CongruenceReport typeII_check(const mpz_class& n, const mpz_class& m_shift,
                              uint64_t p, unsigned s);

/// The four fifths congruence families: crossed pairs for p = +-2 mod 5,
/// straight pairs for p = +-1 mod 5, each for s = 1..s_max.
std::vector<CongruenceReport> fifths_suite(uint64_t p, unsigned s_max);

/// Congruence report for dense polynomials a = b mod p^s.
CongruenceReport upoly_congruent(const Upoly& a, const Upoly& b, const ModulusContext& m,
                                 std::string description);

}  // namespace dwork

#endif
