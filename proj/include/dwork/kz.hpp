#ifndef DWORK_KZ_HPP
#define DWORK_KZ_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dwork/laurent.hpp"
#include "dwork/padic.hpp"

namespace dwork {

/// Pairwise coupling matrix of the rank-3 system; omega_matrix(i, j) with
/// 0-based distinct i, j (symmetric in its arguments).
using OmegaMatrix = std::array<std::array<int, 3>, 3>;
const OmegaMatrix& omega_matrix(unsigned i, unsigned j);

/// Level-s data in three variables (context: no t variables, z = (z1,z2,z3);
/// master-polynomial intermediates carry one t variable):
///  I[i] - coefficient of t^{p^s-1} in Phi_s/(t-z_{i+1})
///  T    - coefficient of t^{p^s-1} in Phi_s = ((t-z1)(t-z2)(t-z3))^{(p^s-1)/2}
///  U    - same coefficient in the shifted master polynomial Phi_s(t+z3, z)
struct KZApprox {
    uint64_t p = 0;
    unsigned s = 0;
    std::array<LaurentPoly, 3> I;
    LaurentPoly T, U;
};

/// Closed forms (exact integer polynomials; s = 0 gives 1 for T and U).
LaurentPoly kz_t_closed(uint64_t p, unsigned s);
LaurentPoly kz_u_closed(uint64_t p, unsigned s);
LaurentPoly kz_i_closed(uint64_t p, unsigned s, unsigned i);

/// Builds the level-s data by t-coefficient extraction from the expanded
/// master polynomials AND by the closed forms; the two routes must agree
/// exactly (throws otherwise).
KZApprox kz_build(uint64_t p, unsigned s);

/// Four checks: for each i the cleared-denominator connection residual
///   (z_i-z_j)(z_i-z_k) dI/dz_i - (1/2)[(z_i-z_k) W_ij + (z_i-z_j) W_ik] I
/// vanishes mod p^s componentwise, plus I_1+I_2+I_3 = 0 mod p^s.
std::vector<CongruenceReport> kz_residual(const KZApprox& approx);

/// X_{s+1}(z) X_{s-1}(z^p) = X_s(z) X_s(z^p) mod p^s, X in {'T', 'U'},
/// z^p componentwise.
CongruenceReport kz_dwork_congruence(uint64_t p, unsigned s, char which);

/// Logarithmic-derivative values at a point: first[i] = (dT/dz_i)/T,
/// second[i][j] = (d^2 T/dz_i dz_j)/T, all mod p^s.
struct EtaValues {
    std::vector<PadicInt> first;                // 3 entries
    std::vector<std::vector<PadicInt>> second;  // 3x3
};
EtaValues eta_evaluate(const KZApprox& approx, const std::array<PadicInt, 3>& z);

/// First-order relations at a point: sum_i first[i] = 0,
/// sum_j second[i][j] = 0 for each i, and the logarithmic-derivative
/// identity d_j eta^(i) = eta^(ji) - eta^(i) eta^(j) (exact at finite
/// level, checked mod p^s through the cleared-denominator form).
CongruenceReport eta_relations_check(const KZApprox& approx, const std::array<PadicInt, 3>& z);

/// Second-order system at sampled points: (eta^(i1),eta^(i2),eta^(i3)) =
/// H_i (eta^(1),eta^(2),eta^(3)) mod p^s for i = 1,2,3, where H_i is the
/// coupling-matrix combination with unit denominators z_i - z_j.
CongruenceReport eta_kz_system_check(const KZApprox& approx,
                                     const std::vector<std::array<PadicInt, 3>>& samples);

/// Exact polynomial identity
///   U_s(z) = sum_k C(M,k)^2 (z1-z3)^k (z2-z3)^{M-k} * (-1)^M
/// i.e. (z1-z3)^M P_s((z2-z3)/(z1-z3)) with denominators cleared.
CongruenceReport u_factorization_check(uint64_t p, unsigned s);

/// On the line (1, z2, 0): d_iT_s * U_s = d_iU_s * T_s exactly for i = 1,2;
/// for i = 3 the exact defect is -p^s c_s(1,z2,0) U_s(1,z2,0) with c_s the
/// t^{p^s} coefficient of the master polynomial (so the equality holds mod
/// p^s); all three verified as exact identities.
CongruenceReport line_equality_check(uint64_t p, unsigned s);

/// At z = (u1, u1 u2, 0): pass iff (grad U_s / U_s)(z) equals
/// (1/u1)(M - u2 r, r, -M + (u2-1) r) mod p^s, r = P_s'(u2)/P_s(u2),
/// M = (p^s-1)/2, and the component sum vanishes mod p^s.
CongruenceReport omega_vector_compare(const PadicInt& u1, const PadicInt& u2, unsigned s);

/// Teichmuller-lift triples of distinct residues at which the level-1
/// trinomial polynomial is a unit; deterministic order, capped.
std::vector<std::array<PadicInt, 3>> kz_sample_points(uint64_t p, unsigned precision, size_t cap);

}  // namespace dwork

#endif
