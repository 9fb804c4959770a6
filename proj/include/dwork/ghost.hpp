#ifndef DWORK_GHOST_HPP
#define DWORK_GHOST_HPP

#include <cstdint>
#include <vector>

#include "dwork/laurent.hpp"

namespace dwork {

/// Tuple (m_0, ..., m_{k-1}) with 0 <= m_i <= i.
using IndexTuple = std::vector<unsigned>;

/// Ordered tuple of Laurent polynomials sharing a variable context.
using PolyTuple = std::vector<LaurentPoly>;

bool index_tuple_valid(const IndexTuple& m);
bool index_tuple_indecomposable(const IndexTuple& m);

/// All of S_k, or only the indecomposable tuples.
std::vector<IndexTuple> enumerate_index_tuples(unsigned k, bool indecomposable_only);

/// Unique factorization into indecomposable tuples; concatenating the
/// factors returns m.
std::vector<IndexTuple> factor_index_tuple(const IndexTuple& m);

/// Ghost term: R_0 = L, and for m >= 1
///   R_m(L)(t,z) = L(t,z)^{p^m} - L(t^p,z^p)^{p^{m-1}}.
/// Every coefficient of R_m is divisible by p^m.
LaurentPoly ghost_term(const LaurentPoly& L, unsigned m, uint64_t p);

/// Product over i of R_{m_i}(Lambda_i) evaluated at (t,z)^{p^{i-m_i}}.
LaurentPoly composed_ghost(const PolyTuple& lambda, const IndexTuple& m, uint64_t p);

/// lambda~ = Lambda_0 * Lambda_1^p * ... * Lambda_{l-1}^{p^{l-1}}.
/// The empty tuple gives 1 (callers supply the context).
LaurentPoly tuple_product(const PolyTuple& lambda, uint64_t p, unsigned r, unsigned rp);

/// Sum of composed ghosts over indecomposable index tuples; divisible by
/// p^{l-1}.
LaurentPoly i_lambda(const PolyTuple& lambda, uint64_t p);

/// Exact identity: lambda~ equals the sum over all factorizations of lambda
/// into consecutive blocks of the Frobenius-shifted products of I_{block}.
CongruenceReport verify_ghost_decomposition(const PolyTuple& lambda, uint64_t p);

/// Exact identity on constant terms, valid for admissible tuples:
/// CT_t(lambda~)(z) equals the factorization sum of CT_t(I_{block}) values
/// at z^{p^{offset}}.
CongruenceReport verify_ct_factorization(const PolyTuple& lambda, uint64_t p);

/// Dwork congruence for tuples:
///   CT(a*b~)(z) CT(a'*c~)(z^p) = CT(a'*b~)(z^p) CT(a*c~)(z)  mod p^{l(a)}.
/// Requires a*b, a*c, a'*b, a'*c admissible.
CongruenceReport verify_dwork_tuple_congruence(const PolyTuple& a, const PolyTuple& b,
                                               const PolyTuple& c, uint64_t p);

/// Constant-term congruence for digit-exponent powers of a single Laurent
/// polynomial in t only:
///   CT(L^{a*b}) CT(L^{a'*c}) = CT(L^{a'*b}) CT(L^{a*c})  mod p^{l(a)},
/// where a tuple of digits (m_0, m_1, ...) denotes the exponent
/// m_0 + m_1 p + ....  Checked both directly and through the tuple engine.
CongruenceReport verify_mellit(const LaurentPoly& L, const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b, const std::vector<unsigned>& c,
                               uint64_t p);

}  // namespace dwork

#endif
