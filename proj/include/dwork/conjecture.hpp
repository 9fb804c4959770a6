#ifndef DWORK_CONJECTURE_HPP
#define DWORK_CONJECTURE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwork/laurent.hpp"

namespace dwork {

/// Digits a, b and k = (k^(1), ..., k^(s)) with k^(i) = (k1, k2), all in
/// [0, p-1].
struct DigitProfile {
    unsigned a = 0, b = 0;
    std::vector<std::pair<unsigned, unsigned>> k;

    unsigned level() const { return static_cast<unsigned>(k.size()); }
    std::string str() const;
};

/// A(a,b;k) = C((p^{s+2}-1)/2, a + sum k1_i p^i + b p^{s+1})^2
///            C((p^s-1)/2,    sum k2_i p^{i-1})^2
///          - C((p^{s+1}-1)/2, a + sum k1_i p^i)^2
///            C((p^{s+1}-1)/2, sum k2_i p^{i-1} + b p^s)^2.
mpz_class a_term(const DigitProfile& profile, uint64_t p);

/// Sum of a_term over all 2^s swaps k1_i <-> k2_i.
mpz_class b_symmetrized(const DigitProfile& profile, uint64_t p);

struct ScanOptions {
    unsigned jobs = 1;
    std::string checkpoint_path;       // NDJSON records {profile, B, valuation}
    uint64_t max_grid = 100'000'000;   // p^{2s+2} cap
};

/// Exhaustive divisibility scan: p^{s+1} | B(a,b;k) over the full digit
/// grid.  A counterexample is reported as the witness (a finding, not an
/// internal error).
CongruenceReport conjecture_scan(uint64_t p, unsigned s, const ScanOptions& opts = {});

/// Coefficient identity for x^{N0+N1 p+N2 p^2+N3 p^3}: the restricted
/// double sum over k1+l1 = N1, k2+l2 = N2 of
///   C((p^4-1)/2, N0+k1 p+k2 p^2+N3 p^3)^2 C((p^2-1)/2, l1+l2 p)^2
/// - C((p^3-1)/2, N0+k1 p+k2 p^2)^2      C((p^3-1)/2, l1+l2 p+N3 p^2)^2
/// vanishes mod p^3; cross-checked against the full convolution
/// coefficient of the level-(3,1)/(2,2) product difference.
CongruenceReport coeff_identity_42_33(uint64_t p, const std::array<unsigned, 4>& N);

}  // namespace dwork

#endif
