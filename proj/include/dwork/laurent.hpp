#ifndef DWORK_LAURENT_HPP
#define DWORK_LAURENT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwork {

/// Exponent vector of a monomial, split into a t-block of length r and a
/// z-block of length r'.  Componentwise addition is checked for overflow.
struct ExpVector {
    std::vector<int64_t> t;
    std::vector<int64_t> z;

    ExpVector() = default;
    ExpVector(std::vector<int64_t> t_part, std::vector<int64_t> z_part)
        : t(std::move(t_part)), z(std::move(z_part)) {}

    friend auto operator<=>(const ExpVector&, const ExpVector&) = default;

    ExpVector operator+(const ExpVector& o) const;
    ExpVector scaled(int64_t q) const;
};

/// Modulus p^s with p an odd prime and s >= 1.
struct ModulusContext {
    uint64_t p;
    unsigned s;

    ModulusContext(uint64_t p_, unsigned s_);
    mpz_class modulus() const;
};

/// Sparse Laurent polynomial over Z with exponents split into a t-block and
/// a z-block.  No zero coefficients are stored; equality is term equality.
class LaurentPoly {
public:
    using TermMap = std::map<ExpVector, mpz_class>;

    LaurentPoly() : r_(0), rp_(0) {}
    LaurentPoly(unsigned r, unsigned rp) : r_(r), rp_(rp) {}

    static LaurentPoly constant(const mpz_class& c, unsigned r, unsigned rp);
    static LaurentPoly term(const mpz_class& c, ExpVector e, unsigned r, unsigned rp);

    unsigned t_vars() const { return r_; }
    unsigned z_vars() const { return rp_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    /// Adds c * monomial(e); drops the term if the sum cancels.
    void add_term(const ExpVector& e, const mpz_class& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const = default;

    /// n-th power by repeated squaring; pow(0) = 1.
    LaurentPoly pow(uint64_t n) const;

    /// (t,z) -> (t^q, z^q): every exponent multiplied by q.
    LaurentPoly substitute_power(int64_t q) const;

    /// z-only polynomial multiplying t^e; e must have length r.
    LaurentPoly coeff_t(const std::vector<int64_t>& e) const;

    /// Constant term with respect to the t variables.
    LaurentPoly ct_t() const { return coeff_t(std::vector<int64_t>(r_, 0)); }

    /// Canonical representative of every coefficient in [0, p^s).
    LaurentPoly reduce_mod(const ModulusContext& m) const;

    /// Partial derivative with respect to z_i (0-based).
    LaurentPoly derivative_z(unsigned i) const;

    /// Substitutes integer values for a subset of z variables.  `values[i]`
    /// is applied when `mask[i]` is true; surviving z variables keep their
    /// positions.
    LaurentPoly substitute_z(const std::vector<bool>& mask,
                             const std::vector<mpz_class>& values) const;

    /// Evaluates at t = 1 (only valid when all t-exponents vanish) and the
    /// given z values, modulo `mod`.
    mpz_class eval_z_mod(const std::vector<mpz_class>& z, const mpz_class& mod) const;

    /// Canonical text form: terms in lexicographic exponent order.
    std::string str() const;

    void check_context(const LaurentPoly& o) const;

private:
    unsigned r_, rp_;
    TermMap terms_;
};

struct CongruenceWitness {
    std::string monomial;
    std::string residue;
};

/// Structured verdict of one checked identity.
struct CongruenceReport {
    std::string description;
    uint64_t p = 0;
    unsigned s = 0;
    bool pass = false;
    bool has_witness = false;
    CongruenceWitness witness;
    bool has_observed_valuation = false;
    unsigned observed_valuation = 0;
};

/// Pass iff a == b coefficientwise modulo p^s; on failure the witness is the
/// lexicographically first offending monomial with its residue.
CongruenceReport lp_congruent(const LaurentPoly& a, const LaurentPoly& b,
                              const ModulusContext& m, std::string description);

}  // namespace dwork

#endif
