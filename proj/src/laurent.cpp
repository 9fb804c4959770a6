#include "dwork/laurent.hpp"

#include <sstream>

namespace dwork {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in addition");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("exponent overflow in scaling");
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

ExpVector ExpVector::operator+(const ExpVector& o) const {
    ExpVector r;
    r.t.reserve(t.size());
    r.z.reserve(z.size());
    for (size_t i = 0; i < t.size(); ++i) r.t.push_back(checked_add(t[i], o.t[i]));
    for (size_t i = 0; i < z.size(); ++i) r.z.push_back(checked_add(z[i], o.z[i]));
    return r;
}

ExpVector ExpVector::scaled(int64_t q) const {
    ExpVector r;
    r.t.reserve(t.size());
    r.z.reserve(z.size());
    for (int64_t e : t) r.t.push_back(checked_mul(e, q));
    for (int64_t e : z) r.z.push_back(checked_mul(e, q));
    return r;
}

ModulusContext::ModulusContext(uint64_t p_, unsigned s_) : p(p_), s(s_) {
    if (p < 3 || !is_prime_u64(p))
        throw std::invalid_argument("modulus prime must be an odd prime");
    if (s < 1) throw std::invalid_argument("modulus precision must be >= 1");
}

mpz_class ModulusContext::modulus() const {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

LaurentPoly LaurentPoly::constant(const mpz_class& c, unsigned r, unsigned rp) {
    return term(c, ExpVector(std::vector<int64_t>(r, 0), std::vector<int64_t>(rp, 0)), r, rp);
}

LaurentPoly LaurentPoly::term(const mpz_class& c, ExpVector e, unsigned r, unsigned rp) {
    if (e.t.size() != r || e.z.size() != rp)
        throw std::invalid_argument("exponent vector does not match variable context");
    LaurentPoly a(r, rp);
    if (c != 0) a.terms_.emplace(std::move(e), c);
    return a;
}

void LaurentPoly::check_context(const LaurentPoly& o) const {
    if (r_ != o.r_ || rp_ != o.rp_)
        throw std::invalid_argument("variable context mismatch");
}

void LaurentPoly::add_term(const ExpVector& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_context(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_context(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(r_, rp_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_context(o);
    LaurentPoly r(r_, rp_);
    mpz_class prod;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            prod = ca * cb;
            r.add_term(ea + eb, prod);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(uint64_t n) const {
    LaurentPoly result = constant(1, r_, rp_);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_power(int64_t q) const {
    if (q < 1) throw std::invalid_argument("substitution power must be >= 1");
    LaurentPoly r(r_, rp_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e.scaled(q), c);
    return r;
}

LaurentPoly LaurentPoly::coeff_t(const std::vector<int64_t>& e) const {
    if (e.size() != r_)
        throw std::invalid_argument("t-exponent length does not match context");
    LaurentPoly r(r_, rp_);
    for (const auto& [ev, c] : terms_) {
        if (ev.t == e)
            r.terms_.emplace(ExpVector(std::vector<int64_t>(r_, 0), ev.z), c);
    }
    return r;
}

LaurentPoly LaurentPoly::reduce_mod(const ModulusContext& m) const {
    const mpz_class mod = m.modulus();
    LaurentPoly r(r_, rp_);
    mpz_class red;
    for (const auto& [e, c] : terms_) {
        mpz_mod(red.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
        if (red != 0) r.terms_.emplace(e, red);
    }
    return r;
}

LaurentPoly LaurentPoly::derivative_z(unsigned i) const {
    if (i >= rp_) throw std::invalid_argument("z variable index out of range");
    LaurentPoly r(r_, rp_);
    for (const auto& [e, c] : terms_) {
        if (e.z[i] == 0) continue;
        ExpVector d = e;
        mpz_class nc = c * mpz_class(static_cast<long>(e.z[i]));
        d.z[i] -= 1;
        r.add_term(d, nc);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_z(const std::vector<bool>& mask,
                                      const std::vector<mpz_class>& values) const {
    if (mask.size() != rp_ || values.size() != rp_)
        throw std::invalid_argument("substitution mask does not match context");
    unsigned kept = 0;
    for (bool b : mask)
        if (!b) ++kept;
    LaurentPoly r(r_, kept);
    mpz_class c2, pw;
    for (const auto& [e, c] : terms_) {
        c2 = c;
        ExpVector ne;
        ne.t = e.t;
        for (unsigned i = 0; i < rp_; ++i) {
            if (mask[i]) {
                if (e.z[i] < 0) {
                    if (values[i] == 0)
                        throw std::domain_error("substituting 0 into a negative exponent");
                    throw std::domain_error("negative z-exponent substitution unsupported");
                }
                mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(),
                           static_cast<unsigned long>(e.z[i]));
                c2 *= pw;
            } else {
                ne.z.push_back(e.z[i]);
            }
        }
        r.add_term(ne, c2);
    }
    return r;
}

mpz_class LaurentPoly::eval_z_mod(const std::vector<mpz_class>& z, const mpz_class& mod) const {
    if (z.size() != rp_) throw std::invalid_argument("evaluation point does not match context");
    mpz_class acc = 0, termv, pw;
    for (const auto& [e, c] : terms_) {
        for (int64_t te : e.t)
            if (te != 0) throw std::domain_error("eval_z_mod requires a z-only polynomial");
        termv = c;
        for (unsigned i = 0; i < rp_; ++i) {
            if (e.z[i] < 0) throw std::domain_error("negative z exponent in evaluation");
            mpz_powm_ui(pw.get_mpz_t(), z[i].get_mpz_t(),
                        static_cast<unsigned long>(e.z[i]), mod.get_mpz_t());
            termv *= pw;
        }
        acc += termv;
    }
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    return acc;
}

namespace {

void append_var(std::ostringstream& os, const char* name, unsigned idx, int64_t e) {
    if (e == 0) return;
    os << '*' << name << (idx + 1);
    if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        mpz_class a = abs(c);
        os << a.get_str();
        for (unsigned i = 0; i < r_; ++i) append_var(os, "t", i, e.t[i]);
        for (unsigned i = 0; i < rp_; ++i) append_var(os, "z", i, e.z[i]);
    }
    return os.str();
}

CongruenceReport lp_congruent(const LaurentPoly& a, const LaurentPoly& b,
                              const ModulusContext& m, std::string description) {
    a.check_context(b);
    CongruenceReport rep;
    rep.description = std::move(description);
    rep.p = m.p;
    rep.s = m.s;
    LaurentPoly diff = (a - b).reduce_mod(m);
    if (diff.is_zero()) {
        rep.pass = true;
        return rep;
    }
    rep.pass = false;
    rep.has_witness = true;
    const auto& [e, c] = *diff.terms().begin();
    LaurentPoly mono = LaurentPoly::term(1, e, a.t_vars(), a.z_vars());
    rep.witness.monomial = mono.str();
    rep.witness.residue = c.get_str();
    return rep;
}

}  // namespace dwork
