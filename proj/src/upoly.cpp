#include "dwork/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dwork {

void Upoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Upoly Upoly::constant(const mpz_class& v) {
    Upoly r;
    if (v != 0) r.c_.push_back(v);
    return r;
}

Upoly Upoly::x() {
    Upoly r;
    r.c_ = {0, 1};
    return r;
}

const mpz_class& Upoly::coeff(size_t k) const {
    static const mpz_class zero = 0;
    return k < c_.size() ? c_[k] : zero;
}

void Upoly::set_coeff(size_t k, const mpz_class& v) {
    if (k >= c_.size()) c_.resize(k + 1, mpz_class(0));
    c_[k] = v;
    trim();
}

Upoly Upoly::operator+(const Upoly& o) const {
    Upoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Upoly Upoly::operator-(const Upoly& o) const { return *this + (-o); }

Upoly Upoly::operator-() const {
    Upoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Upoly Upoly::operator*(const Upoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Upoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Upoly Upoly::operator*(const mpz_class& v) const {
    Upoly r = *this;
    for (auto& x : r.c_) x *= v;
    r.trim();
    return r;
}

Upoly Upoly::derivative() const {
    Upoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    r.trim();
    return r;
}

Upoly Upoly::substitute_power(unsigned q) const {
    if (q == 0) throw std::invalid_argument("substitution power must be >= 1");
    Upoly r;
    if (c_.empty()) return r;
    r.c_.assign((c_.size() - 1) * q + 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * q] = c_[i];
    r.trim();
    return r;
}

Upoly Upoly::reduce_mod(const mpz_class& m) const {
    Upoly r = *this;
    for (auto& v : r.c_) mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    r.trim();
    return r;
}

bool Upoly::is_zero_mod(const mpz_class& m) const {
    for (const auto& v : c_)
        if (v % m != 0) return false;
    return true;
}

mpz_class Upoly::eval_mod(const mpz_class& x, const mpz_class& m) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

mpz_class Upoly::content_gcd() const {
    mpz_class g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

std::string Upoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] < 0 ? " - " : " + ");
        else if (c_[i] < 0) os << "-";
        first = false;
        mpz_class a = abs(c_[i]);
        os << a.get_str();
        if (i >= 1) {
            os << "*x";
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

Upoly mul_frobenius_mod(const Upoly& a, const Upoly& b, unsigned q, const mpz_class& m) {
    if (!m.fits_ulong_p() || m.get_ui() >= (1ull << 31))
        throw std::invalid_argument("modulus too large for machine-word path");
    const uint64_t mod = m.get_ui();
    auto to_words = [&](const Upoly& f) {
        std::vector<uint64_t> w(f.coeffs().size());
        mpz_class t;
        for (size_t i = 0; i < w.size(); ++i) {
            mpz_mod(t.get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
            w[i] = t.get_ui();
        }
        return w;
    };
    std::vector<uint64_t> wa = to_words(a), wb = to_words(b);
    if (wa.empty() || wb.empty()) return {};
    std::vector<uint64_t> out((wa.size() - 1) + (wb.size() - 1) * q + 1, 0);
    for (size_t j = 0; j < wb.size(); ++j) {
        if (wb[j] == 0) continue;
        const size_t off = j * q;
        for (size_t i = 0; i < wa.size(); ++i) {
            if (wa[i] == 0) continue;
            uint64_t v = out[i + off] + wa[i] * wb[j];
            out[i + off] = v % mod;
        }
    }
    std::vector<mpz_class> c(out.size());
    for (size_t i = 0; i < out.size(); ++i) c[i] = static_cast<unsigned long>(out[i]);
    return Upoly(std::move(c));
}

}  // namespace dwork
