#include "dwork/padic.hpp"

#include <sstream>
#include <stdexcept>

namespace dwork {

namespace {

mpz_class pow_p(uint64_t p, unsigned s) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

mpz_class mod_canonical(const mpz_class& v, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invert_or_throw(const mpz_class& v, const mpz_class& m, const char* what) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::runtime_error(std::string(what) + ": non-unit value");
    return inv;
}

/// Level-s truncation series of a family, with nonnegative coefficients
/// (the p-adic-limit normalization).
Upoly bar_polynomial(FamilyTag family, uint64_t p, unsigned s) {
    switch (family) {
        case FamilyTag::Half: return pbar_polynomial(p, s);
        case FamilyTag::ThirdQ:
        case FamilyTag::ThirdR: return qbar_polynomial(p, s);
        case FamilyTag::Fifth41:
        case FamilyTag::Fifth32: return family_polynomial(family, p, s);
    }
    throw std::logic_error("unknown family tag");
}

/// Trinomial-coefficient evaluation: |coefficient of t^{p-1} in
/// ((t-z1)(t-z2)(t-z3))^{(p-1)/2}| at z, modulo p.
mpz_class trinomial_level1_eval(const std::array<PadicInt, 3>& z, uint64_t p) {
    const unsigned long M = static_cast<unsigned long>((p - 1) / 2);
    const mpz_class mod(static_cast<unsigned long>(p));
    mpz_class z1 = mod_canonical(z[0].residue(), mod);
    mpz_class z2 = mod_canonical(z[1].residue(), mod);
    mpz_class z3 = mod_canonical(z[2].residue(), mod);
    mpz_class acc = 0, bi, bj;
    for (unsigned long i = 0; i <= M; ++i) {
        mpz_bin_uiui(bi.get_mpz_t(), M, i);
        for (unsigned long j = 0; i + j <= M; ++j) {
            const unsigned long k = M - i - j;
            mpz_bin_uiui(bj.get_mpz_t(), M, j);
            mpz_class bk;
            mpz_bin_uiui(bk.get_mpz_t(), M, k);
            mpz_class p1, p2, p3;
            mpz_powm_ui(p1.get_mpz_t(), z1.get_mpz_t(), i, mod.get_mpz_t());
            mpz_powm_ui(p2.get_mpz_t(), z2.get_mpz_t(), j, mod.get_mpz_t());
            mpz_powm_ui(p3.get_mpz_t(), z3.get_mpz_t(), k, mod.get_mpz_t());
            acc += bi * bj * bk * p1 * p2 * p3;
        }
    }
    return mod_canonical(acc, mod);
}

}  // namespace

PadicInt::PadicInt(uint64_t p, unsigned precision, const mpz_class& value)
    : p_(p), prec_(precision) {
    ModulusContext check(p, precision == 0 ? 1 : precision);  // validates p
    if (precision == 0) throw std::invalid_argument("precision must be >= 1");
    r_ = mod_canonical(value, modulus());
}

mpz_class PadicInt::modulus() const { return pow_p(p_, prec_); }

bool PadicInt::is_unit() const { return !mpz_divisible_ui_p(r_.get_mpz_t(), p_); }

unsigned PadicInt::valuation() const {
    if (r_ == 0) return prec_;
    mpz_class v = r_;
    unsigned val = 0;
    while (val < prec_ && mpz_divisible_ui_p(v.get_mpz_t(), p_)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p_);
        ++val;
    }
    return val;
}

void PadicInt::check_compatible(const PadicInt& o) const {
    if (p_ != o.p_ || prec_ != o.prec_)
        throw std::invalid_argument("mixed p-adic contexts");
}

PadicInt PadicInt::operator+(const PadicInt& o) const {
    check_compatible(o);
    return PadicInt(p_, prec_, r_ + o.r_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    check_compatible(o);
    return PadicInt(p_, prec_, r_ - o.r_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    check_compatible(o);
    return PadicInt(p_, prec_, r_ * o.r_);
}

PadicInt PadicInt::inverse() const {
    return PadicInt(p_, prec_, invert_or_throw(r_, modulus(), "p-adic inverse"));
}

PadicInt PadicInt::truncate(unsigned precision) const {
    if (precision > prec_) throw std::invalid_argument("cannot raise precision by truncation");
    return PadicInt(p_, precision, r_);
}

PadicInt teichmuller(const mpz_class& a, uint64_t p, unsigned precision) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), p))
        throw std::invalid_argument("Teichmuller lift needs a unit residue");
    const mpz_class m = pow_p(p, precision);
    mpz_class x = mod_canonical(a, m);
    // x <- x^p converges in at most precision-1 steps; iterate to a fixed point.
    for (unsigned i = 0; i + 1 < precision; ++i) {
        mpz_class next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (next == x) break;
        x = next;
    }
    return PadicInt(p, precision, x);
}

PadicInt unit_inverse(const PadicInt& u) { return u.inverse(); }

bool domain_membership(const PadicInt& x, DomainTag which) {
    const uint64_t p = x.prime();
    const mpz_class mod(static_cast<unsigned long>(p));
    switch (which) {
        case DomainTag::HalfD:
            return pbar_polynomial(p, 1).eval_mod(x.residue(), mod) != 0;
        case DomainTag::ThirdD:
            return qbar_polynomial(p, 1).eval_mod(x.residue(), mod) != 0;
        default:
            throw std::invalid_argument("domain tag needs a coordinate triple");
    }
}

bool domain_membership(const std::array<PadicInt, 3>& z, DomainTag which) {
    const uint64_t p = z[0].prime();
    for (const auto& zi : z)
        if (zi.prime() != p) throw std::invalid_argument("mixed p-adic contexts");
    if (which == DomainTag::KzD) return trinomial_level1_eval(z, p) != 0;
    if (which != DomainTag::IgusaHat)
        throw std::invalid_argument("domain tag needs a single coordinate");
    const Upoly g = dwork_truncation(p, 1).g;
    const mpz_class mod(static_cast<unsigned long>(p));
    // Some ordering (i,j,k) must give an integral cross-ratio
    // (z_j-z_k)/(z_i-z_k) with the Igusa polynomial a unit there.  At finite
    // precision only unit denominators are decidable.
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& sig : perms) {
        const PadicInt den = z[sig[0]] - z[sig[2]];
        if (!den.is_unit()) continue;
        const PadicInt num = z[sig[1]] - z[sig[2]];
        const PadicInt ratio = num * den.inverse();
        if (g.eval_mod(ratio.residue(), mod) != 0) return true;
    }
    return false;
}

UnitRootTrace unit_root(const PadicInt& x, FamilyTag family, unsigned s_max) {
    if (s_max < 1) throw std::invalid_argument("need s_max >= 1");
    const unsigned work = s_max + 1;
    if (x.precision() < work)
        throw std::invalid_argument("sample precision below s_max + 1");
    const uint64_t p = x.prime();
    const mpz_class mod = pow_p(p, work);
    const mpz_class xv = mod_canonical(x.residue(), mod);
    mpz_class xp;
    mpz_powm_ui(xp.get_mpz_t(), xv.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());

    UnitRootTrace trace;
    trace.family = family;
    trace.p = p;
    trace.s_max = s_max;
    trace.unit_ok = true;

    std::vector<mpz_class> work_ratios;  // f_s at full working precision
    for (unsigned s = 1; s <= s_max; ++s) {
        const mpz_class num = bar_polynomial(family, p, s + 1).eval_mod(xv, mod);
        const mpz_class den = bar_polynomial(family, p, s).eval_mod(xp, mod);
        const mpz_class f = mod_canonical(num * invert_or_throw(den, mod, "unit-root ratio"), mod);
        work_ratios.push_back(f);
        PadicInt fs(p, s, f);
        if (!fs.is_unit()) trace.unit_ok = false;
        trace.ratios.push_back(std::move(fs));
    }
    trace.cauchy_ok = true;
    for (unsigned s = 1; s < s_max; ++s) {
        const unsigned val = PadicInt(p, work, work_ratios[s] - work_ratios[s - 1]).valuation();
        trace.delta_valuations.push_back(val);
        if (val < s) trace.cauchy_ok = false;
    }
    return trace;
}

int64_t legendre_point_count(int64_t alpha, uint64_t p) {
    ModulusContext check(p, 1);  // validates p odd prime
    const int64_t pi = static_cast<int64_t>(p);
    int64_t a = ((alpha % pi) + pi) % pi;
    if (a == 0 || a == 1) throw std::invalid_argument("singular curve: alpha = 0 or 1 mod p");
    const mpz_class mod(static_cast<unsigned long>(p));
    int64_t count = 1;  // point at infinity
    for (int64_t x = 0; x < pi; ++x) {
        mpz_class rhs = mpz_class(x) * (x - 1) * (x - a);
        rhs = mod_canonical(rhs, mod);
        if (rhs == 0) {
            count += 1;
            continue;
        }
        mpz_class chi;
        mpz_powm_ui(chi.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2),
                    mod.get_mpz_t());
        count += (chi == 1) ? 2 : 0;
    }
    return pi + 1 - count;
}

CongruenceReport frobenius_quadratic_check(int64_t alpha, uint64_t p, unsigned s) {
    const PadicInt omega = teichmuller(alpha, p, s + 1);
    if (!domain_membership(omega, DomainTag::HalfD))
        throw std::invalid_argument("Teichmuller lift outside the convergence domain");
    const int64_t ap = legendre_point_count(alpha, p);
    const UnitRootTrace trace = unit_root(omega, FamilyTag::Half, s);
    const mpz_class mod = pow_p(p, s);
    const bool negate = ((p - 1) / 2) % 2 == 1;
    mpz_class u = trace.ratios.back().residue();
    if (negate) u = mod_canonical(-u, mod);
    const mpz_class resid = mod_canonical(u * u - ap * u + p, mod);

    CongruenceReport rep;
    {
        std::ostringstream os;
        os << "u^2 - (" << ap << ")u + " << p << " == 0 mod " << p << "^" << s
           << " for the unit root u at the Teichmuller lift of " << alpha;
        rep.description = os.str();
    }
    rep.p = p;
    rep.s = s;
    const bool u_unit = !mpz_divisible_ui_p(u.get_mpz_t(), p);
    rep.pass = (resid == 0) && u_unit && trace.cauchy_ok && trace.unit_ok;
    if (resid != 0) {
        rep.has_witness = true;
        rep.witness = {"quadratic residual", resid.get_str()};
        rep.has_observed_valuation = true;
        rep.observed_valuation = PadicInt(p, s, resid).valuation();
    } else if (!u_unit) {
        rep.has_witness = true;
        rep.witness = {"unit root", u.get_str()};
    }
    return rep;
}

DworkTruncation dwork_truncation(uint64_t p, unsigned s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const mpz_class mod = pow_p(p, s);
    const mpz_class inv16 = invert_or_throw(16, mod, "1/16 mod p^s");
    const mpz_class n = pow_p(p, s);
    if (!n.fits_ulong_p()) throw std::overflow_error("truncation length out of range");
    const unsigned long len = n.get_ui();
    std::vector<mpz_class> coeffs(len);
    mpz_class scale = 1;  // (1/16)^k
    for (unsigned long k = 0; k < len; ++k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), 2 * k, k);
        coeffs[k] = mod_canonical(b * b * scale, mod);
        scale = mod_canonical(scale * inv16, mod);
    }
    DworkTruncation out;
    out.F = Upoly(std::move(coeffs));
    out.g = pbar_polynomial(p, 1).reduce_mod(mpz_class(static_cast<unsigned long>(p)));
    return out;
}

CongruenceReport limits_agree_check(uint64_t p, unsigned s, const std::vector<PadicInt>& samples) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const mpz_class mod = pow_p(p, s);
    const Upoly bar_hi = pbar_polynomial(p, s + 1), bar_lo = pbar_polynomial(p, s);
    const Upoly F_hi = dwork_truncation(p, s + 1).F, F_lo = dwork_truncation(p, s).F;

    CongruenceReport rep;
    {
        std::ostringstream os;
        os << "truncation-ratio limits agree mod " << p << "^" << s - 1 << " at " << samples.size()
           << " domain points (level " << s << ")";
        rep.description = os.str();
    }
    rep.p = p;
    rep.s = s;
    rep.pass = true;
    unsigned min_val = s;  // capped observation
    for (const auto& x : samples) {
        if (!domain_membership(x.truncate(1), DomainTag::HalfD))
            throw std::invalid_argument("sample outside the convergence domain");
        const mpz_class xv = mod_canonical(x.residue(), mod);
        mpz_class xp;
        mpz_powm_ui(xp.get_mpz_t(), xv.get_mpz_t(), static_cast<unsigned long>(p),
                    mod.get_mpz_t());
        const mpz_class r1 = mod_canonical(
            bar_hi.eval_mod(xv, mod) * invert_or_throw(bar_lo.eval_mod(xp, mod), mod, "ratio"),
            mod);
        const mpz_class r2 = mod_canonical(
            F_hi.eval_mod(xv, mod) * invert_or_throw(F_lo.eval_mod(xp, mod), mod, "ratio"), mod);
        const unsigned val = PadicInt(p, s, r1 - r2).valuation();
        min_val = std::min(min_val, val);
        if (val + 1 < s) {
            rep.pass = false;
            if (!rep.has_witness) {
                rep.has_witness = true;
                rep.witness = {"x = " + x.residue().get_str(),
                               mod_canonical(r1 - r2, mod).get_str()};
            }
        }
    }
    rep.has_observed_valuation = true;
    rep.observed_valuation = min_val;
    return rep;
}

}  // namespace dwork
