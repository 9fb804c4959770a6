#include "dwork/hyperg.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dwork {

namespace {

mpz_class pow_p(uint64_t p, unsigned s) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

mpz_class bin(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

unsigned long to_ulong(const mpz_class& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p()) throw std::overflow_error(std::string(what) + " out of range");
    return v.get_ui();
}

unsigned padic_valuation(mpz_class v, uint64_t p, unsigned cap) {
    if (v == 0) return cap;
    unsigned val = 0;
    while (val < cap && mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++val;
    }
    return val;
}

/// Residue of num/den in [0, p^s); den must be a p-adic unit.
mpz_class unit_residue(const mpz_class& num, const mpz_class& den, uint64_t p, unsigned s) {
    mpz_class m = pow_p(p, s), inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("denominator not invertible modulo p^s");
    mpz_class r = num * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Coefficient of t^{p^s-1} in t^a (t-1)^b (t-x)^c via the binomial sum:
/// (-1)^D sum_{k1+k2=D} C(b,k1) C(c,k2) x^{k2},  D = a+b+c-p^s+1.
Upoly closed_form(const std::array<mpz_class, 3>& res, uint64_t p, unsigned s) {
    const mpz_class D = res[0] + res[1] + res[2] - pow_p(p, s) + 1;
    if (D < 0) return Upoly();
    const bool neg = mpz_odd_p(D.get_mpz_t());
    const unsigned long d = to_ulong(D, "closed-form degree");
    std::vector<mpz_class> coeffs(d + 1, 0);
    for (unsigned long k2 = 0; k2 <= d; ++k2) {
        const unsigned long k1 = d - k2;
        if (res[1] < static_cast<long>(k1) || res[2] < static_cast<long>(k2)) continue;
        mpz_class term = bin(res[1], k1) * bin(res[2], k2);
        coeffs[k2] = neg ? mpz_class(-term) : term;
    }
    return Upoly(std::move(coeffs));
}

Upoly truncation_2f1(unsigned num_a, unsigned num_b, uint64_t p, unsigned s) {
    auto da = padic_digit_expansion(-static_cast<long>(num_a), 5, p, s);
    auto db = padic_digit_expansion(-static_cast<long>(num_b), 5, p, s);
    return hyp2f1_trunc(da.truncated, db.truncated);
}

std::string mod_tag(uint64_t p, unsigned s) {
    std::ostringstream os;
    os << " mod " << p << "^" << s;
    return os.str();
}

}  // namespace

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Half: return "half";
        case FamilyTag::ThirdQ: return "thirdQ";
        case FamilyTag::ThirdR: return "thirdR";
        case FamilyTag::Fifth41: return "fifth41";
        case FamilyTag::Fifth32: return "fifth32";
    }
    throw std::logic_error("unknown family tag");
}

bool family_has_master(FamilyTag tag) {
    return tag == FamilyTag::Half || tag == FamilyTag::ThirdQ || tag == FamilyTag::ThirdR;
}

bool family_compatible(FamilyTag tag, uint64_t p) {
    switch (tag) {
        case FamilyTag::Half: return p != 2;
        case FamilyTag::ThirdQ:
        case FamilyTag::ThirdR: return p != 3;
        case FamilyTag::Fifth41:
        case FamilyTag::Fifth32: return p != 5;
    }
    return false;
}

ExponentTriple family_triple(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Half: return {mpq_class(-1, 2), mpq_class(-1, 2), mpq_class(-1, 2)};
        case FamilyTag::ThirdQ: return {mpq_class(-1, 3), mpq_class(-1, 3), mpq_class(-2, 3)};
        case FamilyTag::ThirdR: return {mpq_class(-2, 3), mpq_class(-2, 3), mpq_class(-1, 3)};
        default: throw std::invalid_argument("no exponent triple for a truncation-pair family");
    }
}

DigitExpansion padic_digit_expansion(const mpz_class& num, const mpz_class& den,
                                     uint64_t p, unsigned s) {
    if (s == 0) return {{}, 0};
    mpz_class r = unit_residue(num, den, p, s);
    DigitExpansion out;
    out.truncated = r;
    out.digits.reserve(s);
    for (unsigned i = 0; i < s; ++i) {
        out.digits.push_back(mpz_fdiv_ui(r.get_mpz_t(), p));
        mpz_fdiv_q_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    }
    return out;
}

Upoly hyp2f1_trunc(const mpz_class& M, const mpz_class& N) {
    const unsigned long m = to_ulong(M, "truncation order");
    const unsigned long n = to_ulong(N, "truncation order");
    const unsigned long d = std::min(m, n);
    std::vector<mpz_class> coeffs(d + 1);
    for (unsigned long k = 0; k <= d; ++k) coeffs[k] = bin(M, k) * bin(N, k);
    return Upoly(std::move(coeffs));
}

std::array<mpz_class, 3> exponent_residues(const ExponentTriple& e, uint64_t p, unsigned s) {
    std::array<mpz_class, 3> out;
    const mpq_class* src[3] = {&e.alpha, &e.beta, &e.gamma};
    for (int i = 0; i < 3; ++i) {
        mpz_class r = unit_residue(src[i]->get_num(), src[i]->get_den(), p, s);
        if (r == 0) r = pow_p(p, s);  // representative in [1, p^s]
        out[i] = r;
    }
    return out;
}

LaurentPoly master_polynomial(const ExponentTriple& e, uint64_t p, unsigned s) {
    auto res = exponent_residues(e, p, s);
    LaurentPoly t_pow = LaurentPoly::term(1, ExpVector({static_cast<int64_t>(res[0].get_ui())}, {0}), 1, 1);
    LaurentPoly t = LaurentPoly::term(1, ExpVector({1}, {0}), 1, 1);
    LaurentPoly one = LaurentPoly::constant(1, 1, 1);
    LaurentPoly x = LaurentPoly::term(1, ExpVector({0}, {1}), 1, 1);
    LaurentPoly f1 = (t - one).pow(to_ulong(res[1], "exponent"));
    LaurentPoly f2 = (t - x).pow(to_ulong(res[2], "exponent"));
    return t_pow * f1 * f2;
}

Upoly approx_polynomial(const ExponentTriple& e, uint64_t p, unsigned s) {
    auto res = exponent_residues(e, p, s);
    Upoly direct = closed_form(res, p, s);

    LaurentPoly master = master_polynomial(e, p, s);
    mpz_class target = pow_p(p, s) - 1;
    LaurentPoly slice = master.coeff_t({static_cast<int64_t>(target.get_ui())});
    Upoly extracted;
    for (const auto& [exp, c] : slice.terms()) extracted.set_coeff(static_cast<size_t>(exp.z[0]), c);

    if (direct != extracted)
        throw std::logic_error("approximation polynomial: closed form and extraction disagree");
    return direct;
}

Upoly family_polynomial(FamilyTag tag, uint64_t p, unsigned s) {
    if (!family_compatible(tag, p))
        throw std::invalid_argument(std::string("family ") + family_name(tag) +
                                    " not defined at p=" + std::to_string(p));
    if (s == 0) return Upoly::constant(1);

    static std::map<std::tuple<int, uint64_t, unsigned>, Upoly> memo;
    static std::mutex memo_mutex;
    const auto key = std::make_tuple(static_cast<int>(tag), p, s);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::string cache_path;
    if (const char* dir = std::getenv("VERIFY_CACHE_DIR")) {
        cache_path = std::string(dir) + "/fam_" + family_name(tag) + "_" + std::to_string(p) +
                     "_" + std::to_string(s) + ".txt";
        std::ifstream in(cache_path);
        if (in) {
            size_t n = 0;
            in >> n;
            std::vector<mpz_class> coeffs(n);
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) ok = static_cast<bool>(in >> coeffs[i]);
            if (ok) {
                Upoly f{std::move(coeffs)};
                std::lock_guard<std::mutex> lock(memo_mutex);
                memo.emplace(key, f);
                return f;
            }
        }
    }

    Upoly f;
    switch (tag) {
        case FamilyTag::Half:
        case FamilyTag::ThirdQ:
        case FamilyTag::ThirdR:
            f = closed_form(exponent_residues(family_triple(tag), p, s), p, s);
            break;
        case FamilyTag::Fifth41:
            f = truncation_2f1(4, 1, p, s);
            break;
        case FamilyTag::Fifth32:
            f = truncation_2f1(3, 2, p, s);
            break;
    }

    if (!cache_path.empty()) {
        std::ofstream out(cache_path);
        if (out) {
            out << f.coeffs().size() << "\n";
            for (const auto& c : f.coeffs()) out << c << "\n";
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(key, f);
    return f;
}

Upoly pbar_polynomial(uint64_t p, unsigned s) {
    if (s == 0) return Upoly::constant(1);
    mpz_class M = (pow_p(p, s) - 1) / 2;
    return hyp2f1_trunc(M, M);
}

Upoly qbar_polynomial(uint64_t p, unsigned s) {
    if (s == 0) return Upoly::constant(1);
    auto d2 = padic_digit_expansion(-2, 3, p, s);
    auto d1 = padic_digit_expansion(-1, 3, p, s);
    return hyp2f1_trunc(d2.truncated, d1.truncated);
}

CongruenceReport hyp_ode_residual(const ExponentTriple& e, const Upoly& f,
                                  uint64_t p, unsigned s) {
    const mpq_class c2 = e.gamma * (e.alpha + e.beta + e.gamma + 1);
    const mpq_class c1 = e.alpha + e.beta + 2 * e.gamma;
    const mpq_class c0 = e.alpha + e.gamma;
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), c1.get_den().get_mpz_t(), c0.get_den().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c2.get_den().get_mpz_t());
    if (mpz_divisible_ui_p(den.get_mpz_t(), p))
        throw std::invalid_argument("operator denominator not prime to p");
    const mpz_class n2 = mpz_class(c2 * den), n1 = mpz_class(c1 * den), n0 = mpz_class(c0 * den);

    const Upoly X = Upoly::x();
    const Upoly df = f.derivative();
    Upoly residual = (X - X * X) * df.derivative() * den + (X * n1 - Upoly::constant(n0)) * df -
                     f * n2;

    CongruenceReport rep;
    {
        std::ostringstream os;
        os << "hypergeometric operator residual, exponents (" << e.alpha << "," << e.beta << ","
           << e.gamma << "), degree " << f.degree() << mod_tag(p, s);
        rep.description = os.str();
    }
    rep.p = p;
    rep.s = s;
    const mpz_class m = pow_p(p, s);
    rep.pass = residual.is_zero_mod(m);
    if (!residual.is_zero()) {
        unsigned minval = s + 32;
        for (const auto& c : residual.coeffs())
            if (c != 0) minval = std::min(minval, padic_valuation(c, p, s + 32));
        rep.has_observed_valuation = true;
        rep.observed_valuation = minval;
    }
    if (!rep.pass) {
        for (size_t k = 0; k < residual.coeffs().size(); ++k) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), residual.coeff(k).get_mpz_t(), m.get_mpz_t());
            if (r != 0) {
                rep.has_witness = true;
                rep.witness = {"x^" + std::to_string(k), r.get_str()};
                break;
            }
        }
    }
    return rep;
}

CongruenceReport upoly_congruent(const Upoly& a, const Upoly& b, const ModulusContext& m,
                                 std::string description) {
    CongruenceReport rep;
    rep.description = std::move(description);
    rep.p = m.p;
    rep.s = m.s;
    const mpz_class mod = m.modulus();
    const Upoly diff = a - b;
    rep.pass = diff.is_zero_mod(mod);
    if (!diff.is_zero()) {
        unsigned minval = m.s + 32;
        for (const auto& c : diff.coeffs())
            if (c != 0) minval = std::min(minval, padic_valuation(c, m.p, m.s + 32));
        rep.has_observed_valuation = true;
        rep.observed_valuation = minval;
    }
    if (!rep.pass) {
        for (size_t k = 0; k < diff.coeffs().size(); ++k) {
            mpz_class r;
            mpz_mod(r.get_mpz_t(), diff.coeff(k).get_mpz_t(), mod.get_mpz_t());
            if (r != 0) {
                rep.has_witness = true;
                rep.witness = {"x^" + std::to_string(k), r.get_str()};
                break;
            }
        }
    }
    return rep;
}

CongruenceReport product_congruence(const Upoly& A, const Upoly& B, const Upoly& C,
                                    const Upoly& D, uint64_t p, unsigned s,
                                    std::string description) {
    const ModulusContext m(p, s);
    const mpz_class mod = m.modulus();
    Upoly lhs = mul_frobenius_mod(A, B, static_cast<unsigned>(p), mod);
    Upoly rhs = mul_frobenius_mod(C, D, static_cast<unsigned>(p), mod);
    return upoly_congruent(lhs, rhs, m, std::move(description));
}

Upoly c_coefficient(uint64_t p, unsigned s, int64_t j) {
    const mpz_class M = (pow_p(p, s) - 1) / 2;
    if (mpz_class(j > 0 ? j : -j) > M) return Upoly();
    const unsigned long Mu = to_ulong(M, "half-level");
    Upoly out;
    for (unsigned long mi = 0; mi <= Mu; ++mi) {
        const int64_t i = static_cast<int64_t>(mi) + j;
        if (i < 0 || i > static_cast<int64_t>(Mu)) continue;
        out.set_coeff(mi, bin(M, static_cast<unsigned long>(i)) * bin(M, mi));
    }
    const int64_t exp = static_cast<int64_t>(Mu) - j;
    if (exp % 2 != 0) out = -out;
    return out;
}

CongruenceReport verify_Ck(uint64_t p, unsigned s, int64_t k) {
    if (s < 1) throw std::invalid_argument("level must be >= 1");
    const mpz_class bound = (pow_p(p, s - 1) - 1) / 2;
    if (mpz_class(k > 0 ? k : -k) > bound)
        throw std::invalid_argument("coefficient index out of range");
    const int64_t kp = k * static_cast<int64_t>(p);
    std::ostringstream os;
    os << "C_{" << s + 1 << "," << kp << "}(x) C_{" << s - 1 << "," << -k << "}(x^" << p
       << ") == C_{" << s << "," << kp << "}(x) C_{" << s << "," << -k << "}(x^" << p << ")"
       << mod_tag(p, s);
    return product_congruence(c_coefficient(p, s + 1, kp), c_coefficient(p, s - 1, -k),
                              c_coefficient(p, s, kp), c_coefficient(p, s, -k), p, s, os.str());
}

Upoly a_poly(const mpz_class& n) {
    const unsigned long d = to_ulong(n, "binomial row");
    std::vector<mpz_class> coeffs(d + 1);
    for (unsigned long k = 0; k <= d; ++k) {
        mpz_class b = bin(n, k);
        coeffs[k] = b * b;
    }
    return Upoly(std::move(coeffs));
}

CongruenceReport typeII_check(const mpz_class& n, const mpz_class& m_shift,
                              uint64_t p, unsigned s) {
    if (s < 1) throw std::invalid_argument("level must be >= 1");
    if (n < 0 || m_shift < 0) throw std::invalid_argument("indices must be nonnegative");
    const mpz_class np = n / p;
    std::ostringstream os;
    os << "A(" << n << "+" << m_shift << "*" << p << "^" << s << ",x) A(" << np << ",x^" << p
       << ") == A(" << n << ",x) A(" << np << "+" << m_shift << "*" << p << "^" << s - 1
       << ",x^" << p << ")" << mod_tag(p, s);
    return product_congruence(a_poly(n + m_shift * pow_p(p, s)), a_poly(np), a_poly(n),
                              a_poly(np + m_shift * pow_p(p, s - 1)), p, s, os.str());
}

std::vector<CongruenceReport> fifths_suite(uint64_t p, unsigned s_max) {
    if (!family_compatible(FamilyTag::Fifth41, p))
        throw std::invalid_argument("fifths families need p != 5");
    const unsigned r = static_cast<unsigned>(p % 5);
    const bool crossed = (r == 2 || r == 3);
    auto F41 = [&](unsigned s) { return family_polynomial(FamilyTag::Fifth41, p, s); };
    auto F32 = [&](unsigned s) { return family_polynomial(FamilyTag::Fifth32, p, s); };
    std::vector<CongruenceReport> out;
    for (unsigned s = 1; s <= s_max; ++s) {
        auto desc = [&](const char* l1, const char* l2, const char* r1, const char* r2) {
            std::ostringstream os;
            os << "2F1[" << l1 << "]_" << s + 1 << "(x) 2F1[" << l2 << "]_" << s - 1 << "(x^" << p
               << ") == 2F1[" << r1 << "]_" << s << "(x) 2F1[" << r2 << "]_" << s << "(x^" << p
               << ")" << mod_tag(p, s);
            return os.str();
        };
        if (crossed) {
            out.push_back(product_congruence(F41(s + 1), F32(s - 1), F41(s), F32(s), p, s,
                                             desc("-4/5,-1/5", "-3/5,-2/5", "-4/5,-1/5",
                                                  "-3/5,-2/5")));
            out.push_back(product_congruence(F32(s + 1), F41(s - 1), F32(s), F41(s), p, s,
                                             desc("-3/5,-2/5", "-4/5,-1/5", "-3/5,-2/5",
                                                  "-4/5,-1/5")));
        } else {
            out.push_back(product_congruence(F41(s + 1), F41(s - 1), F41(s), F41(s), p, s,
                                             desc("-4/5,-1/5", "-4/5,-1/5", "-4/5,-1/5",
                                                  "-4/5,-1/5")));
            out.push_back(product_congruence(F32(s + 1), F32(s - 1), F32(s), F32(s), p, s,
                                             desc("-3/5,-2/5", "-3/5,-2/5", "-3/5,-2/5",
                                                  "-3/5,-2/5")));
        }
    }
    return out;
}

}  // namespace dwork
