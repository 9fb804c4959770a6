#include "dwork/kz.hpp"

#include <sstream>
#include <stdexcept>

namespace dwork {

namespace {

mpz_class pow_p(uint64_t p, unsigned s) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

unsigned long half_level(uint64_t p, unsigned s) {
    mpz_class M = (pow_p(p, s) - 1) / 2;
    if (!M.fits_ulong_p()) throw std::overflow_error("level out of range");
    return M.get_ui();
}

mpz_class bin_ui(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

LaurentPoly zvar(unsigned i) {
    std::vector<int64_t> e(3, 0);
    e[i] = 1;
    return LaurentPoly::term(1, ExpVector({}, std::move(e)), 0, 3);
}

LaurentPoly zdiff(unsigned i, unsigned j) { return zvar(i) - zvar(j); }

/// Strips the (all-zero) t-exponent block of a coefficient extracted from a
/// master polynomial.
LaurentPoly drop_t(const LaurentPoly& a) {
    LaurentPoly r(0, 3);
    for (const auto& [e, c] : a.terms()) {
        for (int64_t te : e.t)
            if (te != 0) throw std::logic_error("nonzero t-exponent in extracted coefficient");
        r.add_term(ExpVector({}, e.z), c);
    }
    return r;
}

/// Master-polynomial factors t - z_i in the (t; z1,z2,z3) context.
LaurentPoly master_factor(unsigned i) {
    std::vector<int64_t> e(3, 0);
    e[i] = 1;
    return LaurentPoly::term(1, ExpVector({1}, {0, 0, 0}), 1, 3) -
           LaurentPoly::term(1, ExpVector({0}, std::move(e)), 1, 3);
}

/// Sum over k1+k2+k3 = total of sign * C(c1,k1) C(M,k2) C(M,k3) z^k with z1
/// carrying the C(c1, .) factor after the index rotation `rot`.
LaurentPoly trinomial_sum(unsigned long c1, unsigned long M, unsigned long total, bool negate,
                          const std::array<unsigned, 3>& rot) {
    LaurentPoly out(0, 3);
    for (unsigned long k1 = 0; k1 <= std::min(c1, total); ++k1) {
        const mpz_class b1 = bin_ui(c1, k1);
        for (unsigned long k2 = 0; k1 + k2 <= total; ++k2) {
            const unsigned long k3 = total - k1 - k2;
            if (k2 > M || k3 > M) continue;
            mpz_class c = b1 * bin_ui(M, k2) * bin_ui(M, k3);
            if (negate) c = -c;
            std::vector<int64_t> e(3, 0);
            e[rot[0]] = static_cast<int64_t>(k1);
            e[rot[1]] = static_cast<int64_t>(k2);
            e[rot[2]] = static_cast<int64_t>(k3);
            out.add_term(ExpVector({}, std::move(e)), c);
        }
    }
    return out;
}

/// Coefficient of t^{p^s} in the master polynomial (appears in the exact
/// defect of the third line-restriction identity).
LaurentPoly kz_c_closed(uint64_t p, unsigned s) {
    const unsigned long M = half_level(p, s);
    if (M == 0) return LaurentPoly(0, 3);
    return trinomial_sum(M, M, M - 1, (M - 1) % 2 != 0, {0, 1, 2});
}

/// Extraction route for U_s: coefficient of t^{p^s-1} in
/// ((t-(z1-z3))(t-(z2-z3)) t)^{(p^s-1)/2}.
LaurentPoly kz_u_extracted(uint64_t p, unsigned s) {
    const unsigned long M = half_level(p, s);
    const LaurentPoly t = LaurentPoly::term(1, ExpVector({1}, {0, 0, 0}), 1, 3);
    auto shift = [&](unsigned i) {
        std::vector<int64_t> e(3, 0);
        e[i] = 1;
        LaurentPoly zi = LaurentPoly::term(1, ExpVector({0}, std::move(e)), 1, 3);
        LaurentPoly z3 = LaurentPoly::term(1, ExpVector({0}, {0, 0, 1}), 1, 3);
        return t - zi + z3;
    };
    LaurentPoly phi = (shift(0) * shift(1) * t).pow(M);
    mpz_class target = pow_p(p, s) - 1;
    return drop_t(phi.coeff_t({static_cast<int64_t>(target.get_ui())}));
}

CongruenceReport merge_reports(std::string description, uint64_t p, unsigned s,
                               const std::vector<CongruenceReport>& parts) {
    CongruenceReport rep;
    rep.description = std::move(description);
    rep.p = p;
    rep.s = s;
    rep.pass = true;
    for (const auto& part : parts) {
        if (!part.pass) {
            rep.pass = false;
            if (!rep.has_witness && part.has_witness) {
                rep.has_witness = true;
                rep.witness = part.witness;
            }
        }
        if (part.has_observed_valuation &&
            (!rep.has_observed_valuation || part.observed_valuation < rep.observed_valuation)) {
            rep.has_observed_valuation = true;
            rep.observed_valuation = part.observed_valuation;
        }
    }
    return rep;
}

CongruenceReport exact_equal(const LaurentPoly& a, const LaurentPoly& b, uint64_t p,
                             std::string description) {
    CongruenceReport rep;
    rep.description = std::move(description);
    rep.p = p;
    rep.s = 0;  // exact identity
    LaurentPoly diff = a - b;
    rep.pass = diff.is_zero();
    if (!rep.pass) {
        rep.has_witness = true;
        const auto& [e, c] = *diff.terms().begin();
        rep.witness.monomial = LaurentPoly::term(1, e, a.t_vars(), a.z_vars()).str();
        rep.witness.residue = c.get_str();
    }
    return rep;
}

mpz_class eval3(const LaurentPoly& a, const std::array<PadicInt, 3>& z, const mpz_class& mod) {
    return a.eval_z_mod({z[0].residue(), z[1].residue(), z[2].residue()}, mod);
}

mpz_class invert_unit(const mpz_class& v, const mpz_class& mod, const char* what) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::runtime_error(std::string(what) + ": non-unit value");
    return inv;
}

}  // namespace

const OmegaMatrix& omega_matrix(unsigned i, unsigned j) {
    static const OmegaMatrix w12 = {{{-1, 1, 0}, {1, -1, 0}, {0, 0, 0}}};
    static const OmegaMatrix w13 = {{{-1, 0, 1}, {0, 0, 0}, {1, 0, -1}}};
    static const OmegaMatrix w23 = {{{0, 0, 0}, {0, -1, 1}, {0, 1, -1}}};
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return w12;
    if (i == 0 && j == 2) return w13;
    if (i == 1 && j == 2) return w23;
    throw std::invalid_argument("coupling matrix needs distinct indices in {0,1,2}");
}

LaurentPoly kz_t_closed(uint64_t p, unsigned s) {
    if (s == 0) return LaurentPoly::constant(1, 0, 3);
    const unsigned long M = half_level(p, s);
    return trinomial_sum(M, M, M, M % 2 != 0, {0, 1, 2});
}

LaurentPoly kz_i_closed(uint64_t p, unsigned s, unsigned i) {
    if (s == 0) throw std::invalid_argument("vector components defined for s >= 1");
    if (i > 2) throw std::invalid_argument("component index out of range");
    const unsigned long M = half_level(p, s);
    const std::array<unsigned, 3> rot = {i, static_cast<unsigned>(i == 0 ? 1 : 0),
                                         static_cast<unsigned>(i == 2 ? 1 : 2)};
    return trinomial_sum(M - 1, M, M - 1, (M - 1) % 2 != 0, rot);
}

LaurentPoly kz_u_closed(uint64_t p, unsigned s) {
    if (s == 0) return LaurentPoly::constant(1, 0, 3);
    const unsigned long M = half_level(p, s);
    const LaurentPoly A = zdiff(0, 2), B = zdiff(1, 2);
    std::vector<LaurentPoly> Bpow(M + 1, LaurentPoly::constant(1, 0, 3));
    for (unsigned long j = 1; j <= M; ++j) Bpow[j] = Bpow[j - 1] * B;
    LaurentPoly out(0, 3);
    LaurentPoly Apow = LaurentPoly::constant(1, 0, 3);
    for (unsigned long k = 0; k <= M; ++k) {
        mpz_class c = bin_ui(M, k);
        c *= c;
        if (M % 2 != 0) c = -c;
        out = out + (Apow * Bpow[M - k]) * LaurentPoly::constant(c, 0, 3);
        if (k < M) Apow = Apow * A;
    }
    return out;
}

KZApprox kz_build(uint64_t p, unsigned s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const unsigned long M = half_level(p, s);
    const mpz_class target = pow_p(p, s) - 1;
    const int64_t tdeg = static_cast<int64_t>(target.get_ui());

    const LaurentPoly f1 = master_factor(0), f2 = master_factor(1), f3 = master_factor(2);
    const LaurentPoly phi = (f1 * f2 * f3).pow(M);
    const LaurentPoly T_ext = drop_t(phi.coeff_t({tdeg}));
    const LaurentPoly U_ext = kz_u_extracted(p, s);

    KZApprox approx;
    approx.p = p;
    approx.s = s;
    approx.T = kz_t_closed(p, s);
    approx.U = kz_u_closed(p, s);
    if (T_ext != approx.T || U_ext != approx.U)
        throw std::logic_error("scalar approximation polynomials: extraction and closed form disagree");

    const std::array<LaurentPoly, 3> F = {f1.pow(M), f2.pow(M), f3.pow(M)};
    const std::array<LaurentPoly, 3> Fm1 = {f1.pow(M - 1), f2.pow(M - 1), f3.pow(M - 1)};
    for (unsigned i = 0; i < 3; ++i) {
        const unsigned j = (i == 0) ? 1 : 0, k = (i == 2) ? 1 : 2;
        const LaurentPoly I_ext = drop_t((Fm1[i] * F[j] * F[k]).coeff_t({tdeg}));
        approx.I[i] = kz_i_closed(p, s, i);
        if (I_ext != approx.I[i])
            throw std::logic_error("vector components: extraction and closed form disagree");
    }
    return approx;
}

std::vector<CongruenceReport> kz_residual(const KZApprox& approx) {
    const ModulusContext mc(approx.p, approx.s);
    const mpz_class inv2 = (pow_p(approx.p, approx.s) + 1) / 2;
    const LaurentPoly zero(0, 3);
    std::vector<CongruenceReport> out;
    for (unsigned i = 0; i < 3; ++i) {
        const unsigned j = (i == 0) ? 1 : 0, k = (i == 2) ? 1 : 2;
        const LaurentPoly zij = zdiff(i, j), zik = zdiff(i, k);
        const OmegaMatrix& wij = omega_matrix(i, j);
        const OmegaMatrix& wik = omega_matrix(i, k);
        std::vector<CongruenceReport> comps;
        for (unsigned a = 0; a < 3; ++a) {
            LaurentPoly rhs(0, 3);
            for (unsigned b = 0; b < 3; ++b) {
                LaurentPoly coupling =
                    zik * LaurentPoly::constant(wij[a][b], 0, 3) +
                    zij * LaurentPoly::constant(wik[a][b], 0, 3);
                rhs = rhs + coupling * approx.I[b];
            }
            LaurentPoly lhs = zij * zik * approx.I[a].derivative_z(i);
            std::ostringstream os;
            os << "connection residual, derivative in z" << i + 1 << ", component " << a + 1;
            comps.push_back(lp_congruent(lhs - rhs * LaurentPoly::constant(inv2, 0, 3), zero, mc,
                                         os.str()));
        }
        std::ostringstream os;
        os << "cleared-denominator connection equation in z" << i + 1 << " mod " << approx.p << "^"
           << approx.s;
        out.push_back(merge_reports(os.str(), approx.p, approx.s, comps));
    }
    {
        std::ostringstream os;
        os << "component sum I1+I2+I3 == 0 mod " << approx.p << "^" << approx.s;
        out.push_back(lp_congruent(approx.I[0] + approx.I[1] + approx.I[2], zero, mc, os.str()));
    }
    return out;
}

CongruenceReport kz_dwork_congruence(uint64_t p, unsigned s, char which) {
    if (which != 'T' && which != 'U') throw std::invalid_argument("which must be 'T' or 'U'");
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const ModulusContext mc(p, s);
    auto X = [&](unsigned level) {
        LaurentPoly v = (which == 'T') ? kz_t_closed(p, level) : kz_u_closed(p, level);
        return v.reduce_mod(mc);
    };
    const int64_t q = static_cast<int64_t>(p);
    const LaurentPoly lhs = X(s + 1) * X(s - 1).substitute_power(q);
    const LaurentPoly rhs = X(s) * X(s).substitute_power(q);
    std::ostringstream os;
    os << which << "_" << s + 1 << "(z) " << which << "_" << s - 1 << "(z^" << p << ") == " << which
       << "_" << s << "(z) " << which << "_" << s << "(z^" << p << ") mod " << p << "^" << s;
    return lp_congruent(lhs, rhs, mc, os.str());
}

EtaValues eta_evaluate(const KZApprox& approx, const std::array<PadicInt, 3>& z) {
    const uint64_t p = approx.p;
    const unsigned s = approx.s;
    for (const auto& zi : z)
        if (zi.prime() != p || zi.precision() < s)
            throw std::invalid_argument("sample must match the prime at precision >= s");
    const mpz_class mod = pow_p(p, s);
    const mpz_class Tval = eval3(approx.T, z, mod);
    const mpz_class Tinv = invert_unit(Tval, mod, "logarithmic derivative");

    EtaValues eta;
    std::array<LaurentPoly, 3> dT = {approx.T.derivative_z(0), approx.T.derivative_z(1),
                                     approx.T.derivative_z(2)};
    for (unsigned i = 0; i < 3; ++i)
        eta.first.emplace_back(p, s, eval3(dT[i], z, mod) * Tinv);
    for (unsigned i = 0; i < 3; ++i) {
        eta.second.emplace_back();
        for (unsigned j = 0; j < 3; ++j)
            eta.second.back().emplace_back(p, s, eval3(dT[i].derivative_z(j), z, mod) * Tinv);
    }
    return eta;
}

CongruenceReport eta_relations_check(const KZApprox& approx, const std::array<PadicInt, 3>& z) {
    const uint64_t p = approx.p;
    const unsigned s = approx.s;
    const mpz_class mod = pow_p(p, s);
    const EtaValues eta = eta_evaluate(approx, z);

    std::vector<CongruenceReport> parts;
    auto record = [&](const PadicInt& v, const std::string& what) {
        CongruenceReport rep;
        rep.description = what;
        rep.p = p;
        rep.s = s;
        rep.pass = v.residue() == 0;
        if (!rep.pass) {
            rep.has_witness = true;
            rep.witness = {what, v.residue().get_str()};
        }
        parts.push_back(std::move(rep));
    };

    PadicInt sum1 = eta.first[0] + eta.first[1] + eta.first[2];
    record(sum1, "first-order sum");
    for (unsigned i = 0; i < 3; ++i) {
        PadicInt sum2 = eta.second[i][0] + eta.second[i][1] + eta.second[i][2];
        record(sum2, "second-order row sum " + std::to_string(i + 1));
    }
    // d_j(eta^(i)) = eta^(ji) - eta^(i) eta^(j): evaluate the left side from
    // the polynomial form T d_j d_i T - d_iT d_jT over T^2 and compare.
    const mpz_class Tval = eval3(approx.T, z, mod);
    const mpz_class Tinv = invert_unit(Tval, mod, "logarithmic derivative");
    for (unsigned i = 0; i < 3; ++i) {
        const LaurentPoly dTi = approx.T.derivative_z(i);
        for (unsigned j = 0; j < 3; ++j) {
            const LaurentPoly num =
                approx.T * dTi.derivative_z(j) - dTi * approx.T.derivative_z(j);
            PadicInt lhs(p, s, eval3(num, z, mod) * Tinv * Tinv);
            PadicInt rhs = eta.second[j][i] - eta.first[i] * eta.first[j];
            record(lhs - rhs,
                   "log-derivative identity (" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")");
        }
    }
    std::ostringstream os;
    os << "logarithmic-derivative relations at z=(" << z[0].residue() << "," << z[1].residue()
       << "," << z[2].residue() << ") mod " << p << "^" << s;
    return merge_reports(os.str(), p, s, parts);
}

CongruenceReport eta_kz_system_check(const KZApprox& approx,
                                     const std::vector<std::array<PadicInt, 3>>& samples) {
    const uint64_t p = approx.p;
    const unsigned s = approx.s;
    const mpz_class mod = pow_p(p, s);
    const mpz_class inv2 = (pow_p(p, s) + 1) / 2;
    std::vector<CongruenceReport> parts;
    for (const auto& z : samples) {
        const EtaValues eta = eta_evaluate(approx, z);
        for (unsigned i = 0; i < 3; ++i) {
            const unsigned j = (i == 0) ? 1 : 0, k = (i == 2) ? 1 : 2;
            const PadicInt dij = z[i] - z[j];
            const PadicInt dik = z[i] - z[k];
            if (!dij.is_unit() || !dik.is_unit())
                throw std::invalid_argument("sample coordinates must be distinct mod p");
            const mpz_class iij = dij.inverse().residue(), iik = dik.inverse().residue();
            const OmegaMatrix& wij = omega_matrix(i, j);
            const OmegaMatrix& wik = omega_matrix(i, k);
            for (unsigned a = 0; a < 3; ++a) {
                mpz_class acc = 0;
                for (unsigned b = 0; b < 3; ++b)
                    acc += (wij[a][b] * iij + wik[a][b] * iik) * eta.first[b].residue();
                PadicInt rhs(p, s, inv2 * acc);
                PadicInt diff = eta.second[i][a] - rhs;
                CongruenceReport rep;
                {
                    std::ostringstream os;
                    os << "second-order system row (" << i + 1 << "," << a + 1 << ") at z=("
                       << z[0].residue() << "," << z[1].residue() << "," << z[2].residue() << ")";
                    rep.description = os.str();
                }
                rep.p = p;
                rep.s = s;
                rep.pass = diff.residue() == 0;
                if (!rep.pass) {
                    rep.has_witness = true;
                    rep.witness = {rep.description, diff.residue().get_str()};
                }
                parts.push_back(std::move(rep));
            }
        }
    }
    std::ostringstream os;
    os << "second-order logarithmic-derivative system mod " << p << "^" << s << " at "
       << samples.size() << " points";
    return merge_reports(os.str(), p, s, parts);
}

CongruenceReport u_factorization_check(uint64_t p, unsigned s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const unsigned long M = half_level(p, s);
    const Upoly P = family_polynomial(FamilyTag::Half, p, s);
    const LaurentPoly A = zdiff(0, 2), B = zdiff(1, 2);
    // (z1-z3)^M P_s((z2-z3)/(z1-z3)) with denominators cleared.
    std::vector<LaurentPoly> Apow(M + 1, LaurentPoly::constant(1, 0, 3));
    for (unsigned long j = 1; j <= M; ++j) Apow[j] = Apow[j - 1] * A;
    LaurentPoly rhs(0, 3);
    LaurentPoly Bpow = LaurentPoly::constant(1, 0, 3);
    for (unsigned long k = 0; k <= M; ++k) {
        if (static_cast<long>(k) <= P.degree())
            rhs = rhs + (Bpow * Apow[M - k]) * LaurentPoly::constant(P.coeff(k), 0, 3);
        if (k < M) Bpow = Bpow * B;
    }
    const LaurentPoly lhs = kz_u_extracted(p, s);
    std::ostringstream os;
    os << "U_" << s << "(z) == (z1-z3)^" << M << " P_" << s << "((z2-z3)/(z1-z3)) exactly, p=" << p;
    return exact_equal(lhs, rhs, p, os.str());
}

CongruenceReport line_equality_check(uint64_t p, unsigned s) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    const LaurentPoly T = kz_t_closed(p, s), U = kz_u_closed(p, s);
    const std::vector<bool> mask = {true, false, true};
    const std::vector<mpz_class> vals = {1, 0, 0};
    auto line = [&](const LaurentPoly& a) { return a.substitute_z(mask, vals); };
    const LaurentPoly T_line = line(T), U_line = line(U);

    std::vector<CongruenceReport> parts;
    for (unsigned i = 0; i < 2; ++i) {
        std::ostringstream os;
        os << "d" << i + 1 << "T_s U_s == d" << i + 1 << "U_s T_s on (1,z2,0), exact, p=" << p
           << " s=" << s;
        parts.push_back(exact_equal(line(T.derivative_z(i)) * U_line,
                                    line(U.derivative_z(i)) * T_line, p, os.str()));
    }
    // Third direction: the exact defect is -p^s c_s U_s with c_s the next
    // t-coefficient of the master polynomial, hence zero mod p^s.
    {
        const LaurentPoly defect =
            line(T.derivative_z(2)) * U_line - line(U.derivative_z(2)) * T_line;
        const LaurentPoly c_line = line(kz_c_closed(p, s));
        const LaurentPoly expected = c_line * U_line * LaurentPoly::constant(pow_p(p, s), 0, 1);
        std::ostringstream os;
        os << "d3T_s U_s - d3U_s T_s == -" << p << "^" << s
           << " c_s U_s on (1,z2,0), exact, p=" << p << " s=" << s;
        parts.push_back(exact_equal(defect, -expected, p, os.str()));
    }
    std::ostringstream os;
    os << "line-restriction log-derivative equalities, p=" << p << " s=" << s;
    return merge_reports(os.str(), p, s, parts);
}

CongruenceReport omega_vector_compare(const PadicInt& u1, const PadicInt& u2, unsigned s) {
    const uint64_t p = u1.prime();
    if (u2.prime() != p) throw std::invalid_argument("mixed p-adic contexts");
    if (u1.precision() < s || u2.precision() < s)
        throw std::invalid_argument("need precision >= s");
    if (!u1.is_unit()) throw std::invalid_argument("u1 must be a unit");
    const mpz_class mod = pow_p(p, s);
    const mpz_class Mres = (pow_p(p, s) - 1) / 2;

    const Upoly P = family_polynomial(FamilyTag::Half, p, s);
    const mpz_class u2v = u2.truncate(s).residue();
    const mpz_class Pval = P.eval_mod(u2v, mod);
    const mpz_class rho = P.derivative().eval_mod(u2v, mod) *
                          invert_unit(Pval, mod, "half-family value");
    const PadicInt u1s = u1.truncate(s);
    const std::array<PadicInt, 3> z = {u1s, u1s * u2.truncate(s), PadicInt(p, s, 0)};

    const LaurentPoly U = kz_u_closed(p, s);
    const mpz_class Uval = eval3(U, z, mod);
    const mpz_class Uinv = invert_unit(Uval, mod, "shifted-master value");
    const mpz_class u1inv = u1s.inverse().residue();

    const std::array<mpz_class, 3> expected = {u1inv * (Mres - u2v * rho), u1inv * rho,
                                               u1inv * (-Mres + (u2v - 1) * rho)};
    std::vector<CongruenceReport> parts;
    mpz_class comp_sum = 0;
    for (unsigned i = 0; i < 3; ++i) {
        const mpz_class got = eval3(U.derivative_z(i), z, mod) * Uinv;
        comp_sum += got;
        PadicInt diff(p, s, got - expected[i]);
        CongruenceReport rep;
        rep.description = "gradient component " + std::to_string(i + 1);
        rep.p = p;
        rep.s = s;
        rep.pass = diff.residue() == 0;
        if (!rep.pass) {
            rep.has_witness = true;
            rep.witness = {rep.description, diff.residue().get_str()};
        }
        parts.push_back(std::move(rep));
    }
    {
        PadicInt total(p, s, comp_sum);
        CongruenceReport rep;
        rep.description = "gradient component sum";
        rep.p = p;
        rep.s = s;
        rep.pass = total.residue() == 0;
        if (!rep.pass) {
            rep.has_witness = true;
            rep.witness = {rep.description, total.residue().get_str()};
        }
        parts.push_back(std::move(rep));
    }
    std::ostringstream os;
    os << "normalized gradient of the shifted scalar matches the cross-ratio vector at u=("
       << u1.residue() << "," << u2.residue() << ") mod " << p << "^" << s;
    return merge_reports(os.str(), p, s, parts);
}

std::vector<std::array<PadicInt, 3>> kz_sample_points(uint64_t p, unsigned precision, size_t cap) {
    std::vector<std::array<PadicInt, 3>> out;
    auto lift = [&](uint64_t a) {
        if (a == 0) return PadicInt(p, precision, 0);
        return teichmuller(mpz_class(static_cast<unsigned long>(a)), p, precision);
    };
    for (uint64_t a = 0; a < p && out.size() < cap; ++a) {
        for (uint64_t b = 0; b < p && out.size() < cap; ++b) {
            if (b == a) continue;
            for (uint64_t c = 0; c < p && out.size() < cap; ++c) {
                if (c == a || c == b) continue;
                std::array<PadicInt, 3> z = {lift(a), lift(b), lift(c)};
                if (domain_membership(z, DomainTag::KzD)) out.push_back(std::move(z));
            }
        }
    }
    return out;
}

}  // namespace dwork
