#include "dwork/conjecture.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dwork {

namespace {

mpz_class pow_p(uint64_t p, unsigned s) {
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, s);
    return m;
}

mpz_class half_of(uint64_t p, unsigned s) { return (pow_p(p, s) - 1) / 2; }

mpz_class bin_sq(const mpz_class& n, const mpz_class& k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r * r;
}

unsigned valuation_capped(const mpz_class& v, uint64_t p, unsigned cap) {
    if (v == 0) return cap;
    mpz_class w = v;
    unsigned val = 0;
    while (val < cap && mpz_divisible_ui_p(w.get_mpz_t(), p)) {
        mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), p);
        ++val;
    }
    return val;
}

/// Table of C(n, k)^2 for k = 0..len-1 (zero beyond n), built incrementally.
std::vector<mpz_class> bin_sq_table(const mpz_class& n, size_t len) {
    std::vector<mpz_class> out(len, 0);
    mpz_class b = 1;
    for (size_t k = 0; k < len; ++k) {
        out[k] = b * b;
        if (mpz_class(static_cast<unsigned long>(k)) >= n) break;
        b *= n - static_cast<unsigned long>(k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k) + 1);
    }
    return out;
}

void check_profile(const DigitProfile& profile, uint64_t p) {
    if (profile.a >= p || profile.b >= p)
        throw std::invalid_argument("digit out of range");
    for (const auto& [k1, k2] : profile.k)
        if (k1 >= p || k2 >= p) throw std::invalid_argument("digit out of range");
    if (profile.k.empty()) throw std::invalid_argument("need at least one digit group");
}

}  // namespace

std::string DigitProfile::str() const {
    std::ostringstream os;
    os << "a=" << a << " b=" << b << " k=";
    for (size_t i = 0; i < k.size(); ++i)
        os << (i ? "," : "") << "(" << k[i].first << "," << k[i].second << ")";
    return os.str();
}

mpz_class a_term(const DigitProfile& profile, uint64_t p) {
    check_profile(profile, p);
    const unsigned s = profile.level();
    mpz_class top = profile.a, low = 0, pw = p;
    for (unsigned i = 0; i < s; ++i) {
        top += profile.k[i].first * pw;
        low += profile.k[i].second * (pw / static_cast<unsigned long>(p));
        pw *= static_cast<unsigned long>(p);
    }
    // pw == p^{s+1} here.
    const mpz_class top_full = top + profile.b * pw;
    const mpz_class low_full = low + profile.b * (pw / static_cast<unsigned long>(p));
    return bin_sq(half_of(p, s + 2), top_full) * bin_sq(half_of(p, s), low) -
           bin_sq(half_of(p, s + 1), top) * bin_sq(half_of(p, s + 1), low_full);
}

mpz_class b_symmetrized(const DigitProfile& profile, uint64_t p) {
    check_profile(profile, p);
    const unsigned s = profile.level();
    mpz_class total = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
        DigitProfile swapped = profile;
        for (unsigned i = 0; i < s; ++i)
            if (mask & (uint64_t{1} << i))
                std::swap(swapped.k[i].first, swapped.k[i].second);
        total += a_term(swapped, p);
    }
    return total;
}

CongruenceReport conjecture_scan(uint64_t p, unsigned s, const ScanOptions& opts) {
    if (s < 1) throw std::invalid_argument("need s >= 1");
    ModulusContext mc(p, s + 1);
    {
        mpz_class grid = pow_p(p, 2 * s + 2);
        if (grid > opts.max_grid) throw std::invalid_argument("scan grid exceeds configured cap");
    }
    const mpz_class divisor = pow_p(p, s + 1);

    struct Record {
        DigitProfile profile;
        mpz_class B;
        unsigned valuation;
    };
    // Squared-binomial tables for the three levels involved; index ranges
    // cover every digit assembly that can occur.
    const size_t hi_len = static_cast<size_t>(pow_p(p, s + 2).get_ui());
    const size_t mid_len = static_cast<size_t>(pow_p(p, s + 1).get_ui());
    const size_t lo_len = static_cast<size_t>(pow_p(p, s).get_ui());
    const auto sq_hi = bin_sq_table(half_of(p, s + 2), hi_len);
    const auto sq_mid = bin_sq_table(half_of(p, s + 1), mid_len);
    const auto sq_lo = bin_sq_table(half_of(p, s), lo_len);
    auto a_term_tab = [&](const DigitProfile& profile) -> mpz_class {
        size_t top = profile.a, low = 0, pw = static_cast<size_t>(p);
        for (unsigned i = 0; i < s; ++i) {
            top += profile.k[i].first * pw;
            low += profile.k[i].second * (pw / static_cast<size_t>(p));
            pw *= static_cast<size_t>(p);
        }
        const size_t top_full = top + profile.b * pw;
        const size_t low_full = low + profile.b * (pw / static_cast<size_t>(p));
        return sq_hi[top_full] * sq_lo[low] - sq_mid[top] * sq_mid[low_full];
    };
    // Shard by (a, b); merge order is the (a, b, k) enumeration order, so the
    // report and checkpoint stream are deterministic for any job count.
    const unsigned pairs = static_cast<unsigned>(p * p);
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::vector<Record>> shard(pairs);
    auto run_pair = [&](unsigned pair_idx) {
        DigitProfile profile;
        profile.a = pair_idx / static_cast<unsigned>(p);
        profile.b = pair_idx % static_cast<unsigned>(p);
        profile.k.assign(s, {0, 0});
        auto& out = shard[pair_idx];
        while (true) {
            mpz_class B = 0;
            for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
                DigitProfile swapped = profile;
                for (unsigned i = 0; i < s; ++i)
                    if (mask & (uint64_t{1} << i))
                        std::swap(swapped.k[i].first, swapped.k[i].second);
                B += a_term_tab(swapped);
            }
            out.push_back({profile, B, valuation_capped(B, p, s + 4)});
            // Odometer over the 2s digits.
            unsigned i = 0;
            for (; i < s; ++i) {
                if (++profile.k[i].first < p) break;
                profile.k[i].first = 0;
                if (++profile.k[i].second < p) break;
                profile.k[i].second = 0;
            }
            if (i == s) break;
        }
    };
    if (jobs == 1) {
        for (unsigned i = 0; i < pairs; ++i) run_pair(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (unsigned i = j; i < pairs; i += jobs) run_pair(i);
            });
        for (auto& t : pool) t.join();
    }

    CongruenceReport rep;
    {
        std::ostringstream os;
        os << "symmetrized squared-binomial differences divisible by " << p << "^" << s + 1
           << ", full digit grid (p=" << p << ", level " << s << ")";
        rep.description = os.str();
    }
    rep.p = p;
    rep.s = s + 1;
    rep.pass = true;
    unsigned min_val = s + 4;
    std::ofstream ndjson;
    if (!opts.checkpoint_path.empty()) {
        ndjson.open(opts.checkpoint_path);
        if (!ndjson) throw std::runtime_error("cannot open checkpoint path");
    }
    for (unsigned i = 0; i < pairs; ++i) {
        for (const auto& rec : shard[i]) {
            if (ndjson.is_open())
                ndjson << "{\"profile\":\"" << rec.profile.str() << "\",\"B\":\""
                       << rec.B.get_str() << "\",\"valuation\":" << rec.valuation << "}\n";
            min_val = std::min(min_val, rec.valuation);
            if (!mpz_divisible_p(rec.B.get_mpz_t(), divisor.get_mpz_t())) {
                rep.pass = false;
                if (!rep.has_witness) {
                    rep.has_witness = true;
                    rep.witness = {rec.profile.str(), rec.B.get_str()};
                }
            }
        }
    }
    rep.has_observed_valuation = true;
    rep.observed_valuation = min_val;
    return rep;
}

CongruenceReport coeff_identity_42_33(uint64_t p, const std::array<unsigned, 4>& N) {
    for (unsigned d : N)
        if (d >= p) throw std::invalid_argument("digit out of range");
    const mpz_class mod = pow_p(p, 3);
    const mpz_class M4 = half_of(p, 4), M3 = half_of(p, 3), M2 = half_of(p, 2);
    const mpz_class pz(static_cast<unsigned long>(p));

    mpz_class restricted = 0;
    for (unsigned k1 = 0; k1 <= N[1]; ++k1) {
        const unsigned l1 = N[1] - k1;
        for (unsigned k2 = 0; k2 <= N[2]; ++k2) {
            const unsigned l2 = N[2] - k2;
            const mpz_class i3 = N[0] + k1 * pz + k2 * pz * pz;
            restricted += bin_sq(M4, i3 + N[3] * pz * pz * pz) * bin_sq(M2, l1 + l2 * pz) -
                          bin_sq(M3, i3) * bin_sq(M3, l1 + l2 * pz + N[3] * pz * pz);
        }
    }

    // Full convolution coefficient of x^n in the level-(4,2)/(3,3) product
    // difference; the theorem-level congruence makes it vanish mod p^3.
    const mpz_class n = N[0] + N[1] * pz + N[2] * pz * pz + N[3] * pz * pz * pz;
    mpz_class full = 0;
    for (mpz_class j = 0; j * pz <= n; ++j) {
        const mpz_class i = n - j * pz;
        full += bin_sq(M4, i) * bin_sq(M2, j) - bin_sq(M3, i) * bin_sq(M3, j);
    }

    CongruenceReport rep;
    {
        std::ostringstream os;
        os << "coefficient of x^" << n.get_str()
           << " in the level-(4,2)/(3,3) difference: restricted digit sum and full convolution"
           << " both vanish mod " << p << "^3";
        rep.description = os.str();
    }
    rep.p = p;
    rep.s = 3;
    mpz_class r1, r2;
    mpz_mod(r1.get_mpz_t(), restricted.get_mpz_t(), mod.get_mpz_t());
    mpz_mod(r2.get_mpz_t(), full.get_mpz_t(), mod.get_mpz_t());
    rep.pass = (r1 == 0) && (r2 == 0);
    if (r1 != 0) {
        rep.has_witness = true;
        rep.witness = {"restricted sum", r1.get_str()};
    } else if (r2 != 0) {
        rep.has_witness = true;
        rep.witness = {"full coefficient", r2.get_str()};
    }
    const mpz_class worst = (valuation_capped(restricted, p, 6) < valuation_capped(full, p, 6))
                                ? restricted
                                : full;
    rep.has_observed_valuation = true;
    rep.observed_valuation = valuation_capped(worst, p, 6);
    return rep;
}

}  // namespace dwork
