#include "dwork/ghost.hpp"

#include <sstream>
#include <stdexcept>

#include "dwork/polytope.hpp"

namespace dwork {

namespace {

constexpr unsigned kMaxFactorizationLength = 6;

uint64_t pow_u64(uint64_t base, unsigned e) {
    uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("power overflow");
        r *= base;
    }
    return r;
}

void check_tuple_context(const PolyTuple& lambda) {
    for (size_t i = 1; i < lambda.size(); ++i) lambda[0].check_context(lambda[i]);
}

CongruenceReport exact_equal_report(const LaurentPoly& lhs, const LaurentPoly& rhs,
                                    uint64_t p, std::string description) {
    CongruenceReport rep;
    rep.description = std::move(description);
    rep.p = p;
    rep.s = 0;  // exact identity, no modulus
    LaurentPoly diff = lhs - rhs;
    rep.pass = diff.is_zero();
    if (!rep.pass) {
        rep.has_witness = true;
        const auto& [e, c] = *diff.terms().begin();
        rep.witness.monomial = LaurentPoly::term(1, e, lhs.t_vars(), lhs.z_vars()).str();
        rep.witness.residue = c.get_str();
    }
    return rep;
}

/// All ways to cut {0..l-1} into consecutive nonempty blocks, as block
/// length lists.
std::vector<std::vector<unsigned>> compositions(unsigned l) {
    std::vector<std::vector<unsigned>> out;
    if (l == 0) return out;
    for (uint64_t mask = 0; mask < (1ull << (l - 1)); ++mask) {
        std::vector<unsigned> blocks;
        unsigned len = 1;
        for (unsigned i = 0; i + 1 < l; ++i) {
            if (mask & (1ull << i)) {
                blocks.push_back(len);
                len = 1;
            } else {
                ++len;
            }
        }
        blocks.push_back(len);
        out.push_back(std::move(blocks));
    }
    return out;
}

PolyTuple concat(const PolyTuple& a, const PolyTuple& b) {
    PolyTuple r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

PolyTuple drop_first(const PolyTuple& a) { return PolyTuple(a.begin() + 1, a.end()); }

}  // namespace

bool index_tuple_valid(const IndexTuple& m) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] > i) return false;
    return !m.empty();
}

bool index_tuple_indecomposable(const IndexTuple& m) {
    // m = m' * m'' with m'' in S means a cut point j where m_{j+i} <= i.
    for (size_t j = 1; j < m.size(); ++j) {
        bool suffix_ok = true;
        for (size_t i = j; i < m.size(); ++i) {
            if (m[i] > i - j) {
                suffix_ok = false;
                break;
            }
        }
        if (suffix_ok) return false;
    }
    return true;
}

std::vector<IndexTuple> enumerate_index_tuples(unsigned k, bool indecomposable_only) {
    if (k < 1) throw std::invalid_argument("tuple length must be >= 1");
    std::vector<IndexTuple> out;
    IndexTuple cur(k, 0);
    while (true) {
        if (!indecomposable_only || index_tuple_indecomposable(cur)) out.push_back(cur);
        unsigned i = 0;
        for (; i < k; ++i) {
            if (++cur[i] <= i) break;
            cur[i] = 0;
        }
        if (i == k) break;
    }
    return out;
}

std::vector<IndexTuple> factor_index_tuple(const IndexTuple& m) {
    if (!index_tuple_valid(m)) throw std::invalid_argument("not a valid index tuple");
    // Cut at every position whose suffix is itself in S; each block between
    // consecutive cuts is indecomposable.
    std::vector<size_t> cuts = {0};
    for (size_t j = 1; j < m.size(); ++j) {
        bool suffix_ok = true;
        for (size_t i = j; i < m.size(); ++i) {
            if (m[i] > i - j) {
                suffix_ok = false;
                break;
            }
        }
        if (suffix_ok) cuts.push_back(j);
    }
    cuts.push_back(m.size());
    std::vector<IndexTuple> factors;
    for (size_t k = 0; k + 1 < cuts.size(); ++k)
        factors.emplace_back(m.begin() + cuts[k], m.begin() + cuts[k + 1]);
    return factors;
}

LaurentPoly ghost_term(const LaurentPoly& L, unsigned m, uint64_t p) {
    if (m == 0) return L;
    LaurentPoly high = L.pow(pow_u64(p, m));
    LaurentPoly low = L.substitute_power(static_cast<int64_t>(p)).pow(pow_u64(p, m - 1));
    return high - low;
}

LaurentPoly composed_ghost(const PolyTuple& lambda, const IndexTuple& m, uint64_t p) {
    if (lambda.size() != m.size())
        throw std::invalid_argument("index tuple length does not match poly tuple");
    if (!index_tuple_valid(m)) throw std::invalid_argument("not a valid index tuple");
    check_tuple_context(lambda);
    LaurentPoly prod = LaurentPoly::constant(1, lambda[0].t_vars(), lambda[0].z_vars());
    for (size_t i = 0; i < lambda.size(); ++i) {
        LaurentPoly factor = ghost_term(lambda[i], m[i], p);
        uint64_t q = pow_u64(p, static_cast<unsigned>(i) - m[i]);
        if (q > 1) factor = factor.substitute_power(static_cast<int64_t>(q));
        prod = prod * factor;
    }
    return prod;
}

LaurentPoly tuple_product(const PolyTuple& lambda, uint64_t p, unsigned r, unsigned rp) {
    LaurentPoly prod = LaurentPoly::constant(1, r, rp);
    for (size_t i = 0; i < lambda.size(); ++i)
        prod = prod * lambda[i].pow(pow_u64(p, static_cast<unsigned>(i)));
    return prod;
}

LaurentPoly i_lambda(const PolyTuple& lambda, uint64_t p) {
    if (lambda.empty()) throw std::invalid_argument("empty tuple");
    check_tuple_context(lambda);
    LaurentPoly sum(lambda[0].t_vars(), lambda[0].z_vars());
    for (const auto& m : enumerate_index_tuples(static_cast<unsigned>(lambda.size()), true))
        sum = sum + composed_ghost(lambda, m, p);
    return sum;
}

namespace {

/// Factorization sum common to the decomposition and CT identities.
/// apply = I_block -> contribution; CT variants take the constant term
/// before the Frobenius shift.
LaurentPoly factorization_sum(const PolyTuple& lambda, uint64_t p, bool constant_terms) {
    const unsigned l = static_cast<unsigned>(lambda.size());
    if (l > kMaxFactorizationLength)
        throw std::invalid_argument("tuple length exceeds factorization enumeration cap");
    const unsigned r = lambda[0].t_vars(), rp = lambda[0].z_vars();
    LaurentPoly total(r, rp);
    for (const auto& blocks : compositions(l)) {
        LaurentPoly prod = LaurentPoly::constant(1, r, rp);
        unsigned offset = 0;
        for (unsigned len : blocks) {
            PolyTuple block(lambda.begin() + offset, lambda.begin() + offset + len);
            LaurentPoly Ib = i_lambda(block, p);
            if (constant_terms) Ib = Ib.ct_t();
            uint64_t q = pow_u64(p, offset);
            if (q > 1) Ib = Ib.substitute_power(static_cast<int64_t>(q));
            prod = prod * Ib;
            offset += len;
        }
        total = total + prod;
    }
    return total;
}

}  // namespace

CongruenceReport verify_ghost_decomposition(const PolyTuple& lambda, uint64_t p) {
    if (lambda.empty()) throw std::invalid_argument("empty tuple");
    check_tuple_context(lambda);
    LaurentPoly lhs = tuple_product(lambda, p, lambda[0].t_vars(), lambda[0].z_vars());
    LaurentPoly rhs = factorization_sum(lambda, p, false);
    return exact_equal_report(lhs, rhs, p, "ghost decomposition of tuple product (exact)");
}

CongruenceReport verify_ct_factorization(const PolyTuple& lambda, uint64_t p) {
    if (lambda.empty()) throw std::invalid_argument("empty tuple");
    check_tuple_context(lambda);
    auto fail = admissibility_failure(lambda, p);
    if (fail.first >= 0) {
        std::ostringstream os;
        os << "tuple not admissible: window (" << fail.first << ", " << fail.second
           << ") meets the scaled lattice off the origin";
        throw std::invalid_argument(os.str());
    }
    LaurentPoly lhs =
        tuple_product(lambda, p, lambda[0].t_vars(), lambda[0].z_vars()).ct_t();
    LaurentPoly rhs = factorization_sum(lambda, p, true);
    return exact_equal_report(lhs, rhs, p, "constant-term factorization of tuple product (exact)");
}

CongruenceReport verify_dwork_tuple_congruence(const PolyTuple& a, const PolyTuple& b,
                                               const PolyTuple& c, uint64_t p) {
    if (a.empty()) throw std::invalid_argument("tuple a must be nonempty");
    const unsigned r = a[0].t_vars(), rp = a[0].z_vars();
    PolyTuple ap = drop_first(a);
    const struct {
        const char* name;
        PolyTuple tuple;
    } combos[] = {{"a*b", concat(a, b)},
                  {"a*c", concat(a, c)},
                  {"a'*b", concat(ap, b)},
                  {"a'*c", concat(ap, c)}};
    for (const auto& combo : combos) {
        if (combo.tuple.empty()) continue;
        auto fail = admissibility_failure(combo.tuple, p);
        if (fail.first >= 0) {
            std::ostringstream os;
            os << "tuple " << combo.name << " not admissible at window (" << fail.first << ", "
               << fail.second << ")";
            throw std::invalid_argument(os.str());
        }
    }
    auto ct = [&](const PolyTuple& t) { return tuple_product(t, p, r, rp).ct_t(); };
    LaurentPoly ab = ct(combos[0].tuple), ac = ct(combos[1].tuple);
    LaurentPoly apb = ct(combos[2].tuple), apc = ct(combos[3].tuple);
    LaurentPoly lhs = ab * apc.substitute_power(static_cast<int64_t>(p));
    LaurentPoly rhs = apb.substitute_power(static_cast<int64_t>(p)) * ac;
    ModulusContext m(p, static_cast<unsigned>(a.size()));
    return lp_congruent(lhs, rhs, m,
                        "Dwork congruence for constant terms of tuple products");
}

CongruenceReport verify_mellit(const LaurentPoly& L, const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b, const std::vector<unsigned>& c,
                               uint64_t p) {
    if (L.z_vars() != 0)
        throw std::invalid_argument("digit-power congruence needs a polynomial in t only");
    if (a.empty()) throw std::invalid_argument("tuple a must be nonempty");
    auto check_digits = [&](const std::vector<unsigned>& d) {
        for (unsigned v : d)
            if (v < 1 || v >= p) throw std::invalid_argument("digit out of range [1, p-1]");
    };
    check_digits(a);
    check_digits(b);
    check_digits(c);

    auto digit_exponent = [&](const std::vector<unsigned>& d) {
        uint64_t e = 0, pw = 1;
        for (unsigned v : d) {
            e += v * pw;
            pw *= p;
        }
        return e;
    };
    auto digit_ct = [&](const std::vector<unsigned>& head, const std::vector<unsigned>& tail) {
        std::vector<unsigned> d = head;
        d.insert(d.end(), tail.begin(), tail.end());
        LaurentPoly ctp = L.pow(digit_exponent(d)).ct_t();
        return ctp.is_zero() ? mpz_class(0) : ctp.terms().begin()->second;
    };
    std::vector<unsigned> ap(a.begin() + 1, a.end());

    // Direct route on digit exponents.
    mpz_class lhs = digit_ct(a, b) * digit_ct(ap, c);
    mpz_class rhs = digit_ct(ap, b) * digit_ct(a, c);
    ModulusContext m(p, static_cast<unsigned>(a.size()));
    mpz_class diff = (lhs - rhs) % m.modulus();
    bool direct_pass = diff == 0;

    // Tuple-engine route with members L^{digit}.
    auto lift = [&](const std::vector<unsigned>& d) {
        PolyTuple t;
        for (unsigned v : d) t.push_back(L.pow(v));
        return t;
    };
    CongruenceReport tuple_rep = verify_dwork_tuple_congruence(lift(a), lift(b), lift(c), p);

    CongruenceReport rep;
    rep.description = "constant-term congruence for digit powers (direct and tuple routes)";
    rep.p = p;
    rep.s = static_cast<unsigned>(a.size());
    rep.pass = direct_pass && tuple_rep.pass;
    if (!direct_pass) {
        rep.has_witness = true;
        rep.witness.monomial = "1";
        mpz_class res;
        mpz_mod(res.get_mpz_t(), diff.get_mpz_t(), m.modulus().get_mpz_t());
        rep.witness.residue = res.get_str();
    } else if (!tuple_rep.pass) {
        rep.has_witness = tuple_rep.has_witness;
        rep.witness = tuple_rep.witness;
    }
    return rep;
}

}  // namespace dwork
