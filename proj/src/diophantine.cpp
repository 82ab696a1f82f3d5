#include "lowdisc/diophantine.hpp"

#include <algorithm>
#include <cmath>

#include "lowdisc/accum.hpp"
#include "lowdisc/constants.hpp"
#include "lowdisc/refine.hpp"

namespace lowdisc {

namespace {

// ||x|| over an interval [lo, hi] of width < 1: the distance-to-nearest-
// integer function is a tent, so the image is computable from the rounded
// endpoints.
Enclosure tent_image(const Enclosure& x) {
    Int r_lo = x.lo().round(), r_hi = x.hi().round();
    if (r_lo == r_hi) {
        return (x - Rational(r_lo)).abs();
    }
    if (r_hi == r_lo + 1) {
        Rational d_left = (x.lo() - Rational(r_lo)).abs();
        Rational d_right = (x.hi() - Rational(r_hi)).abs();
        return Enclosure(min(d_left, d_right), Rational(1, 2));
    }
    return Enclosure(Rational(0), Rational(1, 2));
}

bool rational_p(const Rational& p, long& out) {
    if (!p.is_integer()) return false;
    out = static_cast<long>(mpz_get_si(p.numerator().get_mpz_t()));
    return true;
}

// Dyadicized alpha: integers [lo, hi] with alpha in [lo, hi] / 2^w.
struct DyadicAlpha {
    Int lo, hi;
    long w;
};

DyadicAlpha dyadicize(const Enclosure& alpha, long w) {
    DyadicAlpha d;
    d.w = w;
    Int t = alpha.lo().numerator();
    t <<= static_cast<unsigned long>(w);
    mpz_fdiv_q(d.lo.get_mpz_t(), t.get_mpz_t(), alpha.lo().denominator().get_mpz_t());
    t = alpha.hi().numerator();
    t <<= static_cast<unsigned long>(w);
    mpz_cdiv_q(d.hi.get_mpz_t(), t.get_mpz_t(), alpha.hi().denominator().get_mpz_t());
    return d;
}

long bitlen(const Int& x) { return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

// Signals that the current alpha precision cannot resolve a nearest-integer
// decision (or produced a zero-straddling norm); callers escalate.
struct needs_escalation {};

// Norm of m*alpha from a dyadic alpha: returns integer bounds [nlo, nhi]
// such that ||m alpha|| is in [nlo, nhi] / 2^w, with nlo > 0.
void dyadic_norm(const DyadicAlpha& a, const Int& m_lo_acc, const Int& m_hi_acc,
                 Int& nlo, Int& nhi) {
    static thread_local Int r, half, t;
    long w = a.w;
    // nearest integer from the midpoint-ish: round(m*lo / 2^w)
    half = 1;
    half <<= static_cast<unsigned long>(w - 1);
    t = m_lo_acc + half;
    mpz_fdiv_q_2exp(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(w));
    t = m_hi_acc + half;
    Int r2;
    mpz_fdiv_q_2exp(r2.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(w));
    if (r != r2) throw needs_escalation{};
    r <<= static_cast<unsigned long>(w); // r * 2^w
    Int dl = m_lo_acc - r, dh = m_hi_acc - r;
    if (dl >= 0) { nlo = dl; nhi = dh; }
    else if (dh <= 0) { nlo = -dh; nhi = -dl; }
    else throw needs_escalation{}; // norm interval touches zero
    if (nlo == 0) throw needs_escalation{};
}

} // namespace

NormValue norm_dist(const RealSpec& spec, const Int& m, const Rational& eps) {
    if (m < 1) throw domain_error("norm_dist: m must be positive");
    validate(spec);
    if (const auto* rv = std::get_if<RationalValue>(&spec)) {
        const Int& a = rv->value.numerator();
        const Int& b = rv->value.denominator();
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), Int(m * a).get_mpz_t(), b.get_mpz_t());
        if (r == 0)
            throw zero_norm_error("norm_dist: ||" + m.get_str() + " * " + rv->value.str() +
                                  "|| = 0 (pole)");
        Int s = (2 * r <= b) ? r : Int(b - r);
        return {m, Enclosure(Rational(s, b)), true};
    }
    if (eps.sign() <= 0) throw domain_error("norm_dist: eps must be positive");
    long bits = std::max<long>(32, bitlen(m) + 16);
    for (;;) {
        if (bits > precision_limit())
            throw precision_exhausted_error("norm_dist: precision limit reached", bits);
        Enclosure v = tent_image(refine(spec, bits) * Rational(m));
        if (v.lo().sign() > 0 && v.width() <= eps * v.lo()) return {m, v, false};
        bits *= 2;
    }
}

Rational dsum_exact_rational(const Int& a, const Int& b, long p, unsigned long n) {
    if (p < 2) throw domain_error("dsum_exact_rational: integer p must be >= 2");
    if (Int(static_cast<unsigned long>(n)) >= b)
        throw pole_in_range_error("dsum: range end " + std::to_string(n) +
                                  " reaches the pole at m = " + b.get_str());
    Int am;
    mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); // a mod b, in [0, b)
    mpq_class acc(0);
    Int r(0), ms, msp;
    mpq_class term;
    for (unsigned long m = 1; m <= n; ++m) {
        r += am;
        if (r >= b) r -= b;
        // r = (m a) mod b; coprimality makes r = 0 impossible for m < b
        Int s = (2 * r <= b) ? r : Int(b - r);
        ms = s * static_cast<unsigned long>(m);
        mpz_pow_ui(msp.get_mpz_t(), ms.get_mpz_t(), static_cast<unsigned long>(p));
        term = 1;
        term /= mpq_class(msp);
        acc += term;
    }
    Int bp;
    mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
    acc *= mpq_class(bp);
    return Rational(acc);
}

namespace {

// One pass of the irrational-alpha sum with fixed alpha precision.
// Returns false if the pass must be retried at higher precision.
bool dsum_pass(const DyadicAlpha& a, long p_int, const Rational& p, bool integral_p,
               unsigned long m_from, unsigned long m_to, long grid_w,
               Int& out_lo, Int& out_hi) {
    Int acc_lo(0), acc_hi(0);
    Int mlo(a.lo * (m_from - 1));
    Int mhi(a.hi * (m_from - 1)); // the first += brings them to m_from * a
    Int nlo, nhi, mp, den_hi, den_lo, q;
    Int pw2 = 1;
    if (integral_p) pw2 <<= static_cast<unsigned long>(a.w * p_int + grid_w);
    try {
        for (unsigned long m = m_from; m <= m_to; ++m) {
            mlo += a.lo;
            mhi += a.hi;
            dyadic_norm(a, mlo, mhi, nlo, nhi);
            if (integral_p) {
                // term in [2^(wp) / (m^p nhi^p), 2^(wp) / (m^p nlo^p)]
                mpz_ui_pow_ui(mp.get_mpz_t(), m, static_cast<unsigned long>(p_int));
                mpz_pow_ui(den_hi.get_mpz_t(), nhi.get_mpz_t(), static_cast<unsigned long>(p_int));
                den_hi *= mp;
                mpz_fdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den_hi.get_mpz_t());
                acc_lo += q;
                mpz_pow_ui(den_lo.get_mpz_t(), nlo.get_mpz_t(), static_cast<unsigned long>(p_int));
                den_lo *= mp;
                mpz_cdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den_lo.get_mpz_t());
                acc_hi += q;
            } else {
                // 1/(m ||m alpha||) in [2^w/(m nhi), 2^w/(m nlo)], then ^p
                Int tw = 1;
                tw <<= static_cast<unsigned long>(a.w);
                Enclosure base(Rational(tw, nhi * static_cast<unsigned long>(m)),
                               Rational(tw, nlo * static_cast<unsigned long>(m)));
                Enclosure term = pow_rational(base, p, grid_w + 8);
                Int t = term.lo().numerator();
                t <<= static_cast<unsigned long>(grid_w);
                mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), term.lo().denominator().get_mpz_t());
                acc_lo += q;
                t = term.hi().numerator();
                t <<= static_cast<unsigned long>(grid_w);
                mpz_cdiv_q(q.get_mpz_t(), t.get_mpz_t(), term.hi().denominator().get_mpz_t());
                acc_hi += q;
            }
        }
    } catch (const needs_escalation&) {
        return false;
    }
    out_lo = acc_lo;
    out_hi = acc_hi;
    return true;
}

// Starting alpha precision: enough to make every nearest-integer decision
// for m <= n unambiguous (width < 1/(8 n q_next)) plus width headroom for
// the requested tolerance.
long initial_bits(unsigned long n, const Int& q_next, const Rational& eps) {
    Int m8(8);
    m8 *= static_cast<unsigned long>(n);
    m8 *= q_next;
    long ambig = bitlen(m8) + 1;
    Rational inv_eps = eps.reciprocal();
    long eps_bits = bitlen(inv_eps.ceil()) + 1;
    long width = 2 * bitlen(q_next) + eps_bits + 12;
    return std::max(ambig, width);
}

long grid_bits(unsigned long terms, const Rational& eps) {
    // rounding adds <= 2 * terms * 2^-W; keep that below eps/2
    Rational need = Rational(static_cast<long>(8 * terms)) / eps;
    return bitlen(need.ceil()) + 2;
}

} // namespace

SumResult dsum(const RealSpec& spec, const Rational& p, unsigned long n, const Rational& eps) {
    validate(spec);
    if (n < 1) throw domain_error("dsum: n must be positive");
    if (eps.sign() <= 0) throw domain_error("dsum: eps must be positive");
    long p_int = 0;
    bool integral = rational_p(p, p_int);
    if (const auto* rv = std::get_if<RationalValue>(&spec)) {
        if (Int(static_cast<unsigned long>(n)) >= rv->value.denominator())
            throw pole_in_range_error("dsum: n = " + std::to_string(n) +
                                      " reaches the pole at m = " +
                                      rv->value.denominator().get_str());
        if (integral) {
            if (p_int < 2) throw domain_error("dsum: exact path requires integer p >= 2");
            Rational v = dsum_exact_rational(rv->value.numerator(), rv->value.denominator(),
                                             p_int, n);
            return {Enclosure(v), n, p, n};
        }
        if (p < Rational(3, 2)) throw domain_error("dsum: numeric path requires p >= 3/2");
        // exact norms, per-term rational powers
        long W = grid_bits(n, eps);
        DyadicAccumulator acc(W);
        const Int& a = rv->value.numerator();
        const Int& b = rv->value.denominator();
        Int am;
        mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int r(0);
        for (unsigned long m = 1; m <= n; ++m) {
            r += am;
            if (r >= b) r -= b;
            Int s = (2 * r <= b) ? r : Int(b - r);
            acc.add(pow_rational(Rational(b, s * static_cast<unsigned long>(m)), p, W + 8));
        }
        return {acc.result(), n, p, n};
    }
    if (integral ? (p_int < 2) : (p < Rational(3, 2)))
        throw domain_error("dsum: p must be an integer >= 2 or rational >= 3/2");
    CFExpansion cf = cf_expand_until_q_exceeds(spec, Int(static_cast<unsigned long>(n)));
    ConvergentTable table = convergent_table(cf);
    size_t l1 = locate_index(table, Int(static_cast<unsigned long>(n)));
    const Int& q_next = table.q(l1 + 1);
    long bits = initial_bits(n, q_next, eps);
    long W = grid_bits(n, eps);
    for (;;) {
        if (bits > precision_limit())
            throw precision_exhausted_error("dsum: precision limit reached", bits);
        DyadicAlpha da = dyadicize(refine(spec, bits), bits);
        Int lo, hi;
        if (dsum_pass(da, p_int, p, integral, 1, n, W, lo, hi)) {
            Int scale = 1;
            scale <<= static_cast<unsigned long>(W);
            Enclosure value(Rational(lo, scale), Rational(hi, scale));
            if (value.width() <= eps) return {value, n, p, n};
        }
        bits *= 2;
    }
}

Enclosure norm_power_sum(const RealSpec& spec, long p, unsigned long n, const Rational& eps) {
    validate(spec);
    if (p < 1) throw domain_error("norm_power_sum: p must be >= 1");
    if (n < 1) return Enclosure(Rational(0));
    if (const auto* rv = std::get_if<RationalValue>(&spec)) {
        const Int& a = rv->value.numerator();
        const Int& b = rv->value.denominator();
        if (Int(n) >= b)
            throw pole_in_range_error("norm_power_sum: n reaches the pole at m = " + b.get_str());
        Int am;
        mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int bp, sp, r(0);
        mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
        mpq_class acc(0);
        for (unsigned long m = 1; m <= n; ++m) {
            r += am;
            if (r >= b) r -= b;
            Int s = (2 * r <= b) ? r : Int(b - r);
            mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(p));
            mpq_class term(bp);
            term /= mpq_class(sp);
            acc += term;
        }
        return Enclosure(Rational(acc));
    }
    CFExpansion cf = cf_expand_until_q_exceeds(spec, Int(n));
    ConvergentTable table = convergent_table(cf);
    size_t l1 = locate_index(table, Int(n));
    long bits = initial_bits(n, table.q(l1 + 1), eps);
    long W = grid_bits(n, eps);
    for (;;) {
        if (bits > precision_limit())
            throw precision_exhausted_error("norm_power_sum: precision limit reached", bits);
        DyadicAlpha da = dyadicize(refine(spec, bits), bits);
        Int acc_lo(0), acc_hi(0), mlo(0), mhi(0), nlo, nhi, den, q;
        Int pw2 = 1;
        pw2 <<= static_cast<unsigned long>(da.w * p + W);
        bool ok = true;
        try {
            for (unsigned long m = 1; m <= n; ++m) {
                mlo += da.lo;
                mhi += da.hi;
                dyadic_norm(da, mlo, mhi, nlo, nhi);
                mpz_pow_ui(den.get_mpz_t(), nhi.get_mpz_t(), static_cast<unsigned long>(p));
                mpz_fdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den.get_mpz_t());
                acc_lo += q;
                mpz_pow_ui(den.get_mpz_t(), nlo.get_mpz_t(), static_cast<unsigned long>(p));
                mpz_cdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den.get_mpz_t());
                acc_hi += q;
            }
        } catch (const needs_escalation&) {
            ok = false;
        }
        if (ok) {
            Int scale = 1;
            scale <<= static_cast<unsigned long>(W);
            Enclosure value(Rational(acc_lo, scale), Rational(acc_hi, scale));
            if (value.width() <= eps) return value;
        }
        bits *= 2;
    }
}

BlockDecomposition block_sum(const RealSpec& spec, long p, size_t ell) {
    validate(spec);
    if (p < 2) throw domain_error("block_sum: p must be an integer >= 2");
    if (ell < 1) throw domain_error("block_sum: ell must be >= 1");
    // Convergents up to index ell+1.
    CFExpansion cf;
    if (const auto* rv = std::get_if<RationalValue>(&spec)) {
        cf = cf_expand(spec, 1ul << 30);
        if (ell > cf.terms())
            throw domain_error("block_sum: ell = " + std::to_string(ell) +
                               " exceeds the quotient count " + std::to_string(cf.terms()) +
                               " of " + rv->value.str());
    } else {
        cf = cf_expand(spec, ell + 2);
        if (cf.terms() < ell)
            throw precision_exhausted_error("block_sum: spec provides only " +
                                                std::to_string(cf.terms()) + " quotients",
                                            static_cast<long>(cf.terms()));
    }
    ConvergentTable table = convergent_table(cf);
    const Int& q_l_z = table.q(ell);
    const Int& q_l1_z = table.q(ell + 1);
    Int q_lm1_z = ell >= 2 ? table.q(ell - 1) : Int(0); // q_0 = 0
    if (bitlen(q_l1_z) > 62)
        throw unsupported_error("block_sum: block boundary exceeds 2^62");
    unsigned long q_l = mpz_get_ui(q_l_z.get_mpz_t());
    unsigned long q_l1 = mpz_get_ui(q_l1_z.get_mpz_t());
    unsigned long q_lm1 = mpz_get_ui(q_lm1_z.get_mpz_t());
    Int a_ell = cf.a(ell);

    BlockDecomposition out;
    out.ell = ell;
    out.a_ell = a_ell;

    // Member lists, intersected with the block [q_l, q_l1). C has priority
    // where the classes collide (q_l = 1 or q_{l-1} = 0).
    for (unsigned long m = q_l; m < q_l1; m += q_l)
        out.members_c.push_back(static_cast<long long>(m));
    if (q_l >= 2) {
        for (unsigned long a = 1, m = q_l + q_lm1; a + 1 <= mpz_get_ui(a_ell.get_mpz_t());
             ++a, m += q_l)
            if (m >= q_l && m < q_l1 && m % q_l != 0)
                out.members_b.push_back(static_cast<long long>(m));
    }

    auto classify = [&](unsigned long m) -> int {
        if (m % q_l == 0) return 2;                       // C
        if (q_lm1 != 0 && m % q_l == q_lm1 % q_l) return 1; // B
        return 0;                                          // A
    };

    if (const auto* rv = std::get_if<RationalValue>(&spec)) {
        const Int& a = rv->value.numerator();
        const Int& b = rv->value.denominator();
        if (Int(static_cast<unsigned long>(q_l1)) > b)
            throw pole_in_range_error("block_sum: block extends to the pole at m = " +
                                      b.get_str());
        Int am;
        mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), Int(am * (q_l - 1)).get_mpz_t(), b.get_mpz_t());
        mpq_class parts[3] = {mpq_class(0), mpq_class(0), mpq_class(0)};
        Int ms, msp, bp;
        mpz_pow_ui(bp.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
        for (unsigned long m = q_l; m < q_l1; ++m) {
            r += am;
            if (r >= b) r -= b;
            if (r == 0)
                throw pole_in_range_error("block_sum: pole inside block at m = " +
                                          std::to_string(m));
            Int s = (2 * r <= b) ? r : Int(b - r);
            ms = s * m;
            mpz_pow_ui(msp.get_mpz_t(), ms.get_mpz_t(), static_cast<unsigned long>(p));
            mpq_class term(bp);
            term /= mpq_class(msp);
            parts[classify(m)] += term;
        }
        out.part_a = Enclosure(Rational(parts[0]));
        out.part_b = Enclosure(Rational(parts[1]));
        out.part_c = Enclosure(Rational(parts[2]));
    } else {
        // certified interval accumulation, escalating alpha precision
        Rational ap(a_ell);
        Rational eps = (ap.pow(p) + Rational(1)) * pow2(-28);
        unsigned long n_eff = q_l1 - 1;
        long bits = initial_bits(n_eff, q_l1_z, eps);
        unsigned long terms = std::max<unsigned long>(1, q_l1 - q_l);
        long W = grid_bits(terms, eps);
        for (;;) {
            if (bits > precision_limit())
                throw precision_exhausted_error("block_sum: precision limit reached", bits);
            DyadicAlpha da = dyadicize(refine(spec, bits), bits);
            Int acc_lo[3] = {Int(0), Int(0), Int(0)};
            Int acc_hi[3] = {Int(0), Int(0), Int(0)};
            Int pw2 = 1;
            pw2 <<= static_cast<unsigned long>(da.w * p + W);
            bool ok = true;
            try {
                Int mlo, mhi, nlo, nhi, mp, den, q;
                mlo = da.lo * (q_l - 1);
                mhi = da.hi * (q_l - 1);
                for (unsigned long m = q_l; m < q_l1; ++m) {
                    mlo += da.lo;
                    mhi += da.hi;
                    dyadic_norm(da, mlo, mhi, nlo, nhi);
                    int cls = classify(m);
                    mpz_ui_pow_ui(mp.get_mpz_t(), m, static_cast<unsigned long>(p));
                    mpz_pow_ui(den.get_mpz_t(), nhi.get_mpz_t(), static_cast<unsigned long>(p));
                    den *= mp;
                    mpz_fdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den.get_mpz_t());
                    acc_lo[cls] += q;
                    mpz_pow_ui(den.get_mpz_t(), nlo.get_mpz_t(), static_cast<unsigned long>(p));
                    den *= mp;
                    mpz_cdiv_q(q.get_mpz_t(), pw2.get_mpz_t(), den.get_mpz_t());
                    acc_hi[cls] += q;
                }
            } catch (const needs_escalation&) {
                ok = false;
            }
            if (ok) {
                Int scale = 1;
                scale <<= static_cast<unsigned long>(W);
                Enclosure parts[3];
                for (int i = 0; i < 3; ++i)
                    parts[i] = Enclosure(Rational(acc_lo[i], scale), Rational(acc_hi[i], scale));
                Enclosure total = parts[0] + parts[1] + parts[2];
                if (total.width() <= eps) {
                    out.part_a = parts[0];
                    out.part_b = parts[1];
                    out.part_c = parts[2];
                    break;
                }
            }
            bits *= 2;
        }
    }
    out.total = out.part_a + out.part_b + out.part_c;
    Enclosure zeta = zeta_2p(Rational(p), pow2(-40));
    out.dev_from_main = (out.total - zeta * Rational(a_ell).pow(p)).abs();
    return out;
}

QuotientEstimate quotient_estimate(const CFExpansion& cf, const Rational& p, size_t ell) {
    if (ell < 2) throw domain_error("quotient_estimate: ell must be >= 2");
    if (p <= Rational(1)) throw domain_error("quotient_estimate: p must be > 1");
    if (cf.exact && ell > cf.terms())
        throw domain_error("quotient_estimate: ell = " + std::to_string(ell) +
                           " exceeds the quotient count " + std::to_string(cf.terms()) +
                           " of the rational expansion");
    if (cf.terms() < ell - 1)
        throw needs_more_terms_error("quotient_estimate: needs quotients a_1..a_" +
                                         std::to_string(ell - 1) + ", expansion has " +
                                         std::to_string(cf.terms()),
                                     static_cast<long>(cf.terms()));
    long p_int = 0;
    bool integral = rational_p(p, p_int);
    const long bits = 72;
    Enclosure zeta = zeta_2p(p, pow2(-48));
    Enclosure power_sum(Rational(0));
    if (integral) {
        Int s(0), t;
        for (size_t k = 1; k < ell; ++k) {
            mpz_pow_ui(t.get_mpz_t(), cf.a(k).get_mpz_t(), static_cast<unsigned long>(p_int));
            s += t;
        }
        power_sum = Enclosure(Rational(s));
    } else {
        for (size_t k = 1; k < ell; ++k)
            power_sum = power_sum + pow_rational(Rational(cf.a(k)), p, bits);
    }
    QuotientEstimate out;
    out.main = pow_rational(zeta * power_sum, p.reciprocal(), bits);
    // 6^p * 4p^2/(p-1)^2 * ell^(1/p)
    Rational pm1 = p - Rational(1);
    Rational factor = Rational(4) * p * p / (pm1 * pm1);
    Enclosure sixp = integral ? Enclosure(Rational(6).pow(p_int))
                              : pow_rational(Rational(6), p, bits);
    Enclosure ellroot = pow_rational(Rational(static_cast<long>(ell)), p.reciprocal(), bits);
    out.additive_bound = sixp * factor * ellroot;
    return out;
}

BeckName beck_name_from_string(const std::string& name) {
    if (name == "sqrt2") return BeckName::sqrt2;
    if (name == "sqrt3") return BeckName::sqrt3;
    if (name == "phi") return BeckName::phi;
    throw unknown_constant_error("no closed-form growth constant for '" + name +
                                 "' (supported: sqrt2, sqrt3, phi)");
}

RealSpec beck_spec(BeckName name) {
    switch (name) {
        case BeckName::sqrt2: return sqrt2_spec();
        case BeckName::sqrt3: return sqrt3_spec();
        case BeckName::phi: return phi_spec();
    }
    throw unknown_constant_error("beck_spec: bad name");
}

namespace {

Enclosure beck_constant_bits(BeckName name, long bits) {
    switch (name) {
        case BeckName::sqrt2: {
            Enclosure s2 = sqrt_enclosure(Rational(2), bits + 8);
            return (s2 * Rational(24) * log_enclosure(s2 + Rational(1), bits + 8)).reciprocal();
        }
        case BeckName::sqrt3: {
            Enclosure s3 = sqrt_enclosure(Rational(3), bits + 8);
            return (s3 * Rational(12) * log_enclosure(s3 + Rational(2), bits + 8)).reciprocal();
        }
        case BeckName::phi: {
            Enclosure s5 = sqrt_enclosure(Rational(5), bits + 8);
            Enclosure phi = (s5 + Rational(1)) / Rational(2);
            return (s5 * Rational(30) * log_enclosure(phi, bits + 8)).reciprocal();
        }
    }
    throw unknown_constant_error("beck_constant: bad name");
}

} // namespace

Enclosure beck_constant(BeckName name) {
    Enclosure c = beck_constant_bits(name, 52);
    if (c.width() > Rational(1, Int("1000000000")))
        throw error("beck_constant: width contract violated");
    return c;
}

Enclosure beck_deviation(BeckName name, unsigned long n, const Rational& eps) {
    if (n < 1) throw domain_error("beck_deviation: n must be positive");
    if (eps.sign() <= 0) throw domain_error("beck_deviation: eps must be positive");
    RealSpec spec = beck_spec(name);
    // budget: dsum part eps/3 after division by 4 pi^4 (> 389), constant and
    // log parts well below eps/3 at 96 bits
    Rational eps_d = eps * Rational(300);
    SumResult s = dsum(spec, Rational(2), n, eps_d);
    Enclosure pi4 = pi_enclosure(96).pow(4) * Rational(4);
    Enclosure dev = s.value / pi4;
    if (n > 1) {
        Enclosure logn = log_enclosure(Rational(static_cast<long>(n)), 96);
        dev = dev - beck_constant_bits(name, 96) * logn;
    }
    return dev;
}

} // namespace lowdisc
