#include "lowdisc/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lowdisc/accum.hpp"

namespace lowdisc {

namespace {

// atan(1/x) for integer x >= 2: alternating series with decreasing terms,
// so the remainder after K terms is bounded by the first omitted term.
Enclosure atan_recip(unsigned long x, long bits) {
    DyadicAccumulator acc(bits + 8);
    Int xpow(x);            // x^(2k+1)
    Int xsq(static_cast<unsigned long>(x));
    xsq *= static_cast<unsigned long>(x);
    Rational target = pow2(-(bits + 4));
    unsigned long k = 0;
    int sign = 1;
    Rational term;
    for (;;) {
        term = Rational(1, Int((2 * k + 1)) * xpow);
        if (term < target) break;
        if (sign > 0) acc.add_point(term); else acc.add_point(-term);
        xpow *= xsq;
        sign = -sign;
        ++k;
        if (k > 1'000'000) throw error("atan_recip: series failed to converge");
    }
    // remainder bounded by the first omitted term
    Enclosure s = acc.result();
    return Enclosure(s.lo() - term, s.hi() + term);
}

std::mutex cache_mutex;
std::map<long, Enclosure> pi_cache;
std::map<long, Enclosure> ln2_cache;

// ln m for rational m in [1, 2): 2*atanh(z) with z = (m-1)/(m+1) in [0, 1/3].
// Positive-term series; tail <= 2 z^(2K+3) / ((2K+3)(1 - z^2)).
Enclosure log_1_to_2(const Rational& m, long bits) {
    Rational z = (m - Rational(1)) / (m + Rational(1));
    if (z.is_zero()) return Enclosure(Rational(0));
    long g = bits + 16;
    // dyadicize z once so power denominators stay 2^g
    Int zlo, zhi;
    {
        Int t = z.numerator();
        t <<= static_cast<unsigned long>(g);
        mpz_fdiv_q(zlo.get_mpz_t(), t.get_mpz_t(), z.denominator().get_mpz_t());
        mpz_cdiv_q(zhi.get_mpz_t(), t.get_mpz_t(), z.denominator().get_mpz_t());
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(g));
    // zsq interval, also on the grid
    auto mul_down = [&](const Int& a, const Int& b) {
        Int t = a * b;
        mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(g));
        return t;
    };
    auto mul_up = [&](const Int& a, const Int& b) {
        Int t = a * b;
        mpz_cdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(g));
        return t;
    };
    Int zsq_lo = mul_down(zlo, zlo), zsq_hi = mul_up(zhi, zhi);
    Int pow_lo = zlo, pow_hi = zhi;
    DyadicAccumulator acc(g);
    Rational target = pow2(-(bits + 6));
    unsigned long j = 0;
    for (;;) {
        Rational t_lo(pow_lo, scale), t_hi(pow_hi, scale);
        Rational d(2 * j + 1);
        acc.add(t_lo / d, t_hi / d);
        if (t_hi / d < target) {
            // tail bound from the geometric ratio z^2 <= zsq_hi/2^g
            Rational zsq_up(zsq_hi, scale);
            Rational tail = (t_hi * zsq_up / Rational(2 * j + 3)) / (Rational(1) - zsq_up);
            Enclosure s = acc.result();
            return Enclosure(s.lo() * Rational(2), (s.hi() + tail) * Rational(2));
        }
        pow_lo = mul_down(pow_lo, zsq_lo);
        pow_hi = mul_up(pow_hi, zsq_hi);
        ++j;
        if (j > 1'000'000) throw error("log: series failed to converge");
    }
}

bool is_integer_rational(const Rational& r) { return r.is_integer(); }

} // namespace

Enclosure pi_enclosure(long bits) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = pi_cache.lower_bound(bits);
        if (it != pi_cache.end()) return it->second;
    }
    // pi = 16*atan(1/5) - 4*atan(1/239)
    Enclosure a5 = atan_recip(5, bits + 6);
    Enclosure a239 = atan_recip(239, bits + 4);
    Enclosure result = a5 * Rational(16) - a239 * Rational(4);
    std::lock_guard<std::mutex> lock(cache_mutex);
    pi_cache.emplace(bits, result);
    return result;
}

Enclosure ln2_enclosure(long bits) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = ln2_cache.lower_bound(bits);
        if (it != ln2_cache.end()) return it->second;
    }
    // ln 2 = 2*atanh(1/3): exact z keeps the series cheap here
    Enclosure result;
    {
        Rational z(1, 3);
        long g = bits + 16;
        DyadicAccumulator acc(g);
        Rational target = pow2(-(bits + 6));
        Rational zpow = z, zsq = z * z;
        unsigned long j = 0;
        for (;;) {
            Rational t = zpow / Rational(2 * j + 1);
            acc.add_point(t);
            if (t < target) {
                Rational tail = (zpow * zsq / Rational(2 * j + 3)) / (Rational(1) - zsq);
                Enclosure s = acc.result();
                result = Enclosure(s.lo() * Rational(2), (s.hi() + tail) * Rational(2));
                break;
            }
            zpow *= zsq;
            ++j;
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    ln2_cache.emplace(bits, result);
    return result;
}

Enclosure log_enclosure(const Rational& x, long bits) {
    if (x.sign() <= 0) throw domain_error("log: argument must be positive");
    if (x == Rational(1)) return Enclosure(Rational(0));
    if (x < Rational(1)) return -log_enclosure(x.reciprocal(), bits);
    // x > 1: write x = m * 2^k with m in [1, 2)
    long k = 0;
    Rational m = x;
    // bit-length difference gives floor(log2) up to +-1
    long nb = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2));
    long db = static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
    k = nb - db;
    m = x / pow2(k);
    while (m >= Rational(2)) { m /= Rational(2); ++k; }
    while (m < Rational(1)) { m *= Rational(2); --k; }
    Enclosure res = log_1_to_2(m, bits + 2);
    if (k != 0) res = res + ln2_enclosure(bits + 2 + 64) * Rational(k);
    return res;
}

Enclosure log_enclosure(const Enclosure& x, long bits) {
    if (x.lo().sign() <= 0) throw domain_error("log: interval must be positive");
    Enclosure a = log_enclosure(x.lo(), bits + 1);
    Enclosure b = log_enclosure(x.hi(), bits + 1);
    return Enclosure(a.lo(), b.hi());
}

Enclosure nth_root(const Rational& x, unsigned long n, long bits) {
    if (x.sign() < 0) throw domain_error("nth_root: negative radicand");
    if (n == 0) throw domain_error("nth_root: zero index");
    if (x.is_zero()) return Enclosure(Rational(0));
    // (a/b)^(1/n) = (a b^(n-1))^(1/n) / b; scale by 2^(n g) for g output bits
    const Int& a = x.numerator();
    const Int& b = x.denominator();
    Int bpow;
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), n - 1);
    Int scaled = a * bpow;
    Int two_ng;
    mpz_ui_pow_ui(two_ng.get_mpz_t(), 2, static_cast<unsigned long>(n) * static_cast<unsigned long>(bits));
    scaled *= two_ng;
    Int r;
    mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
    Int den = b;
    den <<= static_cast<unsigned long>(bits);
    return Enclosure(Rational(r, den), Rational(r + 1, den));
}

Enclosure nth_root(const Enclosure& x, unsigned long n, long bits) {
    Enclosure a = nth_root(x.lo(), n, bits + 1);
    Enclosure b = nth_root(x.hi(), n, bits + 1);
    return Enclosure(a.lo(), b.hi());
}

Enclosure pow_rational(const Rational& base, const Rational& e, long bits) {
    if (base.sign() <= 0) throw domain_error("pow_rational: base must be positive");
    if (e.is_integer()) {
        long ei = static_cast<long>(mpz_get_si(e.numerator().get_mpz_t()));
        return Enclosure(base.pow(ei));
    }
    // base^(u/v) with v > 1: root of an exact integer power
    long u = static_cast<long>(mpz_get_si(e.numerator().get_mpz_t()));
    unsigned long v = mpz_get_ui(e.denominator().get_mpz_t());
    Rational powed = base.pow(u);
    return nth_root(powed, v, bits);
}

Enclosure pow_rational(const Enclosure& base, const Rational& e, long bits) {
    if (base.lo().sign() <= 0) throw domain_error("pow_rational: base interval must be positive");
    Enclosure a = pow_rational(base.lo(), e, bits + 1);
    Enclosure b = pow_rational(base.hi(), e, bits + 1);
    if (e.sign() >= 0) return Enclosure(a.lo(), b.hi());
    return Enclosure(b.lo(), a.hi());
}

ZetaEven zeta_even(int two_p) {
    Rational coeff;
    switch (two_p) {
        case 2: coeff = Rational(1, 6); break;
        case 4: coeff = Rational(1, 90); break;
        case 6: coeff = Rational(1, 945); break;
        case 8: coeff = Rational(1, 9450); break;
        default:
            throw unsupported_error("zeta_even: exponent must be one of {2, 4, 6, 8}, got " +
                                    std::to_string(two_p));
    }
    Enclosure value = pi_enclosure(84).pow(two_p) * coeff;
    return {coeff, value};
}

Enclosure zeta_real(const Rational& s, const Rational& eps) {
    if (s < Rational(3, 2))
        throw domain_error("zeta_real: s must be >= 3/2 (too close to the pole at 1)");
    if (eps.sign() <= 0) throw domain_error("zeta_real: eps must be positive");
    Rational sm1 = s - Rational(1);
    // choose K so that the tail bound K^(1-s)/(s-1) <= eps/2
    double kd = std::pow(2.0 / (sm1.to_double() * eps.to_double()), 1.0 / sm1.to_double());
    unsigned long K = static_cast<unsigned long>(kd * 1.05) + 8;
    Rational tail_hi;
    for (;;) {
        // upper bound for K^(1-s)/(s-1) = 1 / (K^(s-1) (s-1))
        Enclosure kp = pow_rational(Rational(static_cast<long>(K)), sm1, 64);
        tail_hi = (kp.lo() * sm1).reciprocal();
        if (tail_hi <= eps / Rational(2)) break;
        K *= 2;
        if (K > (1ul << 40)) throw error("zeta_real: cannot satisfy eps");
    }
    bool integral = is_integer_rational(s);
    long si = integral ? static_cast<long>(mpz_get_si(s.numerator().get_mpz_t())) : 0;
    // grid for K terms: rounding contributes K * 2^(1-W) <= eps/4
    double wd = std::log2(4.0 * static_cast<double>(K) / (eps.to_double())) + 2;
    long W = static_cast<long>(wd) + 4;
    // per-term enclosure width for the root path
    long term_bits = W + 4;
    DyadicAccumulator acc(W);
    for (unsigned long k = 1; k <= K; ++k) {
        if (integral) {
            Int kp;
            mpz_ui_pow_ui(kp.get_mpz_t(), k, static_cast<unsigned long>(si));
            acc.add_ratio(1, kp);
        } else {
            Enclosure t = pow_rational(Rational(static_cast<long>(k)), s, term_bits).reciprocal();
            acc.add(t);
        }
    }
    Enclosure partial = acc.result();
    return Enclosure(partial.lo(), partial.hi() + tail_hi);
}

Enclosure zeta_2p(const Rational& p, const Rational& eps) {
    Rational two_p = p * Rational(2);
    if (two_p.is_integer()) {
        long tp = static_cast<long>(mpz_get_si(two_p.numerator().get_mpz_t()));
        if (tp == 2 || tp == 4 || tp == 6 || tp == 8) return zeta_even(static_cast<int>(tp)).value;
    }
    return zeta_real(two_p, eps);
}

} // namespace lowdisc
