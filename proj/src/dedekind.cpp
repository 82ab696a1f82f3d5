#include "lowdisc/dedekind.hpp"

#include <atomic>
#include <mutex>

#include "lowdisc/constants.hpp"
#include "lowdisc/contfrac.hpp"
#include "lowdisc/diophantine.hpp"

namespace lowdisc {

Rational BernoulliPoly::eval(const Rational& x) const {
    Rational acc = coeff.back();
    for (size_t j = coeff.size() - 1; j-- > 0;) acc = acc * x + coeff[j];
    return acc;
}

namespace {

constexpr unsigned kDegreeCap = 32;

std::mutex bern_mutex;
std::vector<BernoulliPoly> bern_cache; // index = degree

} // namespace

BernoulliPoly bernoulli_poly(unsigned p) {
    if (p > kDegreeCap)
        throw unsupported_error("bernoulli_poly: degree " + std::to_string(p) +
                                " exceeds the cap of " + std::to_string(kDegreeCap));
    std::lock_guard<std::mutex> lock(bern_mutex);
    if (bern_cache.empty()) bern_cache.push_back({0, {Rational(1)}});
    while (bern_cache.size() <= p) {
        const BernoulliPoly& prev = bern_cache.back();
        unsigned d = prev.degree + 1;
        std::vector<Rational> c(d + 1, Rational(0));
        // antiderivative scaled by d, then the constant from a zero integral
        for (unsigned j = 0; j <= prev.degree; ++j)
            c[j + 1] = prev.coeff[j] * Rational(d) / Rational(static_cast<long>(j) + 1);
        Rational c0(0);
        for (unsigned j = 1; j <= d; ++j) c0 -= c[j] / Rational(static_cast<long>(j) + 1);
        c[0] = c0;
        bern_cache.push_back({d, std::move(c)});
    }
    return bern_cache[p];
}

namespace {

std::atomic<unsigned long> g_dedekind_cap{1'000'000};

// Integer form of B_p(k/b): P(k) / (L * b^p) with P an integer polynomial.
struct ScaledPoly {
    std::vector<Int> m; // m[j] multiplies k^j
    Int denom;          // L * b^p

    Int eval_horner(unsigned long k) const {
        Int acc = m.back();
        for (size_t j = m.size() - 1; j-- > 0;) {
            acc *= k;
            acc += m[j];
        }
        return acc;
    }
};

ScaledPoly scale_poly(const BernoulliPoly& poly, const Int& b) {
    Int lcm(1);
    for (const Rational& c : poly.coeff)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    ScaledPoly sp;
    sp.m.resize(poly.coeff.size());
    Int bpow(1); // b^(p-j), built from the top
    for (size_t j = poly.coeff.size(); j-- > 0;) {
        const Rational& c = poly.coeff[j];
        sp.m[j] = c.numerator() * (lcm / c.denominator()) * bpow;
        bpow *= b;
    }
    // bpow is now b^(p+1); denom wants b^p
    sp.denom = lcm * (bpow / b);
    return sp;
}

} // namespace

unsigned long dedekind_exact_cap() { return g_dedekind_cap.load(); }
void set_dedekind_exact_cap(unsigned long cap) { g_dedekind_cap.store(cap); }

DedekindValue dedekind_sum(const Int& a, const Int& b, unsigned p, unsigned q, bool include_k0) {
    if (a < 1 || b < 1) throw domain_error("dedekind_sum: a and b must be positive");
    if (p < 1 || q < 1) throw domain_error("dedekind_sum: p and q must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1)
        throw domain_error("dedekind_sum: gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
    if (b > Int(dedekind_exact_cap()))
        throw unsupported_error("dedekind_sum: b exceeds the exact-path cap of " +
                                std::to_string(dedekind_exact_cap()));
    ScaledPoly sp = scale_poly(bernoulli_poly(p), b);
    ScaledPoly sq = scale_poly(bernoulli_poly(q), b);
    unsigned long bl = mpz_get_ui(b.get_mpz_t());
    Int am;
    mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    unsigned long astep = mpz_get_ui(am.get_mpz_t());
    Int acc(0);
    unsigned long sigma = 0;
    if (include_k0) acc = sp.m[0] * sq.m[0]; // the k = 0 term B_p(0) B_q(0)
    for (unsigned long k = 1; k < bl; ++k) {
        sigma += astep;
        if (sigma >= bl) sigma -= bl;
        acc += sp.eval_horner(k) * sq.eval_horner(sigma);
    }
    return {a, b, p, q, include_k0, Rational(acc, sp.denom * sq.denom)};
}

SpectralError spectral_error(const Int& a, const Int& b, unsigned p) {
    if (p < 2 || p % 2 != 0)
        throw domain_error("spectral_error: p must be an even integer >= 2");
    if (b < 2) throw domain_error("spectral_error: b must be >= 2");
    DedekindValue s_k0 = dedekind_sum(a, b, p, p, true);
    Rational bp0 = bernoulli_poly(p).constant_term();
    Rational s_plain = s_k0.value - bp0 * bp0;
    unsigned long bl = mpz_get_ui(b.get_mpz_t());
    Rational d = dsum_exact_rational(a, b, static_cast<long>(p), bl - 1);
    // A = (2 pi)^(2p) b^(p-1) / (2 (p!)^2)
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), p);
    Int bpow;
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), p - 1);
    Rational coef = Rational(Int(1) << (2 * p), 1) * Rational(bpow, 2 * fact * fact);
    Enclosure a_enc = pi_enclosure(96).pow(2 * p) * coef;
    SpectralError out;
    out.value = a_enc * s_k0.value - Enclosure(d);
    out.value_without_k0 = a_enc * s_plain - Enclosure(d);
    out.bound = Rational(Int(5) << p, 1);
    return out;
}

FastDedekind dedekind_fast(const Int& a, const Int& b, unsigned p) {
    if (p < 2 || p % 2 != 0)
        throw domain_error("dedekind_fast: p must be an even integer >= 2");
    if (b < 2) throw domain_error("dedekind_fast: b must be >= 2");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1)
        throw domain_error("dedekind_fast: gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
    CFExpansion cf = cf_expand(RealSpec(RationalValue{Rational(a, b)}), 1ul << 30);
    Int s(0), t;
    for (size_t k = 1; k <= cf.terms(); ++k) {
        mpz_pow_ui(t.get_mpz_t(), cf.a(k).get_mpz_t(), p);
        s += t;
    }
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), p);
    Int bpow;
    mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), p - 1);
    FastDedekind out;
    int two_p = static_cast<int>(2 * p);
    if (two_p <= 8) {
        // zeta(2p) = coeff * pi^(2p) cancels the (2 pi)^(2p): exact rational
        Rational coeff = zeta_even(two_p).coefficient;
        Rational est = Rational(2 * fact * fact, Int(1) << (2 * p)) * coeff *
                       Rational(s, bpow);
        out.estimate = Enclosure(est);
    } else {
        Enclosure zeta = zeta_real(Rational(2 * static_cast<long>(p)), pow2(-64));
        Enclosure pipow = pi_enclosure(96).pow(two_p);
        out.estimate = zeta / pipow *
                       Rational(2 * fact * fact, (Int(1) << (2 * p)) * bpow) * Rational(s);
    }
    out.rel_indicator = nth_root(Rational(Int(cf.terms()), s), p, 64);
    out.quotient_count = cf.terms();
    return out;
}

Rational barkan_estimate(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw domain_error("barkan_estimate: a and b must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1)
        throw domain_error("barkan_estimate: gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
    CFExpansion cf = cf_expand(RealSpec(RationalValue{Rational(a, b)}), 1ul << 30);
    Int alt(0);
    for (size_t k = 1; k <= cf.terms(); ++k) {
        if (k % 2 == 1) alt += cf.a(k); else alt -= cf.a(k);
    }
    return Rational(alt, 12);
}

} // namespace lowdisc
