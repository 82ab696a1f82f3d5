#pragma once

#include <vector>

#include "lowdisc/enclosure.hpp"

namespace lowdisc {

/// Bernoulli polynomial B_p, exact rational coefficients, constant term
/// first. Defined by B_0 = 1, B_p' = p B_{p-1}, integral over [0,1] zero.
struct BernoulliPoly {
    unsigned degree;
    std::vector<Rational> coeff; // coeff[j] multiplies x^j

    Rational eval(const Rational& x) const;
    /// B_p(0), the p-th Bernoulli number.
    const Rational& constant_term() const { return coeff.front(); }
};

/// Exact B_p for p <= 32 (coefficient growth cap). Cached.
BernoulliPoly bernoulli_poly(unsigned p);

/// Cap for the O(b) exact summation below (default 10^6).
unsigned long dedekind_exact_cap();
void set_dedekind_exact_cap(unsigned long cap);

/// s_{p,q}(a,b) = sum_k B_p(k/b) B_q({a k / b}), exact rational.
/// include_k0 = false starts the sum at k = 1; include_k0 = true adds the
/// k = 0 term B_p(0) B_q(0). For even p the k0-inclusive variant is the one
/// whose scaled form tracks the Diophantine sum within (0, 5*2^p) — the
/// k = 0 term only vanishes for odd p >= 3, so the two variants differ by
/// the constant B_p(0) B_q(0).
struct DedekindValue {
    Int a, b;
    unsigned p, q;
    bool include_k0;
    Rational value;
};

DedekindValue dedekind_sum(const Int& a, const Int& b, unsigned p, unsigned q, bool include_k0);

/// The defect E in the spectral identity for even p:
///   (2 pi)^(2p) b^(p-1) / (2 (p!)^2) * s_{p,p}(a,b)  =  D + E,
/// where D = sum_{m=1}^{b-1} 1/(m^p ||m a/b||^p). With the k0-inclusive
/// sum, 0 < E < 5 * 2^p; `value_without_k0` reports the same defect for the
/// literal k >= 1 sum for contrast (it can fall below 0).
struct SpectralError {
    Enclosure value;
    Enclosure value_without_k0;
    Rational bound; // 5 * 2^p
};

SpectralError spectral_error(const Int& a, const Int& b, unsigned p);

/// O(log b) estimate of the (k0-inclusive) s_{p,p}(a,b) from the partial
/// quotients of a/b = [a0; a1, ..., al]:
///   estimate = 2 (p!)^2 zeta(2p) / ((2 pi)^(2p) b^(p-1)) * sum_k a_k^p.
/// rel_indicator = ((1/l) sum a_k^p)^(-1/p) is the natural relative-error
/// scale; the estimate is only informative when that power mean is large.
struct FastDedekind {
    Enclosure estimate;
    Enclosure rel_indicator;
    unsigned long quotient_count;
};

FastDedekind dedekind_fast(const Int& a, const Int& b, unsigned p);

/// Alternating-quotient estimate of the classical s_{1,1}(a,b):
///   (1/12) sum_k (-1)^(k+1) a_k  over a/b = [a0; a1, ..., al].
/// The defect against the exact sum is bounded (O(1)); callers compare.
Rational barkan_estimate(const Int& a, const Int& b);

} // namespace lowdisc
