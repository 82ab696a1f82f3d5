#pragma once

#include <string>
#include <vector>

#include "lowdisc/enclosure.hpp"
#include "lowdisc/realspec.hpp"

namespace lowdisc {

/// Continued fraction [a0; a1, a2, ...]. `exact` is true iff the quotient
/// list is the complete expansion of a rational value. Canonical form for
/// exact expansions: the last quotient is >= 2 whenever there are at least
/// two quotients (so "[1; 2, 1]" is stored as "[1; 3]").
struct CFExpansion {
    Int a0;
    std::vector<Int> quotients; // a_1 .. a_L, all >= 1
    bool exact = false;

    size_t terms() const { return quotients.size(); }
    /// a_k with 1-based k.
    const Int& a(size_t k) const { return quotients.at(k - 1); }

    std::string str() const;
};

/// Convergents p_k/q_k with the indexing q_1 = 1, q_2 = a_1 and
/// q_{k+1} = a_k q_k + q_{k-1}, i.e. p_k/q_k = [a0; a1, ..., a_{k-1}].
/// NOTE: most references index convergents from 0; everything in this
/// library uses the convention above, so q_2 = a_1 (not q_1).
class ConvergentTable {
public:
    struct Row { Int p, q; };

    explicit ConvergentTable(std::vector<Row> rows) : rows_(std::move(rows)) {}

    /// Number of rows; valid indices are 1..size().
    size_t size() const { return rows_.size(); }
    const Int& p(size_t k) const { return rows_.at(k - 1).p; }
    const Int& q(size_t k) const { return rows_.at(k - 1).q; }
    Rational convergent(size_t k) const { return Rational(p(k), q(k)); }

private:
    std::vector<Row> rows_;
};

/// Expands `spec` to at most max_terms quotients.
///  - rationals: complete Euclidean expansion (exact), truncated only when
///    longer than max_terms;
///  - quadratic surds: exact integer recurrence, never floating point;
///  - e: a_0 = 2 and a_k = 2(k+1)/3 when k = 2 mod 3, else 1;
///  - explicit lists: the stored prefix (exact = false).
CFExpansion cf_expand(const RealSpec& spec, size_t max_terms);

/// Keeps expanding until the last convergent denominator exceeds `bound`.
/// Throws precision_exhausted_error if the spec cannot provide enough
/// quotients (finite explicit list), or domain_error for rational specs
/// whose denominator is <= bound.
CFExpansion cf_expand_until_q_exceeds(const RealSpec& spec, const Int& bound);

/// All convergents derivable from cf: rows k = 1 .. terms+1.
ConvergentTable convergent_table(const CFExpansion& cf);

/// Two-sided bound for ||q_k alpha||:
///   1/(q_{k+1} + q_k) <= ||q_k alpha|| <= 1/q_{k+1},
/// together with sign(q_k alpha - p_k) = (-1)^(k+1).
/// Domain: k >= 2, or k = 1 with a_1 > 1 (the k = 1, a_1 = 1 case has no
/// such bound and is rejected). With `verify` set, the bounds are checked
/// against a refined evaluation of ||q_k alpha|| before returning.
struct QNormBounds {
    Rational lower, upper;
    int sign; // of q_k alpha - p_k
};
QNormBounds qnorm_bounds(const RealSpec& spec, const CFExpansion& cf,
                         const ConvergentTable& table, size_t k, bool verify = false);

/// Largest index l with q_l <= n. Requires the table to extend past n
/// (q_last > n), otherwise throws needs_more_terms_error. When
/// q_1 = q_2 = 1 tie at n >= 1, the larger index wins.
size_t locate_index(const ConvergentTable& table, const Int& n);

/// Exact stepper for the continued fraction of (P + sqrt(D))/Q.
/// Integer arithmetic only; usable for unboundedly many terms.
class SurdCF {
public:
    SurdCF(const Int& p, const Int& d, const Int& q);
    Int next();

private:
    Int p_, d_, q_, sqrt_d_;
};

} // namespace lowdisc
