#pragma once

#include "lowdisc/enclosure.hpp"

namespace lowdisc {

/// Certified interval accumulator over a fixed dyadic grid 2^-grid_bits.
/// Each added term is outward-rounded onto the grid (lower endpoint down,
/// upper endpoint up), so the running [lo, hi] always contains the exact
/// sum; the rounding widens the result by at most 2^(1-grid_bits) per term.
/// Endpoints stay exact rationals throughout.
class DyadicAccumulator {
public:
    explicit DyadicAccumulator(long grid_bits) : grid_(grid_bits), lo_(0), hi_(0), count_(0) {
        mpz_ui_pow_ui(scale_.get_mpz_t(), 2, static_cast<unsigned long>(grid_bits));
    }

    void add(const Rational& lo, const Rational& hi) {
        Int t;
        mpz_mul(t.get_mpz_t(), lo.numerator().get_mpz_t(), scale_.get_mpz_t());
        mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), lo.denominator().get_mpz_t());
        lo_ += t;
        mpz_mul(t.get_mpz_t(), hi.numerator().get_mpz_t(), scale_.get_mpz_t());
        mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), hi.denominator().get_mpz_t());
        hi_ += t;
        ++count_;
    }
    void add(const Enclosure& e) { add(e.lo(), e.hi()); }
    void add_point(const Rational& r) { add(r, r); }

    /// Adds the exact rational num/den (den > 0) without constructing a Rational.
    void add_ratio(const Int& num, const Int& den) {
        Int t;
        mpz_mul(t.get_mpz_t(), num.get_mpz_t(), scale_.get_mpz_t());
        Int lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
        lo_ += lo;
        hi_ += hi;
        ++count_;
    }

    unsigned long count() const { return count_; }

    Enclosure result() const {
        return Enclosure(Rational(lo_, scale_), Rational(hi_, scale_));
    }

private:
    long grid_;
    Int scale_;
    Int lo_, hi_;
    unsigned long count_;
};

} // namespace lowdisc
