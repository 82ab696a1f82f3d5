#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "lowdisc/errors.hpp"

namespace lowdisc {

using Int = mpz_class;

/// Exact rational number, always in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero is 0/1. The canonical form is unique per value.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : q_(n) {}    // NOLINT
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "num/den" or "num". Throws domain_error on malformed input.
    static Rational from_string(std::string_view s);

    /// Parses a decimal literal like "-1.25e-3" into the exact rational it denotes.
    static Rational from_decimal(std::string_view s);

    Int numerator() const { return q_.get_num(); }
    Int denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_), no_canon{}); }
    Rational operator+(const Rational& r) const { return Rational(mpq_class(q_ + r.q_), no_canon{}); }
    Rational operator-(const Rational& r) const { return Rational(mpq_class(q_ - r.q_), no_canon{}); }
    Rational operator*(const Rational& r) const { return Rational(mpq_class(q_ * r.q_), no_canon{}); }
    Rational operator/(const Rational& r) const {
        if (r.is_zero()) throw domain_error("Rational: division by zero");
        return Rational(mpq_class(q_ / r.q_), no_canon{});
    }
    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) { *this = *this / r; return *this; }

    bool operator==(const Rational& r) const { return mpq_equal(q_.get_mpq_t(), r.q_.get_mpq_t()) != 0; }
    std::strong_ordering operator<=>(const Rational& r) const {
        int c = mpq_cmp(q_.get_mpq_t(), r.q_.get_mpq_t());
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const {
        if (is_zero()) throw domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }
    /// Integer power; negative exponents invert (throws on 0 base).
    Rational pow(long e) const;

    Int floor() const { Int r; mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t()); return r; }
    Int ceil() const { Int r; mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t()); return r; }
    /// Nearest integer, ties rounded up. Both neighbors of a tie are
    /// equidistant, so any caller computing |x - round(x)| is unaffected.
    Int round() const { return (*this + Rational(1, 2)).floor(); }

    double to_double() const { return q_.get_d(); }

    /// Canonical serialization "num/den" (always with the slash, e.g. "0/1").
    std::string str() const;

    /// Fixed-point decimal with `digits` significant digits.
    /// rounding: -1 toward -inf, +1 toward +inf, 0 to nearest.
    std::string to_decimal(int digits, int rounding = 0) const;

private:
    struct no_canon {};
    Rational(mpq_class q, no_canon) : q_(std::move(q)) {}
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// 2^e as a Rational (e may be negative).
Rational pow2(long e);

} // namespace lowdisc
