#pragma once

#include <optional>
#include <string>

#include "lowdisc/rational.hpp"

namespace lowdisc {

/// Result of comparing an enclosure against an exact rational.
/// `straddles` means the caller must refine before deciding.
enum class Position { below, above, straddles };

/// Closed rational interval [lo, hi] guaranteed to contain an exact real
/// value. Endpoints are exact rationals, so +,-,*,/ on enclosures are
/// themselves exact: the result interval contains every possible value of
/// the operation, with no rounding anywhere.
class Enclosure {
public:
    Enclosure() : lo_(0), hi_(0) {}
    explicit Enclosure(const Rational& point) : lo_(point), hi_(point) {}
    Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw domain_error("Enclosure: lo > hi");
    }

    static Enclosure point(const Rational& r) { return Enclosure(r); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / Rational(2); }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
    bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
    bool intersects(const Enclosure& e) const { return lo_ <= e.hi_ && e.lo_ <= hi_; }

    Position compare(const Rational& r) const {
        if (hi_ < r) return Position::below;
        if (lo_ > r) return Position::above;
        return Position::straddles;
    }

    /// Certain sign: +1 if the whole interval is > 0, -1 if < 0, 0 if it
    /// contains zero (undecided).
    int sign() const {
        if (lo_ > Rational(0)) return 1;
        if (hi_ < Rational(0)) return -1;
        return 0;
    }

    Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
    Enclosure operator+(const Enclosure& e) const { return Enclosure(lo_ + e.lo_, hi_ + e.hi_); }
    Enclosure operator-(const Enclosure& e) const { return Enclosure(lo_ - e.hi_, hi_ - e.lo_); }
    Enclosure operator*(const Enclosure& e) const {
        Rational a = lo_ * e.lo_, b = lo_ * e.hi_, c = hi_ * e.lo_, d = hi_ * e.hi_;
        return Enclosure(min(min(a, b), min(c, d)), max(max(a, b), max(c, d)));
    }
    Enclosure operator/(const Enclosure& e) const {
        if (e.contains(Rational(0)))
            throw domain_error("Enclosure: division by interval containing zero");
        return *this * Enclosure(e.hi_.reciprocal(), e.lo_.reciprocal());
    }
    Enclosure operator+(const Rational& r) const { return Enclosure(lo_ + r, hi_ + r); }
    Enclosure operator-(const Rational& r) const { return Enclosure(lo_ - r, hi_ - r); }
    Enclosure operator*(const Rational& r) const {
        return r.sign() >= 0 ? Enclosure(lo_ * r, hi_ * r) : Enclosure(hi_ * r, lo_ * r);
    }
    Enclosure operator/(const Rational& r) const { return *this * r.reciprocal(); }

    /// Interval of |x| over the enclosure.
    Enclosure abs() const {
        if (lo_.sign() >= 0) return *this;
        if (hi_.sign() <= 0) return -*this;
        return Enclosure(Rational(0), max(-lo_, hi_));
    }

    /// x^e with integer e >= 0, tight for even powers straddling zero.
    Enclosure pow(long e) const {
        if (e < 0) throw domain_error("Enclosure::pow: negative exponent");
        if (e == 0) return Enclosure(Rational(1));
        if (e % 2 == 1 || lo_.sign() >= 0) return Enclosure(lo_.pow(e), hi_.pow(e));
        if (hi_.sign() <= 0) return Enclosure(hi_.pow(e), lo_.pow(e));
        return Enclosure(Rational(0), max(lo_.abs(), hi_.abs()).pow(e));
    }

    Enclosure reciprocal() const { return Enclosure(Rational(1)) / *this; }

    /// Widens symmetrically by delta >= 0 (error-budget folding).
    Enclosure widened(const Rational& delta) const {
        return Enclosure(lo_ - delta, hi_ + delta);
    }

    std::optional<Enclosure> intersect(const Enclosure& e) const {
        Rational l = max(lo_, e.lo_), h = min(hi_, e.hi_);
        if (l > h) return std::nullopt;
        return Enclosure(l, h);
    }

    Enclosure hull(const Enclosure& e) const {
        return Enclosure(min(lo_, e.lo_), max(hi_, e.hi_));
    }

    /// Serialization "[lo, hi]" as outward-rounded decimals. The printed
    /// interval contains the stored one, so re-parsing stays a valid
    /// enclosure of the same real value.
    std::string str(int digits = 21) const;

    static Enclosure parse(std::string_view s);

private:
    Rational lo_, hi_;
};

inline Enclosure hull(const Enclosure& a, const Enclosure& b) { return a.hull(b); }

} // namespace lowdisc
