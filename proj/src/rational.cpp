#include "lowdisc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace lowdisc {

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { throw domain_error("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(s), 10));
        }
        Int num(std::string(s.substr(0, slash)), 10);
        Int den(std::string(s.substr(slash + 1)), 10);
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational(); // unreachable
}

Rational Rational::from_decimal(std::string_view s) {
    auto bad = [&] { throw domain_error("Rational: cannot parse decimal '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = s[i] == '-'; ++i; }
    std::string digits;
    long frac_digits = 0, exponent = 0;
    bool any = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            if (seen_dot) ++frac_digits;
            any = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && any) {
            exponent = std::strtol(std::string(s.substr(i + 1)).c_str(), nullptr, 10);
            if (s.substr(i + 1).empty()) bad();
            break;
        } else {
            bad();
        }
    }
    if (!any) bad();
    Int num(digits.empty() ? std::string("0") : digits, 10);
    if (neg) num = -num;
    long e = exponent - frac_digits;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(num * scale, 1) : Rational(num, scale);
}

Rational Rational::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d); // already canonical: powers of coprime stay coprime
}

std::string Rational::str() const {
    return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::to_decimal(int digits, int rounding) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    bool neg = sign() < 0;
    Int n = numerator();
    if (neg) n = -n;
    const Int d = denominator();
    // floor(|v| * 10^shift)
    auto floor_scaled = [&](long shift) {
        Int r, pw;
        if (shift >= 0) {
            mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(shift));
            Int t = n * pw;
            mpz_fdiv_q(r.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
        } else {
            mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
            Int t = d * pw;
            mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), t.get_mpz_t());
        }
        return r;
    };
    // normalize so that |v| = 0.D * 10^expo with D of exactly `digits` digits
    long expo = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
                static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10)) + 1;
    Int ten_dm1, ten_d;
    mpz_ui_pow_ui(ten_dm1.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    ten_d = ten_dm1 * 10;
    Int body = floor_scaled(digits - expo);
    while (body >= ten_d) { ++expo; body = floor_scaled(digits - expo); }
    while (body < ten_dm1) { --expo; body = floor_scaled(digits - expo); }
    long shift = digits - expo;
    // remainder of |v| * 10^shift against 1, as rem/den_s
    Int rem, den_s, pw;
    if (shift >= 0) {
        mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        Int t = n * pw;
        mpz_fdiv_r(rem.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
        den_s = d;
    } else {
        mpz_ui_pow_ui(pw.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den_s = d * pw;
        mpz_fdiv_r(rem.get_mpz_t(), n.get_mpz_t(), den_s.get_mpz_t());
    }
    bool exact = rem == 0;
    if (!exact) {
        int dir = neg ? -rounding : rounding;
        if (dir > 0 || (dir == 0 && 2 * rem >= den_s)) body += 1;
        if (body == ten_d) { body = ten_dm1; ++expo; }
    }
    std::string ds = body.get_str();
    std::string out;
    if (expo > 0 && expo <= digits + 6) {
        std::string ipart = expo <= digits ? ds.substr(0, expo) : ds + std::string(expo - digits, '0');
        std::string fpart = expo <= digits ? ds.substr(expo) : std::string();
        if (exact)
            while (!fpart.empty() && fpart.back() == '0') fpart.pop_back();
        out = ipart;
        if (!fpart.empty()) out += "." + fpart;
    } else if (expo <= 0 && expo > -6) {
        std::string fpart = std::string(-expo, '0') + ds;
        if (exact)
            while (fpart.size() > 1 && fpart.back() == '0') fpart.pop_back();
        out = "0." + fpart;
    } else {
        std::string rest = ds.substr(1);
        if (exact)
            while (!rest.empty() && rest.back() == '0') rest.pop_back();
        out = ds.substr(0, 1);
        if (!rest.empty()) out += "." + rest;
        out += "e" + std::to_string(expo - 1);
    }
    return neg ? "-" + out : out;
}

Rational pow2(long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e >= 0 ? e : -e));
    return e >= 0 ? Rational(p, 1) : Rational(1, p);
}

} // namespace lowdisc
