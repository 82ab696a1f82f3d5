#include "lowdisc/refine.hpp"

#include <atomic>

#include "lowdisc/contfrac.hpp"

namespace lowdisc {

namespace {
std::atomic<long> g_precision_limit{4096};
} // namespace

long precision_limit() { return g_precision_limit.load(); }
void set_precision_limit(long bits) {
    if (bits < 16) throw domain_error("precision limit must be at least 16 bits");
    g_precision_limit.store(bits);
}

namespace {

// Bracket by consecutive convergents: they alternate around the value, and
// |p_k/q_k - p_{k+1}/q_{k+1}| = 1/(q_k q_{k+1}).
Enclosure surd_refine(const QuadraticSurd& s, long bits) {
    SurdCF gen(s.p, s.d, s.q);
    Int a0 = gen.next();
    Int p_prev = a0, q_prev = 1;         // k = 1
    Int a1 = gen.next();
    Int p_cur = a0 * a1 + 1, q_cur = a1; // k = 2
    Rational target = pow2(-bits);
    for (;;) {
        if (Rational(1, q_prev * q_cur) <= target) {
            Rational x(p_prev, q_prev), y(p_cur, q_cur);
            return x < y ? Enclosure(x, y) : Enclosure(y, x);
        }
        Int a = gen.next();
        Int p_next = a * p_cur + p_prev, q_next = a * q_cur + q_prev;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
    }
}

// e = sum 1/j!: with S_K = T_K / K!, the tail is below 1/(K! K).
Enclosure euler_refine(long bits) {
    Int t = 1, fact = 1;
    unsigned long j = 0;
    Rational target = pow2(-bits);
    for (;;) {
        ++j;
        t = t * j + 1;
        fact *= j;
        Rational rem(1, fact * j);
        if (rem <= target)
            return Enclosure(Rational(t, fact), Rational(t, fact) + rem);
    }
}

Enclosure explicit_cf_refine(const ExplicitCF& e, long bits) {
    Rational target = pow2(-bits);
    if (e.tail.empty()) {
        Enclosure enc{Rational(e.a0), Rational(Int(e.a0 + 1))};
        if (enc.width() <= target) return enc;
        throw precision_exhausted_error(
            "explicit continued fraction with no quotients only determines a unit interval", 0);
    }
    CFExpansion cf;
    cf.a0 = e.a0;
    cf.quotients = e.tail;
    ConvergentTable table = convergent_table(cf);
    size_t last = table.size();            // index L+1
    Rational v1(table.p(last), table.q(last));
    Rational v2(table.p(last) + table.p(last - 1), table.q(last) + table.q(last - 1));
    Enclosure enc = v1 < v2 ? Enclosure(v1, v2) : Enclosure(v2, v1);
    if (enc.width() <= target) return enc;
    throw precision_exhausted_error(
        "explicit continued fraction exhausted at index " + std::to_string(e.tail.size()) +
            "; its " + std::to_string(e.tail.size()) + " quotients pin the value to width " +
            enc.width().to_decimal(3) + " > 2^-" + std::to_string(bits),
        static_cast<long>(e.tail.size()));
}

} // namespace

Enclosure refine(const RealSpec& spec, long bits) {
    if (bits < 1) throw domain_error("refine: bits must be positive");
    if (bits > precision_limit())
        throw domain_error("refine: requested " + std::to_string(bits) +
                           " bits exceeds the precision limit of " +
                           std::to_string(precision_limit()));
    validate(spec);
    if (const auto* r = std::get_if<RationalValue>(&spec)) return Enclosure(r->value);
    if (const auto* s = std::get_if<QuadraticSurd>(&spec)) return surd_refine(*s, bits);
    if (std::holds_alternative<EulerE>(spec)) return euler_refine(bits);
    return explicit_cf_refine(std::get<ExplicitCF>(spec), bits);
}

} // namespace lowdisc
