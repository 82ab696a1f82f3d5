#include "lowdisc/contfrac.hpp"

#include "lowdisc/refine.hpp"

namespace lowdisc {

std::string CFExpansion::str() const {
    std::string out = "[" + a0.get_str();
    for (size_t i = 0; i < quotients.size(); ++i)
        out += (i == 0 ? "; " : ", ") + quotients[i].get_str();
    return out + "]";
}

// ---------------------------------------------------------------- SurdCF

namespace {

// sign of (p + sqrt(d))/q - t, for non-square d (never zero).
int surd_cmp_int(const Int& p, const Int& d, const Int& q, const Int& t) {
    Int u = p - t * q;
    int s;
    if (u >= 0) {
        s = 1; // u + sqrt(d) > 0
    } else {
        s = (d - u * u > 0) ? 1 : -1; // sign of sqrt(d) - |u|
    }
    return q > 0 ? s : -s;
}

Int surd_floor(const Int& p, const Int& d, const Int& q, const Int& sqrt_d) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(p + sqrt_d).get_mpz_t(), q.get_mpz_t());
    while (surd_cmp_int(p, d, q, a) < 0) a -= 1;
    while (surd_cmp_int(p, d, q, a + 1) > 0) a += 1;
    return a;
}

} // namespace

SurdCF::SurdCF(const Int& p, const Int& d, const Int& q) : p_(p), d_(d), q_(q) {
    if (q_ == 0) throw domain_error("SurdCF: zero denominator");
    if (mpz_perfect_square_p(d_.get_mpz_t()) || d_ < 2)
        throw domain_error("SurdCF: D must be a non-square >= 2");
    // The recurrence needs Q | D - P^2; scale by |Q| once to guarantee it.
    if ((d_ - p_ * p_) % q_ != 0) {
        Int aq = ::abs(q_);
        p_ *= aq;
        d_ *= aq * aq;
        q_ *= aq;
    }
    mpz_sqrt(sqrt_d_.get_mpz_t(), d_.get_mpz_t());
}

Int SurdCF::next() {
    Int a = surd_floor(p_, d_, q_, sqrt_d_);
    Int p_next = a * q_ - p_;
    Int q_next = (d_ - p_next * p_next) / q_;
    p_ = p_next;
    q_ = q_next;
    return a;
}

// ------------------------------------------------------------- expansion

CFExpansion cf_expand(const RealSpec& spec, size_t max_terms) {
    if (max_terms < 1) throw domain_error("cf_expand: max_terms must be >= 1");
    validate(spec);
    CFExpansion cf;
    if (const auto* r = std::get_if<RationalValue>(&spec)) {
        Int num = r->value.numerator(), den = r->value.denominator();
        mpz_fdiv_q(cf.a0.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Int x = den, y = num - cf.a0 * den; // expand den/y; y in [0, den)
        cf.exact = true;
        while (y != 0) {
            if (cf.quotients.size() == max_terms) { cf.exact = false; break; }
            Int a, rem;
            mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            cf.quotients.push_back(a);
            x = y;
            y = rem;
        }
    } else if (const auto* s = std::get_if<QuadraticSurd>(&spec)) {
        SurdCF gen(s->p, s->d, s->q);
        cf.a0 = gen.next();
        for (size_t k = 0; k < max_terms; ++k) cf.quotients.push_back(gen.next());
        cf.exact = false;
    } else if (std::holds_alternative<EulerE>(spec)) {
        cf.a0 = 2;
        for (size_t k = 1; k <= max_terms; ++k)
            cf.quotients.push_back(k % 3 == 2 ? Int(2 * (k + 1) / 3) : Int(1));
        cf.exact = false;
    } else {
        const auto& e = std::get<ExplicitCF>(spec);
        cf.a0 = e.a0;
        size_t take = std::min(max_terms, e.tail.size());
        cf.quotients.assign(e.tail.begin(), e.tail.begin() + take);
        cf.exact = false;
    }
    return cf;
}

CFExpansion cf_expand_until_q_exceeds(const RealSpec& spec, const Int& bound) {
    validate(spec);
    if (const auto* r = std::get_if<RationalValue>(&spec)) {
        if (r->value.denominator() <= bound)
            throw domain_error("cf_expand_until_q_exceeds: rational denominator " +
                               r->value.denominator().get_str() + " does not exceed " +
                               bound.get_str());
        return cf_expand(spec, 1ul << 30);
    }
    // grow geometrically, tracking q by the recurrence
    size_t terms = 16;
    for (;;) {
        CFExpansion cf = cf_expand(spec, terms);
        Int q_prev = 1, q_cur = cf.quotients.empty() ? Int(1) : cf.quotients[0];
        // q_cur = q_2 after first quotient; walk the recurrence
        bool exceeded = q_cur > bound;
        for (size_t k = 2; !exceeded && k <= cf.terms(); ++k) {
            Int q_next = cf.a(k) * q_cur + q_prev;
            q_prev = q_cur;
            q_cur = q_next;
            exceeded = q_cur > bound;
        }
        if (exceeded) return cf;
        if (cf.terms() < terms) {
            // spec ran out of quotients (explicit prefix)
            throw precision_exhausted_error(
                "continued fraction prefix exhausted at index " + std::to_string(cf.terms()) +
                    " before convergent denominators exceeded " + bound.get_str(),
                static_cast<long>(cf.terms()));
        }
        terms *= 2;
        if (terms > (1ul << 26))
            throw error("cf_expand_until_q_exceeds: denominators grow too slowly");
    }
}

ConvergentTable convergent_table(const CFExpansion& cf) {
    if (cf.quotients.empty())
        throw domain_error("convergent_table: expansion must have at least one quotient");
    std::vector<ConvergentTable::Row> rows;
    rows.reserve(cf.terms() + 1);
    rows.push_back({cf.a0, Int(1)});                         // k = 1
    rows.push_back({cf.a0 * cf.a(1) + 1, cf.a(1)});          // k = 2
    for (size_t k = 2; k <= cf.terms(); ++k) {
        const Int& ak = cf.a(k);
        rows.push_back({ak * rows[k - 1].p + rows[k - 2].p,
                        ak * rows[k - 1].q + rows[k - 2].q});
    }
    return ConvergentTable(std::move(rows));
}

QNormBounds qnorm_bounds(const RealSpec& spec, const CFExpansion& cf,
                         const ConvergentTable& table, size_t k, bool verify) {
    if (k < 1 || k + 1 > table.size())
        throw domain_error("qnorm_bounds: need k >= 1 with k+1 <= table size");
    if (k == 1 && cf.a(1) == 1)
        throw domain_error("qnorm_bounds: the bound does not cover k = 1 with a_1 = 1");
    QNormBounds b{Rational(1, table.q(k + 1) + table.q(k)),
                  Rational(1, table.q(k + 1)),
                  k % 2 == 0 ? -1 : 1};
    if (verify) {
        Rational qk(table.q(k)), pk(table.p(k));
        if (const auto* r = std::get_if<RationalValue>(&spec)) {
            Rational v = (qk * r->value - pk).abs();
            if (v < b.lower || v > b.upper)
                throw error("qnorm_bounds: verification failed at k = " + std::to_string(k));
        } else {
            long bits = 64;
            for (;;) {
                Enclosure alpha = refine(spec, bits);
                Enclosure v = ((alpha * qk) - pk).abs();
                bool lower_ok = v.lo() >= b.lower, upper_ok = v.hi() <= b.upper;
                if (lower_ok && upper_ok) break;
                bool lower_bad = v.hi() < b.lower, upper_bad = v.lo() > b.upper;
                if (lower_bad || upper_bad)
                    throw error("qnorm_bounds: verification failed at k = " + std::to_string(k));
                bits *= 2;
                if (bits > precision_limit())
                    throw precision_exhausted_error("qnorm_bounds: verification needs more than " +
                                                        std::to_string(precision_limit()) + " bits",
                                                    bits);
            }
        }
    }
    return b;
}

size_t locate_index(const ConvergentTable& table, const Int& n) {
    if (n < 1) throw domain_error("locate_index: n must be positive");
    if (table.q(table.size()) <= n)
        throw needs_more_terms_error(
            "locate_index: table of " + std::to_string(table.size()) +
                " convergents does not extend past n = " + n.get_str(),
            static_cast<long>(table.size()));
    for (size_t k = table.size(); k >= 1; --k)
        if (table.q(k) <= n) return k;
    throw error("locate_index: no index found (q_1 should be 1)");
}

} // namespace lowdisc
