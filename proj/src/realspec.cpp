#include "lowdisc/realspec.hpp"

namespace lowdisc {

void validate(const RealSpec& spec) {
    if (const auto* s = std::get_if<QuadraticSurd>(&spec)) {
        if (s->d < 2) throw domain_error("QuadraticSurd: D must be >= 2");
        if (mpz_perfect_square_p(s->d.get_mpz_t()))
            throw domain_error("QuadraticSurd: D must not be a perfect square");
        if (s->q == 0) throw domain_error("QuadraticSurd: Q must be nonzero");
    } else if (const auto* c = std::get_if<ExplicitCF>(&spec)) {
        for (const Int& a : c->tail)
            if (a < 1) throw domain_error("ExplicitCF: tail entries must be >= 1");
    }
}

RealSpec make_rational(const Rational& r) { return RationalValue{r}; }

RealSpec make_surd(const Int& p, const Int& d, const Int& q) {
    RealSpec s = QuadraticSurd{p, d, q};
    validate(s);
    return s;
}

std::string describe(const RealSpec& spec) {
    if (const auto* r = std::get_if<RationalValue>(&spec)) return r->value.str();
    if (const auto* s = std::get_if<QuadraticSurd>(&spec))
        return "(" + s->p.get_str() + "+sqrt(" + s->d.get_str() + "))/" + s->q.get_str();
    if (std::holds_alternative<EulerE>(spec)) return "e";
    const auto& c = std::get<ExplicitCF>(spec);
    std::string out = "cf:[" + c.a0.get_str();
    for (size_t i = 0; i < c.tail.size(); ++i)
        out += (i == 0 ? ";" : ",") + c.tail[i].get_str();
    return out + "]";
}

} // namespace lowdisc
