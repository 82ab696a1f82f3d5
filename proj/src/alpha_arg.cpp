#include "lowdisc/alpha_arg.hpp"

#include <vector>

namespace lowdisc {

namespace {

const char* kGrammar =
    "alpha grammar: \"a/b\" | \"surd:P,D,Q\" | sqrt2 | sqrt3 | phi | e | \"cf:[a0;a1,a2,...]\"";

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw domain_error("cannot parse integer '" + s + "'; " + kGrammar);
    }
}

} // namespace

RealSpec parse_alpha(std::string_view text) {
    std::string s(text);
    if (s == "sqrt2") return sqrt2_spec();
    if (s == "sqrt3") return sqrt3_spec();
    if (s == "phi") return phi_spec();
    if (s == "e") return e_spec();
    if (s.rfind("surd:", 0) == 0) {
        auto parts = split(std::string_view(s).substr(5), ',');
        if (parts.size() != 3)
            throw domain_error("surd needs three integers P,D,Q; " + std::string(kGrammar));
        RealSpec spec = QuadraticSurd{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
        validate(spec);
        return spec;
    }
    if (s.rfind("cf:", 0) == 0) {
        std::string_view body(s);
        body.remove_prefix(3);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw domain_error("cf form needs brackets; " + std::string(kGrammar));
        body.remove_prefix(1);
        body.remove_suffix(1);
        auto semi = body.find(';');
        ExplicitCF cf;
        if (semi == std::string_view::npos) {
            cf.a0 = parse_int(std::string(body));
        } else {
            cf.a0 = parse_int(std::string(body.substr(0, semi)));
            for (const std::string& part : split(body.substr(semi + 1), ',')) {
                std::string trimmed;
                for (char c : part)
                    if (c != ' ') trimmed += c;
                if (trimmed.empty()) continue;
                cf.tail.push_back(parse_int(trimmed));
            }
        }
        RealSpec spec = cf;
        validate(spec);
        return spec;
    }
    try {
        return make_rational(Rational::from_string(s));
    } catch (const domain_error&) {
        throw domain_error("cannot parse alpha '" + s + "'; " + kGrammar);
    }
}

} // namespace lowdisc
