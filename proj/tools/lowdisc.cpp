#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "lowdisc/alpha_arg.hpp"
#include "lowdisc/constants.hpp"
#include "lowdisc/contfrac.hpp"
#include "lowdisc/dedekind.hpp"
#include "lowdisc/diophantine.hpp"
#include "lowdisc/discrepancy.hpp"
#include "lowdisc/experiments.hpp"
#include "lowdisc/refine.hpp"

using nlohmann::json;
using namespace lowdisc;

namespace {

struct usage_failure {
    std::string msg;
};

struct Options {
    bool as_json = false;
};

RealSpec parse_alpha_arg(const std::string& text) {
    try {
        return parse_alpha(text);
    } catch (const domain_error& e) {
        throw usage_failure{e.what()};
    }
}

void emit(const Options& opt, const json& obj, const std::string& text) {
    if (opt.as_json)
        std::cout << obj.dump() << "\n";
    else
        std::cout << text;
}

std::string enc_str(const Enclosure& e) { return e.str(21); }

int cmd_cf(const Options& opt, const std::string& alpha, long terms, bool convergents) {
    RealSpec spec = parse_alpha_arg(alpha);
    CFExpansion cf = cf_expand(spec, static_cast<size_t>(terms));
    json j{{"expansion", cf.str()}, {"exact", cf.exact}};
    std::string text = cf.str() + "\n";
    if (convergents) {
        ConvergentTable table = convergent_table(cf);
        json rows = json::array();
        for (size_t k = 1; k <= table.size(); ++k) {
            rows.push_back({{"k", k},
                            {"p", table.p(k).get_str()},
                            {"q", table.q(k).get_str()}});
            text += "k=" + std::to_string(k) + ": " + table.p(k).get_str() + "/" +
                    table.q(k).get_str() + "\n";
        }
        j["convergents"] = rows;
    }
    emit(opt, j, text);
    return 0;
}

int cmd_dsum(const Options& opt, const std::string& alpha, const std::string& p_text,
             unsigned long n, const std::string& eps_text, bool blocks) {
    RealSpec spec = parse_alpha_arg(alpha);
    Rational p = Rational::from_decimal(p_text);
    Rational eps = Rational::from_decimal(eps_text);
    SumResult s = dsum(spec, p, n, eps);
    json j{{"value", enc_str(s.value)},
           {"n", s.n},
           {"p", p_text},
           {"term_count", s.term_count}};
    std::string text;
    if (s.value.is_point())
        text = "value = " + s.value.lo().str() + "\n";
    else
        text = "value = " + enc_str(s.value) + "\n";
    text += "n = " + std::to_string(s.n) + ", p = " + p_text +
            ", terms = " + std::to_string(s.term_count) + "\n";
    if (s.value.is_point()) j["value_exact"] = s.value.lo().str();
    emit(opt, j, text);
    if (blocks) {
        long p_int = static_cast<long>(p.numerator().get_si());
        if (!p.is_integer() || p_int < 2)
            throw domain_error("--blocks needs an integer p >= 2");
        CFExpansion cf = cf_expand_until_q_exceeds(spec, Int(n));
        ConvergentTable table = convergent_table(cf);
        for (size_t ell = 1; ell + 1 <= table.size(); ++ell) {
            if (table.q(ell + 1) > Int(n) + 1) break; // only complete blocks within [1, n]
            BlockDecomposition bd = block_sum(spec, p_int, ell);
            json bj{{"ell", bd.ell},
                    {"a_ell", bd.a_ell.get_str()},
                    {"total", enc_str(bd.total)},
                    {"part_A", enc_str(bd.part_a)},
                    {"part_B", enc_str(bd.part_b)},
                    {"part_C", enc_str(bd.part_c)},
                    {"members_B", bd.members_b},
                    {"members_C", bd.members_c}};
            std::string bt = "block ell=" + std::to_string(bd.ell) + " total=" +
                             bd.total.mid().to_decimal(12) + " A=" + bd.part_a.mid().to_decimal(12) +
                             " B=" + bd.part_b.mid().to_decimal(12) + " C=" +
                             bd.part_c.mid().to_decimal(12) + " |B|=" +
                             std::to_string(bd.members_b.size()) + " |C|=" +
                             std::to_string(bd.members_c.size()) + "\n";
            emit(opt, bj, bt);
        }
    }
    return 0;
}

int cmd_dedekind(const Options& opt, long long a, long long b, unsigned p, unsigned q_opt,
                 const std::string& method, const std::string& k0_text) {
    bool include_k0 = k0_text == "true";
    if (k0_text != "true" && k0_text != "false")
        throw domain_error("--include-k0 must be true or false");
    unsigned q = q_opt == 0 ? p : q_opt;
    Int ai(static_cast<long>(a)), bi(static_cast<long>(b));
    if (method == "exact") {
        DedekindValue v = dedekind_sum(ai, bi, p, q, include_k0);
        emit(opt,
             json{{"value", v.value.str()}, {"a", a}, {"b", b}, {"p", p}, {"q", q},
                  {"include_k0", include_k0}},
             v.value.str() + "\n");
    } else if (method == "theorem2") {
        SpectralError e = spectral_error(ai, bi, p);
        emit(opt,
             json{{"E", enc_str(e.value)},
                  {"E_without_k0", enc_str(e.value_without_k0)},
                  {"bound", e.bound.str()}},
             "E = " + enc_str(e.value) + "\nbound = " + e.bound.str() +
                 "\nE_without_k0 = " + enc_str(e.value_without_k0) + "\n");
    } else if (method == "fast") {
        FastDedekind f = dedekind_fast(ai, bi, p);
        emit(opt,
             json{{"estimate", enc_str(f.estimate)},
                  {"rel_indicator", enc_str(f.rel_indicator)},
                  {"quotient_count", f.quotient_count}},
             "estimate = " + (f.estimate.is_point() ? f.estimate.lo().str() : enc_str(f.estimate)) +
                 "\nrel_indicator = " + f.rel_indicator.hi().to_decimal(6) + "\n");
    } else if (method == "barkan") {
        Rational est = barkan_estimate(ai, bi);
        DedekindValue exact = dedekind_sum(ai, bi, 1, 1, false);
        emit(opt,
             json{{"estimate", est.str()}, {"exact", exact.value.str()},
                  {"abs_diff", (est - exact.value).abs().to_decimal(9)}},
             est.str() + "\n");
    } else {
        throw domain_error("unknown method '" + method + "' (exact|theorem2|fast|barkan)");
    }
    return 0;
}

int cmd_disc(const Options& opt, const std::string& alpha, unsigned long n,
             const std::string& method, const std::string& eps_text, long bits) {
    RealSpec spec = parse_alpha_arg(alpha);
    Rational eps = Rational::from_decimal(eps_text);
    bool want_exact = method == "exact" || method == "all";
    bool want_main = method == "theorem1" || method == "all";
    bool want_cor4 = method == "cor4" || method == "all";
    if (!want_exact && !want_main && !want_cor4)
        throw domain_error("unknown method '" + method + "' (exact|theorem1|cor4|all)");
    DiscrepancyReport rep = disc_report(spec, n, want_exact, want_main, want_cor4, eps, bits);
    json j{{"n", rep.n}};
    std::string text;
    if (rep.l2sq) {
        PointSet2D set = davenport_set(n, spec, bits);
        Rational raw = l2sq_formula_value(set);
        j["l2sq"] = raw.str();
        j["l2sq_enclosure"] = enc_str(*rep.l2sq);
        text += "l2sq = " + raw.str() + "\n";
        text += "l2sq_enclosure = " + enc_str(*rep.l2sq) + "\n";
    }
    if (rep.main_term) {
        j["main_term"] = enc_str(*rep.main_term);
        text += "main_term = " + enc_str(*rep.main_term) + "\n";
    }
    if (rep.cor4_term) {
        j["cor4_term"] = rep.cor4_term->str();
        text += "cor4_term = " + rep.cor4_term->str() + "\n";
    }
    if (rep.c_log_n) {
        j["c_log_n"] = enc_str(*rep.c_log_n);
        text += "c_log_n = " + enc_str(*rep.c_log_n) + "\n";
    }
    if (rep.residual_main) {
        j["residual_main"] = enc_str(*rep.residual_main);
        text += "residual_main = " + rep.residual_main->mid().to_decimal(12) + "\n";
    }
    if (rep.residual_cor4) {
        j["residual_cor4"] = enc_str(*rep.residual_cor4);
        text += "residual_cor4 = " + rep.residual_cor4->mid().to_decimal(12) + "\n";
    }
    if (rep.residual_c_log_n) {
        j["residual_c_log_n"] = enc_str(*rep.residual_c_log_n);
        text += "residual_c_log_n = " + rep.residual_c_log_n->mid().to_decimal(12) + "\n";
    }
    emit(opt, j, text);
    return 0;
}

int cmd_experiment(const Options& opt, const std::string& name, const std::string& out_path) {
    ExperimentResult res = run_experiment(name);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw domain_error("cannot open output file '" + out_path + "'");
        auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char stamp[64];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        out << "# experiment " << res.name << " generated " << stamp << "\n";
        out << res.csv;
    }
    json j{{"experiment", res.name},
           {"pass", res.pass},
           {"violations", res.violations},
           {"summary", res.summary}};
    std::string text = "experiment " + res.name + ": " + (res.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& line : res.summary) text += "  " + line + "\n";
    emit(opt, j, text);
    return res.pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* cap = std::getenv("LOWDISC_MAX_BITS")) {
        try {
            set_precision_limit(std::strtol(cap, nullptr, 10));
        } catch (const domain_error& e) {
            std::cerr << "LOWDISC_MAX_BITS: " << e.what() << "\n";
            return 2;
        }
    }
    CLI::App app{"certified continued-fraction, Dedekind-sum and L2-discrepancy calculator"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit one JSON object per line");

    std::string alpha, p_text = "2", eps_text = "1e-9", k0_text = "false", out_path, exp_name;
    std::string ded_method = "exact", disc_method = "all";
    unsigned long n = 1;
    long terms = 10, bits = 60;
    long long ded_a = 1, ded_b = 2;
    unsigned ded_p = 2, ded_q = 0;
    bool convergents = false, blocks = false;

    auto* cf = app.add_subcommand("cf", "continued fraction expansion and convergents");
    cf->add_option("--alpha", alpha, "alpha (\"a/b\" | \"surd:P,D,Q\" | sqrt2|sqrt3|phi|e | \"cf:[a0;a1,...]\")")->required();
    cf->add_option("--terms", terms, "maximum quotients")->default_val(10);
    cf->add_flag("--convergents", convergents, "also print the p_k/q_k table");

    auto* ds = app.add_subcommand("dsum", "sum of 1/(m^p ||m alpha||^p) for m = 1..n");
    ds->add_option("--alpha", alpha, "alpha")->required();
    ds->add_option("--p", p_text, "exponent p (integer >= 2 or rational >= 1.5)")->default_val("2");
    ds->add_option("--n", n, "range end")->required();
    ds->add_option("--eps", eps_text, "target enclosure width")->default_val("1e-9");
    ds->add_flag("--blocks", blocks, "print the per-block decompositions covering [1, n]");

    auto* dd = app.add_subcommand("dedekind", "generalized Dedekind sums and their estimates");
    dd->add_option("--a", ded_a, "numerator a")->required();
    dd->add_option("--b", ded_b, "modulus b")->required();
    dd->add_option("--p", ded_p, "first Bernoulli degree")->required();
    dd->add_option("--q", ded_q, "second Bernoulli degree (defaults to p)");
    dd->add_option("--method", ded_method, "exact|theorem2|fast|barkan")->default_val("exact");
    dd->add_option("--include-k0", k0_text, "include the k = 0 term (true|false)")->default_val("false");

    auto* dc = app.add_subcommand("disc", "L2 discrepancy report for the symmetrized set");
    dc->add_option("--alpha", alpha, "alpha (must be irrational)")->required();
    dc->add_option("--n", n, "generator count (the set has 2n points)")->required();
    dc->add_option("--method", disc_method, "exact|theorem1|cor4|all")->default_val("all");
    dc->add_option("--eps", eps_text, "target width for the Diophantine term")->default_val("1e-9");
    dc->add_option("--bits", bits, "coordinate precision (>= 60)")->default_val(60);

    auto* ex = app.add_subcommand("experiment", "run a named verification sweep and write its CSV");
    std::string exp_footer = "Sweeps and their fixed CSV columns:\n";
    for (const auto& nm : experiment_names())
        exp_footer += "  " + nm + ": " + experiment_columns(nm) + "\n";
    ex->footer(exp_footer);
    std::string names;
    for (const auto& nm : experiment_names()) names += nm + " ";
    ex->add_option("name", exp_name, "one of: " + names)->required();
    ex->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cf->parsed()) return cmd_cf(opt, alpha, terms, convergents);
        if (ds->parsed()) return cmd_dsum(opt, alpha, p_text, n, eps_text, blocks);
        if (dd->parsed()) return cmd_dedekind(opt, ded_a, ded_b, ded_p, ded_q, ded_method, k0_text);
        if (dc->parsed()) return cmd_disc(opt, alpha, n, disc_method, eps_text, bits);
        if (ex->parsed()) return cmd_experiment(opt, exp_name, out_path);
    } catch (const usage_failure& e) {
        std::cerr << "usage error: " << e.msg << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const precision_exhausted_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
