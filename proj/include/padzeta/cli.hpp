#pragma once

// Command-line front end: classify / volumes / zeta / verify.
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.

#include "padzeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace padzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;

enum class Mode { closed, oracle, both };
enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    std::int64_t prime = 3;
    std::optional<int> u_val, theta_val;
    std::optional<std::int64_t> u_unit, theta_unit;
    std::optional<std::string> avatar;
    int max_n = 6;
    std::int64_t s_num = -3;
    std::int64_t s_den = 2;
    Mode mode = Mode::both;
    std::uint64_t node_budget = kDefaultNodeBudget;
    Format format = Format::text;
};

struct RunResult {
    int exit_code;
    std::string output;
    std::string error;
};

using nlohmann::json;

inline json to_json(const Rational& r) { return to_fraction_string(r); }

inline json to_json(const SqrtExt& x) { return json{{"a", to_fraction_string(x.a())}, {"b", to_fraction_string(x.b())}, {"q", x.q()}}; }

inline json to_json(const Coefficient& c) { return json{{"unit", c.unit()}, {"val", c.val()}}; }

inline json to_json(const TernaryForm& f) {
    return json{{"form", f.to_string()}, {"theta", to_json(f.theta())}, {"u", to_json(f.u())}};
}

inline json to_json(const Polynomial& poly) {
    json arr = json::array();
    for (const auto& c : poly.coeffs()) arr.push_back(to_fraction_string(c));
    return arr;
}

inline json to_json(const GeometricTail& t) {
    return json{{"amplitude", to_json(t.amplitude)}, {"ratio", to_json(t.ratio)}, {"start", t.start}};
}

namespace detail {

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline TernaryForm build_form(const RunConfig& cfg) {
    const Prime p(cfg.prime);
    if (cfg.avatar) {
        if (cfg.u_val || cfg.u_unit || cfg.theta_val || cfg.theta_unit)
            throw std::invalid_argument("--avatar cannot be combined with explicit coefficients");
        auto tag = parse_tag(*cfg.avatar);
        if (!tag) throw std::invalid_argument("unknown avatar '" + *cfg.avatar + "' (expected A1, A2, A3 or B)");
        return avatar_form(p, *tag);
    }
    if (!cfg.u_val || !cfg.u_unit || !cfg.theta_val || !cfg.theta_unit)
        throw std::invalid_argument(
            "either --avatar or all of --u-val, --u-unit, --theta-val, --theta-unit are required");
    return TernaryForm(p, Coefficient(p, *cfg.u_val, *cfg.u_unit), Coefficient(p, *cfg.theta_val, *cfg.theta_unit));
}

inline std::string utheta_text(std::int64_t q, int v) {
    return v == 0 ? "1" : std::to_string(q) + "^-" + std::to_string(v);
}

inline RunResult run_classify(const RunConfig& cfg, const TernaryForm& form) {
    const auto cls = classify(form);
    const int k = cls.avatar.isotropic() ? 1 : -1;
    const std::string tag(tag_name(cls.avatar.tag));
    std::ostringstream out;
    switch (cfg.format) {
    case Format::json:
        out << dump(json{{"abs_utheta_val", cls.avatar.abs_utheta_val},
                         {"avatar", tag},
                         {"canonical", to_json(cls.canonical)},
                         {"input", to_json(form)},
                         {"isotropic", cls.avatar.isotropic()},
                         {"kappa", k},
                         {"prime", cfg.prime}});
        break;
    case Format::csv:
        out << "avatar,isotropic,kappa,abs_utheta_val\n"
            << tag << "," << (cls.avatar.isotropic() ? "true" : "false") << "," << k << ","
            << cls.avatar.abs_utheta_val << "\n";
        break;
    case Format::text:
        out << "avatar: " << tag << "\n"
            << (cls.avatar.isotropic() ? "isotropic" : "anisotropic") << ", kappa=" << k << "\n"
            << "|u*theta| = " << utheta_text(cfg.prime, cls.avatar.abs_utheta_val) << "\n"
            << "input:     " << form.to_string() << "\n"
            << "canonical: " << cls.canonical.to_string() << "\n";
        break;
    }
    return {kExitOk, out.str(), {}};
}

inline RunResult run_volumes(const RunConfig& cfg, const TernaryForm& form) {
    const auto cls = classify(form);
    std::optional<VolumeTable> closed, oracle;
    if (cfg.mode != Mode::oracle) closed = volumes(form, cfg.max_n);
    if (cfg.mode != Mode::closed) oracle = oracle_table(form, cfg.max_n, cfg.node_budget);

    int mismatches = 0;
    auto matches = [&](int n) { return closed->vol(n) == oracle->vol(n); };
    if (closed && oracle)
        for (int n = 0; n <= cfg.max_n; ++n)
            if (!matches(n)) ++mismatches;

    std::ostringstream out;
    switch (cfg.format) {
    case Format::json: {
        json rows = json::array();
        for (int n = 0; n <= cfg.max_n; ++n) {
            json row{{"n", n}};
            if (closed) row["closed"] = to_json(closed->vol(n));
            if (oracle) row["oracle"] = to_json(oracle->vol(n));
            if (closed && oracle) row["match"] = matches(n);
            rows.push_back(row);
        }
        json j{{"avatar", std::string(tag_name(cls.avatar.tag))},
               {"mismatches", mismatches},
               {"prime", cfg.prime},
               {"rows", rows}};
        if (closed) j["tail"] = to_json(*closed->tail());
        out << dump(j);
        break;
    }
    case Format::csv:
        out << "n,vol_num,vol_den,source\n";
        for (const auto& [table, source] : {std::pair{&closed, "closed"}, std::pair{&oracle, "oracle"}}) {
            if (!*table) continue;
            for (const auto& e : (*table)->entries())
                out << e.n << "," << boost::multiprecision::numerator(e.vol) << ","
                    << boost::multiprecision::denominator(e.vol) << "," << source << "\n";
        }
        break;
    case Format::text:
        out << "avatar " << tag_name(cls.avatar.tag) << ", q = " << cfg.prime << ", form " << form.to_string() << "\n";
        out << "n\t" << (closed ? "closed\t" : "") << (oracle ? "oracle\t" : "") << (closed && oracle ? "match" : "")
            << "\n";
        for (int n = 0; n <= cfg.max_n; ++n) {
            out << n << "\t";
            if (closed) out << to_fraction_string(closed->vol(n)) << "\t";
            if (oracle) out << to_fraction_string(oracle->vol(n)) << "\t";
            if (closed && oracle) out << (matches(n) ? "ok" : "MISMATCH");
            out << "\n";
        }
        if (closed && oracle) out << "mismatches: " << mismatches << "\n";
        break;
    }
    return {mismatches == 0 ? kExitOk : kExitVerify, out.str(), {}};
}

inline RunResult run_zeta(const RunConfig& cfg, const TernaryForm& form) {
    const auto cls = classify(form);
    const VolumeTable table = volumes(form, std::max(cfg.max_n, closed_form_tail(cls.avatar, cfg.prime).start));
    const LocalZeta zeta = closed_form_zeta(table);
    const Rational s(BigInt(cfg.s_num), BigInt(cfg.s_den));
    const SqrtExt value = evaluate(zeta, s);
    const bool inside = in_convergence_region(table.tail()->ratio, cfg.prime, s);

    std::ostringstream out;
    switch (cfg.format) {
    case Format::json: {
        json j{{"avatar", std::string(tag_name(cls.avatar.tag))},
               {"den", to_json(zeta.den)},
               {"in_region", inside},
               {"num", to_json(zeta.num)},
               {"prime", cfg.prime},
               {"s", to_fraction_string(s)},
               {"value", to_json(value)}};
        j["radius"] = zeta.radius ? json(to_fraction_string(*zeta.radius)) : json(nullptr);
        out << dump(j);
        break;
    }
    case Format::csv:
        out << "s,a,b,q,in_region\n"
            << to_fraction_string(s) << "," << to_fraction_string(value.a()) << "," << to_fraction_string(value.b())
            << "," << value.q() << "," << (inside ? "true" : "false") << "\n";
        break;
    case Format::text:
        out << "I(t) = " << zeta.to_string() << "   (t = " << cfg.prime << "^-s)\n";
        out << "series converges for " << (zeta.radius ? "|t| < " + to_fraction_string(*zeta.radius) : "all t")
            << "\n";
        out << "I at s = " << to_fraction_string(s) << ": " << value.to_string()
            << (inside ? "" : "   (analytic continuation; outside convergence region)") << "\n";
        break;
    }
    return {kExitOk, out.str(), {}};
}

inline RunResult run_verify(const RunConfig& cfg, const TernaryForm& form) {
    const TheoremReport r = theorem_check(form);
    std::ostringstream out;
    switch (cfg.format) {
    case Format::json:
        out << dump(json{{"avatar", std::string(tag_name(r.avatar.tag))},
                         {"kappa", r.kappa},
                         {"lhs", to_json(r.lhs)},
                         {"pass", r.pass},
                         {"prime", cfg.prime},
                         {"rhs", to_json(r.rhs)}});
        break;
    case Format::csv:
        out << "avatar,kappa,lhs_a,lhs_b,rhs_a,rhs_b,q,pass\n"
            << tag_name(r.avatar.tag) << "," << r.kappa << "," << to_fraction_string(r.lhs.a()) << ","
            << to_fraction_string(r.lhs.b()) << "," << to_fraction_string(r.rhs.a()) << ","
            << to_fraction_string(r.rhs.b()) << "," << cfg.prime << "," << (r.pass ? "true" : "false") << "\n";
        break;
    case Format::text:
        out << "avatar " << tag_name(r.avatar.tag) << ", kappa=" << r.kappa << ", q = " << cfg.prime << "\n"
            << "lhs = |u*theta|^(1/2) I(-3/2) = " << r.lhs.to_string() << "\n"
            << "rhs = -kappa q^(-1/2)(1 + q^(-1/2) + q^(-1)) = " << r.rhs.to_string() << "\n"
            << (r.pass ? "PASS" : "FAIL") << "\n";
        break;
    }
    return {r.pass ? kExitOk : kExitVerify, out.str(), {}};
}

} // namespace detail

/// Executes one validated configuration.
inline RunResult run(const RunConfig& cfg) {
    try {
        if (cfg.s_den != 1 && cfg.s_den != 2) throw UnsupportedExponent("s denominator must be 1 or 2");
        if (cfg.max_n < 0) throw std::invalid_argument("--max-n must be >= 0");
        const TernaryForm form = detail::build_form(cfg);
        if (cfg.command == "classify") return detail::run_classify(cfg, form);
        if (cfg.command == "volumes") return detail::run_volumes(cfg, form);
        if (cfg.command == "zeta") return detail::run_zeta(cfg, form);
        if (cfg.command == "verify") return detail::run_verify(cfg, form);
        return {kExitInput, {}, "unknown command '" + cfg.command + "'\n"};
    } catch (const ResourceLimit& e) {
        return {kExitInput, {}, std::string("ResourceLimit: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return {kExitInput, {}, e.kind() + ": " + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kExitInput, {}, std::string("error: ") + e.what() + "\n"};
    }
}

/// Parses argv (subcommand first) and runs it, writing to the given streams.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact p-adic integrals of |x^2 + u y^2 - theta z^2|^s"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<std::string> s_text;
    const std::map<std::string, Mode> modes{{"closed", Mode::closed}, {"oracle", Mode::oracle}, {"both", Mode::both}};
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prime,-p", cfg.prime, "odd prime p")->required();
        sub->add_option("--u-val", cfg.u_val, "valuation of u (0 or 1)");
        sub->add_option("--u-unit", cfg.u_unit, "unit part of u");
        sub->add_option("--theta-val", cfg.theta_val, "valuation of theta (0 or 1)");
        sub->add_option("--theta-unit", cfg.theta_unit, "unit part of theta");
        sub->add_option("--avatar", cfg.avatar, "A1, A2, A3 or B: use the reference form");
        sub->add_option("--format", cfg.format, "text, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    auto* classify_cmd = app.add_subcommand("classify", "avatar, kappa and |u theta| of the form");
    add_common(classify_cmd);

    auto* volumes_cmd = app.add_subcommand("volumes", "shell volumes Vol(V_n^0)");
    add_common(volumes_cmd);
    volumes_cmd->add_option("--max-n", cfg.max_n, "largest shell index")->capture_default_str();
    volumes_cmd->add_option("--mode", cfg.mode, "closed, oracle or both")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    volumes_cmd->add_option("--node-budget", cfg.node_budget, "lifting node budget for the oracle")
        ->capture_default_str();

    auto* zeta_cmd = app.add_subcommand("zeta", "rational function in t = q^-s and its value at s");
    add_common(zeta_cmd);
    zeta_cmd->add_option("--s", s_text, "exponent s, e.g. --s=-3/2 (denominator 1 or 2)");
    zeta_cmd->add_option("--s-num", cfg.s_num, "numerator of s");
    zeta_cmd->add_option("--s-den", cfg.s_den, "denominator of s (1 or 2)");

    auto* verify_cmd = app.add_subcommand("verify", "check the value at s = -3/2 against -kappa q^-1/2 (1 + q^-1/2 + q^-1)");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (s_text) {
        try {
            const Rational s = parse_rational(*s_text);
            const BigInt den = boost::multiprecision::denominator(s);
            if (den != 1 && den != 2) {
                err << "UnsupportedExponent: s = " << *s_text << " must have denominator 1 or 2\n";
                return kExitInput;
            }
            cfg.s_num = static_cast<std::int64_t>(boost::multiprecision::numerator(s));
            cfg.s_den = static_cast<std::int64_t>(den);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kExitInput;
        }
    }
    const RunResult r = run(cfg);
    out << r.output;
    err << r.error;
    return r.exit_code;
}

} // namespace padzeta::cli
