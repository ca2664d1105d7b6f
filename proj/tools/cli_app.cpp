#include "cli_app.hpp"

#include "singlet/characters.hpp"
#include "singlet/fusion.hpp"
#include "singlet/io.hpp"
#include "singlet/qdim.hpp"
#include "singlet/suites.hpp"
#include "singlet/theta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace singlet::cli
{

using nlohmann::json;

namespace
{

enum class Format
{
    json,
    csv,
    text,
};

struct Config
{
    int p = 2;
    Rational cutoff{20};
    double tol = default_tol;
    Complex eps{-0.2, 0.0};
    Complex tau{0.0, 1.0};
    std::uint64_t seed = 1;
    Format output = Format::json;
};

// Raw flag values, validated only after CLI11 is done.
struct RawFlags
{
    int p = 2;
    std::string cutoff = "20";
    double tol = default_tol;
    std::string eps = "-0.2";
    std::string tau = "i";
    std::uint64_t seed = 1;
    std::string output = "json";

    std::string typ;
    std::string atyp;
    std::string elem;
    std::string u = "0";
    std::string function = "partial";
    std::string law;
    std::string suite;
    std::string fuse_a;
    std::string fuse_b;
};

Config validate(const RawFlags &raw)
{
    Config config;
    if (raw.p < 2) {
        throw std::invalid_argument("--p must be >= 2, got " + std::to_string(raw.p));
    }
    config.p = raw.p;
    config.cutoff = parse_rational(raw.cutoff);
    if (config.cutoff < 0) {
        throw std::invalid_argument("--cutoff must be >= 0");
    }
    if (!(raw.tol > 0.0)) {
        throw std::invalid_argument("--tol must be > 0");
    }
    config.tol = raw.tol;
    config.eps = parse_complex(raw.eps);
    config.tau = parse_complex(raw.tau);
    if (!(config.tau.imag() > 0.0)) {
        throw std::invalid_argument("--tau needs Im(tau) > 0");
    }
    config.seed = raw.seed;
    if (raw.output == "json") {
        config.output = Format::json;
    } else if (raw.output == "csv") {
        config.output = Format::csv;
    } else if (raw.output == "text") {
        config.output = Format::text;
    } else {
        throw std::invalid_argument("--output must be json, csv or text");
    }
    return config;
}

int parse_int(const std::string &text)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed integer '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("malformed integer '" + text + "'");
    }
    return value;
}

AtypLabel parse_atyp(const std::string &text, int p)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--atyp expects r,s");
    }
    const AtypLabel label{parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
    if (label.s < 1 || label.s > p) {
        throw std::invalid_argument("--atyp needs 1 <= s <= p, got s = " + std::to_string(label.s));
    }
    return label;
}

ModuleLabel parse_label(const RawFlags &raw, const Config &config)
{
    if (raw.typ.empty() == raw.atyp.empty()) {
        throw std::invalid_argument("give exactly one of --typ m or --atyp r,s");
    }
    if (!raw.typ.empty()) {
        return ModuleLabel::typ(parse_rational(raw.typ));
    }
    const AtypLabel label = parse_atyp(raw.atyp, config.p);
    return ModuleLabel::atyp(label.r, label.s);
}

RingElem parse_elem(const std::string &text, const SingletParams &params)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    return canonicalize(params, ring_elem_from_json(j));
}

std::string laurent_text(const EpsLaurent &a)
{
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(it->second);
        if (it->first != 0) {
            out += "*t^" + to_string(it->first);
        }
    }
    return out;
}

std::string csv_field(const std::string &text)
{
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (const char ch : text) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

// Scalar fields of a report line; nested values are dumped as JSON.
std::string field_text(const json &v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

void emit_chars(const Config &config, const ModuleLabel &label, std::ostream &out)
{
    const SingletParams params(config.p);
    const QSeries series = char_series(params, label, config.cutoff);
    switch (config.output) {
    case Format::json:
        out << to_json(series, config.p, to_string(label)).dump() << '\n';
        break;
    case Format::csv:
        out << "q,t,val\n";
        for (const auto &[e, c] : series.terms()) {
            for (const auto &[te, tv] : c.terms()) {
                out << to_string(e) << ',' << to_string(te) << ',' << to_string(tv) << '\n';
            }
        }
        break;
    case Format::text:
        out << to_string(label) << " at p=" << config.p << ", exact to q^" << to_string(series.cutoff()) << '\n';
        for (const auto &[e, c] : series.terms()) {
            out << "q^" << to_string(e) << ": " << laurent_text(c) << '\n';
        }
        break;
    }
}

Evaluation theta_value(const std::string &function, const ModularPoint &pt, double tol)
{
    if (function == "partial") {
        return partial_theta(pt, tol);
    }
    if (function == "false") {
        return false_theta(pt, tol);
    }
    if (function == "theta2") {
        return theta2(pt);
    }
    if (function == "theta4") {
        return theta4(pt);
    }
    throw std::invalid_argument("--function must be partial, false, theta2 or theta4");
}

int emit_theta(const Config &config, const RawFlags &raw, std::ostream &out)
{
    const ModularPoint pt{parse_complex(raw.u), config.tau, config.eps};
    if (!raw.law.empty()) {
        const ResidualReport report = verify_theta_law(parse_theta_law(raw.law), pt, config.tol);
        const json line = to_json(report);
        switch (config.output) {
        case Format::json:
            out << line.dump() << '\n';
            break;
        case Format::csv:
            out << "id,point,lhs,rhs,rel_residual,tolerance,pass\n"
                << csv_field(report.id) << ',' << csv_field(report.point) << ',' << format_complex(report.lhs) << ','
                << format_complex(report.rhs) << ',' << format_double(report.rel_residual) << ','
                << format_double(report.tolerance) << ',' << (report.pass ? "true" : "false") << '\n';
            break;
        case Format::text:
            out << (report.pass ? "PASS " : "FAIL ") << report.id << " at " << report.point
                << ": rel residual " << format_double(report.rel_residual) << '\n';
            break;
        }
        return report.pass ? ok : verify_failed;
    }
    const Evaluation value = theta_value(raw.function, pt, config.tol);
    switch (config.output) {
    case Format::json:
        out << json{{"function", raw.function},
                    {"point", describe(pt)},
                    {"value", format_complex(value.value)},
                    {"error", format_double(value.error)}}
                   .dump()
            << '\n';
        break;
    case Format::csv:
        out << "function,point,value,error\n"
            << raw.function << ',' << csv_field(describe(pt)) << ',' << format_complex(value.value) << ','
            << format_double(value.error) << '\n';
        break;
    case Format::text:
        out << raw.function << " theta at " << describe(pt) << " = " << format_complex(value.value) << " (+- "
            << format_double(value.error) << ")\n";
        break;
    }
    return ok;
}

void emit_elem(const Config &config, const RingElem &e, std::ostream &out)
{
    switch (config.output) {
    case Format::json:
        out << to_json(e).dump() << '\n';
        break;
    case Format::csv:
        out << "kind,m,r,s,c\n";
        for (const auto &[m, c] : e.typ_terms()) {
            out << "typ," << to_string(m) << ",,," << c << '\n';
        }
        for (const auto &[label, c] : e.atyp_terms()) {
            out << "atyp,," << label.r << ',' << label.s << ',' << c << '\n';
        }
        break;
    case Format::text:
        out << to_string(e) << '\n';
        break;
    }
}

void emit_qdim(const Config &config, const std::string &label, const EpsLaurent &q, std::ostream &out)
{
    const Complex at_eps = laurent_eval(q, config.eps, config.p);
    switch (config.output) {
    case Format::json:
        out << json{{"p", config.p},
                    {"label", label},
                    {"laurent", to_json(q)},
                    {"at_one", to_string(q.at_one())},
                    {"eps", format_complex(config.eps)},
                    {"value", format_complex(at_eps)}}
                   .dump()
            << '\n';
        break;
    case Format::csv:
        out << "t,val\n";
        for (const auto &[e, c] : q.terms()) {
            out << to_string(e) << ',' << to_string(c) << '\n';
        }
        break;
    case Format::text:
        out << "qdim " << label << " = " << laurent_text(q) << " (t=1: " << to_string(q.at_one())
            << ", eps=" << format_complex(config.eps) << ": " << format_complex(at_eps) << ")\n";
        break;
    }
}

void emit_suite(const Config &config, const SuiteResult &result, std::ostream &out)
{
    switch (config.output) {
    case Format::json:
        for (const auto &line : result.lines) {
            out << line.dump() << '\n';
        }
        break;
    case Format::csv:
        out << "suite,id,subject,pass,detail\n";
        for (const auto &line : result.lines) {
            const std::string subject = field_text(line.value("point", line.value("label", json(""))));
            json detail = line;
            for (const char *key : {"suite", "id", "point", "label", "pass"}) {
                detail.erase(key);
            }
            out << csv_field(line.value("suite", "")) << ',' << csv_field(line.value("id", "")) << ','
                << csv_field(subject) << ',' << (line.value("pass", false) ? "true" : "false") << ','
                << csv_field(detail.dump()) << '\n';
        }
        break;
    case Format::text: {
        std::size_t failed = 0;
        for (const auto &line : result.lines) {
            const bool pass = line.value("pass", false);
            failed += pass ? 0 : 1;
            out << (pass ? "PASS " : "FAIL ") << line.value("suite", "") << '/' << line.value("id", "");
            if (line.contains("point")) {
                out << " [" << field_text(line["point"]) << ']';
            } else if (line.contains("label")) {
                out << " [" << field_text(line["label"]) << ']';
            }
            if (line.contains("rel_residual")) {
                out << " rel residual " << field_text(line["rel_residual"]);
            } else if (line.contains("deviation")) {
                out << " deviation " << field_text(line["deviation"]);
            }
            out << '\n';
        }
        out << result.lines.size() - failed << '/' << result.lines.size() << " checks passed\n";
        break;
    }
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RawFlags raw;
    CLI::App app{"Singlet algebra characters, modular laws, Verlinde ring and quantum dimensions", "singlet"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--p", raw.p, "p >= 2");
    app.add_option("--cutoff", raw.cutoff, "q-exponent cutoff, rational a/b");
    app.add_option("--tol", raw.tol, "tolerance");
    app.add_option("--eps", raw.eps, "regulator eps as re+imi");
    app.add_option("--tau", raw.tau, "tau as re+imi, Im tau > 0");
    app.add_option("--seed", raw.seed, "seed for randomized checks");
    app.add_option("--output", raw.output, "json, csv or text");

    CLI::App *chars = app.add_subcommand("chars", "exact character q-series");
    chars->add_option("--typ", raw.typ, "typical module F(m), m rational");
    chars->add_option("--atyp", raw.atyp, "atypical module M(r,s)");

    CLI::App *theta = app.add_subcommand("theta", "evaluate a theta function or check a transformation law");
    theta->add_option("--u", raw.u, "elliptic variable");
    theta->add_option("--function", raw.function, "partial, false, theta2 or theta4");
    theta->add_option("--law", raw.law, "check a law instead of evaluating");

    CLI::App *fuse = app.add_subcommand("fuse", "product of two ring elements given as JSON");
    fuse->add_option("a", raw.fuse_a)->required();
    fuse->add_option("b", raw.fuse_b)->required();

    CLI::App *qdim = app.add_subcommand("qdim", "regularized quantum dimension");
    qdim->add_option("--typ", raw.typ, "typical module F(m)");
    qdim->add_option("--atyp", raw.atyp, "atypical module M(r,s)");
    qdim->add_option("--elem", raw.elem, "ring element as JSON");

    CLI::App *verify = app.add_subcommand("verify", "run a verification suite, one JSON line per check");
    verify->add_option("--suite", raw.suite, "theta, chars, modular, ring, qdim or all")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "singlet: " << e.what() << '\n';
        return config_error;
    }

    // Every input is parsed before anything is printed, so a bad configuration leaves `out` empty.
    std::ostringstream buffer;
    int code = ok;
    try {
        const Config config = validate(raw);
        const SingletParams params(config.p);
        if (chars->parsed()) {
            emit_chars(config, parse_label(raw, config), buffer);
        } else if (theta->parsed()) {
            code = emit_theta(config, raw, buffer);
        } else if (fuse->parsed()) {
            const RingElem a = parse_elem(raw.fuse_a, params);
            const RingElem b = parse_elem(raw.fuse_b, params);
            emit_elem(config, singlet::fuse(params, a, b), buffer);
        } else if (qdim->parsed()) {
            if (!raw.elem.empty()) {
                if (!raw.typ.empty() || !raw.atyp.empty()) {
                    throw std::invalid_argument("--elem cannot be combined with --typ or --atyp");
                }
                const RingElem e = parse_elem(raw.elem, params);
                emit_qdim(config, to_string(e), qdim_elem(params, e), buffer);
            } else {
                const ModuleLabel label = parse_label(raw, config);
                const EpsLaurent q = label.is_typical() ? qdim_typical(params, label.m())
                                                        : qdim_atypical(params, label.label().r, label.label().s);
                emit_qdim(config, to_string(label), q, buffer);
            }
        } else {
            const auto &names = suite_names();
            if (std::find(names.begin(), names.end(), raw.suite) == names.end()) {
                throw std::invalid_argument("unknown suite '" + raw.suite + "'");
            }
            SuiteConfig suite_config;
            suite_config.p = config.p;
            suite_config.cutoff = config.cutoff;
            suite_config.tol = config.tol;
            suite_config.eps = config.eps;
            suite_config.tau = config.tau;
            suite_config.seed = config.seed;
            const SuiteResult result = run_suite(raw.suite, suite_config);
            emit_suite(config, result, buffer);
            code = result.pass ? ok : verify_failed;
        }
    } catch (const std::invalid_argument &e) {
        err << "singlet: " << e.what() << '\n';
        return config_error;
    } catch (const std::domain_error &e) {
        err << "singlet: " << e.what() << '\n';
        return config_error;
    } catch (const std::exception &e) {
        err << "singlet: " << e.what() << '\n';
        return verify_failed;
    }
    out << buffer.str();
    return code;
}

} // namespace singlet::cli
