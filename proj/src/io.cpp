#include "singlet/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace singlet
{

using nlohmann::json;

namespace
{

double parse_real(std::string_view text, std::string_view whole)
{
    double value = 0.0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
    }
    return value;
}

Rational rational_field(const json &j, const char *key)
{
    const json &v = j.at(key);
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational{v.get<long>()};
    }
    throw std::invalid_argument(std::string("field '") + key + "' must be a rational string or an integer");
}

} // namespace

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(Complex z)
{
    const std::string im = format_double(z.imag());
    return format_double(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

Complex parse_complex(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty complex number");
    }
    if (text.back() != 'i') {
        return {parse_real(text, text), 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_real(s, text);
    };
    if (split == std::string_view::npos) {
        return {0.0, imag_part(body)};
    }
    return {parse_real(body.substr(0, split), text), imag_part(body.substr(split))};
}

json to_json(const EpsLaurent &a)
{
    json out = json::array();
    for (const auto &[e, c] : a.terms()) {
        out.push_back({{"t", to_string(e)}, {"val", to_string(c)}});
    }
    return out;
}

EpsLaurent laurent_from_json(const json &j)
{
    EpsLaurent out;
    for (const auto &term : j) {
        out += EpsLaurent::monomial(rational_field(term, "t"), rational_field(term, "val"));
    }
    return out;
}

json to_json(const QSeries &series, int p, const std::string &label)
{
    json terms = json::array();
    for (const auto &[e, c] : series.terms()) {
        terms.push_back({{"q", to_string(e)}, {"coeffs", to_json(c)}});
    }
    return {{"p", p}, {"label", label}, {"cutoff", to_string(series.cutoff())}, {"terms", terms}};
}

json to_json(const RingElem &e)
{
    json typ = json::array();
    for (const auto &[m, c] : e.typ_terms()) {
        typ.push_back({{"m", to_string(m)}, {"c", c}});
    }
    json atyp = json::array();
    for (const auto &[label, c] : e.atyp_terms()) {
        atyp.push_back({{"r", label.r}, {"s", label.s}, {"c", c}});
    }
    return {{"typ", typ}, {"atyp", atyp}};
}

RingElem ring_elem_from_json(const json &j)
{
    try {
        if (!j.is_object()) {
            throw std::invalid_argument("a ring element must be a JSON object");
        }
        RingElem out;
        if (j.contains("typ")) {
            for (const auto &term : j.at("typ")) {
                out.add_typ(rational_field(term, "m"), term.at("c").get<std::int64_t>());
            }
        }
        if (j.contains("atyp")) {
            for (const auto &term : j.at("atyp")) {
                out.add_atyp({term.at("r").get<int>(), term.at("s").get<int>()}, term.at("c").get<std::int64_t>());
            }
        }
        return out;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed ring element: ") + e.what());
    }
}

json to_json(const ResidualReport &report)
{
    return {{"id", report.id},
            {"point", report.point},
            {"lhs", format_complex(report.lhs)},
            {"rhs", format_complex(report.rhs)},
            {"abs_residual", format_double(report.abs_residual)},
            {"rel_residual", format_double(report.rel_residual)},
            {"tolerance", format_double(report.tolerance)},
            {"pass", report.pass}};
}

json to_json(const QdimLimitReport &report)
{
    json samples = json::array();
    for (const auto &s : report.samples) {
        samples.push_back({{"t", format_double(s.t)},
                           {"ratio", format_complex(s.ratio)},
                           {"rel_deviation", format_double(s.rel_deviation)}});
    }
    return {{"id", "qdim_limit"},
            {"label", report.label},
            {"closed_form", format_complex(report.closed_form)},
            {"samples", samples},
            {"deviation", format_double(report.deviation)},
            {"extrapolated", format_complex(report.extrapolated)},
            {"extrapolated_deviation", format_double(report.extrapolated_deviation)},
            {"tolerance", format_double(report.tolerance)},
            {"pass", report.pass}};
}

} // namespace singlet
