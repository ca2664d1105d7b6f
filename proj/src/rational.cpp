#include "singlet/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace singlet
{

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational r{mpz_class{std::to_string(num)}, mpz_class{std::to_string(den)}};
    r.canonicalize();
    return r;
}

namespace
{

bool is_integer_literal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s)) {
        throw std::invalid_argument("not a rational literal: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return mpz_class{std::string(s)};
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational{parse_integer(text)};
    }
    const mpz_class num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    }
    const mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational r{num, den};
    r.canonicalize();
    return r;
}

std::string to_string(const Rational &x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_integer(const Rational &x)
{
    return x.get_den() == 1;
}

std::int64_t to_int64(const Rational &x)
{
    if (!is_integer(x) || !x.get_num().fits_slong_p()) {
        throw std::domain_error("rational " + to_string(x) + " is not a machine integer");
    }
    return x.get_num().get_si();
}

mpz_class floor(const Rational &x)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

double to_double(const Rational &x)
{
    return x.get_d();
}

} // namespace singlet
