#pragma once

// JSON forms of the exact and numeric results. Rationals are "num/den" strings,
// complex numbers "re+imi" with 17 significant digits.

#include "singlet/fusion.hpp"
#include "singlet/modular.hpp"
#include "singlet/qdim.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace singlet
{

std::string format_double(double x);
std::string format_complex(Complex z);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with real literals a, b. Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

nlohmann::json to_json(const EpsLaurent &a);
EpsLaurent laurent_from_json(const nlohmann::json &j);

/// {p, label, cutoff, terms: [{q, coeffs: [{t, val}]}]}
nlohmann::json to_json(const QSeries &series, int p, const std::string &label);

/// {"typ":[{"m":"1/2","c":1}],"atyp":[{"r":1,"s":2,"c":2}]}
nlohmann::json to_json(const RingElem &e);
/// Inverse of to_json(RingElem); "m" may also be given as an integer. Throws std::invalid_argument.
RingElem ring_elem_from_json(const nlohmann::json &j);

nlohmann::json to_json(const ResidualReport &report);
nlohmann::json to_json(const QdimLimitReport &report);

} // namespace singlet
