#pragma once

// Verification suites behind `singlet verify`. Every check becomes one JSON
// object; the suite passes iff every object has "pass": true.

#include "singlet/io.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace singlet
{

struct SuiteConfig
{
    int p = 2;
    Rational cutoff{20};
    /// Base tolerance. Series identities are held to tol/100, quadrature
    /// identities to 100 tol and the atypical S-law to 1e4 tol.
    double tol = 1e-10;
    Complex eps{-0.2, 0.0};
    Complex tau{0.0, 1.0};
    std::uint64_t seed = 1;
};

struct SuiteResult
{
    std::vector<nlohmann::json> lines;
    bool pass = true;

    void add(nlohmann::json line);
};

/// One of theta, chars, modular, ring, qdim, all. Throws std::invalid_argument otherwise.
SuiteResult run_suite(std::string_view name, const SuiteConfig &config);

const std::vector<std::string> &suite_names();

} // namespace singlet
