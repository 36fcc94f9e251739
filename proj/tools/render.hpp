#pragma once

#include <string>

#include "wk/factorization.hpp"
#include "wk/rational.hpp"
#include "wk/report.hpp"

namespace wk::cli {

enum class Format { kText, kJson, kCsv };

Format parse_format(const std::string& name);

// Rationals: text is GMP's native "num/den" (no "/1" for integers); JSON
// is {"num": "...", "den": "..."} with decimal strings so arbitrary
// precision survives any consumer.
std::string render_rational(const Rational& value, Format format);

std::string render_factorization(const PrimeFactorization& f, Format format);

std::string render_report(const VerificationReport& report, Format format);

}  // namespace wk::cli
