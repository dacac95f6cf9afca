#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "citecurve/rational.hpp"

namespace citecurve::csv {

/// RFC-4180 quoting: fields containing comma, quote, CR or LF are wrapped
/// in double quotes with embedded quotes doubled.
std::string escape(std::string_view field);

/// One CSV row, LF-terminated.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Locale-independent fixed-decimal rendering ("%.2f" style).
std::string fixed(double value, int decimals);

/// Integers render bare; fractions render with the given decimals.
std::string number(const Rational& value, int fraction_decimals);

}  // namespace citecurve::csv
