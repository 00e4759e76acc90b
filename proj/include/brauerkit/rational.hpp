#pragma once

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

namespace brauerkit {

using Rational = boost::rational<std::int64_t>;

[[nodiscard]] inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

/// "num/den" in lowest terms.
[[nodiscard]] inline std::string to_fraction_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Fixed-point rendering, for presentation only.
[[nodiscard]] inline std::string to_decimal_string(const Rational& r, int digits = 4) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << to_double(r);
    return os.str();
}

}  // namespace brauerkit
