#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace cotensor {

// Expression templates are disabled so the type composes cleanly with Eigen.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p" or "p/q" (sign on the numerator only). The result is in lowest
/// terms; throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& q);

}  // namespace cotensor
