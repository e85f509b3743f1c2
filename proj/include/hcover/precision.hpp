#ifndef HCOVER_PRECISION_HPP
#define HCOVER_PRECISION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace hcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::mpfr_float;

// Default working precision (decimal digits) for BigFloat evaluation.
// Overridable via the HOMOTHET_COVER_PRECISION environment variable.
inline constexpr unsigned kDefaultPrecisionDigits = 50;

// Reads HOMOTHET_COVER_PRECISION (if set and valid) and installs the
// resulting digit count as the BigFloat default precision. Returns the
// digit count in effect.
unsigned init_precision();

// Installs an explicit digit count.
void set_precision(unsigned digits);

unsigned current_precision();

}  // namespace hcover

#endif
