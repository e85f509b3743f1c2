#include "hcover/precision.hpp"

#include <cstdlib>
#include <string>

namespace hcover {

namespace {
unsigned g_digits = kDefaultPrecisionDigits;
}

void set_precision(unsigned digits)
{
  if (digits < 20) digits = 20;  // below this the Robbins brackets degrade
  g_digits = digits;
  BigFloat::default_precision(digits);
}

unsigned current_precision() { return g_digits; }

unsigned init_precision()
{
  unsigned digits = kDefaultPrecisionDigits;
  if (const char* env = std::getenv("HOMOTHET_COVER_PRECISION")) {
    try {
      long v = std::stol(env);
      if (v > 0) digits = static_cast<unsigned>(v);
    } catch (...) {
      // ignore malformed values, keep the default
    }
  }
  set_precision(digits);
  return g_digits;
}

}  // namespace hcover
