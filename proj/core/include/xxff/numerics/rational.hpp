#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace xxff {

/// Exact rational scalar. gmpxx keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from a raw numerator and
/// denominator must go through make_rational().
using BigRational = mpq_class;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  BigRational r{mpz_class{static_cast<long>(num)}, mpz_class{static_cast<long>(den)}};
  r.canonicalize();
  return r;
}

/// Parses "num/den" or "num".
BigRational parse_rational(const std::string& text);

/// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline double to_double(const BigRational& r) { return r.get_d(); }

}  // namespace xxff
