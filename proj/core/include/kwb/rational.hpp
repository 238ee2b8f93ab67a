#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kwb {

/// Exact rational scalar. All arithmetic in the workbench is over Q;
/// GMP keeps values in lowest terms with positive denominator.
using Scalar = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Canonical serialization: "n" for integers, "n/d" otherwise.
std::string scalar_to_string(const Scalar& s);

/// Inverse of scalar_to_string; accepts optional sign and "n/d".
Scalar scalar_from_string(const std::string& text);

inline Scalar sign_pow(long exponent) {
  return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1);
}

}  // namespace kwb
