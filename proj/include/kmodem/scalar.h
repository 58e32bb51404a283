#ifndef KMODEM_SCALAR_H
#define KMODEM_SCALAR_H

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kmodem {

/// Exact rational scalar. All coordinates and predicates in this library are
/// computed over Scalar with no rounding anywhere. Values are kept canonical
/// (gcd(num,den) == 1, den > 0), so equality is structural.
using Scalar = mpq_class;
using BigInt = mpz_class;

/// Builds a canonical Scalar from a (possibly uncanonical) fraction.
Scalar scalar(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws Error(BadParams) on malformed input or q == 0.
Scalar scalar_parse(std::string_view text);

/// Serializes as "p" (den == 1) or "p/q".
std::string scalar_str(const Scalar& s);

inline int sign(const Scalar& s) { return sgn(s); }

/// Closest double, for rendering only.
double to_double(const Scalar& s);

} // namespace kmodem

#endif
