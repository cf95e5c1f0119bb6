#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace olines {

using Rational = mpq_class;

/// "a" or "a/b" in lowest terms, denominator positive.
std::string to_string(const Rational& q);

/// Parses "a" or "a/b" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

/// Exact rational from a double (every finite double is a dyadic rational).
inline Rational from_double(double x) { return Rational(x); }

inline std::optional<std::int64_t> to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) return std::nullopt;
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace olines
