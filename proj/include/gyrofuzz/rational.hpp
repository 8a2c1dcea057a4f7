#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gyrofuzz {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical rational from a numerator/denominator pair. Throws on zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p/q", "p", or a plain decimal like "-0.25". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

Rational rational_abs(const Rational& q);

/// sqrt(q) when it is rational, nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool overlaps(const RatInterval& other) const { return !(hi < other.lo || other.hi < lo); }
};

/// Encloses sqrt(x) for x >= 0 in an interval of width <= eps, with 0 <= lo.
RatInterval sqrt_enclosure(const Rational& x, const Rational& eps);

}  // namespace gyrofuzz
