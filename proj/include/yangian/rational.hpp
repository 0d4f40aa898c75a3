#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace yangian {

using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// binom(n, k) for n >= 0; zero outside 0 <= k <= n.
Rational binomial(long n, long k);

/// Integer power c^k, k >= 0.
Rational power(const Rational& c, long k);

}  // namespace yangian
