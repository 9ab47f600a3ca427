#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "chambar/error.hpp"

namespace chambar {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num", "num/den", or a decimal literal like "-0.25" into an exact
/// rational. Throws BadInput on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "num/den" (or "num" when the denominator is 1).
std::string rational_to_string(const Rational& q);

Rational rational_pow(const Rational& base, long exp);

/// Exact n-th root when `value` is the n-th power of a rational; nullopt
/// otherwise. Requires value > 0 for even n.
std::optional<Rational> exact_nth_root(const Rational& value, unsigned long n);

/// Binomial coefficient with rational upper argument: q(q-1)...(q-k+1)/k!.
Rational generalized_binomial(const Rational& q, unsigned long k);

inline double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace chambar
