#pragma once

#include <cstdint>
#include <vector>

#include "chambar/rational.hpp"

namespace chambar {

/// Element of Q(i): re + i*im with exact rational parts.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_rational() const { return im == 0; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
  GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
  GaussRational operator*(const GaussRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRational operator/(const GaussRational& o) const;
  bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }
};

/// Dense univariate polynomial over Q(i); index = degree. Zero polynomial is
/// the empty vector; every other value keeps a nonzero leading coefficient.
using GaussPoly = std::vector<GaussRational>;

GaussPoly gpoly_trim(GaussPoly p);
int gpoly_degree(const GaussPoly& p);  // -1 for the zero polynomial
GaussPoly gpoly_add(const GaussPoly& a, const GaussPoly& b);
GaussPoly gpoly_sub(const GaussPoly& a, const GaussPoly& b);
GaussPoly gpoly_mul(const GaussPoly& a, const GaussPoly& b);
/// Quotient and remainder; divisor must be nonzero.
std::pair<GaussPoly, GaussPoly> gpoly_divmod(const GaussPoly& a, const GaussPoly& b);
/// g = gcd(a,b) monic, with u*a + v*b = g.
struct GaussPolyGcd {
  GaussPoly g, u, v;
};
GaussPolyGcd gpoly_extended_gcd(const GaussPoly& a, const GaussPoly& b);

unsigned long euler_phi(unsigned long m);
std::vector<unsigned long> divisors_of(unsigned long m);

/// Coefficients of the m-th cyclotomic polynomial (integer-valued, monic),
/// computed by dividing t^m - 1 by the cyclotomic polynomials of the proper
/// divisors of m. Cached; thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(unsigned long m);

}  // namespace chambar
