#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "chambar/cyclotomic.hpp"

namespace chambar {

/// Coefficient domain used everywhere in the library.
///
/// Exact mode models the ring Q(i)[t]/Phi_m(t) with t standing for the
/// primitive m-th root of unity exp(2*pi*i/m); a value is the canonical
/// residue with Gaussian-rational coefficients. For 4 | m the ring is not a
/// field (Phi_m splits over Q(i)), so division runs the extended Euclidean
/// algorithm and throws DivisionByZero when the divisor is a zero divisor;
/// with m odd or m == 2 mod 4, or with purely rational coefficients, the
/// value lives in a genuine field and division always succeeds on nonzero
/// input.
///
/// Approx mode is a complex double. Arithmetic never mixes modes; exact
/// values of different cyclotomic order combine only when one order divides
/// the other (the smaller embeds into the field already declared by the
/// larger), otherwise use embedded() to move both into a common order first.
class Scalar {
 public:
  enum class Mode { Exact, Approx };

  /// Exact rational zero with cyclotomic order 1.
  Scalar() : rep_(Exact{1, {}}) {}

  static Scalar from_rational(Rational q, unsigned long m = 1);
  static Scalar from_gauss(GaussRational g, unsigned long m = 1);
  static Scalar from_int(long v, unsigned long m = 1);
  /// i, representable at every order through the Gaussian coefficients.
  static Scalar imaginary_unit(unsigned long m = 1);
  /// The primitive m-th root of unity, in exact mode of order m.
  static Scalar root_of_unity(unsigned long m);
  static Scalar root_of_unity_power(unsigned long m, long k);
  static Scalar approx(std::complex<double> z) { return Scalar(z); }
  static Scalar approx(double re, double im = 0.0) {
    return Scalar(std::complex<double>(re, im));
  }
  static Scalar zero_like(const Scalar& prototype);
  static Scalar one_like(const Scalar& prototype);
  /// Integer/rational constant in the same mode as `prototype`.
  static Scalar from_int_like(const Scalar& prototype, long v);
  static Scalar from_rational_like(const Scalar& prototype, const Rational& q);

  Mode mode() const {
    return std::holds_alternative<Exact>(rep_) ? Mode::Exact : Mode::Approx;
  }
  bool exact() const { return mode() == Mode::Exact; }
  unsigned long cyclotomic_order() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;
  bool is_gauss() const;
  GaussRational gauss_value() const;

  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }

  /// Re-embeds an exact value into Q(i)[t]/Phi_target ( m | target required).
  Scalar embedded(unsigned long target_order) const;
  Scalar to_approx() const { return Scalar(to_complex()); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long k) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical residue coefficients (exact mode only), trimmed.
  const std::vector<GaussRational>& coefficients() const;
  std::complex<double> approx_value() const;

  std::string to_string() const;

 private:
  struct Exact {
    unsigned long m;
    std::vector<GaussRational> c;  // canonical residue mod Phi_m, trimmed
  };

  explicit Scalar(std::complex<double> z) : rep_(z) {}
  explicit Scalar(Exact e) : rep_(std::move(e)) {}
  static Scalar make_exact(unsigned long m, GaussPoly residue);
  static GaussPoly reduce_mod_phi(GaussPoly p, unsigned long m);
  const Exact& exact_rep() const;

  std::variant<Exact, std::complex<double>> rep_;
};

}  // namespace chambar
