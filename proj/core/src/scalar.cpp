#include "chambar/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace chambar {

namespace {

GaussPoly phi_as_gauss_poly(unsigned long m) {
  const auto& phi = cyclotomic_polynomial(m);
  GaussPoly p(phi.size());
  for (size_t k = 0; k < phi.size(); ++k) p[k] = GaussRational(phi[k]);
  return p;
}

}  // namespace

GaussPoly Scalar::reduce_mod_phi(GaussPoly p, unsigned long m) {
  p = gpoly_trim(std::move(p));
  const auto& phi = cyclotomic_polynomial(m);
  if (p.size() < phi.size()) return p;
  auto [q, r] = gpoly_divmod(p, phi_as_gauss_poly(m));
  (void)q;
  return r;
}

Scalar Scalar::make_exact(unsigned long m, GaussPoly residue) {
  return Scalar(Exact{m, reduce_mod_phi(std::move(residue), m)});
}

Scalar Scalar::from_rational(Rational q, unsigned long m) {
  if (q == 0) return Scalar(Exact{m, {}});
  return Scalar(Exact{m, {GaussRational(std::move(q))}});
}

Scalar Scalar::from_gauss(GaussRational g, unsigned long m) {
  if (g.is_zero()) return Scalar(Exact{m, {}});
  return Scalar(Exact{m, {std::move(g)}});
}

Scalar Scalar::from_int(long v, unsigned long m) { return from_rational(Rational(v), m); }

Scalar Scalar::imaginary_unit(unsigned long m) {
  return from_gauss(GaussRational(Rational(0), Rational(1)), m);
}

Scalar Scalar::root_of_unity(unsigned long m) {
  GaussPoly t(2);
  t[1] = GaussRational(Rational(1));
  return make_exact(m, std::move(t));
}

Scalar Scalar::root_of_unity_power(unsigned long m, long k) {
  long r = k % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  GaussPoly t(static_cast<size_t>(r) + 1);
  t[static_cast<size_t>(r)] = GaussRational(Rational(1));
  return make_exact(m, std::move(t));
}

Scalar Scalar::zero_like(const Scalar& prototype) {
  if (prototype.exact()) return Scalar(Exact{prototype.cyclotomic_order(), {}});
  return Scalar(std::complex<double>(0.0, 0.0));
}

Scalar Scalar::one_like(const Scalar& prototype) {
  if (prototype.exact()) return from_rational(Rational(1), prototype.cyclotomic_order());
  return Scalar(std::complex<double>(1.0, 0.0));
}

Scalar Scalar::from_int_like(const Scalar& prototype, long v) {
  if (prototype.exact()) return from_int(v, prototype.cyclotomic_order());
  return Scalar(std::complex<double>(static_cast<double>(v), 0.0));
}

Scalar Scalar::from_rational_like(const Scalar& prototype, const Rational& q) {
  if (prototype.exact()) return from_rational(q, prototype.cyclotomic_order());
  return Scalar(std::complex<double>(rational_to_double(q), 0.0));
}

unsigned long Scalar::cyclotomic_order() const {
  if (!exact()) throw Error(ErrorCode::ModeMismatch, "cyclotomic order of an approx scalar");
  return std::get<Exact>(rep_).m;
}

const Scalar::Exact& Scalar::exact_rep() const {
  if (!exact()) throw Error(ErrorCode::ModeMismatch, "exact representation of an approx scalar");
  return std::get<Exact>(rep_);
}

bool Scalar::is_zero() const {
  if (exact()) return std::get<Exact>(rep_).c.empty();
  return std::get<std::complex<double>>(rep_) == std::complex<double>(0.0, 0.0);
}

bool Scalar::is_one() const {
  if (exact()) {
    const auto& c = std::get<Exact>(rep_).c;
    return c.size() == 1 && c[0] == GaussRational(Rational(1));
  }
  return std::get<std::complex<double>>(rep_) == std::complex<double>(1.0, 0.0);
}

bool Scalar::is_rational() const {
  if (!exact()) return false;
  const auto& c = std::get<Exact>(rep_).c;
  return c.empty() || (c.size() == 1 && c[0].is_rational());
}

Rational Scalar::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::NotRepresentable, "scalar is not rational");
  const auto& c = std::get<Exact>(rep_).c;
  return c.empty() ? Rational(0) : c[0].re;
}

bool Scalar::is_gauss() const {
  if (!exact()) return false;
  return std::get<Exact>(rep_).c.size() <= 1;
}

GaussRational Scalar::gauss_value() const {
  if (!is_gauss()) throw Error(ErrorCode::NotRepresentable, "scalar is not in Q(i)");
  const auto& c = std::get<Exact>(rep_).c;
  return c.empty() ? GaussRational() : c[0];
}

std::complex<double> Scalar::to_complex() const {
  if (!exact()) return std::get<std::complex<double>>(rep_);
  const auto& e = std::get<Exact>(rep_);
  std::complex<double> zeta =
      std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(e.m));
  std::complex<double> acc(0.0, 0.0);
  for (auto it = e.c.rbegin(); it != e.c.rend(); ++it) {
    acc = acc * zeta + std::complex<double>(it->re.get_d(), it->im.get_d());
  }
  return acc;
}

Scalar Scalar::embedded(unsigned long target_order) const {
  if (!exact()) return *this;
  const auto& e = std::get<Exact>(rep_);
  if (e.m == target_order) return *this;
  if (target_order % e.m != 0)
    throw Error(ErrorCode::ModeMismatch,
                "cannot embed order " + std::to_string(e.m) + " into order " +
                    std::to_string(target_order));
  unsigned long stride = target_order / e.m;
  GaussPoly p;
  if (!e.c.empty()) {
    p.resize((e.c.size() - 1) * stride + 1);
    for (size_t k = 0; k < e.c.size(); ++k) p[k * stride] = e.c[k];
  }
  return make_exact(target_order, std::move(p));
}

namespace {

// Promotes two exact scalars to a shared order when one divides the other.
unsigned long shared_order(unsigned long a, unsigned long b) {
  if (a == b) return a;
  if (b % a == 0) return b;
  if (a % b == 0) return a;
  throw Error(ErrorCode::ModeMismatch,
              "scalars of cyclotomic orders " + std::to_string(a) + " and " +
                  std::to_string(b) + " need explicit re-embedding");
}

}  // namespace

Scalar Scalar::operator-() const {
  if (exact()) {
    Exact e = std::get<Exact>(rep_);
    for (auto& c : e.c) c = -c;
    return Scalar(std::move(e));
  }
  return Scalar(-std::get<std::complex<double>>(rep_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact() != o.exact())
    throw Error(ErrorCode::ModeMismatch, "mixing exact and approx scalars");
  if (!exact())
    return Scalar(std::get<std::complex<double>>(rep_) +
                  std::get<std::complex<double>>(o.rep_));
  unsigned long m = shared_order(cyclotomic_order(), o.cyclotomic_order());
  Scalar a = embedded(m), b = o.embedded(m);
  return make_exact(m, gpoly_add(std::get<Exact>(a.rep_).c, std::get<Exact>(b.rep_).c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact() != o.exact())
    throw Error(ErrorCode::ModeMismatch, "mixing exact and approx scalars");
  if (!exact())
    return Scalar(std::get<std::complex<double>>(rep_) *
                  std::get<std::complex<double>>(o.rep_));
  unsigned long m = shared_order(cyclotomic_order(), o.cyclotomic_order());
  Scalar a = embedded(m), b = o.embedded(m);
  return make_exact(m, gpoly_mul(std::get<Exact>(a.rep_).c, std::get<Exact>(b.rep_).c));
}

Scalar Scalar::inverse() const {
  if (!exact()) {
    auto z = std::get<std::complex<double>>(rep_);
    if (z == std::complex<double>(0.0, 0.0))
      throw Error(ErrorCode::DivisionByZero, "inverse of approx zero");
    return Scalar(1.0 / z);
  }
  const auto& e = std::get<Exact>(rep_);
  if (e.c.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of exact zero");
  auto gcd = gpoly_extended_gcd(e.c, phi_as_gauss_poly(e.m));
  if (gpoly_degree(gcd.g) != 0)
    throw Error(ErrorCode::DivisionByZero,
                "scalar is a zero divisor in Q(i)[t]/Phi_" + std::to_string(e.m));
  return make_exact(e.m, std::move(gcd.u));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (!exact() && !o.exact()) {
    auto d = std::get<std::complex<double>>(o.rep_);
    if (d == std::complex<double>(0.0, 0.0))
      throw Error(ErrorCode::DivisionByZero, "division by approx zero");
    return Scalar(std::get<std::complex<double>>(rep_) / d);
  }
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar base = *this;
  Scalar acc = one_like(*this);
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (exact() != o.exact()) return false;
  if (!exact())
    return std::get<std::complex<double>>(rep_) == std::get<std::complex<double>>(o.rep_);
  unsigned long ma = cyclotomic_order(), mb = o.cyclotomic_order();
  if (ma != mb) {
    if (mb % ma == 0 || ma % mb == 0) {
      unsigned long m = shared_order(ma, mb);
      return embedded(m) == o.embedded(m);
    }
    return false;
  }
  return std::get<Exact>(rep_).c == std::get<Exact>(o.rep_).c;
}

const std::vector<GaussRational>& Scalar::coefficients() const { return exact_rep().c; }

std::complex<double> Scalar::approx_value() const {
  if (exact()) throw Error(ErrorCode::ModeMismatch, "approx value of an exact scalar");
  return std::get<std::complex<double>>(rep_);
}

std::string Scalar::to_string() const {
  if (!exact()) {
    std::ostringstream os;
    auto z = std::get<std::complex<double>>(rep_);
    os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
  }
  const auto& e = std::get<Exact>(rep_);
  if (e.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < e.c.size(); ++k) {
    if (e.c[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << rational_to_string(e.c[k].re);
    if (e.c[k].im != 0) os << (e.c[k].im < 0 ? "" : "+") << rational_to_string(e.c[k].im) << "i";
    os << ")";
    if (k > 0) os << "*z" << e.m << "^" << k;
  }
  return os.str();
}

}  // namespace chambar
