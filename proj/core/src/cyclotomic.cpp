#include "chambar/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace chambar {

GaussRational GaussRational::operator/(const GaussRational& o) const {
  Rational n = o.re * o.re + o.im * o.im;
  if (n == 0) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

GaussPoly gpoly_trim(GaussPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int gpoly_degree(const GaussPoly& p) { return static_cast<int>(p.size()) - 1; }

GaussPoly gpoly_add(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] = r[k] + a[k];
    if (k < b.size()) r[k] = r[k] + b[k];
  }
  return gpoly_trim(std::move(r));
}

GaussPoly gpoly_sub(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly r(std::max(a.size(), b.size()));
  for (size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] = r[k] + a[k];
    if (k < b.size()) r[k] = r[k] - b[k];
  }
  return gpoly_trim(std::move(r));
}

GaussPoly gpoly_mul(const GaussPoly& a, const GaussPoly& b) {
  if (a.empty() || b.empty()) return {};
  GaussPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return gpoly_trim(std::move(r));
}

std::pair<GaussPoly, GaussPoly> gpoly_divmod(const GaussPoly& a, const GaussPoly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  GaussPoly rem = gpoly_trim(a);
  int db = gpoly_degree(b);
  if (gpoly_degree(rem) < db) return {{}, rem};
  GaussPoly quot(rem.size() - b.size() + 1);
  const GaussRational& lead = b.back();
  for (int k = gpoly_degree(rem); k >= db; --k) {
    if (static_cast<size_t>(k) >= rem.size() || rem[k].is_zero()) continue;
    GaussRational c = rem[k] / lead;
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      rem[k - db + j] = rem[k - db + j] - c * b[j];
    }
  }
  return {gpoly_trim(std::move(quot)), gpoly_trim(std::move(rem))};
}

GaussPolyGcd gpoly_extended_gcd(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly r0 = gpoly_trim(a), r1 = gpoly_trim(b);
  GaussPoly u0 = {GaussRational(Rational(1))}, u1 = {};
  GaussPoly v0 = {}, v1 = {GaussRational(Rational(1))};
  while (!r1.empty()) {
    auto [q, r] = gpoly_divmod(r0, r1);
    GaussPoly u2 = gpoly_sub(u0, gpoly_mul(q, u1));
    GaussPoly v2 = gpoly_sub(v0, gpoly_mul(q, v1));
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.empty() && !(r0.back() == GaussRational(Rational(1)))) {
    GaussRational lead = r0.back();
    for (auto& c : r0) c = c / lead;
    for (auto& c : u0) c = c / lead;
    for (auto& c : v0) c = c / lead;
  }
  return {std::move(r0), std::move(u0), std::move(v0)};
}

unsigned long euler_phi(unsigned long m) {
  unsigned long result = m, n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> divisors_of(unsigned long m) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      small.push_back(d);
      if (d != m / d) large.push_back(m / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

namespace {

// Rational dense polynomials, enough for the cyclotomic recursion.
using QPoly = std::vector<Rational>;

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
  QPoly rem = a, quot(a.size() - b.size() + 1);
  int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] / b.back();
    quot[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b[j];
  }
  return qpoly_trim(std::move(quot));
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned long m) {
  static std::map<unsigned long, QPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (m == 0) throw Error(ErrorCode::BadInput, "cyclotomic order must be positive");
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  // Compute bottom-up so that recursion never re-enters the lock.
  for (unsigned long d : divisors_of(m)) {
    if (cache.count(d)) continue;
    QPoly numerator(d + 1);
    numerator[0] = -1;
    numerator[d] = 1;
    for (unsigned long e : divisors_of(d)) {
      if (e == d) continue;
      numerator = qpoly_div_exact(numerator, cache.at(e));
    }
    cache.emplace(d, std::move(numerator));
  }
  return cache.at(m);
}

}  // namespace chambar
