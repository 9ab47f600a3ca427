#include "chambar/rational.hpp"

namespace chambar {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::BadInput, "empty rational literal");
  try {
    auto dot = text.find('.');
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      size_t frac_len = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw Error(ErrorCode::BadInput, "malformed rational literal: " + text);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    Rational q(text, 10);
    if (q.get_den() == 0)
      throw Error(ErrorCode::BadInput, "zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::BadInput, "malformed rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw Error(ErrorCode::DivisionByZero, "0 raised to a negative power");
    return rational_pow(Rational(1) / base, -exp);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
  out.canonicalize();
  return out;
}

std::optional<Rational> exact_nth_root(const Rational& value, unsigned long n) {
  if (n == 0) throw Error(ErrorCode::BadInput, "0-th root");
  if (value == 0) return Rational(0);
  if (value < 0 && n % 2 == 0) return std::nullopt;
  Integer num = value.get_num(), den = value.get_den();
  Integer rnum, rden;
  int num_ok = mpz_root(rnum.get_mpz_t(), num.get_mpz_t(), n);
  int den_ok = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n);
  if (!num_ok || !den_ok) return std::nullopt;
  Rational r(rnum, rden);
  r.canonicalize();
  return r;
}

Rational generalized_binomial(const Rational& q, unsigned long k) {
  Rational out(1);
  for (unsigned long j = 0; j < k; ++j) {
    out *= (q - Rational(static_cast<long>(j))) / Rational(static_cast<long>(j + 1));
  }
  return out;
}

}  // namespace chambar
