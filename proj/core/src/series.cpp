#include <chambar/series.hpp>

#include <chambar/error.hpp>

#include <cmath>
#include <complex>
#include <utility>

namespace chambar {

AlgebraicExpr AlgebraicExpr::sqrt_affine(Scalar lambda, Scalar mu) {
    return {AlgebraicKind::SqrtAffine, std::move(lambda), std::move(mu), Rational(0)};
}

AlgebraicExpr AlgebraicExpr::exp_affine(Scalar lambda) {
    Scalar zero = Scalar::zero_like(lambda);
    return {AlgebraicKind::ExpAffine, std::move(lambda), std::move(zero), Rational(0)};
}

AlgebraicExpr AlgebraicExpr::reciprocal_affine(Scalar lambda, Scalar mu) {
    return {AlgebraicKind::ReciprocalAffine, std::move(lambda), std::move(mu), Rational(0)};
}

AlgebraicExpr AlgebraicExpr::pow_affine(Scalar lambda, Scalar mu, Rational q) {
    q.canonicalize();
    return {AlgebraicKind::PowAffine, std::move(lambda), std::move(mu), std::move(q)};
}

namespace {

Scalar imaginary_like(const Scalar& prototype) {
    if (prototype.exact()) return Scalar::imaginary_unit(prototype.cyclotomic_order());
    return Scalar::approx(0.0, 1.0);
}

Scalar sqrt_value(const Scalar& s) {
    if (!s.exact()) return Scalar::approx(std::sqrt(s.approx_value()));
    if (s.is_zero()) return Scalar::zero_like(s);
    if (!s.is_rational())
        throw Error(ErrorCode::NotRepresentable, "square root of a non-rational exact scalar");
    const Rational r = s.rational_value();
    const auto root = exact_nth_root(r > 0 ? r : Rational(-r), 2);
    if (!root)
        throw Error(ErrorCode::NotRepresentable, "radicand is not a perfect rational square");
    Scalar v = Scalar::from_rational_like(s, *root);
    if (r < 0) v *= imaginary_like(s);
    return v;
}

Scalar pow_value(const Scalar& s, const Rational& q) {
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (den == 1) {
        if (!num.fits_slong_p()) throw Error(ErrorCode::BadInput, "exponent magnitude too large");
        const long p = num.get_si();
        if (s.is_zero()) {
            if (p < 0) throw Error(ErrorCode::SingularBasepoint, "negative power of zero");
            return p == 0 ? Scalar::one_like(s) : Scalar::zero_like(s);
        }
        return s.pow(p);
    }
    if (!s.exact()) {
        const std::complex<double> z = s.approx_value();
        return Scalar::approx(std::pow(z, rational_to_double(q)));
    }
    if (!s.is_rational() || s.rational_value() <= 0)
        throw Error(ErrorCode::NotRepresentable,
                    "fractional power needs a positive rational base");
    if (!den.fits_ulong_p() || !num.fits_slong_p())
        throw Error(ErrorCode::BadInput, "exponent magnitude too large");
    const auto root = exact_nth_root(s.rational_value(), den.get_ui());
    if (!root)
        throw Error(ErrorCode::NotRepresentable, "base is not a perfect rational power");
    return Scalar::from_rational_like(s, *root).pow(num.get_si());
}

Scalar constant_value(const AlgebraicExpr& expr) {
    switch (expr.kind) {
        case AlgebraicKind::SqrtAffine: return sqrt_value(expr.shift);
        case AlgebraicKind::ExpAffine: return Scalar::one_like(expr.slope);
        case AlgebraicKind::ReciprocalAffine:
            if (expr.shift.is_zero())
                throw Error(ErrorCode::SingularBasepoint, "reciprocal of the zero function");
            return expr.shift.inverse();
        case AlgebraicKind::PowAffine: return pow_value(expr.shift, expr.exponent);
    }
    throw Error(ErrorCode::BadInput, "unknown algebraic expression kind");
}

Jet binomial_series(const Scalar& x0, const Scalar& value, const Scalar& ratio,
                    const Rational& q, int K) {
    Jet r({x0}, K, false);
    Scalar tk = Scalar::one_like(value);
    for (int k = 0; k <= K; ++k) {
        const Scalar c = value * Scalar::from_rational_like(value, generalized_binomial(q, static_cast<unsigned>(k))) * tk;
        if (!c.is_zero()) r.set_coefficient({static_cast<std::uint32_t>(k)}, c);
        tk *= ratio;
    }
    return r;
}

Jet integer_power_polynomial(const Scalar& x0, const Scalar& lambda, const Scalar& affine_value,
                             unsigned long n, int K) {
    Jet r({x0}, 0, true);
    // (r + lambda*u)^n by the binomial theorem; exact polynomial
    for (unsigned long k = 0; k <= n; ++k) {
        Scalar c = Scalar::from_rational_like(
            lambda, generalized_binomial(Rational(static_cast<long>(n)), static_cast<unsigned>(k)));
        c *= lambda.pow(static_cast<long>(k));
        if (n > k) {
            if (affine_value.is_zero()) continue;
            c *= affine_value.pow(static_cast<long>(n - k));
        }
        if (!c.is_zero()) r.set_coefficient({static_cast<std::uint32_t>(k)}, c);
    }
    if (K >= 0 && static_cast<unsigned long>(K) < n) return r.truncated(K);
    return r;
}

} // namespace

Jet expand_algebraic(const AlgebraicExpr& expr, const Scalar& basepoint, int K) {
    if (expr.slope.is_zero())
        return Jet::constant({basepoint}, constant_value(expr), 0, true);
    if (K < 0) return Jet({basepoint}, K, false);

    const Scalar affine = expr.kind == AlgebraicKind::ExpAffine
                              ? expr.slope * basepoint
                              : expr.slope * basepoint + expr.shift;

    switch (expr.kind) {
        case AlgebraicKind::ExpAffine: {
            Scalar value = Scalar::one_like(affine);
            if (!affine.is_zero()) {
                if (affine.exact())
                    throw Error(ErrorCode::NotRepresentable,
                                "exp of a nonzero exact scalar has no exact value");
                value = Scalar::approx(std::exp(affine.approx_value()));
            }
            Jet r({basepoint}, K, false);
            Scalar lk = value;
            Rational kfact(1);
            for (int k = 0; k <= K; ++k) {
                if (k > 0) {
                    lk *= expr.slope;
                    kfact *= Rational(k);
                }
                const Scalar c = lk * Scalar::from_rational_like(lk, Rational(1) / kfact);
                if (!c.is_zero()) r.set_coefficient({static_cast<std::uint32_t>(k)}, c);
            }
            return r;
        }
        case AlgebraicKind::SqrtAffine: {
            if (affine.is_zero())
                throw Error(ErrorCode::SingularBasepoint, "basepoint sits on the branch point");
            return binomial_series(basepoint, sqrt_value(affine),
                                   expr.slope * affine.inverse(), Rational(1, 2), K);
        }
        case AlgebraicKind::ReciprocalAffine: {
            if (affine.is_zero())
                throw Error(ErrorCode::SingularBasepoint, "basepoint sits on the pole");
            return binomial_series(basepoint, affine.inverse(), expr.slope * affine.inverse(),
                                   Rational(-1), K);
        }
        case AlgebraicKind::PowAffine: {
            if (expr.exponent.get_den() == 1 && expr.exponent >= 0) {
                const Integer& n = expr.exponent.get_num();
                if (!n.fits_ulong_p()) throw Error(ErrorCode::BadInput, "exponent magnitude too large");
                return integer_power_polynomial(basepoint, expr.slope, affine, n.get_ui(), K);
            }
            if (affine.is_zero())
                throw Error(ErrorCode::SingularBasepoint,
                            "basepoint sits on the branch point or pole");
            return binomial_series(basepoint, pow_value(affine, expr.exponent),
                                   expr.slope * affine.inverse(), expr.exponent, K);
        }
    }
    throw Error(ErrorCode::BadInput, "unknown algebraic expression kind");
}

} // namespace chambar
