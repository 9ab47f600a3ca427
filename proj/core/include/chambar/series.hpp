#pragma once

#include <chambar/jet.hpp>
#include <chambar/scalar.hpp>

namespace chambar {

enum class AlgebraicKind { SqrtAffine, ExpAffine, ReciprocalAffine, PowAffine };

/// A univariate expression built from an affine argument:
///   sqrt_affine:        sqrt(slope*x + shift), principal branch
///   exp_affine:         exp(slope*x)
///   reciprocal_affine:  1 / (slope*x + shift)
///   pow_affine:         (slope*x + shift)^exponent, principal branch
struct AlgebraicExpr {
    AlgebraicKind kind;
    Scalar slope;
    Scalar shift;
    Rational exponent{0};

    static AlgebraicExpr sqrt_affine(Scalar lambda, Scalar mu);
    static AlgebraicExpr exp_affine(Scalar lambda);
    static AlgebraicExpr reciprocal_affine(Scalar lambda, Scalar mu);
    static AlgebraicExpr pow_affine(Scalar lambda, Scalar mu, Rational q);
};

/// Taylor jet of the expression about `basepoint`, certified to order K.
/// Exact inputs produce exact coefficients whenever the leading value lies in
/// the scalar field (otherwise NotRepresentable); a basepoint on a branch
/// point or pole raises SingularBasepoint. A constant or polynomial
/// expression comes back with the exact flag set.
Jet expand_algebraic(const AlgebraicExpr& expr, const Scalar& basepoint, int K);

} // namespace chambar
