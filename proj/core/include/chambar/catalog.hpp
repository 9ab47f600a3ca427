#pragma once

#include <chambar/barycentric.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace chambar {

/// A constructed chambar together with the verdict kind its verification is
/// expected to produce ("exact_certificate" when every field is an exact
/// polynomial jet, "verified_to_order" otherwise), and — for constant tuples
/// — the reducibility flag (nullopt when the subset search is out of reach).
struct GeneratedExample {
    Chambar chambar;
    std::string expected_kind;
    std::optional<bool> reducible;
};

/// Constant fields with the given speed vectors; the speeds must sum to zero
/// (SumNotZero otherwise). Reducible iff some proper nonempty subfamily
/// already sums to zero; the search runs over all subsets, so the flag is
/// only computed for arity <= 12.
GeneratedExample gen_constant(const std::vector<std::vector<Scalar>>& speeds);

/// (X, sX, s^2 X, ..., s^{m-1} X) with s a primitive m-th root of unity.
/// An exact polynomial field must have t-polynomial flow of degree exactly
/// m-1 (DegreeMismatch otherwise); truncated jets — the root-power fields —
/// are taken as given and verify to order only.
GeneratedExample gen_rigid_root_of_unity(const VectorField& X, unsigned long m);

/// Conjugates of the translations x -> x + t*a_k by an exact polynomial map
/// P with P(0) = 0 and invertible linear part: the fields DP(psi(x)) * a_k,
/// where psi is the local inverse of P obtained by series reversion to order
/// K. The speeds must make sum_k P(y + t*a_k) - p*P(y) vanish identically
/// (ConstraintViolated reports the first surviving monomial). When the
/// reverted series is checked to be a genuine polynomial inverse the fields
/// come out exact.
GeneratedExample gen_conjugated_translations(const std::vector<Jet>& P,
                                             const std::vector<std::vector<Scalar>>& speeds,
                                             int K);

/// Affine solution set of the coefficient system for planar triples
/// X_k = a_k d/dx + P_k(x) d/dy with quadratic P_k (nine coefficients,
/// ordered P1 then P2 then P3, constant -> quadratic within each).
struct SolutionSpace {
    std::size_t ambient_dimension;     // coefficients plus the three speeds
    std::size_t coefficient_dimension; // nine
    std::size_t vandermonde_rank;      // rank of the quadratic-coefficient block
    std::size_t kernel_dimension;
    std::size_t component_dimension;   // kernel + local dimension of the speed stratum
    std::vector<std::vector<Scalar>> basis;
    std::vector<Scalar> particular;    // zero: the system is homogeneous
};

/// Speeds must sum to zero (ConstraintViolated).
SolutionSpace solve_polynomial_family(const std::array<Scalar, 3>& speeds);

/// Conjugates of the translations x -> x + t*a_k by the quadratic
/// substitution (x1, ..., xn) -> (x1, x1*x2, ..., x1*xn): fields
///   (a_k1, a_k2 x1 + a_k1 x2/x1, ..., a_kn x1 + a_k1 xn/x1)
/// as jets at (1, ..., 1) of the given spatial order; each flow is quadratic
/// in t. Requires, for every column l, sum_k a_kl = 0, and for l >= 2,
/// sum_k a_k1 a_kl = 0 (ConstraintViolated names the failing sum).
GeneratedExample gen_blowup_birational(const std::vector<std::vector<Scalar>>& speeds,
                                       int spatial_order = 8);

/// Planar fields a_k d/dx + b_kj exp(lambda_k x) d/dy at the origin, one
/// field per pair (k, j). Requires sum_k |b_k| * a_k = 0 and, per k,
/// sum_j b_kj = 0 (ConstraintViolated); zero a_k or lambda_k is BadInput.
GeneratedExample gen_exponential(const std::vector<Scalar>& a,
                                 const std::vector<std::vector<Scalar>>& b,
                                 const std::vector<Scalar>& lambda,
                                 int spatial_order = 8);

/// Strictly upper-triangular linear fields
///   (alpha_k x2 + gamma_k x3, beta_k x3, 0)
/// about the origin. Requires sum alpha = sum beta = sum gamma =
/// sum alpha*beta = 0 (ConstraintViolated names the failing sum).
GeneratedExample gen_linear_heisenberg(const std::vector<Scalar>& alpha,
                                       const std::vector<Scalar>& beta,
                                       const std::vector<Scalar>& gamma);

/// The quadratic-homogeneous triple a_j y^2 d/dx about the origin of the
/// plane. Speeds must be nonzero (BadInput) and sum to zero (SumNotZero).
GeneratedExample gen_homogeneous_deg2(const std::array<Scalar, 3>& a);

} // namespace chambar
