#pragma once

#include <chambar/barycentric.hpp>
#include <chambar/matrix.hpp>
#include <chambar/vector_field.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace chambar {

/// Weighted tuple of square matrices over a common dimension, viewed as the
/// linear vector fields x -> A_k x.
struct MatrixChambar {
    std::vector<ScalarMatrix> matrices;
    std::vector<Scalar> weights;

    MatrixChambar(std::vector<ScalarMatrix> matrices_, std::vector<Scalar> weights_);
    /// All weights one.
    explicit MatrixChambar(std::vector<ScalarMatrix> matrices_);

    std::size_t arity() const { return matrices.size(); }
    std::size_t dimension() const { return matrices.front().rows(); }
};

/// Decide sum_k alpha_k A_k^ell = 0 for every ell >= 1. The powers
/// ell = 1..n*p are checked literally (enough to force every eigenvalue of
/// every A_k to zero when the weights are units); each A_k^n = 0 then closes
/// the remaining infinitely many conditions term by term. Refuted reports the
/// first failing power, with coordinate = row and exponent = {column}. When
/// the checked powers all vanish but some A_k fails to be nilpotent (possible
/// with mixed-sign weights) or the entries are not exact, the result degrades
/// to VerifiedToOrder(n*p).
Verdict verify_linear(const MatrixChambar& c);

/// Smallest k >= 1 with A^k = 0, or empty when A^n != 0 (in which case no
/// power of A vanishes).
std::optional<int> nilpotency_index(const ScalarMatrix& a);

/// det(t*id - A) as a one-variable jet in t, monic of degree n. Division-free,
/// so it works in every scalar mode.
Jet characteristic_polynomial(const ScalarMatrix& a);

/// The linear vector field x -> A x about the origin.
VectorField linear_field(const ScalarMatrix& a);

/// Success: conjugating every input by `basis` (new coordinates = columns)
/// makes all of them strictly upper triangular.
struct Embedded {
    ScalarMatrix basis;
};

/// Failure: at `stage` (0-based, counting peeled directions) the remaining
/// quotient blocks share no kernel vector. When a product of dimension-many
/// generators is nonzero, `word` carries its generator indices and `product`
/// its value — a certificate that no simultaneous strict triangularization
/// can exist at all.
struct Obstruction {
    std::size_t stage;
    std::vector<std::size_t> word;
    std::optional<ScalarMatrix> product;
};

using EmbedResult = std::variant<Embedded, Obstruction>;

/// Try to put all matrices in strictly upper triangular form in one common
/// basis by repeatedly extracting a common kernel vector and passing to the
/// quotient. The first kernel basis vector (under column-pivoted elimination)
/// is taken at every stage, so the outcome is deterministic.
EmbedResult heisenberg_embed_test(const std::vector<ScalarMatrix>& matrices);

/// Maximum matrix rank over the tuple.
std::size_t chambar_rank(const MatrixChambar& c);

/// Parameters for a 4-tuple on dimension 3 whose matrices all kill the first
/// basis vector. Entries involve b/c and b/e, so c and e must be invertible.
/// The expected relations are
///   gamma + a + d = 0,   alpha - a*b/c + d*b/e = 0,   delta + c + e = 0,
/// plus one relation on beta: by default beta = b^2/c + b^2/e^2 is required;
/// with `alternate_beta_constraint` it is beta = b^2/c + b^2/e instead, the
/// variant that actually makes the four matrices sum to zero (see the tests
/// for the comparison).
struct CommonKernelParams {
    Scalar a, b, c, d, e;
    Scalar alpha, beta, gamma, delta;
    bool alternate_beta_constraint = false;
};

/// Parameters for a rank-2 4-tuple on dimension 3 built from 2x2 blocks whose
/// squares vanish; every parameter choice satisfies the barycentric relations,
/// and degenerate choices that zero out a matrix are rejected by the tuple
/// constructor.
struct LowRankParams {
    Scalar a, b, c;
};

/// Parameters for a 4-tuple on dimension 3 in which the pencil X_1 + t*X_2
/// reaches full rank for generic t even though each matrix has rank <= 2.
/// Requires gamma = beta (the two middle-row couplings must cancel in the
/// sum).
struct PencilParams {
    Scalar a, b, c;
    Scalar alpha, beta, gamma;
};

MatrixChambar sample_family(const CommonKernelParams& p);
MatrixChambar sample_family(const LowRankParams& p);
MatrixChambar sample_family(const PencilParams& p);

} // namespace chambar
