#pragma once

#include <chambar/flow.hpp>
#include <chambar/vector_field.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace chambar {

/// Weighted tuple of vector fields sharing one ambient frame.
struct Chambar {
    std::vector<VectorField> fields;
    std::vector<Scalar> weights;

    Chambar(std::vector<VectorField> fields_, std::vector<Scalar> weights_);
    /// All weights one.
    explicit Chambar(std::vector<VectorField> fields_);

    std::size_t arity() const { return fields.size(); }
    std::size_t nvars() const { return fields.front().nvars(); }
    const std::vector<Scalar>& basepoint() const { return fields.front().basepoint(); }
};

/// The finite check closed: every field's iterates vanish identically beyond
/// the bound, so all infinitely many conditions hold.
struct ExactCertificate {
    int t_degree_bound;
};

/// All conditions hold up to the requested t-order (and spatial order for
/// truncated inputs); not a proof.
struct VerifiedToOrder {
    int t_order;
    std::optional<int> spatial_order; // empty when all jets are exact
};

/// A concrete failing condition, smallest (ell, coordinate, exponent) first.
struct Refuted {
    int ell;
    std::size_t coordinate;
    Jet::Exponent exponent;
    Scalar value;
};

using Verdict = std::variant<ExactCertificate, VerifiedToOrder, Refuted>;

/// Check sum_k alpha_k X_k^ell(x_j) = 0 for ell = 1..K_t and every
/// coordinate. Approx-mode coefficients below `tol` in magnitude count as
/// zero. An ExactCertificate needs exact-mode scalars, exact component jets,
/// and self-terminating iterates for every field.
Verdict check_barycentric(const Chambar& c, int K_t, double tol = 1e-9);

const char* verdict_kind_name(const Verdict& v);

} // namespace chambar
