#pragma once

#include <chambar/barycentric.hpp>

#include <array>
#include <optional>
#include <vector>

namespace chambar {

enum class Classify1DKind { Constant, RigidSqrt, Special, Unrecognized };

struct Classify1D {
    Classify1DKind kind;
    std::vector<Scalar> values;       // Constant: the field values
    std::optional<Scalar> lambda;     // RigidSqrt: a_1^2 = lambda*x + mu
    std::optional<Scalar> mu;
    std::vector<Scalar> multipliers;  // RigidSqrt: a_k = m_k * a_1
    // Special: indices (i,j)(k,l) with a_i + a_j = a_k + a_l = 0
    std::array<std::size_t, 4> pairing{0, 0, 0, 0};
};

/// Pattern-match a one-variable chambar of arity 3 or 4 against the known
/// shapes: all components constant; scaled square roots of a common affine
/// function with vanishing power sums of the multipliers; or two cancelling
/// pairs with affine squares. Unrecognized otherwise — never an error beyond
/// arity and ambient checks. In approximate mode, coefficients of modulus
/// below tol relative to the largest one count as zero.
Classify1D classify_1d(const Chambar& c, double tol = 1e-9);

} // namespace chambar
