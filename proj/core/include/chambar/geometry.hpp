#pragma once

#include <chambar/barycentric.hpp>
#include <chambar/vector_field.hpp>

#include <optional>
#include <vector>

namespace chambar {

enum class StraightKind { StraightFlow, StraightFoliation, NotStraight };

struct Straightness {
    StraightKind kind;
    // offending minor for NotStraight
    std::size_t i = 0;
    std::size_t j = 0;
    std::optional<Jet> witness;
};

/// StraightFlow when X kills each of its own components (the acceleration
/// DX·X vanishes); StraightFoliation when X and DX·X are everywhere
/// proportional (all 2x2 minors vanish); NotStraight with the first
/// nonvanishing minor otherwise.
Straightness straightness_test(const VectorField& X, double tol = 1e-9);

struct PfaffianData {
    std::vector<Jet> omega;  // 1-form coefficients, content-normalized
    Jet volume_coefficient;  // omega ^ d(omega) as a multiple of the volume form
};

/// Annihilator 1-form of the 2-plane field spanned by a 3-variable chambar,
/// and its integrability coefficient. RankDeficient when the fields do not
/// span exactly a 2-plane at the basepoint.
PfaffianData pfaffian_integrability(const Chambar& c, double tol = 1e-9);

enum class SemiRigidKind { Rigid, StraightLines, Neither };

struct SemiRigid {
    SemiRigidKind kind;
    std::optional<Scalar> multiplier; // the constant ratio for Rigid
    std::optional<Jet> residual;      // nonzero residual witness for Neither
};

/// For a colinear triple with zero sum: Rigid when X2 = f X1 for a constant
/// f with 1 + f + f^2 = 0; StraightLines when X1 ^ (DX1·X1) = 0; Neither
/// with the residual (1 + f + f^2)(X ^ DX·X) otherwise.
SemiRigid semi_rigid_analyze(const VectorField& x1, const VectorField& x2,
                             const VectorField& x3, double tol = 1e-9);

/// All 2x2 minors X_i Y_j - X_j Y_i for i < j in lexicographic order; their
/// common zero set is the locus where X and Y are colinear.
std::vector<Jet> colinearity_locus(const VectorField& X, const VectorField& Y);

} // namespace chambar
