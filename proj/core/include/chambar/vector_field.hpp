#pragma once

#include <chambar/jet.hpp>

#include <string>
#include <vector>

namespace chambar {

/// Analytic vector field X = sum_k A_k d/dx_k with jet components about a
/// common basepoint. Square by construction: one component per variable.
class VectorField {
public:
    explicit VectorField(std::vector<Jet> components);

    /// The radial field sum_k x_k d/dx_k.
    static VectorField radial(std::vector<Scalar> basepoint);
    /// Field with constant coefficients v.
    static VectorField constant(std::vector<Scalar> basepoint, std::vector<Scalar> v);

    std::size_t nvars() const { return components_.size(); }
    const std::vector<Scalar>& basepoint() const { return components_.front().basepoint(); }
    const std::vector<Jet>& components() const { return components_; }
    const Jet& component(std::size_t k) const { return components_.at(k); }
    bool exact() const;

    /// Derivation applied to a jet: X(f) = sum_k A_k df/dx_k.
    Jet apply(const Jet& f) const;

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const VectorField& a, const Scalar& s);
    friend VectorField operator*(const Scalar& s, const VectorField& a);

    std::string to_string() const;

private:
    std::vector<Jet> components_;
};

inline Jet lie_apply(const VectorField& X, const Jet& f) { return X.apply(f); }

} // namespace chambar
