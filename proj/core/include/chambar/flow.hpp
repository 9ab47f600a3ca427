#pragma once

#include <chambar/vector_field.hpp>

#include <optional>
#include <vector>

namespace chambar {

/// Formal flow of a vector field: per coordinate j the truncated series
/// x_j + sum_{k=1..K_t} X^k(x_j) t^k / k!, stored as spatial jets per power
/// of t. When every iterate beyond some k vanishes identically on exact
/// input, the flow is an exact polynomial in t and `t_poly_degree` is set.
class FlowJet {
public:
    FlowJet(std::vector<std::vector<Jet>> coefficients, int t_order,
            std::optional<int> t_poly_degree, std::optional<int> spatial_order);

    std::size_t nvars() const { return coefficients_.size(); }
    int t_order() const { return t_order_; }
    /// Set when exact t-polynomiality was detected during iteration.
    std::optional<int> t_poly_degree() const { return t_poly_degree_; }
    /// Weakest certified spatial order among the stored jets; empty when all
    /// stored jets are exact.
    std::optional<int> spatial_order() const { return spatial_order_; }
    bool exact() const { return t_poly_degree_.has_value() && !spatial_order_.has_value(); }

    /// Coefficient jet of t^k in coordinate j (already divided by k!).
    const Jet& coefficient(std::size_t j, int k) const;

    /// Coordinate series as a jet in nvars+1 variables with the time
    /// displacement appended as the last variable.
    Jet coordinate_series(std::size_t j) const;

private:
    std::vector<std::vector<Jet>> coefficients_; // [j][k]
    int t_order_;
    std::optional<int> t_poly_degree_;
    std::optional<int> spatial_order_;
};

/// Iterated-derivation flow expansion to t-order K_t >= 1.
FlowJet flow_jet(const VectorField& X, int K_t);

enum class TPolyKind { Degree, NotWithinBound, Never1D };

struct TPolyResult {
    TPolyKind kind;
    int degree = -1; // set for Degree
};

/// Decide whether exp(tX) is polynomial in t, for exact polynomial fields.
/// Degree(d): all (d+1)-fold iterates vanish identically and some d-fold one
/// does not. Never1D: in one variable a component of degree >= 2 forces
/// unbounded degree growth of the iterates. NotWithinBound otherwise.
TPolyResult t_poly_degree(const VectorField& X, int bound);

} // namespace chambar
