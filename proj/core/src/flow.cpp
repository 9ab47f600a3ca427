#include <chambar/flow.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <utility>

namespace chambar {

FlowJet::FlowJet(std::vector<std::vector<Jet>> coefficients, int t_order,
                 std::optional<int> t_poly_degree, std::optional<int> spatial_order)
    : coefficients_(std::move(coefficients)),
      t_order_(t_order),
      t_poly_degree_(t_poly_degree),
      spatial_order_(spatial_order) {}

const Jet& FlowJet::coefficient(std::size_t j, int k) const {
    const auto& row = coefficients_.at(j);
    if (k < 0 || static_cast<std::size_t>(k) >= row.size())
        throw Error(ErrorCode::BadInput, "flow coefficient index out of range");
    return row[static_cast<std::size_t>(k)];
}

Jet FlowJet::coordinate_series(std::size_t j) const {
    const auto& row = coefficients_.at(j);
    const Jet& head = row.front();
    std::vector<Scalar> base = head.basepoint();
    base.push_back(Scalar::zero_like(base.front()));

    const bool is_exact = exact();
    int order = 0;
    if (!is_exact) {
        // a t^k term certifies spatial content to the jet's own order, so the
        // weakest certified total degree governs
        order = t_order_;
        for (std::size_t k = 0; k < row.size(); ++k)
            if (!row[k].exact())
                order = std::min(order, row[k].order() + static_cast<int>(k));
    }
    Jet out(base, order, is_exact);
    for (std::size_t k = 0; k < row.size(); ++k) {
        for (const auto& [e, c] : row[k].terms()) {
            Jet::Exponent ext(e);
            ext.push_back(static_cast<std::uint32_t>(k));
            if (!is_exact && total_degree(ext) > order) continue;
            out.set_coefficient(ext, c);
        }
    }
    return out;
}

FlowJet flow_jet(const VectorField& X, int K_t) {
    if (K_t < 1) throw Error(ErrorCode::BadInput, "flow expansion needs t-order >= 1");
    const std::size_t n = X.nvars();
    const auto& base = X.basepoint();

    std::vector<std::vector<Jet>> coeffs(n);
    std::vector<Jet> iterate;
    iterate.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Jet xj = Jet::coordinate(base, j);
        coeffs[j].push_back(xj);
        iterate.push_back(std::move(xj));
    }

    const bool exact_input = X.exact();
    std::optional<int> poly_degree;
    Rational kfact(1);
    int last_nonzero = 0;
    for (int k = 1; k <= K_t; ++k) {
        kfact *= Rational(k);
        bool all_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            iterate[j] = X.apply(iterate[j]);
            if (!iterate[j].is_zero()) all_zero = false;
            Jet c = iterate[j] * Scalar::from_rational_like(base.front(), Rational(1) / kfact);
            coeffs[j].push_back(std::move(c));
        }
        if (!all_zero) last_nonzero = k;
        if (all_zero && exact_input) {
            poly_degree = last_nonzero;
            break;
        }
    }
    // pad rows with exact zeros when the iteration stopped early
    for (auto& row : coeffs)
        while (row.size() <= static_cast<std::size_t>(K_t))
            row.emplace_back(base, 0, exact_input);

    std::optional<int> spatial;
    for (const auto& row : coeffs)
        for (const Jet& c : row)
            if (!c.exact()) spatial = spatial ? std::min(*spatial, c.order()) : c.order();
    return FlowJet(std::move(coeffs), K_t, poly_degree, spatial);
}

TPolyResult t_poly_degree(const VectorField& X, int bound) {
    if (!X.exact())
        throw Error(ErrorCode::NonExactInput, "t-polynomiality needs exact polynomial components");
    if (X.nvars() == 1 && X.component(0).degree() >= 2)
        return {TPolyKind::Never1D, -1};

    const std::size_t n = X.nvars();
    std::vector<Jet> iterate;
    iterate.reserve(n);
    for (std::size_t j = 0; j < n; ++j) iterate.push_back(Jet::coordinate(X.basepoint(), j));

    int last_nonzero = 0;
    for (int k = 1; k <= bound + 1; ++k) {
        bool all_zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            iterate[j] = X.apply(iterate[j]);
            if (!iterate[j].is_zero()) all_zero = false;
        }
        if (all_zero) return {TPolyKind::Degree, last_nonzero};
        last_nonzero = k;
    }
    return {TPolyKind::NotWithinBound, -1};
}

} // namespace chambar
