#include <chambar/barycentric.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <utility>

namespace chambar {

namespace {

std::vector<Scalar> unit_weights(const std::vector<VectorField>& fields) {
    if (fields.empty()) throw Error(ErrorCode::WrongArity, "a chambar needs at least two fields");
    const Scalar proto = fields.front().basepoint().front();
    return std::vector<Scalar>(fields.size(), Scalar::one_like(proto));
}

bool scalar_mode_exact(const Chambar& c) {
    for (const VectorField& X : c.fields)
        for (const Jet& comp : X.components())
            for (const auto& [e, coeff] : comp.terms())
                if (!coeff.exact()) return false;
    for (const Scalar& w : c.weights)
        if (!w.exact()) return false;
    for (const Scalar& b : c.basepoint())
        if (!b.exact()) return false;
    return true;
}

} // namespace

Chambar::Chambar(std::vector<VectorField> fields_, std::vector<Scalar> weights_)
    : fields(std::move(fields_)), weights(std::move(weights_)) {
    if (fields.size() < 2) throw Error(ErrorCode::WrongArity, "a chambar needs at least two fields");
    if (weights.empty()) weights = unit_weights(fields);
    if (weights.size() != fields.size())
        throw Error(ErrorCode::WrongArity, "need exactly one weight per field");
    const VectorField& first = fields.front();
    for (const VectorField& X : fields) {
        if (X.nvars() != first.nvars())
            throw Error(ErrorCode::AmbientMismatch, "fields live in different ambient spaces");
        for (std::size_t k = 0; k < X.nvars(); ++k)
            if (!(X.basepoint()[k] == first.basepoint()[k]))
                throw Error(ErrorCode::BasepointMismatch, "fields have different basepoints");
    }
    for (const Scalar& w : weights)
        if (w.is_zero()) throw Error(ErrorCode::BadInput, "weights must be nonzero");
}

Chambar::Chambar(std::vector<VectorField> fields_)
    : Chambar(std::move(fields_), std::vector<Scalar>{}) {}

Verdict check_barycentric(const Chambar& c, int K_t, double tol) {
    if (K_t < 1) throw Error(ErrorCode::BadInput, "barycentric check needs t-order >= 1");
    const std::size_t p = c.arity();
    const std::size_t n = c.nvars();
    const auto& base = c.basepoint();

    const bool exact_eligible = scalar_mode_exact(c) && std::all_of(
        c.fields.begin(), c.fields.end(), [](const VectorField& X) { return X.exact(); });

    // iterates[k][j] = X_k^ell(x_j) at the current ell
    std::vector<std::vector<Jet>> iterates(p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < n; ++j)
            iterates[k].push_back(Jet::coordinate(base, j));

    int last_nonzero_ell = 0;
    std::optional<int> spatial;
    for (int ell = 1; ell <= K_t; ++ell) {
        bool all_fields_dead = true;
        for (std::size_t k = 0; k < p; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                iterates[k][j] = c.fields[k].apply(iterates[k][j]);
                if (!iterates[k][j].is_zero()) all_fields_dead = false;
            }
        }
        if (!all_fields_dead) last_nonzero_ell = ell;
        for (std::size_t j = 0; j < n; ++j) {
            Jet sum = iterates[0][j] * c.weights[0];
            for (std::size_t k = 1; k < p; ++k) sum += iterates[k][j] * c.weights[k];
            if (!sum.exact()) spatial = spatial ? std::min(*spatial, sum.order()) : sum.order();
            if (!effectively_zero(sum, tol)) {
                for (const auto& [e, coeff] : sum.terms()) {
                    const bool nonzero = coeff.exact() ? !coeff.is_zero() : coeff.magnitude() > tol;
                    if (nonzero) return Refuted{ell, j, e, coeff};
                }
            }
        }
        if (all_fields_dead && exact_eligible) return ExactCertificate{last_nonzero_ell};
    }
    return VerifiedToOrder{K_t, spatial};
}

const char* verdict_kind_name(const Verdict& v) {
    if (std::holds_alternative<ExactCertificate>(v)) return "exact_certificate";
    if (std::holds_alternative<VerifiedToOrder>(v)) return "verified_to_order";
    return "refuted";
}

} // namespace chambar
