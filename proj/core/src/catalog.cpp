#include <chambar/catalog.hpp>
#include <chambar/flow.hpp>
#include <chambar/matrix.hpp>
#include <chambar/series.hpp>

#include <cstdint>
#include <string>

namespace chambar {
namespace {

std::string monomial_string(const Jet::Exponent& e) {
    std::string s = "u^(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

Scalar sum_of(const std::vector<Scalar>& xs) {
    Scalar s = xs.front();
    for (std::size_t i = 1; i < xs.size(); ++i) s = s + xs[i];
    return s;
}

} // namespace

GeneratedExample gen_constant(const std::vector<std::vector<Scalar>>& speeds) {
    const std::size_t p = speeds.size();
    if (p < 2) throw Error(ErrorCode::WrongArity, "a constant tuple needs at least two fields");
    const std::size_t n = speeds.front().size();
    if (n == 0) throw Error(ErrorCode::BadInput, "empty speed vector");
    for (const auto& v : speeds)
        if (v.size() != n)
            throw Error(ErrorCode::AmbientMismatch, "speed vectors of different lengths");

    for (std::size_t i = 0; i < n; ++i) {
        Scalar s = speeds[0][i];
        for (std::size_t k = 1; k < p; ++k) s = s + speeds[k][i];
        if (!s.is_zero()) throw Error(ErrorCode::SumNotZero, "speeds do not sum to zero");
    }

    const std::vector<Scalar> origin(n, Scalar::zero_like(speeds[0][0]));
    std::vector<VectorField> fields;
    fields.reserve(p);
    for (const auto& v : speeds) fields.push_back(VectorField::constant(origin, v));

    std::optional<bool> reducible;
    if (p <= 12) {
        bool found = false;
        const std::uint32_t full = (1u << p) - 1u;
        for (std::uint32_t mask = 1; mask < full && !found; ++mask) {
            bool zero_sum = true;
            for (std::size_t i = 0; i < n && zero_sum; ++i) {
                Scalar s = Scalar::zero_like(speeds[0][0]);
                for (std::size_t k = 0; k < p; ++k)
                    if (mask & (1u << k)) s = s + speeds[k][i];
                zero_sum = s.is_zero();
            }
            found = zero_sum;
        }
        reducible = found;
    }

    return {Chambar(std::move(fields)), "exact_certificate", reducible};
}

GeneratedExample gen_rigid_root_of_unity(const VectorField& X, unsigned long m) {
    if (m < 2) throw Error(ErrorCode::WrongArity, "the root order must be at least two");
    if (X.exact()) {
        const TPolyResult r = t_poly_degree(X, static_cast<int>(m) + 2);
        if (r.kind != TPolyKind::Degree || r.degree != static_cast<int>(m) - 1)
            throw Error(ErrorCode::DegreeMismatch,
                        "the flow degree does not match the root order");
    }
    std::vector<VectorField> fields;
    fields.reserve(m);
    fields.push_back(X);
    for (unsigned long k = 1; k < m; ++k)
        fields.push_back(Scalar::root_of_unity_power(m, static_cast<long>(k)) * X);
    return {Chambar(std::move(fields)),
            X.exact() ? "exact_certificate" : "verified_to_order", std::nullopt};
}

GeneratedExample gen_conjugated_translations(const std::vector<Jet>& P,
                                             const std::vector<std::vector<Scalar>>& speeds,
                                             int K) {
    const std::size_t n = P.size();
    if (n == 0) throw Error(ErrorCode::BadInput, "empty polynomial map");
    if (K < 1) throw Error(ErrorCode::BadInput, "reversion order must be positive");
    for (const Jet& c : P) {
        if (!c.exact())
            throw Error(ErrorCode::NonExactInput, "map components must be exact polynomials");
        if (c.nvars() != n) throw Error(ErrorCode::AmbientMismatch, "the map is not square");
    }
    for (const Scalar& b : P.front().basepoint())
        if (!b.is_zero())
            throw Error(ErrorCode::BadInput, "the map must be expanded about the origin");
    for (const Jet& c : P) {
        if (!(c.basepoint() == P.front().basepoint()))
            throw Error(ErrorCode::BasepointMismatch, "map components about different basepoints");
        if (!c.constant_term().is_zero())
            throw Error(ErrorCode::BadInput, "the map must fix the origin");
    }
    const std::size_t p = speeds.size();
    if (p < 2) throw Error(ErrorCode::WrongArity, "need at least two translation speeds");
    for (const auto& v : speeds)
        if (v.size() != n)
            throw Error(ErrorCode::AmbientMismatch, "speed vectors do not match the map arity");

    const Scalar zero = Scalar::zero_like(P.front().basepoint().front());

    // The tuple conjugates translations, so it is barycentric exactly when
    // sum_k P(y + t a_k) = p P(y) identically; check that as a polynomial
    // identity in (y, t).
    {
        const std::vector<Scalar> zt(n + 1, zero);
        const Scalar arity = Scalar::from_int_like(zero, static_cast<long>(p));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Jet> plain;
            for (std::size_t j = 0; j < n; ++j) plain.push_back(Jet::coordinate(zt, j));
            Jet defect = P[i].compose(plain) * (-arity);
            for (std::size_t k = 0; k < p; ++k) {
                std::vector<Jet> inner;
                for (std::size_t j = 0; j < n; ++j)
                    inner.push_back(Jet::coordinate(zt, j) +
                                    Jet::coordinate(zt, n) * speeds[k][j]);
                defect += P[i].compose(inner);
            }
            if (!defect.is_zero()) {
                const auto& [e, c] = *defect.terms().begin();
                throw Error(ErrorCode::ConstraintViolated,
                            "translation speeds break the barycentric identity in component " +
                                std::to_string(i + 1) + ": coefficient of " + monomial_string(e) +
                                " is " + c.to_string());
            }
        }
    }

    // Linear part at the origin and its inverse.
    std::vector<Scalar> aflat;
    aflat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Jet::Exponent unit(n, 0);
            unit[j] = 1;
            aflat.push_back(P[i].coefficient(unit));
        }
    const ScalarMatrix A(n, n, std::move(aflat));
    if (rank(A) != n)
        throw Error(ErrorCode::NotLocallyInvertible,
                    "the linear part of the map at the origin is singular");
    const ScalarMatrix Ainv = inverse(A);

    const std::vector<Scalar> zn(n, zero);

    std::vector<Jet> nonlinear;
    nonlinear.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Jet Ni = P[i];
        for (std::size_t j = 0; j < n; ++j) Ni -= Jet::coordinate(zn, j) * A(i, j);
        nonlinear.push_back(std::move(Ni));
    }

    // Fixed-point reversion psi <- Ainv (x - N(psi)), truncated at K; each
    // round certifies one more order.
    std::vector<Jet> psi;
    psi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Jet s = Jet::coordinate(zn, 0) * Ainv(i, 0);
        for (std::size_t j = 1; j < n; ++j) s += Jet::coordinate(zn, j) * Ainv(i, j);
        psi.push_back(s.truncated(K));
    }
    for (int it = 0; it < K; ++it) {
        std::vector<Jet> rhs;
        rhs.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            rhs.push_back(Jet::coordinate(zn, j) - nonlinear[j].compose(psi));
        std::vector<Jet> next;
        next.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Jet s = rhs[0] * Ainv(i, 0);
            for (std::size_t j = 1; j < n; ++j) s += rhs[j] * Ainv(i, j);
            next.push_back(s.truncated(K));
        }
        psi = std::move(next);
    }

    // Promote to exact and test whether the reverted series is a genuine
    // polynomial inverse; if so the whole construction stays exact.
    std::vector<Jet> psi_exact;
    psi_exact.reserve(n);
    for (const Jet& s : psi) {
        Jet e(zn, 0, true);
        for (const auto& [expo, c] : s.terms()) e.set_coefficient(expo, c);
        psi_exact.push_back(std::move(e));
    }
    bool exact_inverse = true;
    for (std::size_t i = 0; i < n && exact_inverse; ++i) {
        const Jet diff = P[i].compose(psi_exact) - Jet::coordinate(zn, i);
        exact_inverse = diff.exact() && diff.is_zero();
    }

    std::vector<Jet> arg;
    if (exact_inverse) {
        arg = psi_exact;
    } else {
        arg.reserve(n);
        for (const Jet& s : psi) {
            Jet e(zn, K, false);
            for (const auto& [expo, c] : s.terms()) e.set_coefficient(expo, c);
            arg.push_back(std::move(e));
        }
    }

    std::vector<std::vector<Jet>> dp(n);
    for (std::size_t i = 0; i < n; ++i) {
        dp[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) dp[i].push_back(P[i].derivative(j).compose(arg));
    }

    std::vector<VectorField> fields;
    fields.reserve(p);
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<Jet> comps;
        comps.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Jet s = dp[i][0] * speeds[k][0];
            for (std::size_t j = 1; j < n; ++j) s += dp[i][j] * speeds[k][j];
            comps.push_back(std::move(s));
        }
        fields.emplace_back(std::move(comps));
    }

    return {Chambar(std::move(fields)),
            exact_inverse ? "exact_certificate" : "verified_to_order", std::nullopt};
}

SolutionSpace solve_polynomial_family(const std::array<Scalar, 3>& speeds) {
    if (!(speeds[0] + speeds[1] + speeds[2]).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "speeds do not sum to zero");
    const Scalar zero = Scalar::zero_like(speeds[0]);
    const Scalar one = Scalar::one_like(zero);

    // Unknowns: coefficients of the three quadratics, grouped per polynomial
    // (constant, linear, quadratic). The identity sum_k P_k(x + a_k t) = 0
    // splits into one equation on the constants, two on the linears and a
    // Vandermonde-type block on the quadratics.
    auto at = [&](std::size_t poly, std::size_t deg) { return 3 * poly + deg; };
    std::vector<Scalar> rows(6 * 9, zero);
    auto put = [&](std::size_t r, std::size_t c, const Scalar& v) { rows[r * 9 + c] = v; };
    for (std::size_t q = 0; q < 3; ++q) {
        put(0, at(q, 0), one);
        put(1, at(q, 1), one);
        put(2, at(q, 1), speeds[q]);
        put(3, at(q, 2), one);
        put(4, at(q, 2), speeds[q]);
        put(5, at(q, 2), speeds[q] * speeds[q]);
    }
    const ScalarMatrix system(6, 9, std::move(rows));

    std::vector<Scalar> vrows;
    vrows.reserve(9);
    for (std::size_t q = 0; q < 3; ++q) vrows.push_back(one);
    for (std::size_t q = 0; q < 3; ++q) vrows.push_back(speeds[q]);
    for (std::size_t q = 0; q < 3; ++q) vrows.push_back(speeds[q] * speeds[q]);
    const std::size_t vrank = rank(ScalarMatrix(3, 3, std::move(vrows)));

    SolutionSpace out;
    out.ambient_dimension = 12;
    out.coefficient_dimension = 9;
    out.vandermonde_rank = vrank;
    out.basis = null_space(system);
    out.kernel_dimension = out.basis.size();
    const bool speeds_zero =
        speeds[0].is_zero() && speeds[1].is_zero() && speeds[2].is_zero();
    out.component_dimension = out.kernel_dimension + (speeds_zero ? 0 : 2);
    out.particular.assign(9, zero);
    return out;
}

GeneratedExample gen_blowup_birational(const std::vector<std::vector<Scalar>>& speeds,
                                       int spatial_order) {
    const std::size_t p = speeds.size();
    if (p < 2) throw Error(ErrorCode::WrongArity, "need at least two translation speeds");
    const std::size_t n = speeds.front().size();
    if (n == 0) throw Error(ErrorCode::BadInput, "empty speed vector");
    for (const auto& v : speeds)
        if (v.size() != n)
            throw Error(ErrorCode::AmbientMismatch, "speed vectors of different lengths");
    if (spatial_order < 1) throw Error(ErrorCode::BadInput, "spatial order must be positive");

    for (std::size_t l = 0; l < n; ++l) {
        Scalar s = speeds[0][l];
        for (std::size_t k = 1; k < p; ++k) s = s + speeds[k][l];
        if (!s.is_zero())
            throw Error(ErrorCode::ConstraintViolated,
                        "column " + std::to_string(l + 1) + " of the speeds does not sum to zero");
    }
    for (std::size_t l = 1; l < n; ++l) {
        Scalar s = speeds[0][0] * speeds[0][l];
        for (std::size_t k = 1; k < p; ++k) s = s + speeds[k][0] * speeds[k][l];
        if (!s.is_zero())
            throw Error(ErrorCode::ConstraintViolated,
                        "first-column-weighted sum over column " + std::to_string(l + 1) +
                            " is nonzero");
    }

    const Scalar zero = Scalar::zero_like(speeds[0][0]);
    const Scalar one = Scalar::one_like(zero);
    const std::vector<Scalar> bp(n, one);

    // 1/x1 about x1 = 1, lifted to the full ambient.
    const Jet recip =
        expand_algebraic(AlgebraicExpr::reciprocal_affine(one, zero), one, spatial_order)
            .compose({Jet::coordinate(bp, 0)});

    std::vector<VectorField> fields;
    fields.reserve(p);
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<Jet> comps;
        comps.reserve(n);
        comps.push_back(Jet::constant(bp, speeds[k][0], 0, true));
        for (std::size_t i = 1; i < n; ++i) {
            Jet c = Jet::coordinate(bp, 0) * speeds[k][i];
            if (!speeds[k][0].is_zero()) c += (Jet::coordinate(bp, i) * recip) * speeds[k][0];
            comps.push_back(std::move(c));
        }
        fields.emplace_back(std::move(comps));
    }

    bool all_exact = true;
    for (const VectorField& f : fields) all_exact = all_exact && f.exact();
    Chambar c(std::move(fields));
    return {std::move(c), all_exact ? "exact_certificate" : "verified_to_order", std::nullopt};
}

GeneratedExample gen_exponential(const std::vector<Scalar>& a,
                                 const std::vector<std::vector<Scalar>>& b,
                                 const std::vector<Scalar>& lambda, int spatial_order) {
    const std::size_t groups = a.size();
    if (groups == 0 || b.size() != groups || lambda.size() != groups)
        throw Error(ErrorCode::BadInput, "speed, rate and coefficient lists must align");
    if (spatial_order < 1) throw Error(ErrorCode::BadInput, "spatial order must be positive");
    for (std::size_t k = 0; k < groups; ++k) {
        if (a[k].is_zero()) throw Error(ErrorCode::BadInput, "zero translation speed");
        if (lambda[k].is_zero()) throw Error(ErrorCode::BadInput, "zero exponential rate");
        if (b[k].empty()) throw Error(ErrorCode::BadInput, "empty coefficient group");
        for (const Scalar& c : b[k])
            if (c.is_zero()) throw Error(ErrorCode::BadInput, "zero exponential coefficient");
    }

    const Scalar zero = Scalar::zero_like(a.front());
    {
        Scalar s = zero;
        for (std::size_t k = 0; k < groups; ++k)
            s = s + Scalar::from_int_like(zero, static_cast<long>(b[k].size())) * a[k];
        if (!s.is_zero())
            throw Error(ErrorCode::ConstraintViolated,
                        "the group-size-weighted speed sum is nonzero");
    }
    for (std::size_t k = 0; k < groups; ++k)
        if (!sum_of(b[k]).is_zero())
            throw Error(ErrorCode::ConstraintViolated,
                        "coefficient group " + std::to_string(k + 1) + " does not sum to zero");

    const std::vector<Scalar> bp(2, zero);
    std::vector<VectorField> fields;
    for (std::size_t k = 0; k < groups; ++k) {
        const Jet ek = expand_algebraic(AlgebraicExpr::exp_affine(lambda[k]), zero, spatial_order)
                           .compose({Jet::coordinate(bp, 0)});
        for (const Scalar& c : b[k]) {
            std::vector<Jet> comps;
            comps.push_back(Jet::constant(bp, a[k], 0, true));
            comps.push_back(ek * c);
            fields.emplace_back(std::move(comps));
        }
    }

    return {Chambar(std::move(fields)), "verified_to_order", std::nullopt};
}

GeneratedExample gen_linear_heisenberg(const std::vector<Scalar>& alpha,
                                       const std::vector<Scalar>& beta,
                                       const std::vector<Scalar>& gamma) {
    const std::size_t p = alpha.size();
    if (p < 2) throw Error(ErrorCode::WrongArity, "need at least two fields");
    if (beta.size() != p || gamma.size() != p)
        throw Error(ErrorCode::BadInput, "parameter lists of different lengths");
    for (std::size_t k = 0; k < p; ++k)
        if (alpha[k].is_zero() && beta[k].is_zero() && gamma[k].is_zero())
            throw Error(ErrorCode::BadInput, "field " + std::to_string(k + 1) + " is zero");

    if (!sum_of(alpha).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "sum of the alpha parameters is nonzero");
    if (!sum_of(beta).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "sum of the beta parameters is nonzero");
    if (!sum_of(gamma).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "sum of the gamma parameters is nonzero");
    {
        Scalar s = alpha[0] * beta[0];
        for (std::size_t k = 1; k < p; ++k) s = s + alpha[k] * beta[k];
        if (!s.is_zero())
            throw Error(ErrorCode::ConstraintViolated, "sum of the alpha*beta products is nonzero");
    }

    const Scalar zero = Scalar::zero_like(alpha.front());
    const std::vector<Scalar> bp(3, zero);
    std::vector<VectorField> fields;
    fields.reserve(p);
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<Jet> comps;
        comps.push_back(Jet::coordinate(bp, 1) * alpha[k] + Jet::coordinate(bp, 2) * gamma[k]);
        comps.push_back(Jet::coordinate(bp, 2) * beta[k]);
        comps.push_back(Jet(bp, 0, true));
        fields.emplace_back(std::move(comps));
    }

    return {Chambar(std::move(fields)), "exact_certificate", std::nullopt};
}

GeneratedExample gen_homogeneous_deg2(const std::array<Scalar, 3>& a) {
    for (const Scalar& s : a)
        if (s.is_zero()) throw Error(ErrorCode::BadInput, "a zero speed gives the zero field");
    if (!(a[0] + a[1] + a[2]).is_zero())
        throw Error(ErrorCode::SumNotZero, "speeds do not sum to zero");

    const Scalar zero = Scalar::zero_like(a[0]);
    const std::vector<Scalar> bp(2, zero);
    const Jet y2 = Jet::coordinate(bp, 1).pow(2);
    std::vector<VectorField> fields;
    fields.reserve(3);
    for (const Scalar& s : a) {
        std::vector<Jet> comps;
        comps.push_back(y2 * s);
        comps.push_back(Jet(bp, 0, true));
        fields.emplace_back(std::move(comps));
    }

    return {Chambar(std::move(fields)), "exact_certificate", std::nullopt};
}

} // namespace chambar
