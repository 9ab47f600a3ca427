#include <chambar/geometry.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <utility>

namespace chambar {

namespace {

std::vector<Jet> acceleration(const VectorField& X) {
    std::vector<Jet> w;
    w.reserve(X.nvars());
    for (const Jet& a : X.components()) w.push_back(X.apply(a));
    return w;
}

Jet minor2(const std::vector<Jet>& a, const std::vector<Jet>& b, std::size_t i, std::size_t j) {
    return a[i] * b[j] - a[j] * b[i];
}

bool jets_exact(const std::vector<Jet>& v) {
    return std::all_of(v.begin(), v.end(), [](const Jet& j) { return j.exact(); });
}

/// Positive rational c such that dividing every coefficient by c leaves the
/// tuple primitive (integer coefficients with overall gcd 1), when all
/// coefficients are exact.
Rational tuple_content(const std::vector<Jet>& jets) {
    Integer num_gcd(0);
    Integer den_lcm(1);
    bool any = false;
    for (const Jet& jet : jets) {
        for (const auto& [e, c] : jet.terms()) {
            if (!c.exact()) return Rational(1);
            for (const GaussRational& g : c.coefficients()) {
                for (const Rational* q : {&g.re, &g.im}) {
                    if (*q == 0) continue;
                    any = true;
                    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q->get_num().get_mpz_t());
                    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den().get_mpz_t());
                }
            }
        }
    }
    if (!any) return Rational(1);
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (content < 0) content = -content;
    return content;
}

} // namespace

Straightness straightness_test(const VectorField& X, double tol) {
    const std::vector<Jet> w = acceleration(X);
    if (std::all_of(w.begin(), w.end(), [&](const Jet& j) { return effectively_zero(j, tol); }))
        return {StraightKind::StraightFlow, 0, 0, std::nullopt};
    const auto& a = X.components();
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Jet m = minor2(a, w, i, j);
            if (!effectively_zero(m, tol))
                return {StraightKind::NotStraight, i, j, std::move(m)};
        }
    return {StraightKind::StraightFoliation, 0, 0, std::nullopt};
}

PfaffianData pfaffian_integrability(const Chambar& c, double tol) {
    if (c.nvars() != 3)
        throw Error(ErrorCode::AmbientMismatch, "pfaffian analysis needs three variables");

    std::vector<Jet> omega;
    bool found = false;
    for (std::size_t a = 0; a + 1 < c.arity() && !found; ++a) {
        for (std::size_t b = a + 1; b < c.arity() && !found; ++b) {
            const auto& A = c.fields[a].components();
            const auto& B = c.fields[b].components();
            std::vector<Jet> cross{A[1] * B[2] - A[2] * B[1], A[2] * B[0] - A[0] * B[2],
                                   A[0] * B[1] - A[1] * B[0]};
            // rank decision is taken at the basepoint
            const bool nonzero_at_base = std::any_of(cross.begin(), cross.end(), [&](const Jet& j) {
                const Scalar v = j.constant_term();
                return v.exact() ? !v.is_zero() : v.magnitude() > tol;
            });
            if (nonzero_at_base) {
                omega = std::move(cross);
                found = true;
            }
        }
    }
    if (!found)
        throw Error(ErrorCode::RankDeficient, "fields span at most a line at the basepoint");

    for (const VectorField& Z : c.fields) {
        Jet pairing = omega[0] * Z.component(0) + omega[1] * Z.component(1) +
                      omega[2] * Z.component(2);
        if (!effectively_zero(pairing, tol))
            throw Error(ErrorCode::RankDeficient, "fields span the full space, not a 2-plane");
    }

    if (jets_exact(omega)) {
        const Rational content = tuple_content(omega);
        if (content != 0 && content != 1) {
            const Scalar inv = Scalar::from_rational_like(c.basepoint().front(), Rational(1) / content);
            for (Jet& w : omega) w *= inv;
        }
    }

    const Jet curl0 = omega[2].derivative(1) - omega[1].derivative(2);
    const Jet curl1 = omega[0].derivative(2) - omega[2].derivative(0);
    const Jet curl2 = omega[1].derivative(0) - omega[0].derivative(1);
    Jet volume = omega[0] * curl0 + omega[1] * curl1 + omega[2] * curl2;
    return {std::move(omega), std::move(volume)};
}

SemiRigid semi_rigid_analyze(const VectorField& x1, const VectorField& x2, const VectorField& x3,
                             double tol) {
    if (x1.nvars() != x2.nvars() || x1.nvars() != x3.nvars())
        throw Error(ErrorCode::AmbientMismatch, "fields live in different ambient spaces");
    const std::size_t n = x1.nvars();

    const auto& a = x1.components();
    const auto& b = x2.components();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!effectively_zero(minor2(a, b, i, j), tol))
                throw Error(ErrorCode::NotColinear, "first two fields are not colinear");

    for (std::size_t k = 0; k < n; ++k) {
        const Jet sum = a[k] + b[k] + x3.component(k);
        if (!effectively_zero(sum, tol))
            throw Error(ErrorCode::SumNotZero, "the three fields do not sum to zero");
    }

    // resolve the ratio f with X2 = f X1 at a component where X1 is a unit
    std::optional<Jet> ratio;
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar v = a[k].constant_term();
        const bool unit = v.exact() ? !v.is_zero() : v.magnitude() > tol;
        if (!unit) continue;
        int target = -1;
        if (a[k].exact() && a[k].degree() > 0)
            target = std::max(8, a[k].degree() + b[k].degree() + 6);
        ratio = b[k] * a[k].reciprocal(target);
        break;
    }
    if (!ratio)
        throw Error(ErrorCode::BadInput, "colinearity ratio is not resolvable at the basepoint");

    const Scalar f0 = ratio->constant_term();
    Jet nonconstant = *ratio;
    nonconstant -= f0;
    if (effectively_zero(nonconstant, tol)) {
        const Scalar unity = Scalar::one_like(f0) + f0 + f0 * f0;
        const bool rigid = unity.exact() ? unity.is_zero() : unity.magnitude() <= tol;
        if (rigid) return {SemiRigidKind::Rigid, f0, std::nullopt};
    }

    const Straightness s = straightness_test(x1, tol);
    if (s.kind != StraightKind::NotStraight)
        return {SemiRigidKind::StraightLines, std::nullopt, std::nullopt};

    Jet one_f_f2 = *ratio * *ratio + *ratio + Scalar::one_like(f0);
    Jet residual = one_f_f2 * *s.witness;
    return {SemiRigidKind::Neither, std::nullopt, std::move(residual)};
}

std::vector<Jet> colinearity_locus(const VectorField& X, const VectorField& Y) {
    if (X.nvars() != Y.nvars())
        throw Error(ErrorCode::AmbientMismatch, "fields live in different ambient spaces");
    if (!X.exact() || !Y.exact())
        throw Error(ErrorCode::NonExactInput, "colinearity locus needs exact polynomial fields");
    const auto& a = X.components();
    const auto& b = Y.components();
    std::vector<Jet> minors;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) minors.push_back(minor2(a, b, i, j));
    return minors;
}

} // namespace chambar
