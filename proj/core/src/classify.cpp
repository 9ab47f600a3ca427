#include <chambar/classify.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <cstddef>

namespace chambar {

namespace {

bool is_affine(const Jet& j, double eps) {
    for (const auto& [e, c] : j.terms()) {
        if (total_degree(e) < 2) continue;
        const bool zero = c.exact() ? c.is_zero() : c.magnitude() <= eps;
        if (!zero) return false;
    }
    return true;
}

} // namespace

Classify1D classify_1d(const Chambar& c, double tol) {
    if (c.nvars() != 1)
        throw Error(ErrorCode::AmbientMismatch, "classification is defined for one variable");
    const std::size_t p = c.arity();
    if (p != 3 && p != 4)
        throw Error(ErrorCode::WrongArity, "classification covers arity 3 and 4 only");

    std::vector<Jet> a;
    a.reserve(p);
    for (const VectorField& f : c.fields) a.push_back(f.component(0));

    double scale = 0.0;
    for (const Jet& j : a) scale = std::max(scale, max_modulus(j));
    const double eps = tol * std::max(scale, 1.0);
    const auto zero_jet = [&](const Jet& j) { return effectively_zero(j, eps); };
    const auto zero_scalar = [&](const Scalar& s) {
        return s.exact() ? s.is_zero() : s.magnitude() <= eps;
    };
    const auto nonconstant_part = [](const Jet& j) {
        Jet r = j;
        r -= j.constant_term();
        return r;
    };

    if (std::all_of(a.begin(), a.end(),
                    [&](const Jet& j) { return zero_jet(nonconstant_part(j)); })) {
        Classify1D out{Classify1DKind::Constant, {}, std::nullopt, std::nullopt, {}, {}};
        for (const Jet& j : a) out.values.push_back(j.constant_term());
        return out;
    }

    if (p == 3) {
        const Scalar v0 = a[0].constant_term();
        if (!zero_scalar(v0)) {
            std::vector<Scalar> m;
            m.reserve(3);
            bool proportional = true;
            for (const Jet& j : a) {
                const Scalar mk = j.constant_term() / v0;
                Jet diff = a[0] * mk;
                diff -= j;
                if (!zero_jet(diff)) {
                    proportional = false;
                    break;
                }
                m.push_back(mk);
            }
            if (proportional) {
                const Jet square = a[0] * a[0];
                const Scalar slope = square.coefficient({1});
                if (is_affine(square, eps) && !zero_scalar(slope)) {
                    double mscale = 0.0;
                    for (const Scalar& mk : m) mscale = std::max(mscale, mk.magnitude());
                    const double meps = tol * std::max(mscale, 1.0);
                    Scalar sum1 = m[0] + m[1] + m[2];
                    Scalar sum2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
                    const auto vanishes = [&](const Scalar& s) {
                        return s.exact() ? s.is_zero() : s.magnitude() <= meps;
                    };
                    if (vanishes(sum1) && vanishes(sum2)) {
                        const Scalar mu = square.constant_term() - slope * c.basepoint()[0];
                        return {Classify1DKind::RigidSqrt, {}, slope, mu, std::move(m), {}};
                    }
                }
            }
        }
    } else {
        constexpr std::array<std::array<std::size_t, 4>, 3> pairings{
            {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& pr : pairings) {
            if (!zero_jet(a[pr[0]] + a[pr[1]])) continue;
            if (!zero_jet(a[pr[2]] + a[pr[3]])) continue;
            if (!is_affine(a[pr[0]] * a[pr[0]], eps)) continue;
            if (!is_affine(a[pr[2]] * a[pr[2]], eps)) continue;
            return {Classify1DKind::Special, {}, std::nullopt, std::nullopt, {}, pr};
        }
    }

    return {Classify1DKind::Unrecognized, {}, std::nullopt, std::nullopt, {}, {}};
}

} // namespace chambar
