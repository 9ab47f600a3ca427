#include <chambar/diffeo.hpp>

#include <chambar/error.hpp>
#include <chambar/matrix.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace chambar {

namespace {

std::vector<Jet::Exponent> monomials_up_to(std::size_t nvars, int max_degree) {
    std::vector<Jet::Exponent> out;
    Jet::Exponent e(nvars, 0);
    for (;;) {
        if (total_degree(e) <= max_degree) out.push_back(e);
        std::size_t j = 0;
        while (j < nvars && e[j] == static_cast<std::uint32_t>(max_degree)) {
            e[j] = 0;
            ++j;
        }
        if (j == nvars) break;
        ++e[j];
    }
    std::sort(out.begin(), out.end(), [](const Jet::Exponent& a, const Jet::Exponent& b) {
        const int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

Jet monomial_jet(const std::vector<Scalar>& origin, const Jet::Exponent& e, const Scalar& one) {
    Jet m(origin, total_degree(e), true);
    m.set_coefficient(e, one);
    return m;
}

} // namespace

DiffOperator compatibility_second_order() {
    const Scalar one = Scalar::from_int(1);
    DiffOperator op(2);
    op.add_term({2, 0}, one);
    op.add_term({1, 1}, one);
    op.add_term({0, 2}, one);
    return op;
}

DiffOperator compatibility_third_order() {
    const Scalar one = Scalar::from_int(1);
    DiffOperator op(2);
    op.add_term({2, 1}, one);
    op.add_term({1, 2}, one);
    return op;
}

DiffOperator power_sum_operator(std::size_t nvars, unsigned k) {
    if (k < 2) throw Error(ErrorCode::BadInput, "power-sum operator needs derivative order >= 2");
    DiffOperator acc(nvars);
    for (std::size_t j = 0; j < nvars; ++j) acc += DiffOperator::partial(nvars, j, k);
    DiffOperator grad(nvars);
    for (std::size_t j = 0; j < nvars; ++j) grad += DiffOperator::partial(nvars, j, 1);
    const DiffOperator g = grad.pow(k);
    return k % 2 == 0 ? acc + g : acc - g;
}

std::vector<Jet> kernel_basis(const std::vector<DiffOperator>& ops, std::size_t nvars,
                              int max_degree) {
    if (ops.empty()) throw Error(ErrorCode::BadInput, "kernel basis needs at least one operator");
    if (nvars == 0) throw Error(ErrorCode::BadInput, "kernel basis needs at least one variable");
    if (max_degree < 0) throw Error(ErrorCode::BadInput, "negative degree bound");
    for (const auto& op : ops)
        if (op.nvars() != nvars)
            throw Error(ErrorCode::AmbientMismatch,
                        "operator variable count differs from the requested space");

    const Scalar one = Scalar::from_rational(1, 3);
    const std::vector<Scalar> origin(nvars, Scalar::zero_like(one));
    const auto cols = monomials_up_to(nvars, max_degree);

    std::vector<std::vector<Jet>> images(ops.size());
    std::set<Jet::Exponent> row_set;
    for (std::size_t o = 0; o < ops.size(); ++o) {
        images[o].reserve(cols.size());
        for (const auto& e : cols) {
            Jet img = ops[o].apply(monomial_jet(origin, e, one));
            if (!img.exact())
                throw Error(ErrorCode::NonExactInput, "kernel extraction needs exact operators");
            for (const auto& [re, c] : img.terms()) row_set.insert(re);
            images[o].push_back(std::move(img));
        }
    }

    std::vector<Jet> basis;
    if (row_set.empty()) {
        // every operator kills the whole bounded-degree space
        for (const auto& e : cols) basis.push_back(monomial_jet(origin, e, one));
        return basis;
    }

    const std::vector<Jet::Exponent> rows(row_set.begin(), row_set.end());
    std::vector<Scalar> flat;
    flat.reserve(ops.size() * rows.size() * cols.size());
    for (std::size_t o = 0; o < ops.size(); ++o)
        for (const auto& r : rows)
            for (std::size_t c = 0; c < cols.size(); ++c)
                flat.push_back(images[o][c].coefficient(r).embedded(3));
    const ScalarMatrix m(ops.size() * rows.size(), cols.size(), std::move(flat));

    for (const auto& v : null_space(m)) {
        Jet h(origin, 0, true);
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!v[c].is_zero()) h.set_coefficient(cols[c], v[c]);
        basis.push_back(std::move(h));
    }
    return basis;
}

std::string compatibility_kind_name(const CompatibilityVerdict& v) {
    return std::holds_alternative<Compatible>(v) ? "compatible" : "incompatible";
}

CompatibilityVerdict check_compatible(const std::vector<Jet>& F, int K_t, double tol) {
    if (F.size() != 2)
        throw Error(ErrorCode::AmbientMismatch,
                    "compatibility check needs a planar map with two components");
    for (const auto& f : F)
        if (f.nvars() != 2)
            throw Error(ErrorCode::AmbientMismatch,
                        "compatibility check needs two-variable components");
    if (!(F[0].basepoint() == F[1].basepoint()))
        throw Error(ErrorCode::BasepointMismatch, "map components sit at different basepoints");
    if (K_t < 0) throw Error(ErrorCode::BadInput, "negative t-order bound");

    const bool exact = F[0].exact() && F[1].exact();

    // Kernel-criterion route: both operators must annihilate each component,
    // which is the span-membership test for the non-affine part. The unit
    // coefficients are moved into the map's scalar mode first (a truncated
    // jet may still carry exact scalars, so probe the scalars themselves).
    bool approx_mode = false;
    for (const auto& f : F) {
        for (const auto& s : f.basepoint()) approx_mode = approx_mode || !s.exact();
        for (const auto& [e, c] : f.terms()) approx_mode = approx_mode || !c.exact();
    }
    auto in_mode = [approx_mode](DiffOperator op) {
        if (!approx_mode) return op;
        DiffOperator out(op.nvars());
        for (const auto& [e, c] : op.terms()) out.add_term(e, std::get<Scalar>(c).to_approx());
        return out;
    };
    const std::vector<std::pair<DiffOperator, const char*>> checks = {
        {in_mode(compatibility_second_order()), "second-order operator"},
        {in_mode(compatibility_third_order()), "third-order operator"},
    };
    std::optional<Incompatible> op_witness;
    for (std::size_t i = 0; i < 2 && !op_witness; ++i)
        for (const auto& [op, name] : checks) {
            Jet img = op.apply(F[i]);
            if (!effectively_zero(img, tol)) {
                op_witness = Incompatible{i, name, std::move(img)};
                break;
            }
        }

    // Direct route: the translation identity expanded as a jet in (x, y, t).
    const std::vector<Scalar>& b = F[0].basepoint();
    const Scalar zero = Scalar::zero_like(b[0]);
    const Scalar three = Scalar::from_int_like(zero, 3);
    const std::vector<Scalar> b3 = {b[0], b[1], zero};
    const Jet x = Jet::coordinate(b3, 0);
    const Jet y = Jet::coordinate(b3, 1);
    const Jet t = Jet::coordinate(b3, 2);
    std::optional<Incompatible> id_witness;
    for (std::size_t i = 0; i < 2 && !id_witness; ++i) {
        Jet defect = F[i].compose({x + t, y}) + F[i].compose({x, y + t}) +
                     F[i].compose({x - t, y - t}) - F[i].compose({x, y}) * three;
        if (!F[i].exact()) defect = defect.truncated(std::min(defect.order(), K_t));
        if (!effectively_zero(defect, tol))
            id_witness = Incompatible{i, "translation identity", std::move(defect)};
    }

    if (exact && op_witness.has_value() != id_witness.has_value())
        throw Error(ErrorCode::IdentityViolated,
                    "the operator and identity compatibility routes disagree");
    if (op_witness) return *op_witness;
    if (id_witness) return *id_witness;
    if (exact) return Compatible{std::nullopt};
    int verified = K_t;
    for (const auto& f : F)
        if (!f.exact()) verified = std::min(verified, f.order());
    return Compatible{verified};
}

MembershipResult pure_power_membership(std::size_t nvars, unsigned p,
                                       std::optional<int> degree_cap) {
    if (nvars == 0) throw Error(ErrorCode::BadInput, "membership needs at least one variable");
    if (p == 0) throw Error(ErrorCode::BadInput, "membership needs a positive power");

    std::vector<int> caps;
    if (degree_cap)
        caps.push_back(*degree_cap);
    else
        for (int k = static_cast<int>(p); k <= static_cast<int>(p) + 6; ++k) caps.push_back(k);

    const Scalar one = Scalar::from_int(1);
    const Scalar zero = Scalar::zero_like(one);
    const std::vector<Scalar> origin(nvars, zero);

    for (int cap : caps) {
        if (cap < static_cast<int>(p) || cap < 2) continue;

        std::vector<Jet> gens; // index k - 2
        for (int k = 2; k <= cap; ++k)
            gens.push_back(operator_symbol(power_sum_operator(nvars, static_cast<unsigned>(k))));

        struct Col {
            unsigned k;
            Jet::Exponent e;
        };
        std::vector<Col> cols;
        std::vector<Jet> col_jets;
        for (int k = 2; k <= cap; ++k)
            for (const auto& e : monomials_up_to(nvars, cap - k)) {
                cols.push_back({static_cast<unsigned>(k), e});
                col_jets.push_back(gens[k - 2] * monomial_jet(origin, e, one));
            }
        if (cols.empty()) continue;

        const auto rows = monomials_up_to(nvars, cap);
        std::vector<Scalar> flat;
        flat.reserve(rows.size() * cols.size());
        for (const auto& r : rows)
            for (const auto& cj : col_jets) flat.push_back(cj.coefficient(r));
        const ScalarMatrix m(rows.size(), cols.size(), std::move(flat));

        std::vector<Scalar> bflat;
        bflat.reserve(rows.size() * nvars);
        for (const auto& r : rows)
            for (std::size_t j = 0; j < nvars; ++j) {
                Jet::Exponent target(nvars, 0);
                target[j] = p;
                bflat.push_back(r == target ? one : zero);
            }
        const auto sol = solve_linear(m, ScalarMatrix(rows.size(), nvars, std::move(bflat)));
        if (!sol) continue;

        Contained out;
        out.degree_cap = cap;
        out.certificates.resize(nvars);
        for (std::size_t j = 0; j < nvars; ++j)
            for (int k = 2; k <= cap; ++k) {
                Jet cof(origin, 0, true);
                bool nonzero = false;
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (cols[c].k == static_cast<unsigned>(k) && !(*sol)(c, j).is_zero()) {
                        cof.set_coefficient(cols[c].e, (*sol)(c, j));
                        nonzero = true;
                    }
                if (nonzero)
                    out.certificates[j].push_back({static_cast<unsigned>(k), std::move(cof)});
            }
        return out;
    }
    return NotFoundWithin{caps.back()};
}

namespace {

// Gauss-Jordan over the rationals; returns the pivot columns.
std::vector<std::size_t> rational_rref(std::vector<std::vector<Rational>>& a) {
    const std::size_t m = a.size(), n = m ? a[0].size() : 0;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t sel = m;
        for (std::size_t i = r; i < m; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == m) continue;
        std::swap(a[sel], a[r]);
        const Rational lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    const auto piv = rational_rref(a);
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> rational_solve(std::vector<std::vector<Rational>> a,
                                                    const std::vector<Rational>& b) {
    const std::size_t d = a.size();
    for (std::size_t i = 0; i < d; ++i) a[i].push_back(b[i]);
    const auto piv = rational_rref(a);
    if (piv.size() != d || piv.back() != d - 1) return std::nullopt;
    std::vector<Rational> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = a[i][d];
    return x;
}

std::vector<std::vector<Rational>> moment_matrix(const std::vector<Rational>& z) {
    const std::size_t m = z.size();
    std::vector<std::vector<Rational>> q(m, std::vector<Rational>(m));
    for (std::size_t j = 0; j < m; ++j) {
        Rational pw = z[j];
        for (std::size_t i = 0; i < m; ++i) {
            q[i][j] = pw;
            pw *= z[j];
        }
    }
    return q;
}

// A point of {u = K c : u >= 1 componentwise} found by enumerating the
// vertices (d independent tight constraints); the feasible region is pointed
// because the kernel basis has full column rank, so it is nonempty exactly
// when a vertex passes the full constraint check.
std::optional<std::vector<Rational>> positive_vector_in(
    const std::vector<std::vector<Rational>>& kernel, std::size_t m) {
    const std::size_t d = kernel.size();
    const std::vector<Rational> ones(d, Rational(1));
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
        std::vector<std::vector<Rational>> tight(d, std::vector<Rational>(d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) tight[a][b] = kernel[b][idx[a]];
        if (const auto c = rational_solve(std::move(tight), ones)) {
            std::vector<Rational> u(m, Rational(0));
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t row = 0; row < m; ++row) u[row] += (*c)[b] * kernel[b][row];
            bool feasible = true;
            for (const auto& v : u)
                if (v < 1) {
                    feasible = false;
                    break;
                }
            if (feasible) return u;
        }
        // next d-subset of {0..m-1} in lexicographic order
        std::size_t i = d;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - d) {
                ++idx[i];
                for (std::size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return std::nullopt;
}

} // namespace

std::vector<Rational> moment_vector(const std::vector<Rational>& z,
                                    const std::vector<Rational>& u) {
    if (z.empty() || z.size() != u.size())
        throw Error(ErrorCode::BadInput, "points and weights must have equal positive length");
    std::vector<Rational> out(z.size(), Rational(0));
    for (std::size_t j = 0; j < z.size(); ++j) {
        Rational pw = z[j];
        for (std::size_t i = 0; i < z.size(); ++i) {
            out[i] += u[j] * pw;
            pw *= z[j];
        }
    }
    return out;
}

std::optional<std::vector<Rational>> positive_moment_kernel(const std::vector<Rational>& z) {
    if (z.empty()) throw Error(ErrorCode::BadInput, "empty point tuple");
    const auto kernel = rational_kernel(moment_matrix(z));
    if (kernel.empty()) return std::nullopt;
    return positive_vector_in(kernel, z.size());
}

PositivityReport vandermonde_positivity(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (n < 1 || n > 4)
        throw Error(ErrorCode::BadInput, "positivity harness runs for 1 <= n <= 4");
    PositivityReport rep;
    rep.n = n;
    std::mt19937_64 rng(seed);
    const std::size_t len = n + 1;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Rational> z(len);
        bool all_zero = true;
        do {
            all_zero = true;
            for (auto& v : z) {
                const long num = static_cast<long>(rng() % 19) - 9;
                const long den = static_cast<long>(rng() % 4) + 1;
                v = Rational(num, den);
                v.canonicalize();
                if (v != 0) all_zero = false;
            }
        } while (all_zero);
        ++rep.samples;
        const auto kernel = rational_kernel(moment_matrix(z));
        if (kernel.empty()) {
            ++rep.trivial_kernel;
            continue;
        }
        if (auto u = positive_vector_in(kernel, len)) {
            rep.counterexample = PositivityCounterexample{std::move(z), std::move(*u)};
            break;
        }
        ++rep.no_positive_vector;
    }
    return rep;
}

} // namespace chambar
