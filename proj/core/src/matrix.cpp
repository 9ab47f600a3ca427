#include <chambar/matrix.hpp>

namespace chambar {

ScalarMatrix identity_matrix(std::size_t n, const Scalar& prototype) {
    if (n == 0) throw Error(ErrorCode::BadInput, "identity of order zero");
    std::vector<Scalar> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            flat.push_back(i == j ? Scalar::one_like(prototype) : Scalar::zero_like(prototype));
    return ScalarMatrix(n, n, std::move(flat));
}

ScalarMatrix matrix_power(const ScalarMatrix& a, unsigned k) {
    if (!a.square()) throw Error(ErrorCode::BadInput, "power of a non-square matrix");
    ScalarMatrix acc = identity_matrix(a.rows(), a(0, 0));
    for (unsigned i = 0; i < k; ++i) acc = acc * a;
    return acc;
}

bool matrix_is_zero(const ScalarMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

ScalarMatrix rref(ScalarMatrix a, std::vector<std::size_t>* pivots) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t sel = m;
        for (std::size_t i = r; i < m; ++i)
            if (!a(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m) continue;
        if (sel != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(r, j));
        const Scalar inv = Scalar::one_like(a(r, c)) / a(r, c);
        for (std::size_t j = c; j < n; ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::size_t rank(const ScalarMatrix& a) {
    std::vector<std::size_t> piv;
    rref(a, &piv);
    return piv.size();
}

std::vector<std::vector<Scalar>> null_space(const ScalarMatrix& a) {
    std::vector<std::size_t> piv;
    const ScalarMatrix r = rref(a, &piv);
    const std::size_t n = a.cols();
    const Scalar zero = Scalar::zero_like(a(0, 0));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : piv) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(n, zero);
        v[f] = Scalar::one_like(zero);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ScalarMatrix> solve_linear(const ScalarMatrix& a, const ScalarMatrix& rhs) {
    if (rhs.rows() != a.rows())
        throw Error(ErrorCode::BadInput, "right-hand side row count differs from the matrix");
    const std::size_t n = a.cols(), k = rhs.cols();
    const Scalar zero = Scalar::zero_like(a(0, 0));
    std::vector<Scalar> flat;
    flat.reserve(a.rows() * (n + k));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a(i, j));
        for (std::size_t j = 0; j < k; ++j) flat.push_back(rhs(i, j));
    }
    std::vector<std::size_t> piv;
    const ScalarMatrix r = rref(ScalarMatrix(a.rows(), n + k, std::move(flat)), &piv);
    if (!piv.empty() && piv.back() >= n) return std::nullopt;
    std::vector<Scalar> out(n * k, zero);
    for (std::size_t row = 0; row < piv.size(); ++row)
        for (std::size_t j = 0; j < k; ++j) out[piv[row] * k + j] = r(row, n + j);
    return ScalarMatrix(n, k, std::move(out));
}

std::optional<std::vector<Scalar>> solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows())
        throw Error(ErrorCode::BadInput, "right-hand side length differs from the row count");
    auto sol = solve_linear(a, ScalarMatrix(b.size(), 1, b));
    if (!sol) return std::nullopt;
    std::vector<Scalar> x;
    x.reserve(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x.push_back((*sol)(i, 0));
    return x;
}

ScalarMatrix inverse(const ScalarMatrix& a) {
    if (!a.square()) throw Error(ErrorCode::BadInput, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const Scalar zero = Scalar::zero_like(a(0, 0));
    std::vector<Scalar> flat;
    flat.reserve(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) flat.push_back(a(i, j));
        for (std::size_t j = 0; j < n; ++j)
            flat.push_back(i == j ? Scalar::one_like(zero) : zero);
    }
    std::vector<std::size_t> piv;
    const ScalarMatrix r = rref(ScalarMatrix(n, 2 * n, std::move(flat)), &piv);
    if (piv.size() != n || piv.back() != n - 1)
        throw Error(ErrorCode::RankDeficient, "matrix is singular");
    std::vector<Scalar> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.push_back(r(i, n + j));
    return ScalarMatrix(n, n, std::move(out));
}

} // namespace chambar
