#include <chambar/linear.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <cstdint>
#include <utility>

namespace chambar {

namespace {

std::vector<Scalar> unit_weights(const std::vector<ScalarMatrix>& ms) {
    if (ms.empty()) throw Error(ErrorCode::WrongArity, "a chambar needs at least two fields");
    return std::vector<Scalar>(ms.size(), Scalar::one_like(ms.front()(0, 0)));
}

} // namespace

MatrixChambar::MatrixChambar(std::vector<ScalarMatrix> matrices_, std::vector<Scalar> weights_)
    : matrices(std::move(matrices_)), weights(std::move(weights_)) {
    if (matrices.size() < 2)
        throw Error(ErrorCode::WrongArity, "a chambar needs at least two fields");
    if (weights.empty()) weights = unit_weights(matrices);
    if (weights.size() != matrices.size())
        throw Error(ErrorCode::WrongArity, "need exactly one weight per matrix");
    const std::size_t n = matrices.front().rows();
    for (const ScalarMatrix& m : matrices) {
        if (!m.square())
            throw Error(ErrorCode::BadInput, "linear chambar matrices must be square");
        if (m.rows() != n)
            throw Error(ErrorCode::AmbientMismatch, "matrices act on different dimensions");
        if (matrix_is_zero(m))
            throw Error(ErrorCode::BadInput, "zero matrix in the tuple");
    }
}

MatrixChambar::MatrixChambar(std::vector<ScalarMatrix> matrices_)
    : MatrixChambar(std::move(matrices_), {}) {}

Verdict verify_linear(const MatrixChambar& c) {
    const std::size_t n = c.dimension();
    const std::size_t p = c.arity();
    const int bound = static_cast<int>(n * p);
    bool exact_mode = true;
    for (const ScalarMatrix& m : c.matrices)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!m(i, j).exact()) exact_mode = false;
    for (const Scalar& w : c.weights)
        if (!w.exact()) exact_mode = false;

    std::vector<ScalarMatrix> pw = c.matrices;
    for (int ell = 1; ell <= bound; ++ell) {
        if (ell > 1)
            for (std::size_t k = 0; k < p; ++k) pw[k] = pw[k] * c.matrices[k];
        ScalarMatrix defect = pw[0] * c.weights[0];
        for (std::size_t k = 1; k < p; ++k) defect = defect + pw[k] * c.weights[k];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!defect(i, j).is_zero())
                    return Refuted{ell, i, Jet::Exponent{static_cast<std::uint32_t>(j)},
                                   defect(i, j)};
    }
    if (!exact_mode) return VerifiedToOrder{bound, std::nullopt};
    int flow_degree = 0;
    for (const ScalarMatrix& m : c.matrices) {
        const auto idx = nilpotency_index(m);
        if (!idx) return VerifiedToOrder{bound, std::nullopt};
        flow_degree = std::max(flow_degree, *idx - 1);
    }
    return ExactCertificate{flow_degree};
}

std::optional<int> nilpotency_index(const ScalarMatrix& a) {
    if (!a.square())
        throw Error(ErrorCode::BadInput, "nilpotency index of a non-square matrix");
    if (matrix_is_zero(a)) return 1;
    ScalarMatrix pw = a;
    for (std::size_t k = 2; k <= a.rows(); ++k) {
        pw = pw * a;
        if (matrix_is_zero(pw)) return static_cast<int>(k);
    }
    return std::nullopt;
}

Jet characteristic_polynomial(const ScalarMatrix& a) {
    if (!a.square())
        throw Error(ErrorCode::BadInput, "characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    bool exact = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j).exact()) exact = false;
    const std::vector<Scalar> bp{Scalar::zero_like(a(0, 0))};
    std::vector<Jet> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Jet entry = Jet::constant(bp, -a(i, j), static_cast<int>(n), exact);
            if (i == j) entry = entry + Jet::coordinate(bp, 0);
            flat.push_back(std::move(entry));
        }
    return determinant(Matrix<Jet>(n, n, std::move(flat)));
}

VectorField linear_field(const ScalarMatrix& a) {
    if (!a.square())
        throw Error(ErrorCode::BadInput, "a linear field needs a square matrix");
    const std::size_t n = a.rows();
    const std::vector<Scalar> bp(n, Scalar::zero_like(a(0, 0)));
    std::vector<Jet> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Jet s = Jet::coordinate(bp, 0) * a(i, 0);
        for (std::size_t j = 1; j < n; ++j) s += Jet::coordinate(bp, j) * a(i, j);
        comps.push_back(std::move(s));
    }
    return VectorField(std::move(comps));
}

namespace {

bool advance_word(std::vector<std::size_t>& w, std::size_t p) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (++w[i] < p) return true;
        w[i] = 0;
    }
    return false;
}

// Scan products of dimension-many generators in lexicographic index order and
// record the first nonzero one; bounded so huge tuples just keep the bare
// stalled-stage report.
void hunt_nonzero_word(const std::vector<ScalarMatrix>& ms, Obstruction& obs) {
    const std::size_t p = ms.size();
    const std::size_t n = ms.front().rows();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > 4096) return;
    }
    std::vector<std::size_t> w(n, 0);
    do {
        ScalarMatrix prod = ms[w[0]];
        for (std::size_t i = 1; i < n; ++i) prod = prod * ms[w[i]];
        if (!matrix_is_zero(prod)) {
            obs.word = w;
            obs.product = std::move(prod);
            return;
        }
    } while (advance_word(w, p));
}

} // namespace

EmbedResult heisenberg_embed_test(const std::vector<ScalarMatrix>& matrices) {
    if (matrices.empty())
        throw Error(ErrorCode::WrongArity, "need at least one matrix");
    const std::size_t n = matrices.front().rows();
    for (const ScalarMatrix& m : matrices) {
        if (!m.square())
            throw Error(ErrorCode::BadInput, "strict triangularization needs square matrices");
        if (m.rows() != n)
            throw Error(ErrorCode::AmbientMismatch, "matrices act on different dimensions");
    }
    const Scalar proto = matrices.front()(0, 0);
    const Scalar zero = Scalar::zero_like(proto);
    const Scalar one = Scalar::one_like(proto);
    ScalarMatrix basis = identity_matrix(n, proto);
    std::vector<ScalarMatrix> cur = matrices;
    for (std::size_t stage = 0; stage < n; ++stage) {
        const std::size_t m = cur.front().rows();
        std::vector<Scalar> flat;
        flat.reserve(cur.size() * m * m);
        for (const ScalarMatrix& ck : cur)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) flat.push_back(ck(i, j));
        const auto kernel = null_space(ScalarMatrix(cur.size() * m, m, std::move(flat)));
        if (kernel.empty()) {
            Obstruction obs{stage, {}, std::nullopt};
            hunt_nonzero_word(matrices, obs);
            return obs;
        }
        if (m == 1) break; // the lone remaining entry is zero in every matrix
        const std::vector<Scalar>& v = kernel.front();
        // extend v to a block basis: v first, then the standard vectors that
        // survive column-pivoted elimination
        std::vector<Scalar> ext;
        ext.reserve(m * (m + 1));
        for (std::size_t i = 0; i < m; ++i) {
            ext.push_back(v[i]);
            for (std::size_t j = 0; j < m; ++j) ext.push_back(i == j ? one : zero);
        }
        const ScalarMatrix extended(m, m + 1, std::move(ext));
        std::vector<std::size_t> piv;
        rref(extended, &piv);
        std::vector<Scalar> qf;
        qf.reserve(m * m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t c : piv) qf.push_back(extended(i, c));
        const ScalarMatrix q(m, piv.size(), std::move(qf));
        const ScalarMatrix qinv = inverse(q);
        ScalarMatrix embed = identity_matrix(n, proto);
        const std::size_t off = n - m;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) embed(off + i, off + j) = q(i, j);
        basis = basis * embed;
        for (ScalarMatrix& ck : cur) ck = detail::strike(qinv * ck * q, 0, 0);
    }
    return Embedded{std::move(basis)};
}

std::size_t chambar_rank(const MatrixChambar& c) {
    std::size_t r = 0;
    for (const ScalarMatrix& m : c.matrices) r = std::max(r, rank(m));
    return r;
}

MatrixChambar sample_family(const CommonKernelParams& p) {
    if (p.c.is_zero() || p.e.is_zero())
        throw Error(ErrorCode::DenominatorZero, "c and e must be invertible");
    const Scalar z = Scalar::zero_like(p.c);
    const Scalar b2 = p.b * p.b;
    if (!(p.gamma + p.a + p.d).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "gamma + a + d must vanish");
    if (!(p.alpha - p.a * p.b / p.c + p.d * p.b / p.e).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "alpha - a*b/c + d*b/e must vanish");
    const Scalar beta_target =
        p.alternate_beta_constraint ? b2 / p.c + b2 / p.e : b2 / p.c + b2 / (p.e * p.e);
    if (!(p.beta - beta_target).is_zero())
        throw Error(ErrorCode::ConstraintViolated,
                    p.alternate_beta_constraint ? "beta - b^2/c - b^2/e must vanish"
                                                : "beta - b^2/c - b^2/e^2 must vanish");
    if (!(p.delta + p.c + p.e).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "delta + c + e must vanish");
    const ScalarMatrix x1 = ScalarMatrix::from_rows({{z, z, p.alpha}, {z, z, p.beta}, {z, z, z}});
    const ScalarMatrix x2 = ScalarMatrix::from_rows({{z, p.gamma, z}, {z, z, z}, {z, p.delta, z}});
    const ScalarMatrix x3 = ScalarMatrix::from_rows(
        {{z, p.a, -(p.a * p.b / p.c)}, {z, p.b, -(b2 / p.c)}, {z, p.c, -p.b}});
    const ScalarMatrix x4 = ScalarMatrix::from_rows(
        {{z, p.d, p.d * p.b / p.e}, {z, -p.b, -(b2 / p.e)}, {z, p.e, p.b}});
    return MatrixChambar({x1, x2, x3, x4});
}

MatrixChambar sample_family(const LowRankParams& p) {
    const Scalar z = Scalar::zero_like(p.a);
    const Scalar one = Scalar::one_like(p.a);
    const Scalar two = Scalar::from_int_like(p.a, 2);
    const ScalarMatrix x1 = ScalarMatrix::from_rows({{z, z, z}, {one, z, z}, {z, one, z}});
    const ScalarMatrix x2 =
        ScalarMatrix::from_rows({{z, p.a, z}, {z, z, z}, {p.b, -(p.c + two), z}});
    const ScalarMatrix x3 = ScalarMatrix::from_rows({{z, -p.a, z}, {z, z, z}, {p.b, p.c, z}});
    const ScalarMatrix x4 =
        ScalarMatrix::from_rows({{z, z, z}, {-one, z, z}, {-(two * p.b), one, z}});
    return MatrixChambar({x1, x2, x3, x4});
}

MatrixChambar sample_family(const PencilParams& p) {
    if (!(p.gamma - p.beta).is_zero())
        throw Error(ErrorCode::ConstraintViolated, "gamma must equal beta");
    const Scalar z = Scalar::zero_like(p.a);
    const ScalarMatrix x1 = ScalarMatrix::from_rows({{z, z, z}, {p.a, z, p.b}, {p.c, z, z}});
    const ScalarMatrix x2 =
        ScalarMatrix::from_rows({{z, p.alpha, z}, {z, z, z}, {-p.c, p.gamma, z}});
    const ScalarMatrix x3 = ScalarMatrix::from_rows({{z, z, z}, {-p.a, z, -p.b}, {p.c, z, z}});
    const ScalarMatrix x4 =
        ScalarMatrix::from_rows({{z, -p.alpha, z}, {z, z, z}, {-p.c, -p.beta, z}});
    return MatrixChambar({x1, x2, x3, x4});
}

} // namespace chambar
