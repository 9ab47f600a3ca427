#include <doctest.h>

#include <chambar/barycentric.hpp>
#include <chambar/error.hpp>
#include <chambar/flow.hpp>
#include <chambar/linear.hpp>
#include <chambar/matrix.hpp>

#include <optional>
#include <variant>
#include <vector>

using namespace chambar;

namespace {

Scalar q(long num, long den = 1) { return Scalar::from_rational(Rational(num, den)); }

Scalar w3(long k) { return Scalar::root_of_unity_power(3, k); }

ScalarMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Scalar>> rs;
    for (const auto& r : rows) {
        std::vector<Scalar> v;
        for (long x : r) v.push_back(q(x));
        rs.push_back(std::move(v));
    }
    return ScalarMatrix::from_rows(rs);
}

/// Strictly upper triangular 3x3 with the three free slots.
ScalarMatrix upper3(const Scalar& a, const Scalar& b, const Scalar& g) {
    const Scalar z = Scalar::zero_like(a);
    return ScalarMatrix::from_rows({{z, a, g}, {z, z, b}, {z, z, z}});
}

ScalarMatrix commutator(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a * b - b * a;
}

ScalarMatrix conjugate(const ScalarMatrix& basis, const ScalarMatrix& a) {
    return inverse(basis) * a * basis;
}

bool strictly_upper(const ScalarMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j <= i && j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

bool is_exact_with_bound(const Verdict& v, int bound) {
    const auto* e = std::get_if<ExactCertificate>(&v);
    return e && e->t_degree_bound == bound;
}

/// A triple of strictly upper triangular matrices satisfying the four sum
/// relations that make it barycentric.
std::vector<ScalarMatrix> upper_triple() {
    return {upper3(q(1), q(1), q(0)), upper3(q(-1), q(1), q(1)), upper3(q(0), q(-2), q(-1))};
}

} // namespace

TEST_CASE("matrix chambar construction guards") {
    const ScalarMatrix a = mat({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(MatrixChambar({a}), Error);
    try {
        MatrixChambar({a, -a}, {q(1)});
        FAIL("weight count check missed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WrongArity);
    }
    try {
        MatrixChambar({a, mat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})});
        FAIL("dimension check missed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AmbientMismatch);
    }
    try {
        MatrixChambar({a, ScalarMatrix(1, 2, {q(1), q(0)})});
        FAIL("square check missed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadInput);
    }
    try {
        MatrixChambar({a, mat({{0, 0}, {0, 0}})});
        FAIL("zero matrix check missed");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadInput);
    }
    const MatrixChambar c({a, -a});
    CHECK(c.arity() == 2);
    CHECK(c.dimension() == 2);
    CHECK(c.weights == std::vector<Scalar>{q(1), q(1)});
}

TEST_CASE("verify_linear: certificates, refutations and the degraded case") {
    SUBCASE("strictly triangular triple") {
        const Verdict v = verify_linear(MatrixChambar(upper_triple()));
        CHECK(is_exact_with_bound(v, 2));
    }
    SUBCASE("opposite rank-1 nilpotents have affine flows") {
        const ScalarMatrix a = mat({{0, 1}, {0, 0}});
        CHECK(is_exact_with_bound(verify_linear(MatrixChambar({a, -a})), 1));
    }
    SUBCASE("diagonal pair fails at the second power") {
        const Verdict v =
            verify_linear(MatrixChambar({mat({{1, 0}, {0, -1}}), mat({{-1, 0}, {0, 1}})}));
        const auto* r = std::get_if<Refuted>(&v);
        REQUIRE(r != nullptr);
        CHECK(r->ell == 2);
        CHECK(r->coordinate == 0);
        CHECK(r->exponent == Jet::Exponent{0});
        CHECK(r->value == q(2));
    }
    SUBCASE("weights enter the defect") {
        const MatrixChambar c({mat({{0, 2}, {0, 0}}), mat({{0, -1}, {0, 0}})}, {q(1), q(2)});
        CHECK(is_exact_with_bound(verify_linear(c), 1));
    }
    SUBCASE("cancelling weights cannot certify a non-nilpotent tuple") {
        const ScalarMatrix d = mat({{1, 0}, {0, 2}});
        const Verdict v = verify_linear(MatrixChambar({d, d}, {q(1), q(-1)}));
        const auto* vo = std::get_if<VerifiedToOrder>(&v);
        REQUIRE(vo != nullptr);
        CHECK(vo->t_order == 4);
        CHECK(!vo->spatial_order.has_value());
    }
    SUBCASE("weighted power sums have zero trace on verified tuples") {
        const MatrixChambar c(upper_triple());
        for (unsigned ell = 1; ell <= 9; ++ell) {
            ScalarMatrix s = matrix_power(c.matrices[0], ell) * c.weights[0];
            for (std::size_t k = 1; k < c.arity(); ++k)
                s = s + matrix_power(c.matrices[k], ell) * c.weights[k];
            CHECK(trace(s).is_zero());
        }
    }
}

TEST_CASE("nilpotency index") {
    CHECK(nilpotency_index(mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 3);
    CHECK(nilpotency_index(mat({{0, 0}, {0, 0}})) == 1);
    CHECK(nilpotency_index(mat({{0, 1}, {0, 0}})) == 2);
    CHECK(!nilpotency_index(mat({{1, 0}, {0, 1}})).has_value());
    CHECK(!nilpotency_index(mat({{0, 1}, {1, 0}})).has_value());
    CHECK_THROWS_AS(nilpotency_index(ScalarMatrix(1, 2, {q(1), q(0)})), Error);
}

TEST_CASE("characteristic polynomial") {
    SUBCASE("pinned coefficients") {
        const Jet cp = characteristic_polynomial(mat({{1, 0}, {0, 2}}));
        CHECK(cp.coefficient({2}) == q(1));
        CHECK(cp.coefficient({1}) == q(-3));
        CHECK(cp.coefficient({0}) == q(2));
        const Jet cq = characteristic_polynomial(mat({{1, 1}, {0, 1}}));
        CHECK(cq.coefficient({2}) == q(1));
        CHECK(cq.coefficient({1}) == q(-2));
        CHECK(cq.coefficient({0}) == q(1));
    }
    SUBCASE("equals t^n exactly when the matrix is nilpotent") {
        const std::vector<ScalarMatrix> samples = {
            mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),  mat({{1, 0}, {0, 1}}),
            mat({{0, 1}, {1, 0}}),                   mat({{0, 2}, {0, 0}}),
            mat({{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
        };
        for (const ScalarMatrix& a : samples) {
            const Jet tn = Jet::coordinate({q(0)}, 0).pow(static_cast<unsigned>(a.rows()));
            const bool nil = nilpotency_index(a).has_value();
            CHECK((characteristic_polynomial(a) - tn).is_zero() == nil);
        }
    }
}

TEST_CASE("linear fields mirror their matrices") {
    const ScalarMatrix j = mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const VectorField x = linear_field(j);
    REQUIRE(x.nvars() == 3);
    CHECK(x.exact());
    const std::vector<Scalar> bp(3, q(0));
    CHECK((x.component(0) - Jet::coordinate(bp, 1)).is_zero());
    CHECK((x.component(1) - Jet::coordinate(bp, 2)).is_zero());
    CHECK(x.component(2).is_zero());

    // exp(t j) x = x + t j x + t^2/2 j^2 x, so the flow rows are read off the
    // matrix powers
    const FlowJet f = flow_jet(x, 4);
    CHECK(f.t_poly_degree() == 2);
    CHECK((f.coefficient(0, 1) - Jet::coordinate(bp, 1)).is_zero());
    CHECK((f.coefficient(0, 2) - Jet::coordinate(bp, 2) * q(1, 2)).is_zero());
    CHECK(f.coefficient(0, 3).is_zero());
    CHECK(f.coefficient(2, 1).is_zero());

    CHECK_THROWS_AS(linear_field(ScalarMatrix(1, 2, {q(1), q(0)})), Error);
}

TEST_CASE("verify_linear agrees with the jet-level barycentric check") {
    const auto ms = upper_triple();
    CHECK(is_exact_with_bound(verify_linear(MatrixChambar(ms)), 2));
    const Chambar c({linear_field(ms[0]), linear_field(ms[1]), linear_field(ms[2])});
    CHECK(is_exact_with_bound(check_barycentric(c, 5), 2));
    for (const ScalarMatrix& m : ms) {
        const TPolyResult r = t_poly_degree(linear_field(m), 3);
        REQUIRE(r.kind == TPolyKind::Degree);
        CHECK(r.degree == *nilpotency_index(m) - 1);
        CHECK(r.degree < 3);
    }
}

TEST_CASE("embedding by common-kernel extraction") {
    SUBCASE("triangular triples embed, conjugated ones too") {
        const auto ms = upper_triple();
        const EmbedResult res = heisenberg_embed_test(ms);
        const auto* emb = std::get_if<Embedded>(&res);
        REQUIRE(emb != nullptr);
        for (const ScalarMatrix& m : ms) CHECK(strictly_upper(conjugate(emb->basis, m)));

        const ScalarMatrix s = mat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
        const ScalarMatrix sinv = inverse(s);
        std::vector<ScalarMatrix> hidden;
        for (const ScalarMatrix& m : ms) hidden.push_back(s * m * sinv);
        CHECK(!strictly_upper(hidden[0]));
        const EmbedResult res2 = heisenberg_embed_test(hidden);
        const auto* emb2 = std::get_if<Embedded>(&res2);
        REQUIRE(emb2 != nullptr);
        for (const ScalarMatrix& m : hidden) CHECK(strictly_upper(conjugate(emb2->basis, m)));
        CHECK(is_exact_with_bound(verify_linear(MatrixChambar(hidden)), 2));
    }
    SUBCASE("single nilpotent matrices embed") {
        const EmbedResult res =
            heisenberg_embed_test({mat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}})});
        CHECK(std::holds_alternative<Embedded>(res));

        const EmbedResult low = heisenberg_embed_test({mat({{0, 0}, {1, 0}})});
        const auto* emb = std::get_if<Embedded>(&low);
        REQUIRE(emb != nullptr);
        CHECK(strictly_upper(conjugate(emb->basis, mat({{0, 0}, {1, 0}}))));
    }
    SUBCASE("the identity obstructs immediately with itself as witness") {
        const EmbedResult res = heisenberg_embed_test({mat({{1, 0}, {0, 1}})});
        const auto* obs = std::get_if<Obstruction>(&res);
        REQUIRE(obs != nullptr);
        CHECK(obs->stage == 0);
        CHECK(obs->word == std::vector<std::size_t>{0, 0});
        REQUIRE(obs->product.has_value());
        CHECK(*obs->product == mat({{1, 0}, {0, 1}}));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(heisenberg_embed_test({}), Error);
        CHECK_THROWS_AS(
            heisenberg_embed_test({mat({{0, 1}, {0, 0}}), mat({{0}, {0}})}), Error);
        CHECK_THROWS_AS(
            heisenberg_embed_test({mat({{0, 1}, {0, 0}}), mat({{0}})}), Error);
    }
}

TEST_CASE("words and two-variable monomials on triangularizable triples") {
    std::vector<std::vector<ScalarMatrix>> triples;
    triples.push_back(upper_triple());
    // cyclotomic slots: columns (1, j, j^2) twice, rationals in the corner
    triples.push_back({upper3(w3(0), w3(0), q(1)), upper3(w3(1), w3(1), q(-1)),
                       upper3(w3(2), w3(2), q(0))});
    {
        const ScalarMatrix s = mat({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
        const ScalarMatrix sinv = inverse(s);
        std::vector<ScalarMatrix> hidden;
        for (const ScalarMatrix& m : upper_triple()) hidden.push_back(s * m * sinv);
        triples.push_back(hidden);
    }
    for (const auto& ms : triples) {
        REQUIRE(is_exact_with_bound(verify_linear(MatrixChambar(ms)), 2));
        const Scalar one = Scalar::one_like(ms[0](0, 0));
        const Scalar two = one + one;

        // every product of three generators dies
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = 0; k < 3; ++k)
                    CHECK(matrix_is_zero(ms[i] * ms[j] * ms[k]));

        // power sums of the first two against the third
        for (unsigned k = 1; k <= 6; ++k)
            CHECK(matrix_is_zero(matrix_power(ms[0], k) + matrix_power(ms[1], k) +
                                 matrix_power(ms[2], k)));

        // the symmetrized two-variable monomials collapse onto the third
        // generator: X1^k X2^j + X2^k X1^j = 2 X3^(k+j)
        for (unsigned k = 1; k <= 3; ++k)
            for (unsigned j = 1; k + j <= 6; ++j) {
                const ScalarMatrix lhs = matrix_power(ms[0], k) * matrix_power(ms[1], j) +
                                         matrix_power(ms[1], k) * matrix_power(ms[0], j);
                CHECK(lhs == matrix_power(ms[2], k + j) * two);
            }
    }
}

TEST_CASE("common-kernel family") {
    const CommonKernelParams base{q(1), q(1), q(1), q(1), q(2),
                                  q(1, 2), q(3, 2), q(-2), q(-3), true};
    SUBCASE("the balanced constraint yields a certificate with affine flows") {
        const MatrixChambar c = sample_family(base);
        CHECK(is_exact_with_bound(verify_linear(c), 1));
        for (const ScalarMatrix& m : c.matrices) {
            CHECK(nilpotency_index(m) == 2);
            // shared kernel: the first basis vector is killed by everything
            for (std::size_t i = 0; i < 3; ++i) CHECK(m(i, 0).is_zero());
        }
        // square-zero in dimension 3 pins every matrix at rank one
        CHECK(chambar_rank(c) == 1);
    }
    SUBCASE("the commutator of the first two obstructs the embedding") {
        const MatrixChambar c = sample_family(base);
        const ScalarMatrix comm = commutator(c.matrices[0], c.matrices[1]);
        // alpha*delta = -3/2, beta*delta = -9/2, -beta*gamma = 3
        CHECK(comm == ScalarMatrix::from_rows({{q(0), q(-3, 2), q(3)},
                                               {q(0), q(-9, 2), q(0)},
                                               {q(0), q(0), q(9, 2)}}));
        const Jet cp = characteristic_polynomial(comm);
        CHECK(cp.coefficient({2}).is_zero());
        CHECK(cp.coefficient({1}) == q(-81, 4));
        CHECK(cp.coefficient({0}).is_zero());
        CHECK(!nilpotency_index(comm).has_value());

        const EmbedResult res = heisenberg_embed_test(c.matrices);
        const auto* obs = std::get_if<Obstruction>(&res);
        REQUIRE(obs != nullptr);
        CHECK(obs->stage == 1);
        REQUIRE(!obs->word.empty());
        REQUIRE(obs->product.has_value());
        ScalarMatrix prod = c.matrices[obs->word[0]];
        for (std::size_t i = 1; i < obs->word.size(); ++i)
            prod = prod * c.matrices[obs->word[i]];
        CHECK(prod == *obs->product);
        CHECK(!matrix_is_zero(prod));
    }
    SUBCASE("the printed constraint builds a tuple that fails at the first power") {
        CommonKernelParams printed = base;
        printed.alternate_beta_constraint = false;
        printed.beta = q(5, 4); // b^2/c + b^2/e^2
        const MatrixChambar c = sample_family(printed);
        const Verdict v = verify_linear(c);
        const auto* r = std::get_if<Refuted>(&v);
        REQUIRE(r != nullptr);
        CHECK(r->ell == 1);
        CHECK(r->coordinate == 1);
        CHECK(r->exponent == Jet::Exponent{2});
        CHECK(r->value == q(-1, 4));
    }
    SUBCASE("each constraint form rejects the other's beta") {
        CommonKernelParams p = base;
        p.beta = q(5, 4);
        try {
            sample_family(p);
            FAIL("beta check missed");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConstraintViolated);
        }
        p.alternate_beta_constraint = false;
        p.beta = q(3, 2);
        CHECK_THROWS_AS(sample_family(p), Error);
    }
    SUBCASE("remaining linear relations are enforced") {
        CommonKernelParams p = base;
        p.gamma = q(1);
        CHECK_THROWS_AS(sample_family(p), Error);
        p = base;
        p.delta = q(0);
        CHECK_THROWS_AS(sample_family(p), Error);
        p = base;
        p.alpha = q(1);
        CHECK_THROWS_AS(sample_family(p), Error);
    }
    SUBCASE("vanishing denominators are reported as such") {
        CommonKernelParams p = base;
        p.c = q(0);
        try {
            sample_family(p);
            FAIL("denominator check missed");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DenominatorZero);
        }
        p = base;
        p.e = q(0);
        CHECK_THROWS_AS(sample_family(p), Error);
    }
    SUBCASE("boundary with opposite denominators: commutator nilpotent, embedding works") {
        // e = -c makes delta and beta vanish while every matrix stays nonzero
        const CommonKernelParams p{q(1), q(1), q(1), q(1), q(-1),
                                   q(2), q(0), q(-2), q(0), true};
        const MatrixChambar c = sample_family(p);
        CHECK(is_exact_with_bound(verify_linear(c), 1));
        const ScalarMatrix comm = commutator(c.matrices[0], c.matrices[1]);
        CHECK(nilpotency_index(comm).has_value());
        const Jet cp = characteristic_polynomial(comm);
        CHECK((cp - Jet::coordinate({q(0)}, 0).pow(3)).is_zero());
        const EmbedResult res = heisenberg_embed_test(c.matrices);
        const auto* emb = std::get_if<Embedded>(&res);
        REQUIRE(emb != nullptr);
        for (const ScalarMatrix& m : c.matrices)
            CHECK(strictly_upper(conjugate(emb->basis, m)));
    }
    SUBCASE("b = 0 degenerates the first matrix to zero") {
        const CommonKernelParams p{q(1), q(0), q(1), q(1), q(2),
                                   q(0), q(0), q(-2), q(-3), true};
        try {
            sample_family(p);
            FAIL("zero matrix sneaked through");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadInput);
        }
    }
}

TEST_CASE("low-rank family") {
    SUBCASE("unit parameters: certificate, rank and obstruction") {
        const MatrixChambar c = sample_family(LowRankParams{q(1), q(1), q(1)});
        CHECK(is_exact_with_bound(verify_linear(c), 2));
        CHECK(chambar_rank(c) == 2);
        for (const ScalarMatrix& m : c.matrices) {
            CHECK(rank(m) <= 2);
            CHECK(nilpotency_index(m) == 3);
        }
        const EmbedResult res = heisenberg_embed_test(c.matrices);
        const auto* obs = std::get_if<Obstruction>(&res);
        REQUIRE(obs != nullptr);
        CHECK(obs->stage == 1);
        CHECK(obs->word == std::vector<std::size_t>{0, 0, 1});
        REQUIRE(obs->product.has_value());
        CHECK(*obs->product ==
              mat({{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
    }
    SUBCASE("every parameter choice passes the check") {
        for (const auto& [a, b, c] : {std::array<long, 3>{2, -3, 5},
                                      std::array<long, 3>{0, 1, -2},
                                      std::array<long, 3>{7, 7, 7}}) {
            const MatrixChambar t = sample_family(LowRankParams{q(a), q(b), q(c)});
            CHECK(std::holds_alternative<ExactCertificate>(verify_linear(t)));
        }
        const MatrixChambar cyc = sample_family(LowRankParams{w3(1), w3(2), q(1)});
        CHECK(std::holds_alternative<ExactCertificate>(verify_linear(cyc)));
    }
    SUBCASE("degenerate parameters that zero a matrix are rejected") {
        // a = b = 0 with c = -2 empties the second matrix
        try {
            sample_family(LowRankParams{q(0), q(0), q(-2)});
            FAIL("zero matrix sneaked through");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadInput);
        }
    }
}

TEST_CASE("pencil family") {
    const PencilParams unit{q(1), q(1), q(1), q(1), q(1), q(1)};
    SUBCASE("unit parameters verify with quadratic flows") {
        const MatrixChambar c = sample_family(unit);
        CHECK(is_exact_with_bound(verify_linear(c), 2));
        CHECK(nilpotency_index(c.matrices[0]) == 3);
    }
    SUBCASE("tuple rank stays at two while the pencil reaches full rank") {
        const MatrixChambar c = sample_family(unit);
        CHECK(chambar_rank(c) == 2);
        CHECK(rank(c.matrices[0] + c.matrices[1]) == 2);
        CHECK(rank(c.matrices[0] + c.matrices[1] * q(2)) == 3);
        CHECK(rank(c.matrices[0] + c.matrices[1] * q(-1)) == 3);
    }
    SUBCASE("commutator has only nonzero eigenvalues") {
        const MatrixChambar c = sample_family(unit);
        const ScalarMatrix comm = commutator(c.matrices[0], c.matrices[1]);
        CHECK(comm == mat({{-1, 0, -1}, {-1, 2, 0}, {-1, 1, -1}}));
        const Jet cp = characteristic_polynomial(comm);
        CHECK(cp.coefficient({2}).is_zero());    // trace zero
        CHECK(cp.coefficient({1}) == q(-4));
        CHECK(cp.coefficient({0}) == q(-1));     // -det, so no zero eigenvalue
        CHECK(!nilpotency_index(comm).has_value());
    }
    SUBCASE("no common kernel at the start") {
        const MatrixChambar c = sample_family(unit);
        const EmbedResult res = heisenberg_embed_test(c.matrices);
        const auto* obs = std::get_if<Obstruction>(&res);
        REQUIRE(obs != nullptr);
        CHECK(obs->stage == 0);
        CHECK(obs->word == std::vector<std::size_t>{0, 0, 1});
        REQUIRE(obs->product.has_value());
        CHECK(!matrix_is_zero(*obs->product));
    }
    SUBCASE("the middle-row couplings must match") {
        try {
            sample_family(PencilParams{q(1), q(1), q(1), q(1), q(1), q(2)});
            FAIL("coupling check missed");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ConstraintViolated);
        }
    }
    SUBCASE("other parameter values verify too") {
        const MatrixChambar c =
            sample_family(PencilParams{q(2), q(-1), q(3), q(1, 2), q(-5), q(-5)});
        CHECK(std::holds_alternative<ExactCertificate>(verify_linear(c)));
    }
}

TEST_CASE("verified samples flow polynomially and their power-sum traces vanish") {
    std::vector<MatrixChambar> verified;
    verified.emplace_back(upper_triple());
    verified.push_back(sample_family(LowRankParams{q(1), q(1), q(1)}));
    verified.push_back(sample_family(PencilParams{q(1), q(1), q(1), q(1), q(1), q(1)}));
    verified.push_back(sample_family(CommonKernelParams{q(1), q(1), q(1), q(1), q(2),
                                                        q(1, 2), q(3, 2), q(-2), q(-3),
                                                        true}));
    for (const MatrixChambar& c : verified) {
        REQUIRE(std::holds_alternative<ExactCertificate>(verify_linear(c)));
        const int n = static_cast<int>(c.dimension());
        for (const ScalarMatrix& m : c.matrices) {
            const TPolyResult r = t_poly_degree(linear_field(m), n);
            REQUIRE(r.kind == TPolyKind::Degree);
            CHECK(r.degree == *nilpotency_index(m) - 1);
            CHECK(r.degree < n);
        }
        const unsigned bound = static_cast<unsigned>(c.dimension() * c.arity());
        for (unsigned ell = 1; ell <= bound; ++ell) {
            ScalarMatrix s = matrix_power(c.matrices[0], ell) * c.weights[0];
            for (std::size_t k = 1; k < c.arity(); ++k)
                s = s + matrix_power(c.matrices[k], ell) * c.weights[k];
            CHECK(trace(s).is_zero());
        }
    }
}

TEST_CASE("chambar rank on padded tuples") {
    const ScalarMatrix a = mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK(chambar_rank(MatrixChambar({a, -a})) == 1);
    CHECK(chambar_rank(MatrixChambar(upper_triple())) == 2);
}
