#include <doctest.h>

#include <chambar/diff_operator.hpp>
#include <chambar/error.hpp>
#include <chambar/jet.hpp>
#include <chambar/series.hpp>

#include <random>
#include <vector>

using namespace chambar;

namespace {

std::vector<Scalar> origin(std::size_t n) {
    return std::vector<Scalar>(n, Scalar::from_int(0));
}

Scalar q(long num, long den = 1) { return Scalar::from_rational(Rational(num, den)); }

Jet poly(std::size_t nvars, const std::vector<std::pair<Jet::Exponent, Scalar>>& terms) {
    Jet r(origin(nvars), 0, true);
    for (const auto& [e, c] : terms) r.set_coefficient(e, c);
    return r;
}

bool same_terms(const Jet& a, const Jet& b) {
    if (a.nvars() != b.nvars() || a.terms().size() != b.terms().size()) return false;
    auto it = a.terms().begin();
    auto jt = b.terms().begin();
    for (; it != a.terms().end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

Jet random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> nterms(1, 6);
    std::uniform_int_distribution<std::uint32_t> expo(0, 2);
    Jet r(origin(nvars), 0, true);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Jet::Exponent e(nvars, 0);
        for (auto& v : e) v = expo(rng);
        while (total_degree(e) > max_deg)
            for (auto& v : e)
                if (v > 0) {
                    --v;
                    break;
                }
        const int c = coeff(rng);
        if (c != 0) r.set_coefficient(e, r.coefficient(e) + q(c));
    }
    return r;
}

} // namespace

TEST_CASE("coordinate jets multiply to the expected monomial") {
    auto b = origin(2);
    const Jet x = Jet::coordinate(b, 0);
    const Jet y = Jet::coordinate(b, 1);
    const Jet xy = x * y;
    CHECK(xy.exact());
    CHECK(xy.coefficient({1, 1}) == q(1));
    CHECK(xy.terms().size() == 1);

    const Jet xt = x.truncated(5);
    const Jet yt = y.truncated(5);
    CHECK(xt.exact()); // nothing was dropped
    const Jet p = xt.truncated(1) * yt;
    CHECK(p.exact());
}

TEST_CASE("truncation marks lost content") {
    const Jet f = poly(1, {{{0}, q(1)}, {{3}, q(2)}});
    CHECK(f.exact());
    CHECK(f.order() == 3);
    const Jet g = f.truncated(2);
    CHECK(!g.exact());
    CHECK(g.order() == 2);
    CHECK(g.terms().size() == 1);
    const Jet h = f.truncated(3);
    CHECK(h.exact());
    CHECK(h == f);
}

TEST_CASE("product truncation commutes with input truncation") {
    std::mt19937_64 rng(90210u);
    for (int trial = 0; trial < 60; ++trial) {
        const Jet a = random_poly(rng, 3, 4);
        const Jet b = random_poly(rng, 3, 4);
        for (int K : {0, 1, 2, 3, 5}) {
            const Jet lhs = (a.truncated(K) * b.truncated(K)).truncated(K);
            const Jet rhs = (a * b).truncated(K);
            CAPTURE(K);
            CHECK(same_terms(lhs, rhs));
        }
    }
}

TEST_CASE("arithmetic order bookkeeping") {
    const Jet f = poly(2, {{{1, 0}, q(1)}, {{0, 2}, q(3)}});
    const Jet g = poly(2, {{{1, 1}, q(-2)}, {{0, 0}, q(5)}});
    CHECK((f + g).exact());
    const Jet f4 = f.truncated(1); // drops the y^2 term
    CHECK(f4.order() == 1);
    CHECK((f4 + g).order() == 1);
    CHECK(!(f4 + g).exact());
    CHECK((f4 * g).order() == 1);
    CHECK((g + f4).order() == 1);

    CHECK(f.derivative(1).exact());
    CHECK(f.derivative(1).coefficient({0, 1}) == q(6));
    const Jet fi = (f * f).truncated(2); // degree 4 product, so this drops terms
    CHECK(!fi.exact());
    CHECK(fi.derivative(0).order() == 1);
}

TEST_CASE("square-root jet about 1 and its derivative") {
    // frozen binomial series: sqrt(1+u) = 1 + u/2 - u^2/8 + u^3/16 - 5u^4/128
    const Jet s = expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(1), 4);
    CHECK(!s.exact());
    CHECK(s.order() == 4);
    CHECK(s.coefficient({0}) == q(1));
    CHECK(s.coefficient({1}) == q(1, 2));
    CHECK(s.coefficient({2}) == q(-1, 8));
    CHECK(s.coefficient({3}) == q(1, 16));
    CHECK(s.coefficient({4}) == q(-5, 128));

    // derivative drops the certified order and matches (1/2)(1+u)^{-1/2}
    const Jet ds = s.derivative(0);
    CHECK(ds.order() == 3);
    const Jet half_recip_sqrt =
        expand_algebraic(AlgebraicExpr::pow_affine(q(1), q(0), Rational(-1, 2)), q(1), 3) * q(1, 2);
    CHECK(same_terms(ds, half_recip_sqrt));
}

TEST_CASE("frozen algebraic expansions") {
    const Jet r = expand_algebraic(AlgebraicExpr::reciprocal_affine(q(1), q(0)), q(1), 2);
    CHECK(r.coefficient({0}) == q(1));
    CHECK(r.coefficient({1}) == q(-1));
    CHECK(r.coefficient({2}) == q(1));

    CHECK_THROWS_AS((void)expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(0), 2), Error);
    try {
        (void)expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(0), 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularBasepoint);
    }

    const Jet e = expand_algebraic(AlgebraicExpr::exp_affine(q(2)), q(0), 3);
    CHECK(e.coefficient({0}) == q(1));
    CHECK(e.coefficient({1}) == q(2));
    CHECK(e.coefficient({2}) == q(2));
    CHECK(e.coefficient({3}) == q(4, 3));
    CHECK_THROWS_AS((void)expand_algebraic(AlgebraicExpr::exp_affine(q(2)), q(1), 3), Error);

    // sqrt of a negative rational square lands on the imaginary axis
    const Jet sn = expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(-4), 1);
    CHECK(sn.coefficient({0}) == Scalar::from_gauss(GaussRational(Rational(0), Rational(2))));

    // integer powers of affine arguments are exact polynomials
    const Jet cube = expand_algebraic(AlgebraicExpr::pow_affine(q(1), q(0), Rational(3)), q(2), 5);
    CHECK(cube.exact());
    CHECK(cube.coefficient({0}) == q(8));
    CHECK(cube.coefficient({1}) == q(12));
    CHECK(cube.coefficient({2}) == q(6));
    CHECK(cube.coefficient({3}) == q(1));

    const Jet half = expand_algebraic(AlgebraicExpr::pow_affine(q(1), q(0), Rational(1, 2)), q(4), 1);
    CHECK(half.coefficient({0}) == q(2));
    CHECK(half.coefficient({1}) == q(1, 4));

    CHECK_THROWS_AS((void)expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(2), 2), Error);
    try {
        (void)expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(2), 2);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotRepresentable);
    }

    // constant expressions come back exact regardless of the order request
    const Jet c = expand_algebraic(AlgebraicExpr::sqrt_affine(q(0), q(9)), q(7), 10);
    CHECK(c.exact());
    CHECK(c.constant_term() == q(3));
}

TEST_CASE("approx-mode expansion agrees with exact embedding") {
    const Jet exact = expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(1), 6);
    const Jet approx = expand_algebraic(
        AlgebraicExpr::sqrt_affine(Scalar::approx(1.0), Scalar::approx(0.0)), Scalar::approx(1.0), 6);
    for (const auto& [e, c] : exact.terms()) {
        const auto z = approx.coefficient(e).to_complex();
        CHECK(std::abs(z - c.to_complex()) < 1e-14);
    }
}

TEST_CASE("series reciprocal inverts a unit jet") {
    const Jet x = Jet::coordinate({q(1)}, 0); // 1 + u about basepoint 1
    const Jet r = x.reciprocal(5);
    const Jet expected = expand_algebraic(AlgebraicExpr::reciprocal_affine(q(1), q(0)), q(1), 5);
    CHECK(same_terms(r, expected));
    CHECK((r * x).truncated(5).constant_term() == q(1));
    CHECK((r * x).truncated(5).terms().size() == 1);

    CHECK_THROWS_AS((void)x.reciprocal(), Error); // exact non-constant needs a target order
    const Jet z = Jet::coordinate(origin(1), 0);
    CHECK_THROWS_AS((void)z.reciprocal(4), Error); // no unit constant term

    // reciprocal of an exact constant stays exact
    const Jet c = Jet::constant(origin(1), q(4), 0, true);
    CHECK(c.reciprocal().exact());
    CHECK(c.reciprocal().constant_term() == q(1, 4));
}

TEST_CASE("composition substitutes inner jets") {
    // sqrt(1 + u^2) via composing the sqrt jet with an inner polynomial
    const Jet outer = expand_algebraic(AlgebraicExpr::sqrt_affine(q(1), q(0)), q(1), 4);
    const Jet inner = poly(1, {{{0}, q(1)}, {{2}, q(1)}}); // 1 + u^2 about 0
    const Jet composed = outer.compose({inner});
    CHECK(composed.order() == 4);
    CHECK(!composed.exact());
    CHECK(composed.coefficient({0}) == q(1));
    CHECK(composed.coefficient({2}) == q(1, 2));
    CHECK(composed.coefficient({4}) == q(-1, 8));
    CHECK(composed.coefficient({1}).is_zero());
    CHECK(composed.coefficient({3}).is_zero());

    // inner value must hit the outer basepoint
    const Jet bad = poly(1, {{{0}, q(2)}, {{1}, q(1)}});
    CHECK_THROWS_AS((void)outer.compose({bad}), Error);

    // inner jets may live in a bigger ambient space
    const Jet inner2 = poly(2, {{{0, 0}, q(1)}, {{1, 1}, q(3)}});
    const Jet lifted = outer.compose({inner2});
    CHECK(lifted.nvars() == 2);
    CHECK(lifted.coefficient({1, 1}) == q(3, 2));
}

TEST_CASE("polynomial composition is exact and associative with evaluation") {
    std::mt19937_64 rng(5150u);
    for (int trial = 0; trial < 25; ++trial) {
        Jet outer = random_poly(rng, 2, 3);
        Jet g0 = random_poly(rng, 2, 2);
        Jet g1 = random_poly(rng, 2, 2);
        // align inner constant terms with the outer basepoint (origin)
        g0 -= g0.constant_term();
        g1 -= g1.constant_term();
        const Jet composed = outer.compose({g0, g1});
        CHECK(composed.exact());
        const std::vector<Scalar> u{q(1, 3), q(-1, 2)};
        const Scalar direct = outer.evaluate({g0.evaluate(u), g1.evaluate(u)});
        CHECK(composed.evaluate(u) == direct);
    }
}

TEST_CASE("second-order symmetric operator annihilates the shifted square") {
    // S = Dx^2 + Dx Dy + Dy^2 applied to (y + j x)^2 for a primitive cube root j
    const Scalar j = Scalar::root_of_unity(3);
    std::vector<Scalar> b{Scalar::zero_like(j), Scalar::zero_like(j)};
    const Jet x = Jet::coordinate(b, 0);
    const Jet y = Jet::coordinate(b, 1);
    const Jet f = (y + x * j).pow(2);

    DiffOperator S(2);
    S.add_term({2, 0}, Scalar::one_like(j));
    S.add_term({1, 1}, Scalar::one_like(j));
    S.add_term({0, 2}, Scalar::one_like(j));
    CHECK(S.apply(f).is_zero());

    // same operator on x^2 y^2
    const Jet g = x.pow(2) * y.pow(2);
    const Jet Sg = S.apply(g);
    CHECK(Sg.coefficient({2, 0}) == Scalar::from_int_like(j, 2));
    CHECK(Sg.coefficient({1, 1}) == Scalar::from_int_like(j, 4));
    CHECK(Sg.coefficient({0, 2}) == Scalar::from_int_like(j, 2));
    CHECK(Sg.terms().size() == 3);
}

TEST_CASE("symmetrized power operators") {
    // T_k = sum_j D_j^k + (-1)^k (sum_j D_j)^k at n = 2, k = 2:
    // expect 2Dx^2 + 2DxDy + 2Dy^2
    DiffOperator sum(2);
    sum.add_term({1, 0}, Scalar::from_int(1));
    sum.add_term({0, 1}, Scalar::from_int(1));
    DiffOperator t2 = DiffOperator::partial(2, 0, 2) + DiffOperator::partial(2, 1, 2) + sum.pow(2);

    DiffOperator expected(2);
    expected.add_term({2, 0}, Scalar::from_int(2));
    expected.add_term({1, 1}, Scalar::from_int(2));
    expected.add_term({0, 2}, Scalar::from_int(2));
    CHECK(t2 == expected);
    CHECK(t2.total_degree() == 2);
}

TEST_CASE("operator composition obeys the Leibniz rule") {
    // Dx o (x Dy) = Dy + x Dx Dy
    const Jet x = Jet::coordinate(origin(2), 0);
    DiffOperator right(2);
    right.add_term({0, 1}, x);
    const DiffOperator composed = DiffOperator::partial(2, 0).compose(right);

    DiffOperator expected(2);
    expected.add_term({0, 1}, Jet::constant(origin(2), q(1), 0, true));
    expected.add_term({1, 1}, x);
    CHECK(composed == expected);

    std::mt19937_64 rng(31337u);
    for (int trial = 0; trial < 20; ++trial) {
        DiffOperator A(2);
        A.add_term({1, 0}, random_poly(rng, 2, 2));
        A.add_term({0, 2}, q(3));
        DiffOperator B(2);
        B.add_term({0, 1}, random_poly(rng, 2, 2));
        const Jet f = random_poly(rng, 2, 4);
        CHECK(A.compose(B).apply(f) == A.apply(B.apply(f)));
    }
}

TEST_CASE("operator application drops the certified order by the degree") {
    DiffOperator t2(2);
    t2.add_term({2, 0}, q(2));
    t2.add_term({1, 1}, q(2));
    t2.add_term({0, 2}, q(2));
    std::mt19937_64 rng(1u);
    Jet p = random_poly(rng, 2, 4);
    p.set_coefficient({3, 3}, q(1)); // push the degree past the cutoff
    const Jet f = p.truncated(5);
    CHECK(!f.exact());
    const Jet g = t2.apply(f);
    CHECK(g.order() == 3);
}

TEST_CASE("hamiltonian operator of a polynomial") {
    // f = -y^3 gives 3y^2 Dx, three times the field y^2 Dx
    const Jet y = Jet::coordinate(origin(2), 1);
    const Jet f = -(y.pow(3));
    const DiffOperator h = hamiltonian_operator(f);

    DiffOperator expected(2);
    expected.add_term({1, 0}, y.pow(2) * q(3));
    CHECK(h == expected);
}

TEST_CASE("cyclotomic polynomial jets") {
    const Jet p3 = phi_m(3);
    CHECK(p3.exact());
    CHECK(p3.nvars() == 1);
    CHECK(p3.coefficient({0}) == q(1));
    CHECK(p3.coefficient({1}) == q(1));
    CHECK(p3.coefficient({2}) == q(1));
    const Jet p12 = phi_m(12);
    CHECK(p12.coefficient({4}) == q(1));
    CHECK(p12.coefficient({2}) == q(-1));
    CHECK(p12.coefficient({0}) == q(1));
    CHECK(p12.terms().size() == 3);
}
