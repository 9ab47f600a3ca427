#include <doctest.h>

#include <chambar/cyclotomic.hpp>
#include <chambar/error.hpp>
#include <chambar/rational.hpp>
#include <chambar/scalar.hpp>

#include <complex>
#include <random>
#include <vector>

using namespace chambar;

namespace {

int moebius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

GaussPoly t_pow_minus_one(unsigned long k) {
    GaussPoly p(k + 1, GaussRational{});
    p[0] = GaussRational{Rational(-1), Rational(0)};
    p[k] = GaussRational{Rational(1), Rational(0)};
    return p;
}

// Independent route to the m-th cyclotomic polynomial: the Moebius product
//   prod_{d | m} (t^{m/d} - 1)^{mu(d)},
// assembled as numerator/denominator and divided exactly at the end.
std::vector<Rational> cyclotomic_by_moebius(unsigned long m) {
    GaussPoly num{GaussRational{Rational(1), Rational(0)}};
    GaussPoly den{GaussRational{Rational(1), Rational(0)}};
    for (unsigned long d : divisors_of(m)) {
        const int mu = moebius(d);
        if (mu == 1) num = gpoly_mul(num, t_pow_minus_one(m / d));
        if (mu == -1) den = gpoly_mul(den, t_pow_minus_one(m / d));
    }
    auto [q, r] = gpoly_divmod(num, den);
    REQUIRE(gpoly_degree(r) < 0);
    std::vector<Rational> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        REQUIRE(c.im == 0);
        out.push_back(c.re);
    }
    return out;
}

Scalar random_exact(std::mt19937_64& rng, unsigned long m, bool gauss_coeffs) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    const unsigned long deg = euler_phi(m);
    Scalar acc = Scalar::zero_like(Scalar::root_of_unity(m));
    for (unsigned long k = 0; k < deg; ++k) {
        Rational re(num(rng), den(rng));
        Rational im = gauss_coeffs ? Rational(num(rng), den(rng)) : Rational(0);
        re.canonicalize();
        im.canonicalize();
        acc += Scalar::from_gauss(GaussRational{re, im}) * Scalar::root_of_unity_power(m, k);
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic polynomials match the Moebius-product route") {
    for (unsigned long m = 1; m <= 36; ++m) {
        CAPTURE(m);
        const auto& phi = cyclotomic_polynomial(m);
        const auto oracle = cyclotomic_by_moebius(m);
        REQUIRE(phi.size() == oracle.size());
        CHECK(phi.size() == euler_phi(m) + 1);
        for (std::size_t k = 0; k < phi.size(); ++k) CHECK(phi[k] == oracle[k]);
    }
}

TEST_CASE("pinned cyclotomic polynomials") {
    // frozen: computed once via the Moebius product above
    CHECK(cyclotomic_polynomial(3) == std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
    CHECK(cyclotomic_polynomial(12) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("cube root of unity relations") {
    const Scalar j = Scalar::root_of_unity(3);
    CHECK((j * j * j).is_one());
    CHECK((j * j.pow(2)).is_one());
    CHECK((Scalar::from_int(1) + j + j.pow(2)).is_zero());
    CHECK(!j.is_rational());
    CHECK((j + j.pow(2)).is_rational());
    CHECK((j + j.pow(2)).rational_value() == Rational(-1));
}

TEST_CASE("primitive root-of-unity power sums vanish") {
    for (unsigned long m : {3ul, 4ul, 6ul, 12ul}) {
        CAPTURE(m);
        for (unsigned long k = 1; k < m; ++k) {
            CAPTURE(k);
            Scalar sum = Scalar::from_int(0);
            for (unsigned long p = 0; p < m; ++p) sum += Scalar::root_of_unity_power(m, p * k);
            CHECK(sum.is_zero());
        }
        Scalar full = Scalar::from_int(0);
        for (unsigned long p = 0; p < m; ++p) full += Scalar::root_of_unity_power(m, p * m);
        CHECK(full == Scalar::from_int(static_cast<long>(m)));
    }
}

TEST_CASE("exact arithmetic satisfies the ring axioms") {
    std::mt19937_64 rng(20260817u);
    for (unsigned long m : {3ul, 5ul, 12ul}) {
        CAPTURE(m);
        for (int trial = 0; trial < 40; ++trial) {
            const Scalar a = random_exact(rng, m, true);
            const Scalar b = random_exact(rng, m, true);
            const Scalar c = random_exact(rng, m, true);
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((a - a).is_zero());
            CHECK((a + (-a)).is_zero());
        }
    }
}

TEST_CASE("division inverts multiplication away from zero divisors") {
    std::mt19937_64 rng(4096u);
    // prime and odd orders give a field; for m = 12 stay inside the rational
    // span where invertibility is generic
    for (unsigned long m : {3ul, 5ul, 7ul}) {
        CAPTURE(m);
        for (int trial = 0; trial < 25; ++trial) {
            const Scalar a = random_exact(rng, m, true);
            const Scalar b = random_exact(rng, m, true);
            if (b.is_zero()) continue;
            CHECK(((a / b) * b) == a);
            CHECK((b * b.inverse()).is_one());
        }
    }
    const Scalar z = Scalar::root_of_unity(12) + Scalar::from_int(2);
    CHECK(((z / z)).is_one());
}

TEST_CASE("zero divisors in composite orders are reported") {
    // t^2 + 1 divides Phi_12's modulus companion ring at order 4: (t-i)(t+i) = 0
    const Scalar zeta = Scalar::root_of_unity(4);
    const Scalar i = Scalar::imaginary_unit();
    const Scalar lhs = zeta - i.embedded(4);
    const Scalar rhs = zeta + i.embedded(4);
    CHECK(!lhs.is_zero());
    CHECK(!rhs.is_zero());
    CHECK((lhs * rhs).is_zero());
    CHECK_THROWS_AS((void)lhs.inverse(), Error);
    try {
        (void)lhs.inverse();
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("embedding into a larger cyclotomic order preserves value") {
    const Scalar j3 = Scalar::root_of_unity(3);
    CHECK(j3.embedded(12) == Scalar::root_of_unity_power(12, 4));
    CHECK(j3.embedded(6) == Scalar::root_of_unity_power(6, 2));
    // arithmetic auto-embeds when one order divides the other
    const Scalar mixed = j3 + Scalar::root_of_unity(12);
    CHECK(mixed.cyclotomic_order() == 12);
    CHECK(mixed == Scalar::root_of_unity_power(12, 4) + Scalar::root_of_unity(12));
    // incomparable orders require an explicit re-embedding
    CHECK_THROWS_AS((void)(Scalar::root_of_unity(4) + Scalar::root_of_unity(3)), Error);
    CHECK(Scalar::root_of_unity(4).embedded(12) + j3.embedded(12) ==
          Scalar::root_of_unity_power(12, 3) + Scalar::root_of_unity_power(12, 4));
}

TEST_CASE("numeric embedding matches exact arithmetic") {
    std::mt19937_64 rng(777u);
    for (unsigned long m : {3ul, 12ul}) {
        for (int trial = 0; trial < 30; ++trial) {
            const Scalar a = random_exact(rng, m, true);
            const Scalar b = random_exact(rng, m, true);
            const std::complex<double> za = a.to_complex();
            const std::complex<double> zb = b.to_complex();
            const std::complex<double> prod = (a * b).to_complex();
            const double scale = std::max(1.0, std::abs(za) * std::abs(zb));
            CHECK(std::abs(prod - za * zb) <= 1e-12 * scale);
            CHECK(std::abs((a + b).to_complex() - (za + zb)) <= 1e-12 * scale);
        }
    }
    const std::complex<double> z12 = Scalar::root_of_unity(12).to_complex();
    CHECK(std::abs(z12 - std::polar(1.0, std::acos(-1.0) / 6.0)) < 1e-14);
}

TEST_CASE("approx mode arithmetic") {
    const Scalar a = Scalar::approx({1.5, -2.0});
    const Scalar b = Scalar::approx({0.25, 1.0});
    CHECK((a * b).mode() == Scalar::Mode::Approx);
    CHECK(std::abs((a * b).to_complex() - std::complex<double>(1.5, -2.0) * std::complex<double>(0.25, 1.0)) < 1e-15);
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    // exact and approx never mix silently
    CHECK_THROWS_AS((void)(a + Scalar::from_int(1)), Error);
    CHECK(std::abs((a + Scalar::from_int(1).to_approx()).to_complex() - std::complex<double>(2.5, -2.0)) < 1e-15);
}

TEST_CASE("negative powers") {
    const Scalar z = Scalar::root_of_unity(12);
    CHECK(z.pow(-1) == z.pow(11));
    CHECK(z.pow(-5) == z.pow(7));
    CHECK(z.pow(0).is_one());
    const Scalar r = Scalar::from_rational(Rational(3, 4));
    CHECK(r.pow(-2) == Scalar::from_rational(Rational(16, 9)));
}

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-2.5") == Rational(-5, 2));
    CHECK(rational_to_string(Rational(-5, 2)) == "-5/2");
    CHECK(rational_to_string(Rational(4)) == "4");

    CHECK(exact_nth_root(Rational(64), 3) == Rational(4));
    CHECK(exact_nth_root(Rational(4, 9), 2) == Rational(2, 3));
    CHECK(!exact_nth_root(Rational(2), 2).has_value());
    CHECK(!exact_nth_root(Rational(-4), 2).has_value());
    CHECK(exact_nth_root(Rational(-8), 3) == Rational(-2));

    CHECK(generalized_binomial(Rational(1, 2), 0) == Rational(1));
    CHECK(generalized_binomial(Rational(1, 2), 1) == Rational(1, 2));
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(generalized_binomial(Rational(1, 2), 3) == Rational(1, 16));
    CHECK(generalized_binomial(Rational(-1), 3) == Rational(-1));
}
