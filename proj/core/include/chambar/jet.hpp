#pragma once

#include <chambar/scalar.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chambar {

/// Truncated multivariate power series about a basepoint, stored sparsely in
/// displacement form: f(b + u) = sum_e coeff(e) * u^e.
///
/// `order` is the certified truncation order: every coefficient of total
/// degree <= order is trusted. A negative order means the jet carries no
/// certified content at all. When `exact` is set the jet IS the polynomial
/// (no truncation happened anywhere in its history) and the order is kept
/// equal to the polynomial degree purely for bookkeeping.
class Jet {
public:
    using Exponent = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponent, Scalar>;

    Jet(std::vector<Scalar> basepoint, int order, bool exact);

    static Jet constant(std::vector<Scalar> basepoint, const Scalar& value, int order, bool exact);
    /// The coordinate function x_var as a jet: basepoint[var] + u_var. Exact.
    static Jet coordinate(std::vector<Scalar> basepoint, std::size_t var);

    std::size_t nvars() const { return basepoint_.size(); }
    const std::vector<Scalar>& basepoint() const { return basepoint_; }
    int order() const { return order_; }
    bool exact() const { return exact_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max total degree of a stored term; -1 for the zero jet.
    int degree() const;
    Scalar constant_term() const;
    Scalar coefficient(const Exponent& e) const;
    void set_coefficient(const Exponent& e, const Scalar& c);

    Jet truncated(int new_order) const;
    Jet derivative(std::size_t var) const;
    /// Substitute inner[j] for the j-th displacement coordinate. The inner
    /// jets live in a common ambient space (possibly of different dimension)
    /// and must take the value basepoint()[j] at their own basepoint.
    Jet compose(const std::vector<Jet>& inner) const;
    /// Series inverse 1/f for a unit (nonzero constant term). An exact
    /// non-constant input needs an explicit target order.
    Jet reciprocal(int target_order = -1) const;
    Jet pow(unsigned k) const;
    /// Plain polynomial evaluation of the stored terms at a displacement.
    Scalar evaluate(const std::vector<Scalar>& displacement) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator*=(const Scalar& s);
    Jet& operator+=(const Scalar& s);
    Jet& operator-=(const Scalar& s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator*(Jet a, const Scalar& s) { return a *= s; }
    friend Jet operator*(const Scalar& s, Jet a) { return a *= s; }
    friend Jet operator+(Jet a, const Scalar& s) { return a += s; }
    friend Jet operator-(Jet a, const Scalar& s) { return a -= s; }

    bool operator==(const Jet& o) const;
    bool operator!=(const Jet& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<Scalar> basepoint_;
    TermMap terms_;
    int order_ = 0;
    bool exact_ = false;

    void insert_term(const Exponent& e, const Scalar& c);
    void normalize();
    void require_compatible(const Jet& o) const;
};

int total_degree(const Jet::Exponent& e);

/// Largest coefficient magnitude (numeric embedding for exact scalars).
double max_modulus(const Jet& j);
/// Zero test with an absolute tolerance on approx coefficients; exact
/// coefficients must vanish identically.
bool effectively_zero(const Jet& j, double tol);

/// The m-th cyclotomic polynomial as an exact univariate jet about 0.
Jet phi_m(unsigned long m);

} // namespace chambar
