#pragma once

#include <chambar/jet.hpp>
#include <chambar/scalar.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace chambar {

/// Formal linear combination of monomials in the partials d/dx_1..d/dx_n.
/// A coefficient is either a Scalar (constant, basepoint-free) or a Jet in
/// the same ambient space (then application requires matching basepoints).
class DiffOperator {
public:
    using Index = std::vector<std::uint32_t>;
    using Coefficient = std::variant<Scalar, Jet>;

    explicit DiffOperator(std::size_t nvars);

    static DiffOperator partial(std::size_t nvars, std::size_t var, unsigned power = 1);

    std::size_t nvars() const { return nvars_; }
    const std::map<Index, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max total derivative degree across terms; 0 for the zero operator.
    int total_degree() const;
    bool constant_coefficients() const;

    void add_term(const Index& dx, const Scalar& c);
    void add_term(const Index& dx, const Jet& c);

    Jet apply(const Jet& f) const;
    DiffOperator compose(const DiffOperator& rhs) const;
    DiffOperator pow(unsigned k) const;

    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    DiffOperator& operator-=(const DiffOperator& o);
    DiffOperator& operator*=(const Scalar& s);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(DiffOperator a, const Scalar& s) { return a *= s; }
    friend DiffOperator operator*(const Scalar& s, DiffOperator a) { return a *= s; }

    bool operator==(const DiffOperator& o) const;
    bool operator!=(const DiffOperator& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t nvars_;
    std::map<Index, Coefficient> terms_;

    void insert(const Index& dx, const Coefficient& c);
    void normalize();
};

int total_degree_index(const DiffOperator::Index& dx);

/// The field of the polynomial f in two variables written as an operator:
/// (df/dx) d/dy - (df/dy) d/dx.
DiffOperator hamiltonian_operator(const Jet& f);

/// The polynomial obtained by substituting the coordinate z_j for each
/// d/dx_j: an exact jet about the origin. Constant coefficients only
/// (BadInput otherwise).
Jet operator_symbol(const DiffOperator& op);

} // namespace chambar
