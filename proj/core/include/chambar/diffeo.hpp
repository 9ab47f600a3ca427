#pragma once

#include <chambar/diff_operator.hpp>
#include <chambar/jet.hpp>
#include <chambar/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace chambar {

/// d^2/dx^2 + d^2/dxdy + d^2/dy^2: the second-order constraint a planar map
/// component must satisfy to stay compatible with the standard translation
/// triple (d/dx, d/dy, -(d/dx + d/dy)).
DiffOperator compatibility_second_order();
/// d^3/dx^2dy + d^3/dxdy^2: the companion third-order constraint.
DiffOperator compatibility_third_order();

/// sum_j d^k/dx_j^k + (-1)^k (sum_j d/dx_j)^k with the power expanded
/// multinomially. Its symbol is the k-th power sum of the n+1 quantities
/// z_1, ..., z_n, -(z_1 + ... + z_n). Requires k >= 2 (BadInput).
DiffOperator power_sum_operator(std::size_t nvars, unsigned k);

/// Exact basis of the joint kernel of `ops` on the space of polynomials of
/// total degree <= max_degree in nvars variables: stacks the operator
/// matrices over the monomial basis and extracts the nullspace. All
/// arithmetic runs in Q(j) (cyclotomic order 3); the returned jets are exact
/// polynomials about the origin, one per nullspace generator, in the
/// deterministic order inherited from the graded monomial basis.
std::vector<Jet> kernel_basis(const std::vector<DiffOperator>& ops, std::size_t nvars,
                              int max_degree);

/// verified_order is empty for an exact certificate; for truncated or
/// numeric input it is the total (x, y, t)-order to which the identity was
/// checked.
struct Compatible {
    std::optional<int> verified_order;
};
/// First failed check: `check` names it ("second-order operator",
/// "third-order operator" or "translation identity") and `residual` is the
/// nonzero image — an operator applied to the offending component, or the
/// identity defect as a jet in (x, y, t).
struct Incompatible {
    std::size_t component = 0;
    std::string check;
    Jet residual;
};
using CompatibilityVerdict = std::variant<Compatible, Incompatible>;

std::string compatibility_kind_name(const CompatibilityVerdict& v);

/// Decides whether the planar map F = (F[0], F[1]) preserves the barycentric
/// identity of the standard translation triple, i.e. whether
/// F(x+t, y) + F(x, y+t) + F(x-t, y-t) = 3 F(x, y) holds identically. Two
/// routes run and must agree: the identity expanded as a jet in (x, y, t),
/// and the kernel criterion that both operators above annihilate each
/// component — equivalently, each component minus its affine part lies in
/// span{(y+jx)^2, (y+j^2x)^2, xy(y-x)}. Exact polynomial input yields an
/// exact verdict; truncated jets are checked to order min(component order,
/// K_t) and numeric coefficients are compared against `tol`. Invertibility
/// of F is not required and not checked here.
CompatibilityVerdict check_compatible(const std::vector<Jet>& F, int K_t, double tol = 1e-9);

/// One summand of an ideal-membership certificate: `cofactor` multiplies the
/// degree-k generator.
struct MembershipCertificate {
    unsigned generator_k = 0;
    Jet cofactor;
};
/// certificates[j] reconstructs z_{j+1}^p as sum_k cofactor * P_k where
/// P_k is the symbol of power_sum_operator(nvars, k), k = 2..degree_cap.
struct Contained {
    int degree_cap = 0;
    std::vector<std::vector<MembershipCertificate>> certificates;
};
struct NotFoundWithin {
    int degree_cap = 0;
};
using MembershipResult = std::variant<Contained, NotFoundWithin>;

/// Tests whether every pure power z_j^p lies in the ideal generated by the
/// power-sum symbols P_k, k >= 2, using an exact linear solve for cofactors
/// of degree <= cap - k. With an explicit degree_cap only that cap is tried;
/// otherwise the cap sweeps p, p+1, ..., p+6 before giving up. Requires
/// nvars >= 1 and p >= 1 (BadInput).
MembershipResult pure_power_membership(std::size_t nvars, unsigned p,
                                       std::optional<int> degree_cap = std::nullopt);

/// (sum_j u_j z_j, sum_j u_j z_j^2, ..., sum_j u_j z_j^len): the first `len`
/// power moments of the points z with weights u.
std::vector<Rational> moment_vector(const std::vector<Rational>& z,
                                    const std::vector<Rational>& u);

/// A strictly positive weight vector u with moment_vector(z, u) = 0 when one
/// exists, found by exact kernel extraction plus vertex enumeration of the
/// normalized cone; nullopt when the kernel misses the positive orthant.
std::optional<std::vector<Rational>> positive_moment_kernel(const std::vector<Rational>& z);

struct PositivityCounterexample {
    std::vector<Rational> z;
    std::vector<Rational> u;
};
/// Outcome of the randomized falsification run: every sampled nonzero z
/// landed in one of the two consistent buckets unless a counterexample is
/// present.
struct PositivityReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::size_t trivial_kernel = 0;      // moment matrix of full rank
    std::size_t no_positive_vector = 0;  // kernel nontrivial but misses the positive orthant
    std::optional<PositivityCounterexample> counterexample;
    bool consistent() const { return !counterexample.has_value(); }
};

/// Samples nonzero rational tuples z of length n+1 and checks that none
/// admits a strictly positive u with moment_vector(z, u) = 0. A randomized
/// falsification harness for instances, not a proof. Requires 1 <= n <= 4
/// (BadInput).
PositivityReport vandermonde_positivity(std::size_t n, std::size_t samples = 1000,
                                        std::uint64_t seed = 2026);

} // namespace chambar
