#include <chambar/jet.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <climits>
#include <sstream>
#include <utility>

namespace chambar {

int total_degree(const Jet::Exponent& e) {
    long d = 0;
    for (auto v : e) d += v;
    return static_cast<int>(d);
}

namespace {

int effective_order(const Jet& j) { return j.exact() ? INT_MAX : j.order(); }

} // namespace

Jet::Jet(std::vector<Scalar> basepoint, int order, bool exact)
    : basepoint_(std::move(basepoint)), order_(exact ? 0 : order), exact_(exact) {
    if (basepoint_.empty()) throw Error(ErrorCode::BadInput, "jet needs at least one variable");
}

Jet Jet::constant(std::vector<Scalar> basepoint, const Scalar& value, int order, bool exact) {
    Jet r(std::move(basepoint), order, exact);
    r.insert_term(Exponent(r.nvars(), 0), value);
    r.normalize();
    return r;
}

Jet Jet::coordinate(std::vector<Scalar> basepoint, std::size_t var) {
    Jet r(std::move(basepoint), 1, true);
    if (var >= r.nvars()) throw Error(ErrorCode::BadInput, "coordinate index out of range");
    r.insert_term(Exponent(r.nvars(), 0), r.basepoint_[var]);
    Exponent e(r.nvars(), 0);
    e[var] = 1;
    r.insert_term(e, Scalar::one_like(r.basepoint_[var]));
    r.normalize();
    return r;
}

int Jet::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Scalar Jet::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

Scalar Jet::coefficient(const Exponent& e) const {
    if (e.size() != nvars()) throw Error(ErrorCode::AmbientMismatch, "exponent length differs from nvars");
    auto it = terms_.find(e);
    if (it != terms_.end()) return it->second;
    return Scalar::zero_like(basepoint_.front());
}

void Jet::set_coefficient(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars()) throw Error(ErrorCode::AmbientMismatch, "exponent length differs from nvars");
    if (!exact_ && total_degree(e) > order_)
        throw Error(ErrorCode::BadInput, "term degree exceeds the certified order");
    terms_.erase(e);
    insert_term(e, c);
    normalize();
}

void Jet::insert_term(const Exponent& e, const Scalar& c) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
}

void Jet::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || (!exact_ && total_degree(it->first) > order_))
            it = terms_.erase(it);
        else
            ++it;
    }
    if (exact_) order_ = std::max(degree(), 0);
}

void Jet::require_compatible(const Jet& o) const {
    if (nvars() != o.nvars()) throw Error(ErrorCode::AmbientMismatch, "jet ambient dimensions differ");
    for (std::size_t k = 0; k < nvars(); ++k)
        if (!(basepoint_[k] == o.basepoint_[k]))
            throw Error(ErrorCode::BasepointMismatch, "jet basepoints differ");
}

Jet Jet::truncated(int new_order) const {
    Jet r = *this;
    if (r.exact_) {
        if (new_order >= 0 && degree() <= new_order) return r;
        r.exact_ = false;
        r.order_ = new_order;
    } else {
        r.order_ = std::min(order_, new_order);
    }
    r.normalize();
    return r;
}

Jet Jet::derivative(std::size_t var) const {
    if (var >= nvars()) throw Error(ErrorCode::BadInput, "derivative variable out of range");
    Jet r(basepoint_, exact_ ? 0 : order_ - 1, exact_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent e2 = e;
        e2[var] -= 1;
        r.insert_term(e2, c * Scalar::from_int_like(c, static_cast<long>(e[var])));
    }
    r.normalize();
    return r;
}

Jet Jet::compose(const std::vector<Jet>& inner) const {
    if (inner.size() != nvars())
        throw Error(ErrorCode::WrongArity, "compose needs one inner jet per outer variable");
    const Jet& g0 = inner.front();
    for (const Jet& g : inner) {
        if (g.nvars() != g0.nvars())
            throw Error(ErrorCode::AmbientMismatch, "inner jets live in different ambient spaces");
        for (std::size_t k = 0; k < g.nvars(); ++k)
            if (!(g.basepoint_[k] == g0.basepoint_[k]))
                throw Error(ErrorCode::BasepointMismatch, "inner jets have different basepoints");
    }
    for (std::size_t j = 0; j < nvars(); ++j)
        if (!(inner[j].constant_term() == basepoint_[j]))
            throw Error(ErrorCode::BasepointMismatch,
                        "inner jet value differs from the outer basepoint coordinate");

    bool rexact = exact_;
    int rorder = effective_order(*this);
    for (const Jet& g : inner) {
        rexact = rexact && g.exact();
        rorder = std::min(rorder, effective_order(g));
    }
    Jet result(g0.basepoint_, rexact ? 0 : rorder, rexact);
    if (!rexact && rorder < 0) return result;

    std::vector<Jet> delta;
    delta.reserve(inner.size());
    for (std::size_t j = 0; j < inner.size(); ++j) {
        Jet d = inner[j];
        d -= basepoint_[j];
        delta.push_back(std::move(d));
    }

    const Jet one = Jet::constant(g0.basepoint_, Scalar::one_like(basepoint_.front()), 0, true);
    std::vector<std::vector<Jet>> pows(inner.size(), {one});

    for (const auto& [e, c] : terms_) {
        // each displacement factor has valuation >= 1, so this term cannot
        // contribute below total degree sum(e)
        if (!rexact && total_degree(e) > rorder) continue;
        Jet prod = one;
        for (std::size_t j = 0; j < e.size(); ++j) {
            auto& pj = pows[j];
            while (pj.size() <= e[j]) {
                Jet next = pj.back() * delta[j];
                if (!rexact) next = next.truncated(rorder);
                pj.push_back(std::move(next));
            }
            if (e[j] > 0) prod = prod * pj[e[j]];
            if (!rexact) prod = prod.truncated(rorder);
        }
        prod *= c;
        result += prod;
    }
    return result;
}

Jet Jet::reciprocal(int target_order) const {
    const Scalar c = constant_term();
    if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "jet has no unit constant term");
    const Scalar cinv = c.inverse();
    if (exact_ && degree() <= 0) {
        Jet r(basepoint_, 0, true);
        r.insert_term(Exponent(nvars(), 0), cinv);
        r.normalize();
        return r;
    }
    int target;
    if (exact_) {
        if (target_order < 0)
            throw Error(ErrorCode::BadInput,
                        "series inverse of an exact non-constant jet needs a target order");
        target = target_order;
    } else {
        target = target_order >= 0 ? std::min(order_, target_order) : order_;
    }
    if (target < 0) return Jet(basepoint_, target, false);

    Jet capped = *this;
    capped.exact_ = false;
    capped.order_ = target;
    capped.normalize();

    const Jet one = Jet::constant(basepoint_, Scalar::one_like(c), 0, true);
    Jet h = one - capped * cinv; // valuation >= 1
    Jet s = one;
    for (int k = 0; k < target; ++k) s = one + h * s;
    Jet r = s * cinv;
    r.exact_ = false;
    r.order_ = target;
    r.normalize();
    return r;
}

Jet Jet::pow(unsigned k) const {
    Jet acc = Jet::constant(basepoint_, Scalar::one_like(basepoint_.front()), 0, true);
    Jet base = *this;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

Scalar Jet::evaluate(const std::vector<Scalar>& displacement) const {
    if (displacement.size() != nvars())
        throw Error(ErrorCode::AmbientMismatch, "displacement length differs from nvars");
    Scalar acc = Scalar::zero_like(basepoint_.front());
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) term *= displacement[j].pow(static_cast<long>(e[j]));
        acc += term;
    }
    return acc;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    require_compatible(o);
    const bool rexact = exact_ && o.exact_;
    const int rorder = rexact ? 0 : std::min(effective_order(*this), effective_order(o));
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    exact_ = rexact;
    order_ = rorder;
    normalize();
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    require_compatible(o);
    const bool rexact = exact_ && o.exact_;
    const int rorder = rexact ? 0 : std::min(effective_order(*this), effective_order(o));
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    exact_ = rexact;
    order_ = rorder;
    normalize();
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    a.require_compatible(b);
    const bool rexact = a.exact_ && b.exact_;
    const int rorder = rexact ? 0 : std::min(effective_order(a), effective_order(b));
    Jet r(a.basepoint_, rorder, rexact);
    if (!rexact && rorder < 0) return r;
    for (const auto& [ea, ca] : a.terms_) {
        const int da = total_degree(ea);
        if (!rexact && da > rorder) continue;
        for (const auto& [eb, cb] : b.terms_) {
            if (!rexact && da + total_degree(eb) > rorder) continue;
            Jet::Exponent e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.insert_term(e, ca * cb);
        }
    }
    r.normalize();
    return r;
}

Jet& Jet::operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
}

Jet& Jet::operator*=(const Scalar& s) {
    for (auto& [e, c] : terms_) c *= s;
    normalize();
    return *this;
}

Jet& Jet::operator+=(const Scalar& s) {
    insert_term(Exponent(nvars(), 0), s);
    normalize();
    return *this;
}

Jet& Jet::operator-=(const Scalar& s) {
    insert_term(Exponent(nvars(), 0), -s);
    normalize();
    return *this;
}

bool Jet::operator==(const Jet& o) const {
    if (nvars() != o.nvars() || order_ != o.order_ || exact_ != o.exact_) return false;
    for (std::size_t k = 0; k < nvars(); ++k)
        if (!(basepoint_[k] == o.basepoint_[k])) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

std::string Jet::to_string() const {
    std::ostringstream os;
    os << "jet[n=" << nvars() << " order=" << order_ << (exact_ ? " exact" : "") << "]";
    if (terms_.empty()) {
        os << " 0";
        return os.str();
    }
    for (const auto& [e, c] : terms_) {
        os << " + " << c.to_string();
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0) {
                os << "*u" << j;
                if (e[j] > 1) os << "^" << e[j];
            }
    }
    return os.str();
}

double max_modulus(const Jet& j) {
    double m = 0.0;
    for (const auto& [e, c] : j.terms()) m = std::max(m, c.magnitude());
    return m;
}

bool effectively_zero(const Jet& j, double tol) {
    for (const auto& [e, c] : j.terms()) {
        if (c.exact()) {
            if (!c.is_zero()) return false;
        } else if (c.magnitude() > tol) {
            return false;
        }
    }
    return true;
}

Jet phi_m(unsigned long m) {
    const auto& coeffs = cyclotomic_polynomial(m);
    Jet r({Scalar::from_int(0)}, 0, true);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0)
            r.set_coefficient({static_cast<std::uint32_t>(k)}, Scalar::from_rational(coeffs[k]));
    return r;
}

} // namespace chambar
