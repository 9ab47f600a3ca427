#include <chambar/diff_operator.hpp>

#include <chambar/error.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace chambar {

namespace {

bool coeff_is_zero(const DiffOperator::Coefficient& c) {
    if (const auto* s = std::get_if<Scalar>(&c)) return s->is_zero();
    return std::get<Jet>(c).is_zero();
}

Jet promote(const DiffOperator::Coefficient& c, const Jet& shape) {
    if (const auto* s = std::get_if<Scalar>(&c))
        return Jet::constant(shape.basepoint(), *s, 0, true);
    return std::get<Jet>(c);
}

DiffOperator::Coefficient add_coefficients(const DiffOperator::Coefficient& a,
                                           const DiffOperator::Coefficient& b) {
    const auto* sa = std::get_if<Scalar>(&a);
    const auto* sb = std::get_if<Scalar>(&b);
    if (sa && sb) return *sa + *sb;
    const Jet& shape = sa ? std::get<Jet>(b) : std::get<Jet>(a);
    return promote(a, shape) + promote(b, shape);
}

long binomial_long(std::uint32_t n, std::uint32_t k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b.get_si();
}

} // namespace

DiffOperator::DiffOperator(std::size_t nvars) : nvars_(nvars) {
    if (nvars_ == 0) throw Error(ErrorCode::BadInput, "operator needs at least one variable");
}

DiffOperator DiffOperator::partial(std::size_t nvars, std::size_t var, unsigned power) {
    DiffOperator op(nvars);
    if (var >= nvars) throw Error(ErrorCode::BadInput, "partial index out of range");
    Index dx(nvars, 0);
    dx[var] = power;
    op.add_term(dx, Scalar::from_int(1));
    return op;
}

int DiffOperator::total_degree() const {
    int d = 0;
    for (const auto& [dx, c] : terms_) d = std::max(d, total_degree_index(dx));
    return d;
}

int total_degree_index(const DiffOperator::Index& dx) {
    long d = 0;
    for (auto v : dx) d += v;
    return static_cast<int>(d);
}

bool DiffOperator::constant_coefficients() const {
    for (const auto& [dx, c] : terms_)
        if (!std::holds_alternative<Scalar>(c)) return false;
    return true;
}

void DiffOperator::add_term(const Index& dx, const Scalar& c) { insert(dx, Coefficient(c)); }

void DiffOperator::add_term(const Index& dx, const Jet& c) {
    if (c.nvars() != nvars_)
        throw Error(ErrorCode::AmbientMismatch, "coefficient jet lives in a different ambient space");
    insert(dx, Coefficient(c));
}

void DiffOperator::insert(const Index& dx, const Coefficient& c) {
    if (dx.size() != nvars_)
        throw Error(ErrorCode::AmbientMismatch, "derivative index length differs from nvars");
    auto it = terms_.find(dx);
    if (it == terms_.end())
        terms_.emplace(dx, c);
    else
        it->second = add_coefficients(it->second, c);
    normalize();
}

void DiffOperator::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
}

Jet DiffOperator::apply(const Jet& f) const {
    if (f.nvars() != nvars_)
        throw Error(ErrorCode::AmbientMismatch, "operator and jet ambient dimensions differ");
    if (terms_.empty()) return Jet(f.basepoint(), f.order(), f.exact());
    bool first = true;
    Jet acc(f.basepoint(), 0, false);
    for (const auto& [dx, c] : terms_) {
        Jet g = f;
        for (std::size_t j = 0; j < dx.size(); ++j)
            for (std::uint32_t k = 0; k < dx[j]; ++k) g = g.derivative(j);
        Jet term = std::holds_alternative<Scalar>(c) ? g * std::get<Scalar>(c)
                                                     : std::get<Jet>(c) * g;
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc += term;
        }
    }
    return acc;
}

DiffOperator DiffOperator::compose(const DiffOperator& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw Error(ErrorCode::AmbientMismatch, "operator ambient dimensions differ");
    DiffOperator out(nvars_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            if (std::holds_alternative<Scalar>(cb)) {
                Index e(nvars_);
                for (std::size_t j = 0; j < nvars_; ++j) e[j] = a[j] + b[j];
                if (std::holds_alternative<Scalar>(ca))
                    out.insert(e, std::get<Scalar>(ca) * std::get<Scalar>(cb));
                else
                    out.insert(e, std::get<Jet>(ca) * std::get<Scalar>(cb));
                continue;
            }
            // Leibniz: d^a (g d^b h) = sum_{s<=a} binom(a,s) (d^s g) d^{a-s+b} h
            const Jet& g = std::get<Jet>(cb);
            Index s(nvars_, 0);
            for (;;) {
                long binom = 1;
                for (std::size_t j = 0; j < nvars_; ++j) binom *= binomial_long(a[j], s[j]);
                Jet gs = g;
                for (std::size_t j = 0; j < nvars_; ++j)
                    for (std::uint32_t k = 0; k < s[j]; ++k) gs = gs.derivative(j);
                gs *= Scalar::from_int_like(g.basepoint().front(), binom);
                Jet coeff = std::holds_alternative<Scalar>(ca) ? gs * std::get<Scalar>(ca)
                                                               : std::get<Jet>(ca) * gs;
                Index e(nvars_);
                for (std::size_t j = 0; j < nvars_; ++j) e[j] = a[j] - s[j] + b[j];
                out.insert(e, Coefficient(std::move(coeff)));
                // advance s through the box 0 <= s <= a
                std::size_t j = 0;
                while (j < nvars_ && s[j] == a[j]) {
                    s[j] = 0;
                    ++j;
                }
                if (j == nvars_) break;
                ++s[j];
            }
        }
    }
    return out;
}

DiffOperator DiffOperator::pow(unsigned k) const {
    if (k == 0) {
        DiffOperator id(nvars_);
        Scalar one = Scalar::from_int(1);
        if (!terms_.empty()) {
            const Coefficient& c = terms_.begin()->second;
            one = std::holds_alternative<Scalar>(c)
                      ? Scalar::one_like(std::get<Scalar>(c))
                      : Scalar::one_like(std::get<Jet>(c).basepoint().front());
        }
        id.add_term(Index(nvars_, 0), one);
        return id;
    }
    DiffOperator acc = *this;
    for (unsigned j = 1; j < k; ++j) acc = acc.compose(*this);
    return acc;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& [dx, c] : r.terms_) {
        if (auto* s = std::get_if<Scalar>(&c))
            c = -*s;
        else
            c = -std::get<Jet>(c);
    }
    return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
    if (nvars_ != o.nvars_)
        throw Error(ErrorCode::AmbientMismatch, "operator ambient dimensions differ");
    for (const auto& [dx, c] : o.terms_) insert(dx, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator& DiffOperator::operator*=(const Scalar& s) {
    for (auto& [dx, c] : terms_) {
        if (auto* sc = std::get_if<Scalar>(&c))
            c = *sc * s;
        else
            c = std::get<Jet>(c) * s;
    }
    normalize();
    return *this;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        const auto* sa = std::get_if<Scalar>(&it->second);
        const auto* sb = std::get_if<Scalar>(&jt->second);
        if ((sa == nullptr) != (sb == nullptr)) return false;
        if (sa) {
            if (!(*sa == *sb)) return false;
        } else if (!(std::get<Jet>(it->second) == std::get<Jet>(jt->second))) {
            return false;
        }
    }
    return true;
}

std::string DiffOperator::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [dx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        if (const auto* s = std::get_if<Scalar>(&c))
            os << s->to_string();
        else
            os << std::get<Jet>(c).to_string();
        os << ")";
        for (std::size_t j = 0; j < dx.size(); ++j)
            if (dx[j] > 0) {
                os << "*D" << j;
                if (dx[j] > 1) os << "^" << dx[j];
            }
    }
    return os.str();
}

DiffOperator hamiltonian_operator(const Jet& f) {
    if (f.nvars() != 2)
        throw Error(ErrorCode::AmbientMismatch, "hamiltonian operator needs a two-variable jet");
    DiffOperator op(2);
    op.add_term({0, 1}, f.derivative(0));
    op.add_term({1, 0}, -f.derivative(1));
    return op;
}

Jet operator_symbol(const DiffOperator& op) {
    if (!op.constant_coefficients())
        throw Error(ErrorCode::BadInput, "symbol of an operator with non-constant coefficients");
    Scalar proto = Scalar::from_int(1);
    if (!op.terms().empty()) proto = std::get<Scalar>(op.terms().begin()->second);
    const std::vector<Scalar> origin(op.nvars(), Scalar::zero_like(proto));
    Jet sym(origin, op.total_degree(), proto.exact());
    for (const auto& [dx, c] : op.terms()) sym.set_coefficient(dx, std::get<Scalar>(c));
    return sym;
}

} // namespace chambar
