#include <chambar/vector_field.hpp>

#include <chambar/error.hpp>

#include <sstream>
#include <utility>

namespace chambar {

VectorField::VectorField(std::vector<Jet> components) : components_(std::move(components)) {
    if (components_.empty())
        throw Error(ErrorCode::BadInput, "vector field needs at least one component");
    const Jet& first = components_.front();
    if (first.nvars() != components_.size())
        throw Error(ErrorCode::AmbientMismatch,
                    "vector field needs exactly one component per variable");
    bool any_nonzero = false;
    for (const Jet& c : components_) {
        if (c.nvars() != first.nvars())
            throw Error(ErrorCode::AmbientMismatch, "components live in different ambient spaces");
        for (std::size_t k = 0; k < first.nvars(); ++k)
            if (!(c.basepoint()[k] == first.basepoint()[k]))
                throw Error(ErrorCode::BasepointMismatch, "components have different basepoints");
        any_nonzero = any_nonzero || !c.is_zero();
    }
    if (!any_nonzero)
        throw Error(ErrorCode::BadInput, "vector field must have a nonzero component");
}

VectorField VectorField::radial(std::vector<Scalar> basepoint) {
    std::vector<Jet> comps;
    comps.reserve(basepoint.size());
    for (std::size_t k = 0; k < basepoint.size(); ++k)
        comps.push_back(Jet::coordinate(basepoint, k));
    return VectorField(std::move(comps));
}

VectorField VectorField::constant(std::vector<Scalar> basepoint, std::vector<Scalar> v) {
    if (basepoint.size() != v.size())
        throw Error(ErrorCode::AmbientMismatch, "constant vector length differs from nvars");
    std::vector<Jet> comps;
    comps.reserve(v.size());
    for (const Scalar& c : v) comps.push_back(Jet::constant(basepoint, c, 0, true));
    return VectorField(std::move(comps));
}

bool VectorField::exact() const {
    for (const Jet& c : components_)
        if (!c.exact()) return false;
    return true;
}

Jet VectorField::apply(const Jet& f) const {
    Jet acc = components_.front() * f.derivative(0);
    for (std::size_t k = 1; k < components_.size(); ++k)
        acc += components_[k] * f.derivative(k);
    return acc;
}

VectorField VectorField::operator-() const {
    std::vector<Jet> comps;
    comps.reserve(components_.size());
    for (const Jet& c : components_) comps.push_back(-c);
    return VectorField(std::move(comps));
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::AmbientMismatch, "vector field ambient dimensions differ");
    std::vector<Jet> comps;
    comps.reserve(a.components_.size());
    for (std::size_t k = 0; k < a.components_.size(); ++k)
        comps.push_back(a.components_[k] + b.components_[k]);
    return VectorField(std::move(comps));
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const VectorField& a, const Scalar& s) {
    std::vector<Jet> comps;
    comps.reserve(a.components_.size());
    for (const Jet& c : a.components_) comps.push_back(c * s);
    return VectorField(std::move(comps));
}

VectorField operator*(const Scalar& s, const VectorField& a) { return a * s; }

std::string VectorField::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        if (k > 0) os << " , ";
        os << "(" << components_[k].to_string() << ") d/dx" << k;
    }
    return os.str();
}

} // namespace chambar
