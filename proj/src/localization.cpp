#include "z3qg/localization.hpp"

#include "z3qg/linalg.hpp"
#include "z3qg/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace z3qg {

LocalizedRing::LocalizedRing(PresentationPtr p, Poly central, std::string central_name)
    : p_(std::move(p)), central_(p_->reduce(central)), central_name_(std::move(central_name)) {
    if (central_.is_zero()) throw std::invalid_argument("cannot localize at 0");
}

Poly LocalizedRing::central_power(int m) const { return p_->pow(central_, static_cast<unsigned>(m)); }

std::optional<Poly> LocalizedRing::divide(const Poly& x) const {
    if (x.is_zero()) return Poly{};
    long top = x.max_degree() - central_.max_degree();
    if (top < 0) return std::nullopt;
    std::vector<Monomial> basis;
    for (int k = 0; k <= top; ++k) {
        auto ms = p_->normal_monomials(k);
        basis.insert(basis.end(), ms.begin(), ms.end());
    }
    std::vector<SparseVector<Monomial>> cols;
    cols.reserve(basis.size());
    for (const Monomial& m : basis) cols.push_back(p_->mul(central_, Poly(m)).terms());
    auto sol = solve_linear(cols, x.terms());
    if (!sol) return std::nullopt;
    Poly out;
    for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], (*sol)[i]);
    return out;
}

CheckReport LocalizedRing::regularity_check(int max_degree) const {
    CheckReport rep("localization-regularity");
    long total = 0;
    for (int k = 0; k <= max_degree; ++k) {
        auto ms = p_->normal_monomials(k);
        LinearSpan<Monomial> span;
        for (const Monomial& m : ms) span.add(p_->mul(central_, Poly(m)).terms());
        total += static_cast<long>(ms.size());
        if (span.rank() != ms.size())
            rep.fail("degree " + std::to_string(k) + ": " + central_name_ + " annihilates a combination of " +
                     std::to_string(ms.size()) + " normal monomials");
    }
    rep.note(std::to_string(total) + " normal monomials up to degree " + std::to_string(max_degree));
    return rep;
}

LocalizedRingPtr gl_ring() {
    static const LocalizedRingPtr ring =
        std::make_shared<const LocalizedRing>(get_preset("Mq2"), quantum_determinant(), "Dq");
    return ring;
}

LocalizedElement::LocalizedElement(LocalizedRingPtr ring, Poly numerator, int power)
    : ring_(std::move(ring)), num_(ring_->presentation()->reduce(numerator)), m_(power) {
    if (m_ < 0) throw std::invalid_argument("negative denominator power");
    if (num_.is_zero()) m_ = 0;
}

LocalizedElement& LocalizedElement::operator+=(const LocalizedElement& o) {
    if (ring_ != o.ring_) throw std::invalid_argument("localized elements from different rings");
    int top = std::max(m_, o.m_);
    const auto& p = *ring_->presentation();
    Poly a = m_ == top ? num_ : p.mul(num_, ring_->central_power(top - m_));
    Poly b = o.m_ == top ? o.num_ : p.mul(o.num_, ring_->central_power(top - o.m_));
    num_ = a + b;
    m_ = num_.is_zero() ? 0 : top;
    return *this;
}

LocalizedElement& LocalizedElement::operator-=(const LocalizedElement& o) { return *this += o * CycScalar(-1); }

LocalizedElement& LocalizedElement::operator*=(const CycScalar& c) {
    num_ *= c;
    if (num_.is_zero()) m_ = 0;
    return *this;
}

bool LocalizedElement::operator==(const LocalizedElement& o) const {
    if (ring_ != o.ring_) return false;
    const auto& p = *ring_->presentation();
    return p.mul(num_, ring_->central_power(o.m_)) == p.mul(o.num_, ring_->central_power(m_));
}

LocalizedElement LocalizedElement::normalized() const {
    LocalizedElement r = *this;
    while (r.m_ > 0) {
        auto q = ring_->divide(r.num_);
        if (!q) break;
        r.num_ = *q;
        --r.m_;
    }
    return r;
}

std::string LocalizedElement::render() const {
    const auto& p = *ring_->presentation();
    if (m_ == 0) return p.render(num_);
    std::string den = ring_->central_name() + "^-" + std::to_string(m_);
    if (num_.is_scalar()) return render_term_coefficient(num_.constant_term(), true, false) + den;
    std::string n = p.render(num_);
    if (num_.size() == 1 && (!num_.terms().begin()->first.is_one() || n.find(' ') == std::string::npos))
        return n + "*" + den;
    return "(" + n + ")*" + den;
}

LocalizedElement loc_mul(const LocalizedElement& x, const LocalizedElement& y) {
    if (x.ring() != y.ring()) throw std::invalid_argument("localized elements from different rings");
    return LocalizedElement(x.ring(), x.ring()->presentation()->mul(x.numerator(), y.numerator()),
                            x.denominator_power() + y.denominator_power());
}

TargetAlgebra<LocalizedElement> localized_target(LocalizedRingPtr ring) {
    TargetAlgebra<LocalizedElement> t{
        ring->presentation()->name() + "[" + ring->central_name() + "^-1]",
        LocalizedElement(ring, Poly(CycScalar(1))),
        loc_mul,
        [](const LocalizedElement& x) { return x.is_zero(); },
        [](const LocalizedElement& x) { return x.render(); },
        [ring](const LocalizedElement& x) { return ring->presentation()->grade_of(x.numerator()); },
    };
    return t;
}

namespace {

TensorPoly group_like_power(const TensorSpacePtr& space, const LocalizedRing& ring, int m) {
    Poly dm = ring.central_power(m);
    return TensorPoly::pure(space, {dm, dm});
}

}  // namespace

bool LocalizedTensor::operator==(const LocalizedTensor& o) const {
    const auto& space = numerator.space();
    if (space->size() != 2 || space->slot(0) != space->slot(1))
        throw std::invalid_argument("localized tensors need two equal slots");
    if (ring != o.ring || space->slot(0) != ring->presentation())
        throw std::invalid_argument("localized tensors over different rings");
    return tensor_mul(numerator, group_like_power(space, *ring, o.power)) ==
           tensor_mul(o.numerator, group_like_power(space, *ring, power));
}

LocalizedTensor loc_coproduct(const GradedMorphism<TensorPoly>& delta, const LocalizedElement& x) {
    return LocalizedTensor{x.ring(), delta.apply(x.numerator()), x.denominator_power()};
}

CycScalar loc_counit(const GradedMorphism<CycScalar>& eps, const LocalizedElement& x) {
    return eps.apply(x.numerator());
}

}  // namespace z3qg
