#include "z3qg/tensor.hpp"

#include <stdexcept>

namespace z3qg {

const char* braiding_name(Braiding b) {
    switch (b) {
        case Braiding::plain: return "plain";
        case Braiding::standard: return "standard";
        case Braiding::inverse: return "inverse";
    }
    return "?";
}

TensorSpace::TensorSpace(std::vector<PresentationPtr> slots, Braiding braid)
    : slots_(std::move(slots)), braid_(braid) {
    for (const auto& s : slots_)
        if (!s) throw std::invalid_argument("tensor slot without a presentation");
}

TensorSpacePtr make_space(std::vector<PresentationPtr> slots, Braiding braid) {
    return std::make_shared<const TensorSpace>(std::move(slots), braid);
}

TensorPoly::TensorPoly(TensorSpacePtr space) : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("TensorPoly needs a space");
}

TensorPoly::TensorPoly(TensorSpacePtr space, const CycScalar& c) : TensorPoly(std::move(space)) {
    add_term(TensorMonomial(space_->size()), c);
}

TensorPoly TensorPoly::pure(TensorSpacePtr space, const std::vector<Poly>& factors) {
    if (factors.size() != space->size()) throw std::invalid_argument("factor count does not match slot count");
    TensorPoly acc(space, CycScalar(1));
    for (size_t i = 0; i < factors.size(); ++i) {
        TensorPoly next(space);
        for (const auto& [tm, c] : acc.terms_)
            for (const auto& [m, d] : factors[i].terms()) {
                TensorMonomial t = tm;
                t[i] = m;
                next.add_term(t, c * d);
            }
        acc = std::move(next);
    }
    return acc;
}

CycScalar TensorPoly::coeff(const TensorMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycScalar{} : it->second;
}

void TensorPoly::add_term(const TensorMonomial& m, const CycScalar& c) {
    if (c.is_zero()) return;
    if (m.size() != space_->size()) throw std::invalid_argument("tensor monomial has wrong slot count");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorPoly::check_space(const TensorPoly& o) const {
    if (space_ != o.space_ && !(*space_ == *o.space_))
        throw std::invalid_argument("tensor slot mismatch");
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    check_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const CycScalar& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly r = *this;
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

bool TensorPoly::operator==(const TensorPoly& o) const {
    check_space(o);
    return terms_ == o.terms_;
}

CycScalar TensorPoly::as_scalar() const {
    if (space_->size() != 0) throw std::invalid_argument("as_scalar on a tensor with slots");
    return coeff(TensorMonomial{});
}

Poly TensorPoly::as_poly() const {
    if (space_->size() != 1) throw std::invalid_argument("as_poly needs exactly one slot");
    Poly p;
    for (const auto& [m, c] : terms_) p.add_term(m[0], c);
    return p;
}

std::string TensorPoly::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [tm, c] : terms_) {
        bool unit = tm.empty();
        out += render_term_coefficient(c, first, unit);
        for (size_t i = 0; i < tm.size(); ++i) {
            if (i) out += " ox ";
            out += space_->slot(i)->render(tm[i]);
        }
        first = false;
    }
    return out;
}

TensorPoly tensor_mul(const TensorPoly& x, const TensorPoly& y) {
    if (x.space() != y.space() && !(*x.space() == *y.space()))
        throw std::invalid_argument("tensor slot mismatch");
    const TensorSpace& sp = *x.space();
    size_t n = sp.size();
    long braid = static_cast<long>(sp.braiding());
    TensorPoly out(x.space());
    for (const auto& [xm, xc] : x.terms()) {
        std::vector<int> xg(n);
        for (size_t i = 0; i < n; ++i) xg[i] = sp.slot(i)->grade(xm[i]);
        for (const auto& [ym, yc] : y.terms()) {
            long e = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < i; ++j) e += xg[i] * sp.slot(j)->grade(ym[j]);
            std::vector<Poly> slots(n);
            bool zero = false;
            for (size_t i = 0; i < n && !zero; ++i) {
                slots[i] = sp.slot(i)->mul(Poly(xm[i]), Poly(ym[i]));
                zero = slots[i].is_zero();
            }
            if (zero) continue;
            out += TensorPoly::pure(x.space(), slots) * (xc * yc * q_power(braid * e));
        }
    }
    return out;
}

TensorPoly tensor_pow(const TensorPoly& x, unsigned n) {
    TensorPoly r(x.space(), CycScalar(1));
    for (unsigned i = 0; i < n; ++i) r = tensor_mul(r, x);
    return r;
}

std::optional<int> tensor_grade(const TensorPoly& x) {
    std::optional<int> g;
    for (const auto& [tm, c] : x.terms()) {
        long s = 0;
        for (size_t i = 0; i < tm.size(); ++i) s += x.space()->slot(i)->grade(tm[i]);
        int h = mod3(s);
        if (g && *g != h) return std::nullopt;
        g = h;
    }
    return g.value_or(0);
}

TensorPoly slot_embed(const Poly& x, size_t slot, TensorSpacePtr space) {
    if (slot >= space->size()) throw std::invalid_argument("slot index out of range");
    std::vector<Poly> f;
    for (size_t i = 0; i < space->size(); ++i) f.push_back(i == slot ? x : Poly(CycScalar(1)));
    return TensorPoly::pure(std::move(space), f);
}

TensorPoly as_single_slot(const Poly& x, PresentationPtr p) {
    return TensorPoly::pure(make_space({std::move(p)}), {x});
}

TensorPoly splice_slot(const TensorPoly& x, size_t slot,
                       const std::function<TensorPoly(const Monomial&)>& f, TensorSpacePtr target) {
    size_t n = x.space()->size();
    if (slot >= n) throw std::invalid_argument("slot index out of range");
    TensorPoly out(target);
    for (const auto& [tm, c] : x.terms()) {
        TensorPoly img = f(tm[slot]);
        size_t k = img.space()->size();
        if (target->size() != n - 1 + k) throw std::invalid_argument("splice target has wrong slot count");
        for (const auto& [im, d] : img.terms()) {
            TensorMonomial t(tm.begin(), tm.begin() + static_cast<long>(slot));
            t.insert(t.end(), im.begin(), im.end());
            t.insert(t.end(), tm.begin() + static_cast<long>(slot) + 1, tm.end());
            out.add_term(t, c * d);
        }
    }
    return out;
}

Poly plain_product(const TensorPoly& x) {
    const TensorSpace& sp = *x.space();
    if (sp.size() == 0) return Poly(x.as_scalar());
    const PresentationPtr& p = sp.slot(0);
    for (const auto& s : sp.slots())
        if (s != p) throw std::invalid_argument("plain_product needs a single slot algebra");
    Poly out;
    for (const auto& [tm, c] : x.terms()) {
        Poly acc = p->one();
        for (const Monomial& m : tm) acc = p->mul(acc, Poly(m));
        out += acc * c;
    }
    return out;
}

TensorPoly graded_flip(const TensorPoly& x, int c) {
    const TensorSpace& sp = *x.space();
    if (sp.size() != 2 || sp.slot(0) != sp.slot(1))
        throw std::invalid_argument("graded_flip needs two equal slots");
    TensorPoly out(x.space());
    for (const auto& [tm, v] : x.terms()) {
        long e = static_cast<long>(c) * sp.slot(0)->grade(tm[0]) * sp.slot(1)->grade(tm[1]);
        out.add_term(TensorMonomial{tm[1], tm[0]}, v * q_power(e));
    }
    return out;
}

}  // namespace z3qg
