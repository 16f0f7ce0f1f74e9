#pragma once

#include "z3qg/algebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace z3qg {

// Braiding exponents for products in a tensor space: moving a slot-i factor
// of grade u past a slot-j factor of grade v (i > j) costs q^(c*u*v).
enum class Braiding : int {
    plain = 0,     // ordinary tensor product
    standard = 1,  // (x1 ox x2)(y1 ox y2) = q^(t(x2) t(y1)) x1 y1 ox x2 y2
    inverse = 2,   // q^(2 t(x2) t(y1))
};

const char* braiding_name(Braiding b);

// Ordered list of slot algebras with one braiding rule for every slot pair.
class TensorSpace {
public:
    TensorSpace(std::vector<PresentationPtr> slots, Braiding braid = Braiding::standard);

    size_t size() const { return slots_.size(); }
    const PresentationPtr& slot(size_t i) const { return slots_.at(i); }
    const std::vector<PresentationPtr>& slots() const { return slots_; }
    Braiding braiding() const { return braid_; }

    bool operator==(const TensorSpace& o) const { return slots_ == o.slots_ && braid_ == o.braid_; }

private:
    std::vector<PresentationPtr> slots_;
    Braiding braid_;
};
using TensorSpacePtr = std::shared_ptr<const TensorSpace>;

TensorSpacePtr make_space(std::vector<PresentationPtr> slots, Braiding braid = Braiding::standard);

using TensorMonomial = std::vector<Monomial>;

class TensorPoly {
public:
    using Terms = std::map<TensorMonomial, CycScalar>;

    explicit TensorPoly(TensorSpacePtr space);
    TensorPoly(TensorSpacePtr space, const CycScalar& c);  // c * (1 ox ... ox 1)
    // x0 ox x1 ox ... expanded over the terms of each factor.
    static TensorPoly pure(TensorSpacePtr space, const std::vector<Poly>& factors);

    const TensorSpacePtr& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    CycScalar coeff(const TensorMonomial& m) const;

    void add_term(const TensorMonomial& m, const CycScalar& c);
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly& operator-=(const TensorPoly& o);
    TensorPoly& operator*=(const CycScalar& c);
    TensorPoly operator-() const;

    friend TensorPoly operator+(TensorPoly x, const TensorPoly& y) { return x += y; }
    friend TensorPoly operator-(TensorPoly x, const TensorPoly& y) { return x -= y; }
    friend TensorPoly operator*(TensorPoly x, const CycScalar& c) { return x *= c; }
    friend TensorPoly operator*(const CycScalar& c, TensorPoly x) { return x *= c; }
    bool operator==(const TensorPoly& o) const;

    // Scalar value of a 0-slot element, or the Poly of a 1-slot element.
    CycScalar as_scalar() const;
    Poly as_poly() const;

    std::string render() const;

private:
    void check_space(const TensorPoly& o) const;
    TensorSpacePtr space_;
    Terms terms_;
};

TensorPoly tensor_mul(const TensorPoly& x, const TensorPoly& y);
TensorPoly tensor_pow(const TensorPoly& x, unsigned n);
// Common grade (sum of slot grades); nullopt if inhomogeneous; 0 for zero.
std::optional<int> tensor_grade(const TensorPoly& x);
// 1 ox ... ox x ox ... ox 1
TensorPoly slot_embed(const Poly& x, size_t slot, TensorSpacePtr space);
TensorPoly as_single_slot(const Poly& x, PresentationPtr p);

// Replaces slot `slot` of every term by f(monomial), a k-slot element; the
// result lives in `target`, whose slots are the old ones with the k new ones
// spliced in. Used for (id ox f), (f ox id), counit collapse, and so on.
TensorPoly splice_slot(const TensorPoly& x, size_t slot,
                       const std::function<TensorPoly(const Monomial&)>& f, TensorSpacePtr target);

// Multiplies all slots together with the plain product (all slots share one presentation).
Poly plain_product(const TensorPoly& x);

// a ox b -> q^(c * t(a) t(b)) b ox a on a two-slot element with equal slot algebras.
TensorPoly graded_flip(const TensorPoly& x, int c = 1);

}  // namespace z3qg
