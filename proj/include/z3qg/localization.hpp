#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/morphism.hpp"
#include "z3qg/report.hpp"
#include "z3qg/tensor.hpp"

#include <memory>
#include <string>

namespace z3qg {

// A presented algebra with a formal inverse of one central element.
class LocalizedRing {
public:
    LocalizedRing(PresentationPtr p, Poly central, std::string central_name);

    const PresentationPtr& presentation() const { return p_; }
    const Poly& central() const { return central_; }
    const std::string& central_name() const { return central_name_; }
    Poly central_power(int m) const;

    // Quotient x / central when it exists (per homogeneous degree component).
    std::optional<Poly> divide(const Poly& x) const;

    // central * p = 0 forces p = 0 on normal monomials up to max_degree.
    CheckReport regularity_check(int max_degree) const;

private:
    PresentationPtr p_;
    Poly central_;
    std::string central_name_;
};
using LocalizedRingPtr = std::shared_ptr<const LocalizedRing>;

// Mq2 localized at its quantum determinant.
LocalizedRingPtr gl_ring();

// numerator * central^(-power).
class LocalizedElement {
public:
    LocalizedElement(LocalizedRingPtr ring, Poly numerator, int power = 0);

    const LocalizedRingPtr& ring() const { return ring_; }
    const Poly& numerator() const { return num_; }
    int denominator_power() const { return m_; }
    bool is_zero() const { return num_.is_zero(); }

    LocalizedElement& operator+=(const LocalizedElement& o);
    LocalizedElement& operator-=(const LocalizedElement& o);
    LocalizedElement& operator*=(const CycScalar& c);
    friend LocalizedElement operator+(LocalizedElement x, const LocalizedElement& y) { return x += y; }
    friend LocalizedElement operator-(LocalizedElement x, const LocalizedElement& y) { return x -= y; }
    friend LocalizedElement operator*(LocalizedElement x, const CycScalar& c) { return x *= c; }
    // (p1, m1) == (p2, m2) iff p1 D^m2 = p2 D^m1.
    bool operator==(const LocalizedElement& o) const;

    // Strips central factors from the numerator while it stays divisible.
    LocalizedElement normalized() const;
    std::string render() const;

private:
    LocalizedRingPtr ring_;
    Poly num_;
    int m_;
};

LocalizedElement loc_mul(const LocalizedElement& x, const LocalizedElement& y);
TargetAlgebra<LocalizedElement> localized_target(LocalizedRingPtr ring);

// Two-slot analogue: numerator * (D ox D)^(-power).
struct LocalizedTensor {
    LocalizedRingPtr ring;
    TensorPoly numerator;
    int power = 0;
    bool operator==(const LocalizedTensor& o) const;
};

// Coproduct and counit extended through group-likeness of the central element.
LocalizedTensor loc_coproduct(const GradedMorphism<TensorPoly>& delta, const LocalizedElement& x);
CycScalar loc_counit(const GradedMorphism<CycScalar>& eps, const LocalizedElement& x);

}  // namespace z3qg
