#include "z3qg/morphism.hpp"

namespace z3qg {

TargetAlgebra<Poly> poly_target(PresentationPtr p) {
    return {
        p->name(),
        p->one(),
        [p](const Poly& x, const Poly& y) { return p->mul(x, y); },
        [](const Poly& x) { return x.is_zero(); },
        [p](const Poly& x) { return p->render(x); },
        [p](const Poly& x) { return p->grade_of(x); },
    };
}

TargetAlgebra<TensorPoly> tensor_target(TensorSpacePtr space) {
    std::string name;
    for (size_t i = 0; i < space->size(); ++i) name += (i ? " ox " : "") + space->slot(i)->name();
    return {
        name,
        TensorPoly(space, CycScalar(1)),
        tensor_mul,
        [](const TensorPoly& x) { return x.is_zero(); },
        [](const TensorPoly& x) { return x.render(); },
        tensor_grade,
    };
}

TargetAlgebra<CycScalar> scalar_target() {
    return {
        "scalars",
        CycScalar(1),
        [](const CycScalar& x, const CycScalar& y) { return x * y; },
        [](const CycScalar& x) { return x.is_zero(); },
        [](const CycScalar& x) { return x.str(); },
        {},
    };
}

}  // namespace z3qg
