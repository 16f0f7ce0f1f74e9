#pragma once

#include "z3qg/hopf.hpp"
#include "z3qg/morphism.hpp"
#include "z3qg/report.hpp"

namespace z3qg {

using Coaction = GradedMorphism<TensorPoly>;

// theta -> a ox theta + beta ox phi, phi -> gamma ox theta + d ox phi, into Mq2 ox plane.
// `plane` may be the plane or free-plane preset.
Coaction make_left_coaction(const PresentationPtr& plane, Braiding braid = Braiding::standard);
// theta -> theta ox a + phi ox gamma, phi -> theta ox beta + phi ox d, into plane ox Mq2.
Coaction make_right_coaction(const PresentationPtr& plane, Braiding braid = Braiding::standard);

// (Delta ox id) dL x - (id ox dL) dL x
TensorPoly left_coassociativity_defect(const Coaction& dl, const Poly& x);
// m (eps ox id) dL x - x
Poly left_counit_defect(const Coaction& dl, const Poly& x);
// (dR ox id) dR x - (id ox Delta) dR x
TensorPoly right_coassociativity_defect(const Coaction& dr, const Poly& x);
// m (id ox eps) dR x - x
Poly right_counit_defect(const Coaction& dr, const Poly& x);

CheckReport check_coaction_homomorphism();
// The right coaction under the other braidings; a REPORT record.
CheckReport right_coaction_braiding_report();
CheckReport check_comodule_axioms();
CheckReport manin_subcomodule_check();
CheckReport dual_plane_report();

}  // namespace z3qg
