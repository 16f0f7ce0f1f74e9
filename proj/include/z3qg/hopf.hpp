#pragma once

#include "z3qg/localization.hpp"
#include "z3qg/matrix.hpp"
#include "z3qg/morphism.hpp"
#include "z3qg/report.hpp"
#include "z3qg/tensor.hpp"

namespace z3qg {

using Coproduct = GradedMorphism<TensorPoly>;
using Counit = GradedMorphism<CycScalar>;
using Antipode = GradedMorphism<LocalizedElement>;

// Matrix coproduct Delta(t_ik) = sum_j t_ij ox t_jk on a presentation whose
// generators include a, beta, gamma, d.
Coproduct make_coproduct(const PresentationPtr& p, Braiding braid = Braiding::standard);
Counit make_counit(const PresentationPtr& p);
// S(a) = d/Dq, S(beta) = -beta/Dq, S(gamma) = -q gamma/Dq, S(d) = a/Dq, extended
// as a braided anti-homomorphism into Mq2[Dq^-1].
Antipode make_antipode(MorphismMode mode = MorphismMode::braided_anti_homomorphism);
// S on a localized element: S(p Dq^-m) = Dq^m S(p).
LocalizedElement antipode_apply(const Antipode& s, const LocalizedElement& x);
// a -> d, beta -> -beta, gamma -> -q gamma, d -> a with q -> q^2 on coefficients.
GradedMorphism<Poly> make_tilde_map();
// The conjugate-linear anti-homomorphism on SLq2: a, beta, d fixed, gamma -> q gamma.
GradedMorphism<Poly> make_star();
Poly star_apply(const Poly& x);

// (Delta ox id) Delta x - (id ox Delta) Delta x.
TensorPoly coassociativity_defect(const Coproduct& delta, const Poly& x);
// m (eps ox id) Delta x - x, or (id ox eps) when slot = 1.
Poly counit_defect(const Coproduct& delta, const Counit& eps, const Poly& x, size_t slot);

CheckReport check_coassociativity(const Coproduct& delta);
CheckReport check_counit(const Coproduct& delta, const Counit& eps);
CheckReport check_noncocommutative(const Coproduct& delta);
CheckReport check_bialgebra(const PresentationPtr& p);
CheckReport check_determinant_central();
CheckReport check_determinant_forms();
// Delta(Dq) = Dq ox Dq and eps(Dq) = 1.
CheckReport check_determinant_grouplike();
// The three above combined.
CheckReport determinant_checks();
CheckReport check_determinant_multiplicative();
CheckReport check_antipode();
CheckReport check_antipode_square();
CheckReport check_tilde_relations();
CheckReport check_star();
// Delta(g*) against (* ox *) Delta(g); always a REPORT record.
CheckReport check_star_coproduct();
CheckReport check_localization_regularity(int max_degree = 6);

}  // namespace z3qg
