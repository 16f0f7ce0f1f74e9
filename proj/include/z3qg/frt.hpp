#pragma once

#include "z3qg/hopf.hpp"
#include "z3qg/matrix.hpp"
#include "z3qg/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace z3qg {

// R T1 T2 - T1 T2 R, row-major, with T1 = T ox I and T2 = I ox T through the
// graded Kronecker rule; entries reduced in p.
std::vector<Poly> frt_residues(const ScalarMatrix& r, const PresentationPtr& p, const KronConvention& c);

struct ConventionOutcome {
    KronConvention convention;
    std::array<int, 2> permutation_grades{0, 1};
    size_t nonzero = 0;  // number of nonvanishing residue entries
};

// Every convention with index grades in Z3 x Z3, both signs, factor q or q^2.
std::vector<KronConvention> all_conventions();
std::vector<ConventionOutcome> frt_sweep(const PresentationPtr& p);

// Pinned convention over Mq2, with the sweep recorded in the notes.
CheckReport check_frt();
// Over free-Mq2 the residue span at degree 2 equals the span of the six relations.
CheckReport check_frt_free_span();

// R+ = P R P with R = P^-1 Rhat, P the graded permutation for the given basis grades.
ScalarMatrix r_plus(const std::array<int, 2>& permutation_grades = {0, 1});

struct LabelledResidue {
    std::string label;
    Poly residue;
};

// R+ A1 B2 - B2 A1 R+ for (A, B) = (L+, L+), (L-, L-), (L-, L+), over Uqgl2.
std::vector<LabelledResidue> rll_residues(const ScalarMatrix& rplus, const KronConvention& c);
std::vector<ConventionOutcome> rll_sweep();
CheckReport check_rll();

// Delta read off the entries of L+ .ox L+ and L- .ox L-.
Coproduct make_l_coproduct(Braiding braid = Braiding::standard);
CheckReport check_l_coproduct();

}  // namespace z3qg
