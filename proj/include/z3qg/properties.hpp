#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/report.hpp"

#include <cstdint>
#include <random>

namespace z3qg {

struct PropertyOptions {
    int cases = 1000;
    std::uint32_t seed = 0x5eed;
};

// Random reduced element: up to `terms` words of length <= max_len with small
// coefficients in Q(q). Invertible generators also appear inverted.
Poly random_poly(const Presentation& p, std::mt19937& rng, int max_len, int terms = 3);

// (xy)z = x(yz) over the confluent presets.
CheckReport property_associativity(const PropertyOptions& o = {});
// The same for braided products in Mq2 ox Mq2 and plane ox Mq2.
CheckReport property_tensor_associativity(const PropertyOptions& o = {});
// grade(xy) = grade(x) + grade(y) on random words; reduction keeps the grade.
CheckReport property_grade_additivity(const PropertyOptions& o = {});
// reduce is idempotent, linear, and returns normal monomials.
CheckReport property_reduce_idempotence(const PropertyOptions& o = {});
// Cross-multiplication equality in Mq2[Dq^-1] is consistent with the ring operations.
CheckReport property_localization(const PropertyOptions& o = {});
// Dq*x != 0 and (Dq*x)/Dq = x for random nonzero x of degree <= 4.
CheckReport property_regularity(const PropertyOptions& o = {});
// Coassociativity and counit on random Mq2 elements of degree <= 3.
CheckReport property_coalgebra(const PropertyOptions& o = {});
// Comodule axioms for both plane coactions on random elements of degree <= 2.
CheckReport property_comodule(const PropertyOptions& o = {});

}  // namespace z3qg
