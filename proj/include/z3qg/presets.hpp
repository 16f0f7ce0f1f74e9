#pragma once

#include "z3qg/algebra.hpp"
#include "z3qg/matrix.hpp"

#include <string>
#include <variant>
#include <vector>

namespace z3qg {

// Catalog names: plane, dual-plane, free-plane, Mq2, free-Mq2, SLq2, Uqgl2.
std::vector<std::string> preset_names();
// Shared immutable presentation; throws std::invalid_argument listing the
// available names for an unknown one.
PresentationPtr get_preset(const std::string& name);

using ElementValue = std::variant<CycScalar, Poly, PolyMatrix, ScalarMatrix>;

struct NamedElement {
    std::string name;
    PresentationPtr presentation;  // null for scalar-valued elements
    ElementValue value;
};

// Catalog names: Dq, vartheta, lambda, T, Ttilde, Rhat, Pgraded, Lplus, Lminus.
std::vector<std::string> element_names();
NamedElement get_element(const std::string& name);

// Convenience accessors for the catalog entries.
Poly quantum_determinant();          // a*d - q*beta*gamma in Mq2
Poly manin_element();                // theta*phi - q^2*phi*theta in free-plane
PolyMatrix coordinate_matrix(const PresentationPtr& p);  // [[a, beta], [gamma, d]]
PolyMatrix cofactor_matrix();        // [[d, -beta], [-q*gamma, a]] in Mq2
PolyMatrix l_plus();
PolyMatrix l_minus();

// Graded Kronecker convention under which the RTT residues vanish.
KronConvention frt_convention();
// The literal reading: index grades (0,1), factor q^(t(j)(t(i)+t(k))).
KronConvention literal_kron_convention();

}  // namespace z3qg
