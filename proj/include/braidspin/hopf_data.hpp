#pragma once

#include "braidspin/braiding.hpp"

namespace bs {

// V = span{eta+, eta-}; V (x) V in the order ++, +-, -+, --.
Space hopf_space();
BraidOperator hopf_sigma(bool transposed = false);
BraidOperator hopf_tau(bool transposed = false);
StarStructure hopf_star();
// the basis of the rank one image of I - sigma: +- - mu^2 -+
std::vector<Scalar> hopf_two_form();

Space classical_space(int d);
StarStructure trivial_star(int d);

} // namespace bs
