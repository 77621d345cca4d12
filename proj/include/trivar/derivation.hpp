#pragma once

#include <map>

#include "trivar/polynomial.hpp"

namespace trivar {

// A K-derivation of the ambient polynomial ring, given by its images on the
// variables it moves; every unlisted variable (including the flow parameter
// t) maps to 0.  apply_derivation extends by the Leibniz rule.
using DerivationImages = std::map<VariableId, Polynomial>;

Polynomial apply_derivation(const DerivationImages& images, const Polynomial& p);

inline constexpr int kDefaultNilpotencyBound = 64;

// Truncated exponential flow: sum_{i=0}^{N} t^i * d^i(p) / i!, where N is
// the first index with d^{N+1}(p) = 0.  Exact rational coefficients; the
// flow parameter t is a genuine ring variable of the result.  Throws
// NotNilpotentWithinBound if d^{bound+1}(p) != 0.
Polynomial exp_action(const DerivationImages& images, const Polynomial& p,
                      int bound = kDefaultNilpotencyBound);

} // namespace trivar
