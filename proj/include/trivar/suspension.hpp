#pragma once

#include <vector>

#include "trivar/datum.hpp"
#include "trivar/polynomial.hpp"
#include "trivar/relations.hpp"

namespace trivar {

// A suspension presentation: the new variables y_1..y_k with weights
// k_1..k_k glue onto the base by the single extra relation
//   y_1^{k_1} * ... * y_k^{k_k} - f.
struct SuspensionSpec {
    TrinomialDatum base;
    Polynomial f;
    std::vector<long long> weights;
    std::vector<VariableId> new_vars;
};

// Relations of the suspended variety: the base relations plus the glue
// relation above.  Checks that f is non-constant (ConstantF), the weights
// are positive and aligned with new_vars, and the new variables are fresh.
std::vector<Polynomial> build_suspension(const std::vector<Polynomial>& base_relations,
                                         const Polynomial& f,
                                         const std::vector<long long>& weights,
                                         const std::vector<VariableId>& new_vars);

std::vector<Polynomial> build_suspension(const SuspensionSpec& spec);

// One peel of a Type 2 datum with r >= 2: the last tuple becomes the
// suspension variables, and the last relation, normalized so the
// coefficient of T_r^{l_r} is 1, is rewritten as T_r^{l_r} = f with
//   f  = p1 * T_{r-2}^{l_{r-2}} + p2 * T_{r-1}^{l_{r-1}},
//   p1 = -det(col_{r-1}, col_r) / det(col_{r-2}, col_{r-1}),
//   p2 =  det(col_{r-2}, col_r) / det(col_{r-2}, col_{r-1}).
// The base keeps columns 0..r-1 and tuples 0..r-1; its relation set is
// literally { g_0, ..., g_{r-3} }.  T_r^{l_r} - f is a nonzero rational
// multiple of g_{r-2}, which callers can replay as a consistency check.
struct SplitResult {
    TrinomialDatum base;
    Polynomial f;
    Rational p1, p2;
    std::vector<long long> suspension_weights; // the tuple l_r
    std::vector<VariableId> suspension_vars;   // T_{r,1}..T_{r,n_r}
};

SplitResult suspension_split(const TrinomialDatum& d);

// Apply suspension_split until the base has r = 1 (an affine space over the
// remaining two columns).  A datum with r = 2 yields a chain of length 1.
std::vector<SplitResult> split_chain(const TrinomialDatum& d);

// Convenience: the SuspensionSpec that rebuilds d from a split.
SuspensionSpec split_to_spec(const SplitResult& split);

} // namespace trivar
