#pragma once

#include <array>
#include <variant>
#include <vector>

#include "trivar/datum.hpp"
#include "trivar/polynomial.hpp"

namespace trivar {

// The monomial T_i^{l_i} = prod_j T_{i,j}^{l_{i,j}} for tuple i.
Monomial tuple_monomial(const TrinomialDatum& d, int i);

struct RelationSet {
    // relations[k] is g_{k + first_relation_index}.
    std::vector<Polynomial> relations;
    int first_relation_index = 0;
};

// Defining relations of the datum: g_1..g_{r-1} for Type 1, g_0..g_{r-2}
// for Type 2 (so a Type 2 datum with r = 1 and a Type 1 datum with r = 1
// both have none: the variety is an affine space).
RelationSet relations(const TrinomialDatum& d);

// Type 2 only: the coefficient triple of each relation in monomial order,
// (coefficient of T_i^{l_i}, of T_{i+1}^{l_{i+1}}, of T_{i+2}^{l_{i+2}}).
// With the cofactor expansion used here these are
//   ( det(col_{i+1}, col_{i+2}), -det(col_i, col_{i+2}), det(col_i, col_{i+1}) ),
// all nonzero for a valid datum.
std::vector<std::array<Rational, 3>> trinomial_coefficients(const TrinomialDatum& d);

// ell_i = gcd of tuple i, one entry per tuple in index order.
std::vector<long long> ell(const TrinomialDatum& d);

struct TorusWeights {
    long long L = 1;                // lcm of the l_i
    std::vector<long long> weights; // w_i = L / l_i, aligned with the tuples
};

// Surface data only (every n_i = 1, m = 0): scaling T_i by t^{w_i} sends
// each relation g_i to t^L * g_i, which the tests verify symbolically.
TorusWeights torus_weights(const TrinomialDatum& d);

// Marker: elimination bottomed out, the variety is an affine space.
struct FullAffineSpace {};

// Surface datum with l_i = 1: drop tuple i (and matrix column i for Type 2,
// constant a_i for Type 1), renumbering the remaining tuples.  The dropped
// relation is solved for T_i, which appears linearly, so the coordinate ring
// is untouched.  Returns FullAffineSpace when the result would have r < 2.
std::variant<TrinomialDatum, FullAffineSpace> eliminate_linear_monomial(const TrinomialDatum& d,
                                                                        int i);

} // namespace trivar
