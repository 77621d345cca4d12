#pragma once

#include "trivar/datum.hpp"
#include "trivar/polynomial.hpp"
#include "trivar/rational.hpp"

namespace trivar {

// Coefficient algebra of an r = 3 Type 2 surface, written against the two
// relations  c1*M0 + c2*M1 + c3*M2  and  c4*M1 + c5*M2 + c6*M3  (M_i the
// tuple monomials).  Everything is kept in squared form: the field K is
// treated as closed, but no square root is ever extracted, so all values
// stay exact rationals.
//
//   beta1_sq  = c4/c6          beta2_sq  = -c5/c6
//   gamma0_sq = -(c5/c6)(c1/c3)
//   gamma1_sq = -c4/c6 + (c5/c6)(c2/c3)
//
// The decisive identity: gamma1_sq * c6 * c3 equals the product of the two
// complementary 2x2 minors det(col_0, col_3) * det(col_1, col_2), which is
// nonzero for a valid datum — so gamma1_sq never vanishes.
struct CaseAIdentityReport {
    Rational c1, c2, c3, c4, c5, c6;
    Rational beta1_sq, beta2_sq, gamma0_sq, gamma1_sq;
    Rational minor_product; // det(col_0, col_3) * det(col_1, col_2)
    bool match = false;     // gamma1_sq * c6 * c3 == minor_product

    // Symbolic recombination checks (exponents taken from the datum):
    //   f = beta1_sq*M1 - beta2_sq*M2  (the squared-form factor product)
    //   gamma0_sq*M0 - gamma1_sq*M1 == f modulo the first relation.
    bool factor_recombines = false;
    bool gamma_recombines = false;
    Polynomial f; // (c4/c6)*M1 + (c5/c6)*M2
};

CaseAIdentityReport check_case_a_identity(const TrinomialDatum& d);

// Positive-weight grading check for the four residual suspension shapes.
// Each subcase fixes a canonical exponent arrangement, variable weights,
// and an expected degree for f:
//   'a' (2,2,2,n) n odd : weights (1,1,1),   deg f = 2, gcd(2, n) = 1
//   'b' (2,2,4,3)       : weights (2,2,1),   deg f = 4, gcd(4, 3) = 1
//   'c' (2,2,3,5)       : weights (3,3,2),   deg f = 6, gcd(6, 5) = 1
//   'd' (2,2,2,3,5)     : weights (3,3,3,2), deg f = 6, gcd(6, 5) = 1
// Verifies that every non-final relation is homogeneous for the weights,
// that f (the normalized last relation, solved for the final tuple) is
// homogeneous of the stated degree, and that the degree is coprime to the
// final exponent.  Throws WrongShape when the datum does not carry the
// subcase's canonical pattern.
bool check_case_gradings(const TrinomialDatum& d, char subcase);

} // namespace trivar
