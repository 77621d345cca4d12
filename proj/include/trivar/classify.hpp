#pragma once

#include <vector>

#include "trivar/datum.hpp"

namespace trivar {

// Tuple indices whose exponent tuple contains no 1 ("heavy" tuples).
// Sorted ascending, in the datum's own index convention.
std::vector<int> heavy_set(const TrinomialDatum& d);

// Which non-rigidity condition fired, in the fixed evaluation order.
enum class RigidityCondition { MPositive, Type1Cond2, Type2Cond2, Type2Cond3, None };

const char* rigidity_condition_name(RigidityCondition c);

struct RigidityVerdict {
    bool rigid = true;
    RigidityCondition fired = RigidityCondition::None;
    // The chosen exceptional tuple indices: H itself for the cond-2 cases,
    // {a, b, c} for Type 2 cond 3, empty otherwise.
    std::vector<int> exceptional;
};

// The variety admits a nontrivial additive group action iff one of:
//  (1) m > 0;
//  (2) Type 1 and |H| <= 1;
//  (3) Type 2 and |H| <= 2;
//  (4) Type 2 and there are distinct a, b, c such that tuples a and b are
//      all-even and contain a 2, and H is contained in {a, b, c}.
// Conditions are checked in this order and the first hit is reported.
RigidityVerdict classify_rigidity(const TrinomialDatum& d);

enum class RationalityCase { AllCoprime, OnePair, TripleOfTwos, None };

const char* rationality_case_name(RationalityCase c);

struct RationalityVerdict {
    bool rational = false;
    RationalityCase fired = RationalityCase::None;
};

// Decided from the pairwise gcds of ell_i = gcd(tuple i):
//  ALL_COPRIME    every pair has gcd 1;
//  ONE_PAIR       exactly one unordered pair has gcd > 1;
//  TRIPLE_OF_TWOS three indices with pairwise gcd 2 and every other pair
//                 coprime.
RationalityVerdict classify_rationality(const TrinomialDatum& d);

// Type 2 surfaces with every exponent >= 2: true iff some triple of distinct
// indices has 1/l_a + 1/l_b + 1/l_c <= 1 (exact comparison).  True means the
// variety is rigid (three large exponents force a trivial kernel).
bool abc_kernel_predicate(const TrinomialDatum& d);

// Exponent-multiset bucket for Type 2 surface data that survive the triple
// predicate (every exponent >= 2, no reciprocal triple <= 1):
//   CASE1 all 2s; CASE2 one exponent > 2, rest 2; CASE3 two 3s, rest 2;
//   CASE4 a 3 and a 4, rest 2; CASE5 a 3 and a 5, rest 2.
// GAME_OVER_ABC: the triple predicate already settles rigidity.
// NOT_SURFACE / REDUCIBLE: screening tags for data outside the bucket's
// domain (not a surface; some exponent 1, so a tuple can be eliminated).
enum class ResidualTag {
    GameOverAbc,
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    NotSurface,
    Reducible,
};

const char* residual_tag_name(ResidualTag t);

struct CaseTag {
    ResidualTag tag = ResidualTag::NotSurface;
    char subcase = 0; // 'a'..'d' when the sorted exponents match a rational
                      // residual pattern; 0 otherwise
};

// Requires a valid Type 2 datum on which neither non-rigidity condition
// fired (the residual analysis only exists on the rigid side); throws
// PreconditionViolated otherwise.  Subcases, set only when the datum is
// rational: 'a' sorted (2,2,2,odd); 'b' sorted (2,2,3,4); 'c' sorted
// (2,2,3,5); 'd' sorted (2,2,2,3,5).
CaseTag residual_case_tag(const TrinomialDatum& d);

} // namespace trivar
