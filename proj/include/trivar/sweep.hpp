#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trivar/datum.hpp"
#include "trivar/derivation.hpp"

namespace trivar {

// Cross-check families the sweep can run.  Every name doubles as the wire
// name accepted by --checks and printed in result rows.
//
//   pham                   r = 2 surfaces, all exponents >= 2: non-rigid iff
//                          at least two exponents equal 2
//   rationality-dominance  Type 2 surfaces: non-rigid => rational
//   abc-dominance          Type 2 surfaces, all exponents >= 2:
//                          abc_kernel_predicate => rigid
//   elimination-stability  surfaces with some l_i = 1: the rigidity verdict
//                          survives eliminate_linear_monomial (an affine
//                          space counts as non-rigid)
//   torus-semiinvariance   Type 2 surfaces: T_i -> t^{w_i} T_i sends each
//                          relation g to t^L g exactly
//   witness-verify         every constructed witness verifies, and data that
//                          are non-rigid through m > 0 or through a linear
//                          variable on a single relation must receive one
//   gamma-identity         seeded random r = 3 matrices: the squared-root
//                          recombination identities hold and gamma1^2 != 0
const std::vector<std::string>& sweep_check_names();

struct SweepOptions {
    VarietyType type = VarietyType::Type2;
    int max_r = 3;
    int max_l = 4;
    int max_n = 1;
    int max_m = 0;
    // Empty means every check.
    std::vector<std::string> checks;
    std::uint64_t seed = 1;
    int bound = kDefaultNilpotencyBound;
    int gamma_draws = 50;
};

struct CheckStats {
    long long rows = 0;
    long long failures = 0;
};

struct SweepSummary {
    long long rows = 0;
    long long failures = 0;
    std::map<std::string, CheckStats> by_check;
    // First failing row (the serialized JSON line), when any.
    std::optional<std::string> first_failure;
};

// Enumerates every valid datum of the requested type with r in [2, max_r],
// tuple lengths in [1, max_n], exponents in [1, max_l] and m in [0, max_m],
// coefficients taken from the generic (1, i) column family (Type 2) or
// a_i = i (Type 1).  Deterministic order: r, then tuple lengths, then
// exponents, each lexicographically, then m.
std::vector<TrinomialDatum> enumerate_sweep_data(const SweepOptions& opt);

// Runs the selected checks over the enumerated data (plus the seeded draws
// for gamma-identity), streaming one JSON line per (check, datum) row to
// `rows` when given.
SweepSummary run_sweep(const SweepOptions& opt, std::ostream* rows = nullptr);

} // namespace trivar
