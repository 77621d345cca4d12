#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trivar/datum.hpp"

namespace trivar {

// Seeded RNG whose draws are reproducible across platforms. std::mt19937_64
// itself is pinned by the standard; we avoid std::uniform_int_distribution
// (whose mapping is implementation-defined) and reduce by modulo instead.
// The slight bias is irrelevant here — we only need determinism.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish draw from [lo, hi], inclusive.
    long long draw(long long lo, long long hi);

private:
    std::mt19937_64 engine_;
};

// The matrix whose column i is (1, i). Any two such columns are linearly
// independent, so this works for every r.
std::vector<std::array<Rational, 2>> generic_columns(int r);

// Type 2 datum with one variable per tuple (a hypersurface-chain datum):
// exponents l[i] for tuple i, the generic (1, i) matrix, and m free variables.
TrinomialDatum surface_datum(const std::vector<long long>& l, int m = 0);

// Type 1 datum with the given tuples, constants a_i = i, and m free variables.
TrinomialDatum type1_datum(const std::vector<std::vector<long long>>& tuples, int m = 0);

// Random coefficient matrix with entries in [-9, 9] and pairwise linearly
// independent columns (resampled until valid).
std::vector<std::array<Rational, 2>> random_columns(DeterministicRng& rng, int r);

// Random valid datum of the given type. Tuple lengths are 1..max_n, exponents
// 1..max_l, and m is drawn from 0..max_m.
TrinomialDatum random_datum(DeterministicRng& rng, VarietyType type, int max_r,
                            int max_n, int max_l, int max_m);

} // namespace trivar
