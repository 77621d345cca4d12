#pragma once

#include <array>
#include <string>
#include <vector>

#include "trivar/rational.hpp"
#include "trivar/variable.hpp"

namespace trivar {

// The combinatorial input from which everything else is derived.
//
// Type 1: tuples are indexed 1..r, the coefficient data is r pairwise
// distinct constants a_1..a_r, and relation g_i (1 <= i <= r-1) is
//   T_i^{l_i} - T_{i+1}^{l_{i+1}} - (a_{i+1} - a_i).
//
// Type 2: tuples are indexed 0..r, the coefficient data is a 2 x (r+1)
// matrix with pairwise linearly independent columns, and relation g_i
// (0 <= i <= r-2) is the 3x3 determinant whose first row is the monomial
// triple (T_i^{l_i}, T_{i+1}^{l_{i+1}}, T_{i+2}^{l_{i+2}}) over columns
// i, i+1, i+2.
//
// T_i^{l_i} abbreviates the product T_{i,1}^{l_{i,1}} ... T_{i,n_i}^{l_{i,n_i}}.
// On top of the T variables the ring has m free variables S_1..S_m.
enum class VarietyType { Type1, Type2 };

struct TrinomialDatum {
    VarietyType type = VarietyType::Type2;
    int r = 0;
    int m = 0;
    // exponents[p] is the tuple with index p + first_index(); its length is n_i.
    std::vector<std::vector<long long>> exponents;
    // Type 1 only: a_1..a_r.
    std::vector<Rational> constants;
    // Type 2 only: columns 0..r of the coefficient matrix, each (a_{0i}, a_{1i}).
    std::vector<std::array<Rational, 2>> columns;

    int first_index() const { return type == VarietyType::Type1 ? 1 : 0; }
    int last_index() const { return r; }
    int tuple_count() const { return r - first_index() + 1; }

    const std::vector<long long>& tuple(int i) const { return exponents.at(i - first_index()); }
    int tuple_size(int i) const { return static_cast<int>(tuple(i).size()); }
    const std::array<Rational, 2>& column(int i) const { return columns.at(i); }
    const Rational& constant(int i) const { return constants.at(i - 1); }

    bool is_surface() const;

    // All T variables in canonical order, then all S variables.
    std::vector<VariableId> t_variables() const;
    std::vector<VariableId> all_variables() const;
};

struct Violation {
    std::string code;
    std::string message;
    std::vector<int> indices; // offending tuple/column indices, when meaningful
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
};

ValidationReport validate(const TrinomialDatum& d);

// Throws InvalidDatum carrying the first violation message.
void require_valid(const TrinomialDatum& d);

} // namespace trivar
