#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace trivar {

// Ring generators.  T variables carry the tuple index i (as the theory
// numbers it: from 1 for Type 1 data, from 0 for Type 2) and the position j
// inside the tuple, both as printed: T_{ij}.  S variables are the free
// polynomial part S_1..S_m.  Param is the single formal flow parameter t
// introduced by exp_action; it never appears in a datum's own relations.
enum class VarKind : std::uint8_t { T = 0, S = 1, Param = 2 };

struct VariableId {
    VarKind kind = VarKind::T;
    int row = 0; // tuple index i for T; 0 otherwise
    int pos = 0; // position j >= 1 for T; k >= 1 for S; 1 for Param

    // Canonical precedence: smaller id = earlier variable = *larger* in a
    // monomial order built on the canonical precedence.  T before S before
    // t, rows ascending, positions ascending.
    auto operator<=>(const VariableId&) const = default;
};

inline VariableId t_var(int i, int j) { return {VarKind::T, i, j}; }
inline VariableId s_var(int k) { return {VarKind::S, 0, k}; }
inline VariableId param_var() { return {VarKind::Param, 0, 1}; }

// "T0_1", "S2", "t" — stable names used in reports and diagnostics.
std::string variable_name(const VariableId& v);

} // namespace trivar
