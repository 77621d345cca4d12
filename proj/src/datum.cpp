#include "trivar/datum.hpp"

#include "trivar/errors.hpp"

namespace trivar {

bool TrinomialDatum::is_surface() const {
    if (m != 0) return false;
    for (const auto& tup : exponents)
        if (tup.size() != 1) return false;
    return true;
}

std::vector<VariableId> TrinomialDatum::t_variables() const {
    std::vector<VariableId> out;
    for (int i = first_index(); i <= last_index(); ++i)
        for (int j = 1; j <= tuple_size(i); ++j) out.push_back(t_var(i, j));
    return out;
}

std::vector<VariableId> TrinomialDatum::all_variables() const {
    std::vector<VariableId> out = t_variables();
    for (int k = 1; k <= m; ++k) out.push_back(s_var(k));
    return out;
}

ValidationReport validate(const TrinomialDatum& d) {
    ValidationReport rep;
    auto flag = [&](std::string code, std::string message, std::vector<int> indices = {}) {
        rep.valid = false;
        rep.violations.push_back({std::move(code), std::move(message), std::move(indices)});
    };

    if (d.r <= 0) flag("r_nonpositive", "r must be a positive integer");
    if (d.m < 0) flag("m_negative", "m must be nonnegative");

    int expected_tuples = d.r + (d.type == VarietyType::Type1 ? 0 : 1);
    if (d.r > 0 && static_cast<int>(d.exponents.size()) != expected_tuples) {
        flag("partition_length_mismatch",
             "expected " + std::to_string(expected_tuples) + " exponent tuples, got " +
                 std::to_string(d.exponents.size()));
        return rep; // indices below would be unreliable
    }
    if (d.r <= 0) return rep;

    for (int i = d.first_index(); i <= d.last_index(); ++i) {
        const auto& tup = d.tuple(i);
        if (tup.empty()) flag("tuple_empty", "tuple " + std::to_string(i) + " is empty", {i});
        for (long long e : tup)
            if (e <= 0) {
                flag("exponent_nonpositive",
                     "tuple " + std::to_string(i) + " has a nonpositive exponent", {i});
                break;
            }
    }

    if (d.type == VarietyType::Type1) {
        if (static_cast<int>(d.constants.size()) != d.r) {
            flag("type1_coefficient_count",
                 "expected " + std::to_string(d.r) + " constants, got " +
                     std::to_string(d.constants.size()));
        } else {
            for (int i = 1; i <= d.r; ++i)
                for (int j = i + 1; j <= d.r; ++j)
                    if (d.constant(i) == d.constant(j))
                        flag("type1_constants_equal",
                             "constants a_" + std::to_string(i) + " and a_" + std::to_string(j) +
                                 " coincide",
                             {i, j});
        }
    } else {
        if (static_cast<int>(d.columns.size()) != d.r + 1) {
            flag("type2_matrix_shape",
                 "expected " + std::to_string(d.r + 1) + " matrix columns, got " +
                     std::to_string(d.columns.size()));
        } else {
            for (int i = 0; i <= d.r; ++i)
                for (int j = i + 1; j <= d.r; ++j) {
                    Rational det = d.column(i)[0] * d.column(j)[1] - d.column(j)[0] * d.column(i)[1];
                    if (det.is_zero())
                        flag("type2_dependent_columns",
                             "matrix columns " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are linearly dependent",
                             {i, j});
                }
        }
    }
    return rep;
}

void require_valid(const TrinomialDatum& d) {
    ValidationReport rep = validate(d);
    if (!rep.valid)
        throw InvalidDatum(rep.violations.empty() ? "invalid datum"
                                                  : rep.violations.front().message);
}

} // namespace trivar
