#include "trivar/sweep.hpp"

#include <algorithm>
#include <functional>

#include "trivar/classify.hpp"
#include "trivar/cases.hpp"
#include "trivar/errors.hpp"
#include "trivar/io.hpp"
#include "trivar/lnd.hpp"
#include "trivar/random_datum.hpp"
#include "trivar/relations.hpp"

namespace trivar {

namespace {

constexpr long long kSweepDatumCap = 1000000;

bool all_exponents_at_least(const TrinomialDatum& d, long long bound) {
    for (const auto& tuple : d.exponents) {
        for (long long e : tuple) {
            if (e < bound) return false;
        }
    }
    return true;
}

struct RowOutcome {
    bool applicable = false;
    bool ok = true;
    std::string detail;
};

RowOutcome check_pham(const TrinomialDatum& d) {
    RowOutcome out;
    out.applicable = d.type == VarietyType::Type2 && d.r == 2 && d.is_surface() &&
                     all_exponents_at_least(d, 2);
    if (!out.applicable) return out;
    int twos = 0;
    for (const auto& tuple : d.exponents) {
        if (tuple[0] == 2) ++twos;
    }
    const bool expect_rigid = twos < 2;
    const bool rigid = classify_rigidity(d).rigid;
    out.ok = rigid == expect_rigid;
    if (!out.ok) {
        out.detail = expect_rigid ? "expected rigid (fewer than two exponents equal 2)"
                                  : "expected non-rigid (two exponents equal 2)";
    }
    return out;
}

RowOutcome check_rationality_dominance(const TrinomialDatum& d) {
    RowOutcome out;
    out.applicable = d.type == VarietyType::Type2 && d.is_surface();
    if (!out.applicable) return out;
    if (classify_rigidity(d).rigid) return out;
    out.ok = classify_rationality(d).rational;
    if (!out.ok) out.detail = "non-rigid surface classified irrational";
    return out;
}

RowOutcome check_abc_dominance(const TrinomialDatum& d) {
    RowOutcome out;
    out.applicable = d.type == VarietyType::Type2 && d.is_surface() &&
                     all_exponents_at_least(d, 2);
    if (!out.applicable) return out;
    if (!abc_kernel_predicate(d)) return out;
    out.ok = classify_rigidity(d).rigid;
    if (!out.ok) out.detail = "reciprocal-sum predicate holds but verdict is non-rigid";
    return out;
}

RowOutcome check_elimination_stability(const TrinomialDatum& d) {
    RowOutcome out;
    if (!d.is_surface()) return out;
    const bool before = classify_rigidity(d).rigid;
    for (int i = d.first_index(); i <= d.last_index(); ++i) {
        if (d.tuple(i)[0] != 1) continue;
        out.applicable = true;
        const auto reduced = eliminate_linear_monomial(d, i);
        const bool after = std::holds_alternative<FullAffineSpace>(reduced)
                               ? false
                               : classify_rigidity(std::get<TrinomialDatum>(reduced)).rigid;
        if (after != before) {
            out.ok = false;
            out.detail = "verdict flipped after eliminating tuple " + std::to_string(i);
            return out;
        }
    }
    return out;
}

RowOutcome check_torus_semiinvariance(const TrinomialDatum& d) {
    RowOutcome out;
    out.applicable = d.type == VarietyType::Type2 && d.is_surface() && d.r >= 2;
    if (!out.applicable) return out;
    const TorusWeights tw = torus_weights(d);
    std::map<VariableId, Polynomial> images;
    for (int i = 0; i <= d.r; ++i) {
        images[t_var(i, 1)] = Polynomial::term(
            Monomial::variable(param_var(), tw.weights[static_cast<std::size_t>(i)]) *
                Monomial::variable(t_var(i, 1), 1),
            Rational(1));
    }
    const Polynomial t_to_L =
        Polynomial::term(Monomial::variable(param_var(), tw.L), Rational(1));
    for (const Polynomial& g : relations(d).relations) {
        if (g.substitute(images) != t_to_L * g) {
            out.ok = false;
            out.detail = "scaled relation is not t^L times the relation";
            return out;
        }
    }
    return out;
}

RowOutcome check_witness_verify(const TrinomialDatum& d, int bound) {
    RowOutcome out;
    out.applicable = true;
    bool constructed_but_failed = false;
    const auto report = try_construct_witness(d, bound, &constructed_but_failed);
    if (constructed_but_failed) {
        out.ok = false;
        out.detail = "a constructed witness failed verification";
        return out;
    }
    bool has_linear = false;
    for (const auto& tuple : d.exponents) {
        for (long long e : tuple) {
            if (e == 1) has_linear = true;
        }
    }
    const bool must_have = d.m > 0 || (d.r == 2 && has_linear);
    if (must_have && (!report || !report->verified())) {
        out.ok = false;
        out.detail = "no verified witness for a guaranteed-flexible datum";
    }
    return out;
}

RowOutcome check_gamma_identity(const TrinomialDatum& d) {
    RowOutcome out;
    out.applicable = true;
    const CaseAIdentityReport rep = check_case_a_identity(d);
    out.ok = rep.match && rep.factor_recombines && rep.gamma_recombines &&
             !rep.gamma1_sq.is_zero();
    if (!out.ok) out.detail = "squared-root recombination identity failed";
    return out;
}

void emit_row(SweepSummary& summary, std::ostream* rows, const std::string& check,
              const TrinomialDatum& d, const RowOutcome& out) {
    if (!out.applicable) return;
    auto& stats = summary.by_check[check];
    ++summary.rows;
    ++stats.rows;
    if (!out.ok) {
        ++summary.failures;
        ++stats.failures;
    }
    if (rows == nullptr && (out.ok || summary.first_failure)) return;
    nlohmann::ordered_json row;
    row["check"] = check;
    row["datum"] = datum_to_json(d);
    row["ok"] = out.ok;
    if (!out.ok) row["detail"] = out.detail;
    const std::string line = row.dump();
    if (!out.ok && !summary.first_failure) summary.first_failure = line;
    if (rows != nullptr) *rows << line << '\n';
}

void enumerate_tuples(const SweepOptions& opt, int tuple_count,
                      std::vector<std::vector<long long>>& tuples,
                      const std::function<void(const std::vector<std::vector<long long>>&)>& visit) {
    if (static_cast<int>(tuples.size()) == tuple_count) {
        visit(tuples);
        return;
    }
    for (int n = 1; n <= opt.max_n; ++n) {
        std::vector<long long> tuple(static_cast<std::size_t>(n), 1);
        while (true) {
            tuples.push_back(tuple);
            enumerate_tuples(opt, tuple_count, tuples, visit);
            tuples.pop_back();
            // Advance the exponent odometer (last position fastest).
            int j = n - 1;
            while (j >= 0 && tuple[static_cast<std::size_t>(j)] == opt.max_l) {
                tuple[static_cast<std::size_t>(j)] = 1;
                --j;
            }
            if (j < 0) break;
            ++tuple[static_cast<std::size_t>(j)];
        }
    }
}

} // namespace

const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names = {
        "pham",
        "rationality-dominance",
        "abc-dominance",
        "elimination-stability",
        "torus-semiinvariance",
        "witness-verify",
        "gamma-identity",
    };
    return names;
}

std::vector<TrinomialDatum> enumerate_sweep_data(const SweepOptions& opt) {
    std::vector<TrinomialDatum> data;
    for (int r = 2; r <= opt.max_r; ++r) {
        const int tuple_count = opt.type == VarietyType::Type1 ? r : r + 1;
        std::vector<std::vector<long long>> tuples;
        enumerate_tuples(opt, tuple_count, tuples,
                         [&](const std::vector<std::vector<long long>>& exponents) {
                             for (int m = 0; m <= opt.max_m; ++m) {
                                 TrinomialDatum d = opt.type == VarietyType::Type1
                                                        ? type1_datum(exponents, m)
                                                        : TrinomialDatum{};
                                 if (opt.type == VarietyType::Type2) {
                                     d.type = VarietyType::Type2;
                                     d.r = r;
                                     d.m = m;
                                     d.exponents = exponents;
                                     d.columns = generic_columns(r);
                                 }
                                 if (static_cast<long long>(data.size()) >= kSweepDatumCap) {
                                     throw ResourceLimitExceeded(
                                         "sweep bounds enumerate more than 1000000 data");
                                 }
                                 data.push_back(std::move(d));
                             }
                         });
    }
    return data;
}

SweepSummary run_sweep(const SweepOptions& opt, std::ostream* rows) {
    std::vector<std::string> checks = opt.checks.empty() ? sweep_check_names() : opt.checks;
    for (const auto& name : checks) {
        if (std::find(sweep_check_names().begin(), sweep_check_names().end(), name) ==
            sweep_check_names().end()) {
            throw ParseError("unknown check: " + name);
        }
    }
    const auto selected = [&checks](const char* name) {
        return std::find(checks.begin(), checks.end(), name) != checks.end();
    };

    SweepSummary summary;
    for (const auto& name : checks) summary.by_check[name]; // stable key set

    const bool any_enumerated = selected("pham") || selected("rationality-dominance") ||
                                selected("abc-dominance") || selected("elimination-stability") ||
                                selected("torus-semiinvariance") || selected("witness-verify");
    if (any_enumerated) {
        for (const TrinomialDatum& d : enumerate_sweep_data(opt)) {
            if (selected("pham")) emit_row(summary, rows, "pham", d, check_pham(d));
            if (selected("rationality-dominance")) {
                emit_row(summary, rows, "rationality-dominance", d,
                         check_rationality_dominance(d));
            }
            if (selected("abc-dominance")) {
                emit_row(summary, rows, "abc-dominance", d, check_abc_dominance(d));
            }
            if (selected("elimination-stability")) {
                emit_row(summary, rows, "elimination-stability", d,
                         check_elimination_stability(d));
            }
            if (selected("torus-semiinvariance")) {
                emit_row(summary, rows, "torus-semiinvariance", d,
                         check_torus_semiinvariance(d));
            }
            if (selected("witness-verify")) {
                emit_row(summary, rows, "witness-verify", d, check_witness_verify(d, opt.bound));
            }
        }
    }

    if (selected("gamma-identity")) {
        for (int k = 0; k < opt.gamma_draws; ++k) {
            DeterministicRng rng(opt.seed + static_cast<std::uint64_t>(k));
            std::vector<long long> l(4);
            for (auto& e : l) e = rng.draw(1, opt.max_l);
            TrinomialDatum d = surface_datum(l);
            d.columns = random_columns(rng, 3);
            emit_row(summary, rows, "gamma-identity", d, check_gamma_identity(d));
        }
    }

    return summary;
}

} // namespace trivar
