#include "trivar/lnd.hpp"

#include <algorithm>

#include "trivar/classify.hpp"
#include "trivar/errors.hpp"
#include "trivar/relations.hpp"

namespace trivar {

GroebnerBasis relation_basis(const TrinomialDatum& d) {
    return buchberger(relations(d).relations, MonomialOrder{});
}

WellDefinedCertificate verify_well_defined(const Derivation& der, const TrinomialDatum& d,
                                           const GroebnerBasis* gb) {
    GroebnerBasis local = gb ? *gb : relation_basis(d);
    WellDefinedCertificate cert;
    cert.ok = true;
    for (const Polynomial& g : relations(d).relations) {
        Polynomial nf = normal_form(apply_derivation(der.images, g), local);
        if (!nf.is_zero()) cert.ok = false;
        cert.reduced_images.push_back(std::move(nf));
    }
    return cert;
}

NilpotencyCertificate verify_locally_nilpotent(const Derivation& der, const TrinomialDatum& d,
                                               int bound, const GroebnerBasis* gb) {
    GroebnerBasis local = gb ? *gb : relation_basis(d);
    NilpotencyCertificate cert;
    cert.verdict = NilpotencyVerdict::Proven;
    for (const VariableId& v : d.all_variables()) {
        Polynomial chain = Polynomial::variable(v);
        int vanished_at = -1;
        for (int n = 1; n <= bound + 1; ++n) {
            chain = normal_form(apply_derivation(der.images, chain), local);
            if (chain.is_zero()) {
                vanished_at = n;
                break;
            }
        }
        if (vanished_at < 0) {
            cert.verdict = NilpotencyVerdict::Inconclusive;
            cert.unresolved.push_back(v);
        } else {
            cert.depths[v] = vanished_at - 1;
        }
    }
    return cert;
}

bool exp_preserves_ideal(const Derivation& der, const TrinomialDatum& d, int bound,
                         const GroebnerBasis* gb) {
    // The relations involve no flow parameter, so the same basis serves for
    // the extended ring: t is just one more (smallest) variable during
    // reduction.
    GroebnerBasis local = gb ? *gb : relation_basis(d);
    for (const Polynomial& g : relations(d).relations) {
        Polynomial flowed = exp_action(der.images, g, bound);
        if (!normal_form(flowed, local).is_zero()) return false;
    }
    return true;
}

Derivation witness_s_variable(const TrinomialDatum& d) {
    require_valid(d);
    if (d.m <= 0) throw NoSVariables("witness_s_variable needs m > 0");
    Derivation der;
    der.images[s_var(1)] = Polynomial::constant(Rational(1));
    return der;
}

Derivation witness_jacobian(const TrinomialDatum& d, VariableId linear_var,
                            VariableId partner_var) {
    require_valid(d);
    RelationSet rel = relations(d);
    if (rel.relations.size() != 1)
        throw NotHypersurface("witness_jacobian needs exactly one relation, got " +
                              std::to_string(rel.relations.size()));
    const Polynomial& g = rel.relations.front();

    if (linear_var.kind != VarKind::T || partner_var.kind != VarKind::T)
        throw InvalidDatum("witness_jacobian moves T variables only");
    if (linear_var.row == partner_var.row)
        throw InvalidDatum("linear and partner variables must sit in different tuples");
    const auto in_datum = [&d](const VariableId& v) {
        return v.row >= d.first_index() && v.row <= d.last_index() && v.pos >= 1 &&
               v.pos <= d.tuple_size(v.row);
    };
    if (!in_datum(linear_var)) throw InvalidDatum("linear variable is not part of the datum");
    if (!in_datum(partner_var)) throw InvalidDatum("partner variable is not part of the datum");
    const auto& tup = d.tuple(linear_var.row);
    if (tup[linear_var.pos - 1] != 1)
        throw ExponentNotOne("variable " + variable_name(linear_var) +
                             " has exponent " + std::to_string(tup[linear_var.pos - 1]) +
                             ", expected 1");

    Derivation der;
    der.images[linear_var] = g.partial_derivative(partner_var);
    der.images[partner_var] = -g.partial_derivative(linear_var);
    return der;
}

Derivation witness_suspension_lift(const Derivation& base, const SuspensionSpec& spec) {
    GroebnerBasis base_gb = relation_basis(spec.base);
    Polynomial df = apply_derivation(base.images, spec.f);
    if (!normal_form(df, base_gb).is_zero())
        throw FNotInKernel("base derivation does not annihilate f modulo the base ideal");
    Derivation lifted = base;
    for (const VariableId& y : spec.new_vars)
        lifted.images[y] = Polynomial::zero(); // explicit: the new variables are fixed
    return lifted;
}

namespace {

// All Jacobian witness candidates of a single-relation datum, in canonical
// variable order: every exponent-1 T variable paired with every T variable
// of a different tuple.
std::vector<Derivation> jacobian_candidates(const TrinomialDatum& d) {
    std::vector<Derivation> out;
    for (int i = d.first_index(); i <= d.last_index(); ++i) {
        const auto& tup = d.tuple(i);
        for (int j = 1; j <= static_cast<int>(tup.size()); ++j) {
            if (tup[j - 1] != 1) continue;
            for (int i2 = d.first_index(); i2 <= d.last_index(); ++i2) {
                if (i2 == i) continue;
                for (int j2 = 1; j2 <= d.tuple_size(i2); ++j2)
                    out.push_back(witness_jacobian(d, t_var(i, j), t_var(i2, j2)));
            }
        }
    }
    return out;
}

std::vector<Derivation> candidates(const TrinomialDatum& d, int depth_budget) {
    if (d.m > 0) return {witness_s_variable(d)};
    if (d.r == 2) return jacobian_candidates(d); // single relation for either type
    if (d.type == VarietyType::Type2 && d.r >= 3 && depth_budget > 0) {
        SplitResult split = suspension_split(d);
        SuspensionSpec spec = split_to_spec(split);
        std::vector<Derivation> out;
        for (const Derivation& base : candidates(split.base, depth_budget - 1)) {
            try {
                out.push_back(witness_suspension_lift(base, spec));
            } catch (const FNotInKernel&) {
                // This base witness does not respect the glue; skip it.
            }
        }
        return out;
    }
    return {};
}

} // namespace

std::optional<WitnessReport> try_construct_witness(const TrinomialDatum& d, int bound,
                                                   bool* constructed_but_failed) {
    if (constructed_but_failed) *constructed_but_failed = false;
    require_valid(d);
    if (classify_rigidity(d).rigid) return std::nullopt;

    GroebnerBasis gb = relation_basis(d);
    bool any_failed = false;
    for (const Derivation& der : candidates(d, d.r)) {
        WitnessReport report;
        report.derivation = der;
        report.well_defined = verify_well_defined(der, d, &gb);
        report.nilpotency = verify_locally_nilpotent(der, d, bound, &gb);
        try {
            report.exp_ok = report.nilpotency.verdict == NilpotencyVerdict::Proven &&
                            exp_preserves_ideal(der, d, bound, &gb);
        } catch (const NotNilpotentWithinBound&) {
            report.exp_ok = false;
        }
        if (report.verified()) return report;
        any_failed = true;
    }
    if (constructed_but_failed) *constructed_but_failed = any_failed;
    return std::nullopt;
}

} // namespace trivar
