#pragma once

#include <map>
#include <optional>
#include <vector>

#include "trivar/datum.hpp"
#include "trivar/derivation.hpp"
#include "trivar/groebner.hpp"
#include "trivar/suspension.hpp"

namespace trivar {

// A derivation of the datum's coordinate ring, presented by ambient images.
struct Derivation {
    DerivationImages images;
};

// Gröbner basis of the datum's relation ideal under the default order.
// Everything downstream takes an optional precompute so sweeps can build it
// once per datum and share it read-only.
GroebnerBasis relation_basis(const TrinomialDatum& d);

struct WellDefinedCertificate {
    bool ok = false;
    // normal_form(d(g_i)) per relation, all zero iff ok.
    std::vector<Polynomial> reduced_images;
};

// d descends to the quotient iff it maps every relation into the ideal.
WellDefinedCertificate verify_well_defined(const Derivation& der, const TrinomialDatum& d,
                                           const GroebnerBasis* gb = nullptr);

enum class NilpotencyVerdict { Proven, Inconclusive };

struct NilpotencyCertificate {
    NilpotencyVerdict verdict = NilpotencyVerdict::Inconclusive;
    // depth[v]: the least n with (nf . d)^{n+1}(v) = 0, for each resolved
    // ring generator (0 means the generator is already in the kernel).
    std::map<VariableId, int> depths;
    std::vector<VariableId> unresolved; // generators that never vanished within bound
};

// Iterates v -> normal_form(d(v)) from every ring generator.  Proven means
// every chain hit zero within the bound.  Inconclusive is NOT a proof of
// non-nilpotency: the procedure never certifies the negative.
NilpotencyCertificate verify_locally_nilpotent(const Derivation& der, const TrinomialDatum& d,
                                               int bound = kDefaultNilpotencyBound,
                                               const GroebnerBasis* gb = nullptr);

// The exponential flow fixes the ideal: exp(t*d)(g_i) reduces to zero
// modulo the relations, now read inside the ring extended by the flow
// parameter t.  Propagates NotNilpotentWithinBound from exp_action.
bool exp_preserves_ideal(const Derivation& der, const TrinomialDatum& d,
                         int bound = kDefaultNilpotencyBound,
                         const GroebnerBasis* gb = nullptr);

// m > 0: the translation d/dS_1.  Trivially well defined (relations have no
// S variables) and nilpotent of depth 1 on S_1, 0 elsewhere.
Derivation witness_s_variable(const TrinomialDatum& d);

// Single-relation datum g with a variable of exponent 1: the Jacobian-style
// derivation  linear_var -> dg/d(partner), partner -> -dg/d(linear_var),
// all else -> 0.  Annihilates g in the ambient ring, hence well defined;
// locally nilpotent with depth on linear_var at most (partner exponent) + 1
// when linear_var has exponent 1 and partner sits in a different tuple.
Derivation witness_jacobian(const TrinomialDatum& d, VariableId linear_var,
                            VariableId partner_var);

// Extends a base derivation by y_i -> 0 across a suspension.  Requires the
// base derivation to kill f modulo the base ideal (FNotInKernel otherwise);
// then the glue relation y^k - f also maps into the ideal.
Derivation witness_suspension_lift(const Derivation& base, const SuspensionSpec& spec);

struct WitnessReport {
    Derivation derivation;
    WellDefinedCertificate well_defined;
    NilpotencyCertificate nilpotency;
    bool exp_ok = false;
    bool verified() const {
        return well_defined.ok && nilpotency.verdict == NilpotencyVerdict::Proven && exp_ok;
    }
};

// The search the CLI runs under --witness: S-variable witness when m > 0,
// else Jacobian witnesses over all (linear, partner) choices on
// single-relation data, else (Type 2, r >= 3) suspension lifts of base
// witnesses whose f lies in the kernel.  Returns the first fully verified
// witness; nullopt when the search constructs nothing.  If a constructed
// candidate fails verification (which the constructions rule out), it is
// reported via constructed_but_failed for the CLI's internal-error path.
std::optional<WitnessReport> try_construct_witness(const TrinomialDatum& d,
                                                   int bound = kDefaultNilpotencyBound,
                                                   bool* constructed_but_failed = nullptr);

} // namespace trivar
