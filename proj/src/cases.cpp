#include "trivar/cases.hpp"

#include <numeric>

#include "trivar/errors.hpp"
#include "trivar/groebner.hpp"
#include "trivar/relations.hpp"

namespace trivar {

CaseAIdentityReport check_case_a_identity(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw PreconditionViolated("case-a identity is defined for Type 2 data");
    if (!d.is_surface()) throw NotSurface("case-a identity needs a surface datum");
    if (d.r != 3) throw WrongShape("case-a identity needs r = 3 (two relations)");

    auto triples = trinomial_coefficients(d);
    CaseAIdentityReport rep;
    rep.c1 = triples[0][0];
    rep.c2 = triples[0][1];
    rep.c3 = triples[0][2];
    rep.c4 = triples[1][0];
    rep.c5 = triples[1][1];
    rep.c6 = triples[1][2];

    rep.beta1_sq = rep.c4 / rep.c6;
    rep.beta2_sq = -rep.c5 / rep.c6;
    rep.gamma0_sq = -(rep.c5 / rep.c6) * (rep.c1 / rep.c3);
    rep.gamma1_sq = -rep.c4 / rep.c6 + (rep.c5 / rep.c6) * (rep.c2 / rep.c3);

    auto minor = [&](int i, int j) {
        return d.column(i)[0] * d.column(j)[1] - d.column(j)[0] * d.column(i)[1];
    };
    rep.minor_product = minor(0, 3) * minor(1, 2);
    rep.match = (rep.gamma1_sq * rep.c6 * rep.c3 == rep.minor_product);

    // f solved from the second relation: M3 = (c4/c6)M1 + (c5/c6)M2 in the
    // sign convention where the relation reads c4*M1 + c5*M2 + c6*M3 = 0
    // after moving M3 across.  (The split's f is exactly -this.)
    Monomial M0 = tuple_monomial(d, 0);
    Monomial M1 = tuple_monomial(d, 1);
    Monomial M2 = tuple_monomial(d, 2);
    rep.f = Polynomial::term(M1, rep.c4 / rep.c6) + Polynomial::term(M2, rep.c5 / rep.c6);

    // (beta1*M1^(1/2) +- beta2*M2^(1/2)) multiply to beta1_sq*M1 - beta2_sq*M2;
    // in squared form that product must be f again.
    Polynomial factor_product =
        Polynomial::term(M1, rep.beta1_sq) - Polynomial::term(M2, rep.beta2_sq);
    rep.factor_recombines = (factor_product == rep.f);

    // gamma0_sq*M0 - gamma1_sq*M1 == f after reducing M2 via the first
    // relation; check modulo the ideal generated by g_0 alone.
    RelationSet rel = relations(d);
    GroebnerBasis g0 = buchberger({rel.relations[0]}, MonomialOrder{});
    Polynomial gamma_combo =
        Polynomial::term(M0, rep.gamma0_sq) - Polynomial::term(M1, rep.gamma1_sq);
    rep.gamma_recombines = normal_form(gamma_combo - rep.f, g0).is_zero();

    return rep;
}

namespace {

struct GradingShape {
    std::vector<long long> pattern; // canonical exponents; 0 = "any odd"
    std::vector<long long> weights; // per tuple 0..r-1
    long long f_degree;
};

GradingShape shape_for(char subcase) {
    switch (subcase) {
        case 'a': return {{2, 2, 2, 0}, {1, 1, 1}, 2};
        case 'b': return {{2, 2, 4, 3}, {2, 2, 1}, 4};
        case 'c': return {{2, 2, 3, 5}, {3, 3, 2}, 6};
        case 'd': return {{2, 2, 2, 3, 5}, {3, 3, 3, 2}, 6};
        default: throw WrongShape(std::string("unknown subcase '") + subcase + "'");
    }
}

} // namespace

bool check_case_gradings(const TrinomialDatum& d, char subcase) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw PreconditionViolated("grading check is defined for Type 2 data");
    if (!d.is_surface()) throw NotSurface("grading check needs a surface datum");

    GradingShape shape = shape_for(subcase);
    int tuples = static_cast<int>(shape.pattern.size());
    if (d.r + 1 != tuples)
        throw WrongShape("subcase expects " + std::to_string(tuples) + " tuples");
    for (int i = 0; i < tuples; ++i) {
        long long want = shape.pattern[i];
        long long got = d.tuple(i)[0];
        if (want == 0) {
            if (got % 2 == 0)
                throw WrongShape("final exponent must be odd for subcase a");
        } else if (got != want) {
            throw WrongShape("tuple " + std::to_string(i) + " must have exponent " +
                             std::to_string(want));
        }
    }

    std::map<VariableId, long long> weights;
    for (int i = 0; i < d.r; ++i) weights[t_var(i, 1)] = shape.weights[i];

    // (i) every relation not involving the final tuple is homogeneous;
    RelationSet rel = relations(d);
    for (int k = 0; k + 1 < static_cast<int>(rel.relations.size()); ++k)
        if (!rel.relations[k].weighted_degree(weights)) return false;

    // (ii) f — the last relation solved for the final monomial — is
    // homogeneous of the stated degree;
    auto triples = trinomial_coefficients(d);
    const auto& last = triples.back();
    Polynomial f = Polynomial::term(tuple_monomial(d, d.r - 2), last[0] / last[2]) +
                   Polynomial::term(tuple_monomial(d, d.r - 1), last[1] / last[2]);
    auto fdeg = f.weighted_degree(weights);
    if (!fdeg || *fdeg != shape.f_degree) return false;

    // (iii) that degree is coprime to the suspension exponent.
    long long n = d.tuple(d.r)[0];
    return std::gcd(shape.f_degree, n) == 1;
}

} // namespace trivar
