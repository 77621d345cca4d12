#include <doctest.h>

#include "trivar/errors.hpp"
#include "trivar/random_datum.hpp"
#include "trivar/relations.hpp"
#include "trivar/suspension.hpp"

using trivar::Monomial;
using trivar::Polynomial;
using trivar::Rational;
using trivar::SplitResult;
using trivar::SuspensionSpec;
using trivar::TrinomialDatum;
using trivar::t_var;

namespace {

Polynomial rewritten_monomial(const TrinomialDatum& d, const SplitResult& split) {
    return Polynomial::term(trivar::tuple_monomial(d, d.r), Rational(1)) - split.f;
}

} // namespace

TEST_CASE("identity-plus-ones matrix splits with unit coefficients") {
    // Columns (1,0), (0,1), (1,1): p1 = -det(col1,col2)/det(col0,col1) = 1,
    // p2 = det(col0,col2)/det(col0,col1) = 1.
    TrinomialDatum d = trivar::surface_datum({2, 3, 4});
    d.columns = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    const SplitResult split = trivar::suspension_split(d);
    CHECK(split.p1 == Rational(1));
    CHECK(split.p2 == Rational(1));
    CHECK(split.f == Polynomial::variable(t_var(0, 1)).pow(2) +
                         Polynomial::variable(t_var(1, 1)).pow(3));
    CHECK(split.suspension_weights == std::vector<long long>{4});
    REQUIRE(split.suspension_vars.size() == 1);
    CHECK(split.suspension_vars[0] == t_var(2, 1));
    CHECK(split.base.r == 1);
    CHECK(trivar::validate(split.base).valid);
}

TEST_CASE("the split rewrites the last relation up to a scalar") {
    trivar::DeterministicRng rng(11);
    for (int k = 0; k < 20; ++k) {
        const TrinomialDatum d =
            trivar::random_datum(rng, trivar::VarietyType::Type2, 4, 3, 5, 0);
        const SplitResult split = trivar::suspension_split(d);
        const auto rels = trivar::relations(d).relations;
        REQUIRE_FALSE(rels.empty());
        CHECK(rewritten_monomial(d, split).proportional_to(rels.back()));
        // The base keeps exactly the earlier relations.
        const auto base_rels = trivar::relations(split.base).relations;
        REQUIRE(base_rels.size() == rels.size() - 1);
        for (std::size_t i = 0; i < base_rels.size(); ++i) CHECK(base_rels[i] == rels[i]);
    }
}

TEST_CASE("chains peel down to the affine base") {
    const TrinomialDatum d = trivar::surface_datum({2, 2, 3, 2, 4});
    const auto chain = trivar::split_chain(d);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].base.r == 3);
    CHECK(chain[1].base.r == 2);
    CHECK(chain[2].base.r == 1);
    // Each stage rewrites the datum it was split from.
    TrinomialDatum current = d;
    for (const auto& split : chain) {
        const auto rels = trivar::relations(current).relations;
        CHECK(rewritten_monomial(current, split).proportional_to(rels.back()));
        current = split.base;
    }
}

TEST_CASE("split preconditions") {
    CHECK_THROWS_AS(trivar::suspension_split(trivar::type1_datum({{2}, {3}})),
                    trivar::InvalidDatum);
    TrinomialDatum r1;
    r1.type = trivar::VarietyType::Type2;
    r1.r = 1;
    r1.exponents = {{2}, {3}};
    r1.columns = trivar::generic_columns(1);
    CHECK_THROWS_AS(trivar::suspension_split(r1), trivar::InvalidDatum);
}

TEST_CASE("multi-variable suspension tuples carry their whole weight vector") {
    TrinomialDatum d;
    d.type = trivar::VarietyType::Type2;
    d.r = 2;
    d.m = 0;
    d.exponents = {{2}, {3}, {2, 5}};
    d.columns = trivar::generic_columns(2);
    REQUIRE(trivar::validate(d).valid);
    const SplitResult split = trivar::suspension_split(d);
    CHECK(split.suspension_weights == std::vector<long long>{2, 5});
    REQUIRE(split.suspension_vars.size() == 2);
    CHECK(split.suspension_vars[0] == t_var(2, 1));
    CHECK(split.suspension_vars[1] == t_var(2, 2));
    CHECK(rewritten_monomial(d, split).proportional_to(trivar::relations(d).relations.back()));
}

TEST_CASE("build_suspension validates its pieces") {
    const TrinomialDatum base = trivar::surface_datum({2, 3});
    const auto base_rels = trivar::relations(base).relations; // empty for r = 1
    const Polynomial f = Polynomial::variable(t_var(0, 1)).pow(2) +
                         Polynomial::variable(t_var(1, 1)).pow(3);
    const trivar::VariableId fresh = t_var(2, 1);

    const auto rels = trivar::build_suspension(base_rels, f, {4}, {fresh});
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == Polynomial::variable(fresh).pow(4) - f);

    CHECK_THROWS_AS(
        trivar::build_suspension(base_rels, Polynomial::constant(Rational(3)), {4}, {fresh}),
        trivar::ConstantF);
    CHECK_THROWS_AS(trivar::build_suspension(base_rels, f, {4, 2}, {fresh}),
                    trivar::InvalidDatum);
    CHECK_THROWS_AS(trivar::build_suspension(base_rels, f, {0}, {fresh}),
                    trivar::InvalidDatum);
    CHECK_THROWS_AS(trivar::build_suspension(base_rels, f, {4}, {t_var(0, 1)}),
                    trivar::InvalidDatum);
}

TEST_CASE("split_to_spec rebuilds the split datum's relations") {
    const TrinomialDatum d = trivar::surface_datum({2, 3, 4, 5});
    const SplitResult split = trivar::suspension_split(d);
    const SuspensionSpec spec = trivar::split_to_spec(split);
    const auto rebuilt = trivar::build_suspension(spec);
    const auto original = trivar::relations(d).relations;
    REQUIRE(rebuilt.size() == original.size());
    // Earlier relations are identical; the glue relation is the rewritten
    // last relation, proportional to the original.
    for (std::size_t i = 0; i + 1 < rebuilt.size(); ++i) CHECK(rebuilt[i] == original[i]);
    CHECK(rebuilt.back().proportional_to(original.back()));
}
