#include <doctest.h>

#include <string>
#include <vector>

#include "trivar/classify.hpp"
#include "trivar/errors.hpp"
#include "trivar/random_datum.hpp"

using trivar::CaseTag;
using trivar::RationalityCase;
using trivar::ResidualTag;
using trivar::RigidityCondition;
using trivar::TrinomialDatum;

TEST_CASE("heavy tuples have no unit exponent") {
    const TrinomialDatum d = trivar::surface_datum({1, 2, 3, 1});
    CHECK(trivar::heavy_set(d) == std::vector<int>{1, 2});

    const TrinomialDatum t1 = trivar::type1_datum({{2, 1}, {3}, {4, 4}});
    CHECK(trivar::heavy_set(t1) == std::vector<int>{2, 3});
}

TEST_CASE("free variables alone force flexibility") {
    const auto v = trivar::classify_rigidity(trivar::surface_datum({3, 4, 5}, 2));
    CHECK_FALSE(v.rigid);
    CHECK(v.fired == RigidityCondition::MPositive);
    CHECK(v.exceptional.empty());
}

TEST_CASE("type 1 flexibility needs all but one tuple light") {
    const auto flexible = trivar::classify_rigidity(trivar::type1_datum({{1, 2}, {3}, {1}}));
    CHECK_FALSE(flexible.rigid);
    CHECK(flexible.fired == RigidityCondition::Type1Cond2);
    CHECK(flexible.exceptional == std::vector<int>{2});

    const auto rigid = trivar::classify_rigidity(trivar::type1_datum({{2}, {3}, {1}}));
    CHECK(rigid.rigid);
    CHECK(rigid.fired == RigidityCondition::None);
}

TEST_CASE("small pham-style surfaces") {
    CHECK_FALSE(trivar::classify_rigidity(trivar::surface_datum({2, 2, 5})).rigid);
    CHECK_FALSE(trivar::classify_rigidity(trivar::surface_datum({2, 2, 2})).rigid);
    CHECK(trivar::classify_rigidity(trivar::surface_datum({2, 3, 5})).rigid);
    CHECK(trivar::classify_rigidity(trivar::surface_datum({2, 3, 7})).rigid);
    CHECK(trivar::classify_rigidity(trivar::surface_datum({3, 3, 3})).rigid);
}

TEST_CASE("a light pair keeps type 2 flexible") {
    const auto v = trivar::classify_rigidity(trivar::surface_datum({1, 7, 9}));
    CHECK_FALSE(v.rigid);
    CHECK(v.fired == RigidityCondition::Type2Cond2);
    CHECK(v.exceptional == std::vector<int>{1, 2});
}

TEST_CASE("two even tuples with a 2 cover the heavy set") {
    // Tuples (2,4), (2), (3), (1,7): indices 0 and 1 are all-even with a 2,
    // index 2 is heavy and allowed as the third exception, index 3 is light.
    TrinomialDatum d;
    d.type = trivar::VarietyType::Type2;
    d.r = 3;
    d.m = 0;
    d.exponents = {{2, 4}, {2}, {3}, {1, 7}};
    d.columns = trivar::generic_columns(3);
    REQUIRE(trivar::validate(d).valid);
    const auto v = trivar::classify_rigidity(d);
    CHECK_FALSE(v.rigid);
    CHECK(v.fired == RigidityCondition::Type2Cond3);
    CHECK(v.exceptional == std::vector<int>{0, 1, 2});
}

TEST_CASE("condition order is fixed") {
    // Both the light-pair condition and the even-pair condition would fire;
    // the light-pair one is checked first.
    const auto v = trivar::classify_rigidity(trivar::surface_datum({2, 2, 1}));
    CHECK(v.fired == RigidityCondition::Type2Cond2);
}

TEST_CASE("rationality cases from pairwise tuple gcds") {
    using trivar::classify_rationality;
    // ell = (2, 3, 5): all pairs coprime.
    CHECK(classify_rationality(trivar::surface_datum({2, 3, 5})).fired ==
          RationalityCase::AllCoprime);
    // ell = (2, 2, 5): exactly one pair shares a factor.
    CHECK(classify_rationality(trivar::surface_datum({2, 2, 5})).fired ==
          RationalityCase::OnePair);
    // ell = (4, 2, 2): three indices, pairwise gcd exactly 2.
    CHECK(classify_rationality(trivar::surface_datum({4, 2, 2})).fired ==
          RationalityCase::TripleOfTwos);
    CHECK(classify_rationality(trivar::surface_datum({4, 2, 2})).rational);
    // ell = (4, 4, 2): one pair has gcd 4, so no case applies.
    const auto none = classify_rationality(trivar::surface_datum({4, 4, 2}));
    CHECK_FALSE(none.rational);
    CHECK(none.fired == RationalityCase::None);
    // ell = (2, 2, 2, 2): more than three pairwise-even indices.
    CHECK_FALSE(classify_rationality(trivar::surface_datum({2, 2, 2, 2})).rational);
    // ell = (6, 10, 15): pairwise gcds 2, 3, 5 — three pairs but not all 2.
    CHECK_FALSE(classify_rationality(trivar::surface_datum({6, 10, 15})).rational);
}

TEST_CASE("reciprocal-sum kernel predicate is exact") {
    using trivar::abc_kernel_predicate;
    // 1/2 + 1/3 + 1/7 = 41/42 <= 1.
    CHECK(abc_kernel_predicate(trivar::surface_datum({2, 3, 7})));
    // 1/2 + 1/3 + 1/5 = 31/30 > 1.
    CHECK_FALSE(abc_kernel_predicate(trivar::surface_datum({2, 3, 5})));
    // 1/2 + 1/3 + 1/6 = 1 exactly: boundary counts as held.
    CHECK(abc_kernel_predicate(trivar::surface_datum({2, 3, 6})));
    // Four tuples: the predicate scans all triples.
    CHECK(abc_kernel_predicate(trivar::surface_datum({2, 2, 3, 7})));
    CHECK_FALSE(abc_kernel_predicate(trivar::surface_datum({2, 2, 2, 3})));
    CHECK_THROWS_AS(abc_kernel_predicate(trivar::surface_datum({1, 2, 3})),
                    trivar::PreconditionViolated);
}

TEST_CASE("residual tags bucket the rigid exponent patterns") {
    auto tag_of = [](const std::vector<long long>& l) {
        return trivar::residual_case_tag(trivar::surface_datum(l));
    };

    CHECK(tag_of({2, 3, 7}).tag == ResidualTag::GameOverAbc);
    CHECK(tag_of({2, 2, 2, 2}).tag == ResidualTag::Case1);
    CHECK(tag_of({2, 2, 2, 2}).subcase == 0);
    CHECK(tag_of({2, 2, 2, 5}).tag == ResidualTag::Case2);
    CHECK(tag_of({2, 2, 2, 5}).subcase == 'a');
    CHECK(tag_of({2, 2, 3, 3}).tag == ResidualTag::Case3);
    CHECK(tag_of({2, 2, 3, 3}).subcase == 0);
    CHECK(tag_of({2, 2, 3, 4}).tag == ResidualTag::Case4);
    CHECK(tag_of({2, 2, 3, 4}).subcase == 'b');
    CHECK(tag_of({2, 2, 3, 5}).tag == ResidualTag::Case5);
    CHECK(tag_of({2, 2, 3, 5}).subcase == 'c');
    CHECK(tag_of({2, 2, 2, 3, 5}).tag == ResidualTag::Case5);
    CHECK(tag_of({2, 2, 2, 3, 5}).subcase == 'd');
    // Case 2 with an even residual exponent is irrational: no subcase.
    CHECK(tag_of({2, 2, 2, 4}).tag == ResidualTag::Case2);
    CHECK(tag_of({2, 2, 2, 4}).subcase == 0);
}

TEST_CASE("screening tags for data outside the residual bucket domain") {
    // Rigid but with an exponent 1: a tuple can be eliminated first.
    CHECK(trivar::residual_case_tag(trivar::surface_datum({1, 3, 5, 7, 9})).tag ==
          ResidualTag::Reducible);

    // Rigid non-surface datum.
    TrinomialDatum d;
    d.type = trivar::VarietyType::Type2;
    d.r = 2;
    d.m = 0;
    d.exponents = {{2, 4}, {3}, {5}};
    d.columns = trivar::generic_columns(2);
    REQUIRE(trivar::validate(d).valid);
    REQUIRE(trivar::classify_rigidity(d).rigid);
    CHECK(trivar::residual_case_tag(d).tag == ResidualTag::NotSurface);

    // The residual analysis refuses non-rigid data.
    CHECK_THROWS_AS(trivar::residual_case_tag(trivar::surface_datum({2, 2, 5})),
                    trivar::PreconditionViolated);
    CHECK_THROWS_AS(trivar::residual_case_tag(trivar::type1_datum({{2}, {3}})),
                    trivar::PreconditionViolated);
}

TEST_CASE("wire names for every verdict") {
    CHECK(std::string(trivar::rigidity_condition_name(RigidityCondition::MPositive)) ==
          "M_POSITIVE");
    CHECK(std::string(trivar::rigidity_condition_name(RigidityCondition::Type1Cond2)) ==
          "T1_COND2");
    CHECK(std::string(trivar::rigidity_condition_name(RigidityCondition::Type2Cond2)) ==
          "T2_COND2");
    CHECK(std::string(trivar::rigidity_condition_name(RigidityCondition::Type2Cond3)) ==
          "T2_COND3");
    CHECK(std::string(trivar::rigidity_condition_name(RigidityCondition::None)) == "NONE");
    CHECK(std::string(trivar::rationality_case_name(RationalityCase::AllCoprime)) ==
          "ALL_COPRIME");
    CHECK(std::string(trivar::rationality_case_name(RationalityCase::OnePair)) == "ONE_PAIR");
    CHECK(std::string(trivar::rationality_case_name(RationalityCase::TripleOfTwos)) ==
          "TRIPLE_OF_TWOS");
    CHECK(std::string(trivar::residual_tag_name(ResidualTag::GameOverAbc)) == "GAME_OVER_ABC");
    CHECK(std::string(trivar::residual_tag_name(ResidualTag::Case1)) == "CASE1");
    CHECK(std::string(trivar::residual_tag_name(ResidualTag::Case5)) == "CASE5");
    CHECK(std::string(trivar::residual_tag_name(ResidualTag::NotSurface)) == "NOT_SURFACE");
    CHECK(std::string(trivar::residual_tag_name(ResidualTag::Reducible)) == "REDUCIBLE");
}
