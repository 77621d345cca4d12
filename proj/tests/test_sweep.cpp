#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trivar/errors.hpp"
#include "trivar/io.hpp"
#include "trivar/sweep.hpp"

using trivar::SweepOptions;
using trivar::SweepSummary;
using trivar::TrinomialDatum;
using trivar::VarietyType;

TEST_CASE("unknown check names are rejected up front") {
    SweepOptions opt;
    opt.checks = {"pham", "phammm"};
    CHECK_THROWS_AS(trivar::run_sweep(opt), trivar::ParseError);
    opt.checks = {""};
    CHECK_THROWS_AS(trivar::run_sweep(opt), trivar::ParseError);
}

TEST_CASE("enumeration is exhaustive, valid and ordered") {
    const SweepOptions opt; // type 2, r <= 3, l <= 4, n = 1, m = 0
    const auto data = trivar::enumerate_sweep_data(opt);
    REQUIRE(data.size() == 320); // 4^3 + 4^4

    for (const TrinomialDatum& d : data) CHECK(trivar::validate(d).valid);

    // r ascends; within each r the exponent odometer runs last-tuple-fastest.
    using Tuples = std::vector<std::vector<long long>>;
    CHECK(data[0].r == 2);
    CHECK(data[0].exponents == Tuples{{1}, {1}, {1}});
    CHECK(data[1].exponents == Tuples{{1}, {1}, {2}});
    CHECK(data[4].exponents == Tuples{{1}, {2}, {1}});
    CHECK(data[63].exponents == Tuples{{4}, {4}, {4}});
    CHECK(data[64].r == 3);
    CHECK(data[64].exponents == Tuples{{1}, {1}, {1}, {1}});
    CHECK(data[319].exponents == Tuples{{4}, {4}, {4}, {4}});
}

TEST_CASE("the default sweep is clean with frozen row counts") {
    const SweepOptions opt;
    const SweepSummary summary = trivar::run_sweep(opt);

    CHECK(summary.failures == 0);
    CHECK_FALSE(summary.first_failure.has_value());

    CHECK(summary.by_check.at("pham").rows == 27);                   // 3^3 all-l>=2 surfaces
    CHECK(summary.by_check.at("rationality-dominance").rows == 320); // every surface
    CHECK(summary.by_check.at("abc-dominance").rows == 108);         // 3^3 + 3^4
    CHECK(summary.by_check.at("elimination-stability").rows == 212); // 320 - 108
    CHECK(summary.by_check.at("torus-semiinvariance").rows == 320);
    CHECK(summary.by_check.at("witness-verify").rows == 320);
    CHECK(summary.by_check.at("gamma-identity").rows == 50);

    long long total = 0;
    for (const auto& [name, stats] : summary.by_check) {
        CHECK(stats.failures == 0);
        total += stats.rows;
    }
    CHECK(summary.rows == total);
    CHECK(summary.rows == 1357);
}

TEST_CASE("free variables shrink the surface-only checks") {
    SweepOptions opt;
    opt.max_r = 2;
    opt.max_l = 2;
    opt.max_m = 1;
    opt.checks = {"pham", "rationality-dominance", "abc-dominance",
                  "elimination-stability", "torus-semiinvariance", "witness-verify"};
    const SweepSummary summary = trivar::run_sweep(opt);

    CHECK(trivar::enumerate_sweep_data(opt).size() == 16); // 2^3 exponent picks x m in {0,1}
    CHECK(summary.by_check.at("pham").rows == 1);          // only (2,2,2) with m = 0
    CHECK(summary.by_check.at("rationality-dominance").rows == 8);
    CHECK(summary.by_check.at("abc-dominance").rows == 1);
    CHECK(summary.by_check.at("elimination-stability").rows == 7);
    CHECK(summary.by_check.at("torus-semiinvariance").rows == 8);
    CHECK(summary.by_check.at("witness-verify").rows == 16);
    CHECK(summary.failures == 0);
}

TEST_CASE("constants-type data sweep clean as well") {
    SweepOptions opt;
    opt.type = VarietyType::Type1;
    opt.max_l = 3;
    opt.checks = {"elimination-stability", "witness-verify"};
    const SweepSummary summary = trivar::run_sweep(opt);

    CHECK(trivar::enumerate_sweep_data(opt).size() == 36); // 3^2 + 3^3
    CHECK(summary.by_check.at("witness-verify").rows == 36);
    CHECK(summary.by_check.at("elimination-stability").rows == 24); // some l = 1
    CHECK(summary.failures == 0);
}

TEST_CASE("selected checks with no applicable data still report their key") {
    SweepOptions opt;
    opt.max_l = 1; // every exponent is 1: nothing satisfies the all-l>=2 guards
    opt.checks = {"pham", "abc-dominance"};
    const SweepSummary summary = trivar::run_sweep(opt);
    CHECK(summary.by_check.at("pham").rows == 0);
    CHECK(summary.by_check.at("abc-dominance").rows == 0);
    CHECK(summary.rows == 0);
}

TEST_CASE("row streams are JSON lines and byte-stable") {
    SweepOptions opt;
    opt.checks = {"pham"};
    std::ostringstream first, second;
    trivar::run_sweep(opt, &first);
    trivar::run_sweep(opt, &second);
    CHECK(first.str() == second.str());

    std::istringstream lines(first.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        const auto row = nlohmann::json::parse(line);
        CHECK(row["check"] == "pham");
        CHECK(row["ok"] == true);
        CHECK_FALSE(row.contains("detail"));
        // Every embedded datum is itself a parseable input document.
        const TrinomialDatum d = trivar::parse_input_document(row["datum"].dump());
        CHECK(trivar::validate(d).valid);
    }
    CHECK(count == 27);
}

TEST_CASE("seeded gamma rows honor the draw count and seed") {
    SweepOptions opt;
    opt.checks = {"gamma-identity"};
    opt.gamma_draws = 7;

    std::ostringstream first;
    CHECK(trivar::run_sweep(opt, &first).by_check.at("gamma-identity").rows == 7);

    std::ostringstream repeat;
    trivar::run_sweep(opt, &repeat);
    CHECK(first.str() == repeat.str());

    opt.seed = 2;
    std::ostringstream reseeded;
    trivar::run_sweep(opt, &reseeded);
    CHECK(first.str() != reseeded.str());
}
