#include "trivar/classify.hpp"

#include <algorithm>
#include <numeric>

#include "trivar/errors.hpp"
#include "trivar/relations.hpp"

namespace trivar {
namespace {

bool tuple_is_heavy(const std::vector<long long>& tup) {
    return std::none_of(tup.begin(), tup.end(), [](long long e) { return e == 1; });
}

// Tuple qualifies as an exceptional pair member for Type 2 condition 4:
// every exponent even and at least one equal to 2.
bool tuple_even_with_two(const std::vector<long long>& tup) {
    bool has_two = false;
    for (long long e : tup) {
        if (e % 2 != 0) return false;
        if (e == 2) has_two = true;
    }
    return has_two;
}

} // namespace

const char* rigidity_condition_name(RigidityCondition c) {
    switch (c) {
        case RigidityCondition::MPositive: return "M_POSITIVE";
        case RigidityCondition::Type1Cond2: return "T1_COND2";
        case RigidityCondition::Type2Cond2: return "T2_COND2";
        case RigidityCondition::Type2Cond3: return "T2_COND3";
        case RigidityCondition::None: return "NONE";
    }
    return "NONE";
}

const char* rationality_case_name(RationalityCase c) {
    switch (c) {
        case RationalityCase::AllCoprime: return "ALL_COPRIME";
        case RationalityCase::OnePair: return "ONE_PAIR";
        case RationalityCase::TripleOfTwos: return "TRIPLE_OF_TWOS";
        case RationalityCase::None: return "NONE";
    }
    return "NONE";
}

const char* residual_tag_name(ResidualTag t) {
    switch (t) {
        case ResidualTag::GameOverAbc: return "GAME_OVER_ABC";
        case ResidualTag::Case1: return "CASE1";
        case ResidualTag::Case2: return "CASE2";
        case ResidualTag::Case3: return "CASE3";
        case ResidualTag::Case4: return "CASE4";
        case ResidualTag::Case5: return "CASE5";
        case ResidualTag::NotSurface: return "NOT_SURFACE";
        case ResidualTag::Reducible: return "REDUCIBLE";
    }
    return "NOT_SURFACE";
}

std::vector<int> heavy_set(const TrinomialDatum& d) {
    require_valid(d);
    std::vector<int> out;
    for (int i = d.first_index(); i <= d.last_index(); ++i)
        if (tuple_is_heavy(d.tuple(i))) out.push_back(i);
    return out;
}

RigidityVerdict classify_rigidity(const TrinomialDatum& d) {
    require_valid(d);
    RigidityVerdict v;

    if (d.m > 0) {
        v.rigid = false;
        v.fired = RigidityCondition::MPositive;
        return v;
    }

    std::vector<int> H = heavy_set(d);

    if (d.type == VarietyType::Type1) {
        if (H.size() <= 1) {
            v.rigid = false;
            v.fired = RigidityCondition::Type1Cond2;
            v.exceptional = H;
        }
        return v;
    }

    if (H.size() <= 2) {
        v.rigid = false;
        v.fired = RigidityCondition::Type2Cond2;
        v.exceptional = H;
        return v;
    }

    // Condition 4.  a and b both need all-even tuples containing a 2 (which
    // forces a, b into H), and c just absorbs at most one further heavy index.
    for (int a = 0; a <= d.r; ++a) {
        if (!tuple_even_with_two(d.tuple(a))) continue;
        for (int b = a + 1; b <= d.r; ++b) {
            if (!tuple_even_with_two(d.tuple(b))) continue;
            for (int c = 0; c <= d.r; ++c) {
                if (c == a || c == b) continue;
                bool covered = std::all_of(H.begin(), H.end(), [&](int h) {
                    return h == a || h == b || h == c;
                });
                if (covered) {
                    v.rigid = false;
                    v.fired = RigidityCondition::Type2Cond3;
                    v.exceptional = {a, b, c};
                    std::sort(v.exceptional.begin(), v.exceptional.end());
                    return v;
                }
            }
        }
    }
    return v;
}

RationalityVerdict classify_rationality(const TrinomialDatum& d) {
    std::vector<long long> e = ell(d);
    int n = static_cast<int>(e.size());

    std::vector<std::pair<int, int>> noncoprime; // positions, not tuple indices
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::gcd(e[i], e[j]) > 1) noncoprime.emplace_back(i, j);

    RationalityVerdict v;
    if (noncoprime.empty()) {
        v.rational = true;
        v.fired = RationalityCase::AllCoprime;
        return v;
    }
    if (noncoprime.size() == 1) {
        v.rational = true;
        v.fired = RationalityCase::OnePair;
        return v;
    }
    // Triple of twos: the noncoprime pairs must be exactly the three pairs
    // inside one index triple, each with gcd exactly 2.
    if (noncoprime.size() == 3) {
        std::vector<int> support;
        for (auto [i, j] : noncoprime) {
            support.push_back(i);
            support.push_back(j);
        }
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());
        if (support.size() == 3) {
            bool all_two = true;
            for (auto [i, j] : noncoprime)
                if (std::gcd(e[i], e[j]) != 2) all_two = false;
            if (all_two) {
                v.rational = true;
                v.fired = RationalityCase::TripleOfTwos;
                return v;
            }
        }
    }
    return v;
}

bool abc_kernel_predicate(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw InvalidDatum("abc_kernel_predicate is defined for Type 2 data");
    if (!d.is_surface())
        throw NotSurface("abc_kernel_predicate needs a surface datum");
    for (int i = 0; i <= d.r; ++i)
        if (d.tuple(i)[0] < 2)
            throw PreconditionViolated("abc_kernel_predicate needs every exponent >= 2");

    for (int a = 0; a <= d.r; ++a)
        for (int b = a + 1; b <= d.r; ++b)
            for (int c = b + 1; c <= d.r; ++c) {
                Rational sum = Rational(1, d.tuple(a)[0]) + Rational(1, d.tuple(b)[0]) +
                               Rational(1, d.tuple(c)[0]);
                if (sum <= Rational(1)) return true;
            }
    return false;
}

CaseTag residual_case_tag(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw PreconditionViolated("residual_case_tag is defined for Type 2 data");

    if (!d.is_surface()) return {ResidualTag::NotSurface, 0};

    std::vector<long long> l;
    for (int i = 0; i <= d.r; ++i) l.push_back(d.tuple(i)[0]);
    if (std::any_of(l.begin(), l.end(), [](long long e) { return e == 1; }))
        return {ResidualTag::Reducible, 0};

    RigidityVerdict rv = classify_rigidity(d);
    if (!rv.rigid)
        throw PreconditionViolated(
            "residual_case_tag applies only when no non-rigidity condition fired");

    if (abc_kernel_predicate(d)) return {ResidualTag::GameOverAbc, 0};

    std::vector<long long> sorted = l;
    std::sort(sorted.begin(), sorted.end());

    // With the triple predicate false every exponent multiset lands in one
    // of five buckets (the three largest exponents solve 1/a+1/b+1/c > 1).
    CaseTag tag;
    long long top = sorted.back();
    long long second = sorted[sorted.size() - 2];
    if (top == 2) {
        tag.tag = ResidualTag::Case1;
    } else if (second == 2) {
        tag.tag = ResidualTag::Case2;
    } else if (second == 3 && top == 3) {
        tag.tag = ResidualTag::Case3;
    } else if (second == 3 && top == 4) {
        tag.tag = ResidualTag::Case4;
    } else if (second == 3 && top == 5) {
        tag.tag = ResidualTag::Case5;
    } else {
        // Unreachable for data that really passed the predicate screen.
        throw PreconditionViolated("exponent multiset escapes the residual bucket list");
    }

    if (!classify_rationality(d).rational) return tag;

    // Rational residual patterns, by sorted exponent vector.
    if (sorted.size() == 4) {
        bool three_twos = sorted[0] == 2 && sorted[1] == 2 && sorted[2] == 2;
        if (three_twos && sorted[3] % 2 == 1)
            tag.subcase = 'a';
        else if (sorted == std::vector<long long>{2, 2, 3, 4})
            tag.subcase = 'b';
        else if (sorted == std::vector<long long>{2, 2, 3, 5})
            tag.subcase = 'c';
    } else if (sorted.size() == 5 && sorted == std::vector<long long>{2, 2, 2, 3, 5}) {
        tag.subcase = 'd';
    }
    return tag;
}

} // namespace trivar
