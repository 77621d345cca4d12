#include "trivar/random_datum.hpp"

namespace trivar {

long long DeterministicRng::draw(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(engine_() % span);
}

std::vector<std::array<Rational, 2>> generic_columns(int r) {
    std::vector<std::array<Rational, 2>> cols;
    cols.reserve(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) cols.push_back({Rational(1), Rational(i)});
    return cols;
}

TrinomialDatum surface_datum(const std::vector<long long>& l, int m) {
    TrinomialDatum d;
    d.type = VarietyType::Type2;
    d.r = static_cast<int>(l.size()) - 1;
    d.m = m;
    for (long long e : l) d.exponents.push_back({e});
    d.columns = generic_columns(d.r);
    return d;
}

TrinomialDatum type1_datum(const std::vector<std::vector<long long>>& tuples, int m) {
    TrinomialDatum d;
    d.type = VarietyType::Type1;
    d.r = static_cast<int>(tuples.size());
    d.m = m;
    d.exponents = tuples;
    for (int i = 1; i <= d.r; ++i) d.constants.emplace_back(i);
    return d;
}

namespace {

bool columns_pairwise_independent(const std::vector<std::array<Rational, 2>>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            if (cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0] == Rational(0)) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::array<Rational, 2>> random_columns(DeterministicRng& rng, int r) {
    std::vector<std::array<Rational, 2>> cols(static_cast<std::size_t>(r) + 1);
    do {
        for (auto& col : cols) {
            col[0] = Rational(rng.draw(-9, 9));
            col[1] = Rational(rng.draw(-9, 9));
        }
    } while (!columns_pairwise_independent(cols));
    return cols;
}

TrinomialDatum random_datum(DeterministicRng& rng, VarietyType type, int max_r,
                            int max_n, int max_l, int max_m) {
    TrinomialDatum d;
    d.type = type;
    d.r = static_cast<int>(rng.draw(2, max_r));
    d.m = static_cast<int>(rng.draw(0, max_m));
    const int tuples = type == VarietyType::Type1 ? d.r : d.r + 1;
    for (int p = 0; p < tuples; ++p) {
        std::vector<long long> tuple(static_cast<std::size_t>(rng.draw(1, max_n)));
        for (auto& e : tuple) e = rng.draw(1, max_l);
        d.exponents.push_back(std::move(tuple));
    }
    if (type == VarietyType::Type1) {
        for (int i = 1; i <= d.r; ++i) d.constants.emplace_back(i);
    } else {
        d.columns = random_columns(rng, d.r);
    }
    return d;
}

} // namespace trivar
