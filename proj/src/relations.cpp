#include "trivar/relations.hpp"

#include <numeric>

#include "trivar/errors.hpp"

namespace trivar {
namespace {

Rational minor2(const TrinomialDatum& d, int i, int j) {
    return d.column(i)[0] * d.column(j)[1] - d.column(j)[0] * d.column(i)[1];
}

void require_surface(const TrinomialDatum& d, const char* op) {
    if (!d.is_surface())
        throw NotSurface(std::string(op) + " needs a surface datum (all n_i = 1, m = 0)");
}

} // namespace

Monomial tuple_monomial(const TrinomialDatum& d, int i) {
    Monomial m;
    const auto& tup = d.tuple(i);
    for (int j = 0; j < static_cast<int>(tup.size()); ++j)
        m = m * Monomial::variable(t_var(i, j + 1), tup[j]);
    return m;
}

RelationSet relations(const TrinomialDatum& d) {
    require_valid(d);
    RelationSet out;
    if (d.type == VarietyType::Type1) {
        out.first_relation_index = 1;
        for (int i = 1; i <= d.r - 1; ++i) {
            Polynomial g = Polynomial::term(tuple_monomial(d, i), Rational(1));
            g -= Polynomial::term(tuple_monomial(d, i + 1), Rational(1));
            g -= Polynomial::constant(d.constant(i + 1) - d.constant(i));
            out.relations.push_back(std::move(g));
        }
    } else {
        out.first_relation_index = 0;
        for (int i = 0; i <= d.r - 2; ++i) {
            // Cofactor expansion of the 3x3 determinant along its first row.
            Polynomial g = Polynomial::term(tuple_monomial(d, i), minor2(d, i + 1, i + 2));
            g -= Polynomial::term(tuple_monomial(d, i + 1), minor2(d, i, i + 2));
            g += Polynomial::term(tuple_monomial(d, i + 2), minor2(d, i, i + 1));
            out.relations.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<std::array<Rational, 3>> trinomial_coefficients(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw InvalidDatum("trinomial_coefficients is defined for Type 2 data");
    std::vector<std::array<Rational, 3>> out;
    for (int i = 0; i <= d.r - 2; ++i)
        out.push_back({minor2(d, i + 1, i + 2), -minor2(d, i, i + 2), minor2(d, i, i + 1)});
    return out;
}

std::vector<long long> ell(const TrinomialDatum& d) {
    require_valid(d);
    std::vector<long long> out;
    for (int i = d.first_index(); i <= d.last_index(); ++i) {
        long long g = 0;
        for (long long e : d.tuple(i)) g = std::gcd(g, e);
        out.push_back(g);
    }
    return out;
}

TorusWeights torus_weights(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw InvalidDatum("torus_weights is defined for Type 2 data");
    require_surface(d, "torus_weights");
    if (d.r < 2)
        throw InvalidDatum("torus_weights needs r >= 2 (no relation to scale otherwise)");
    TorusWeights tw;
    tw.L = 1;
    for (int i = 0; i <= d.r; ++i) tw.L = std::lcm(tw.L, d.tuple(i)[0]);
    for (int i = 0; i <= d.r; ++i) tw.weights.push_back(tw.L / d.tuple(i)[0]);
    return tw;
}

std::variant<TrinomialDatum, FullAffineSpace> eliminate_linear_monomial(const TrinomialDatum& d,
                                                                        int i) {
    require_valid(d);
    require_surface(d, "eliminate_linear_monomial");
    if (i < d.first_index() || i > d.last_index())
        throw InvalidDatum("tuple index " + std::to_string(i) + " out of range");
    if (d.tuple(i)[0] != 1)
        throw ExponentNotOne("tuple " + std::to_string(i) + " has exponent " +
                             std::to_string(d.tuple(i)[0]) + ", expected 1");
    if (d.r - 1 < 2) return FullAffineSpace{};

    TrinomialDatum out;
    out.type = d.type;
    out.r = d.r - 1;
    out.m = d.m;
    int skip_pos = i - d.first_index();
    for (int p = 0; p < static_cast<int>(d.exponents.size()); ++p)
        if (p != skip_pos) out.exponents.push_back(d.exponents[p]);
    if (d.type == VarietyType::Type1) {
        for (int p = 0; p < static_cast<int>(d.constants.size()); ++p)
            if (p != skip_pos) out.constants.push_back(d.constants[p]);
    } else {
        for (int p = 0; p < static_cast<int>(d.columns.size()); ++p)
            if (p != skip_pos) out.columns.push_back(d.columns[p]);
    }
    require_valid(out); // distinctness/independence are inherited, but be sure
    return out;
}

} // namespace trivar
