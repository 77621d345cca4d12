#include "trivar/suspension.hpp"

#include <algorithm>
#include <set>

#include "trivar/errors.hpp"

namespace trivar {

std::vector<Polynomial> build_suspension(const std::vector<Polynomial>& base_relations,
                                         const Polynomial& f,
                                         const std::vector<long long>& weights,
                                         const std::vector<VariableId>& new_vars) {
    if (f.is_constant()) throw ConstantF("suspension over a constant f");
    if (weights.empty() || weights.size() != new_vars.size())
        throw InvalidDatum("suspension weights and new variables must align and be nonempty");
    for (long long k : weights)
        if (k <= 0) throw InvalidDatum("suspension weights must be positive");

    std::set<VariableId> used = f.support();
    for (const Polynomial& g : base_relations)
        for (const VariableId& v : g.support()) used.insert(v);
    std::set<VariableId> fresh(new_vars.begin(), new_vars.end());
    if (fresh.size() != new_vars.size())
        throw InvalidDatum("suspension variables must be distinct");
    for (const VariableId& v : new_vars)
        if (used.count(v))
            throw InvalidDatum("suspension variable " + variable_name(v) +
                               " already occurs in the base");

    Monomial glue;
    for (std::size_t k = 0; k < new_vars.size(); ++k)
        glue = glue * Monomial::variable(new_vars[k], weights[k]);

    std::vector<Polynomial> out = base_relations;
    out.push_back(Polynomial::term(glue, Rational(1)) - f);
    return out;
}

std::vector<Polynomial> build_suspension(const SuspensionSpec& spec) {
    return build_suspension(relations(spec.base).relations, spec.f, spec.weights, spec.new_vars);
}

SplitResult suspension_split(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw InvalidDatum("suspension_split is defined for Type 2 data");
    if (d.r < 2) throw InvalidDatum("suspension_split needs r >= 2");

    auto minor = [&](int i, int j) {
        return d.column(i)[0] * d.column(j)[1] - d.column(j)[0] * d.column(i)[1];
    };
    int r = d.r;
    Rational denom = minor(r - 2, r - 1);

    SplitResult out;
    out.p1 = -minor(r - 1, r) / denom;
    out.p2 = minor(r - 2, r) / denom;
    out.f = Polynomial::term(tuple_monomial(d, r - 2), out.p1) +
            Polynomial::term(tuple_monomial(d, r - 1), out.p2);
    out.suspension_weights = d.tuple(r);
    for (int j = 1; j <= d.tuple_size(r); ++j) out.suspension_vars.push_back(t_var(r, j));

    out.base.type = VarietyType::Type2;
    out.base.r = r - 1;
    out.base.m = d.m;
    out.base.exponents.assign(d.exponents.begin(), d.exponents.end() - 1);
    out.base.columns.assign(d.columns.begin(), d.columns.end() - 1);
    require_valid(out.base);
    return out;
}

std::vector<SplitResult> split_chain(const TrinomialDatum& d) {
    require_valid(d);
    if (d.type != VarietyType::Type2)
        throw InvalidDatum("split_chain is defined for Type 2 data");
    std::vector<SplitResult> chain;
    TrinomialDatum current = d;
    while (current.r >= 2) {
        chain.push_back(suspension_split(current));
        current = chain.back().base;
    }
    return chain;
}

SuspensionSpec split_to_spec(const SplitResult& split) {
    return {split.base, split.f, split.suspension_weights, split.suspension_vars};
}

} // namespace trivar
