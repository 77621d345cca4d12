#include "trivar/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "trivar/errors.hpp"

namespace trivar {
namespace {

Polynomial make_monic(Polynomial p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    auto [lm, lc] = p.leading_term(order);
    if (lc != Rational(1)) p *= lc.reciprocal();
    return p;
}

// Reduce p against a working list of monic polynomials (not necessarily a
// Gröbner basis): repeatedly cancel the leading term while some leading
// monomial divides it, otherwise peel the leading term off into the
// remainder.  First divisor in list order wins.
Polynomial reduce_against(Polynomial p, const std::vector<Polynomial>& gens,
                          const MonomialOrder& order) {
    Polynomial remainder;
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading_term(order);
        bool reduced = false;
        for (const Polynomial& g : gens) {
            if (g.is_zero()) continue;
            auto [glm, glc] = g.leading_term(order);
            if (!glm.divides(lm)) continue;
            Monomial q = glm.quotient_of(lm);
            p -= Polynomial::term(q, lc / glc) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder += Polynomial::term(lm, lc);
            p -= Polynomial::term(lm, lc);
        }
    }
    return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    auto [lmf, lcf] = f.leading_term(order);
    auto [lmg, lcg] = g.leading_term(order);
    Monomial l = Monomial::lcm(lmf, lmg);
    Polynomial a = Polynomial::term(lmf.quotient_of(l), lcf.reciprocal()) * f;
    Polynomial b = Polynomial::term(lmg.quotient_of(l), lcg.reciprocal()) * g;
    return a - b;
}

} // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order,
                         std::size_t max_basis) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(std::move(g), order));

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        // Buchberger's first criterion: coprime leading monomials reduce to 0.
        Monomial lmi = basis[i].leading_term(order).first;
        Monomial lmj = basis[j].leading_term(order).first;
        if (Monomial::coprime(lmi, lmj)) continue;

        Polynomial h = reduce_against(s_polynomial(basis[i], basis[j], order), basis, order);
        if (h.is_zero()) continue;
        basis.push_back(make_monic(std::move(h), order));
        if (basis.size() > max_basis)
            throw ResourceLimitExceeded("Buchberger basis exceeded cap of " +
                                        std::to_string(max_basis) + " polynomials");
        std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
    }

    // Minimalize: drop any generator whose leading monomial is divisible by
    // another kept generator's.  Dedupe equal leading monomials first-wins.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial lmi = basis[i].leading_term(order).first;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lmj = basis[j].leading_term(order).first;
            if (lmj == lmi) {
                redundant = j < i; // keep the earliest representative
            } else if (lmj.divides(lmi)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Full reduction of each survivor against the others.  Leading terms are
    // irreducible after minimalization, so in-place sequential passes are fine.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = make_monic(reduce_against(minimal[i], others, order), order);
    }

    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_term(order).first, b.leading_term(order).first);
    });
    return GroebnerBasis(order, std::move(minimal));
}

DivisionResult divide(const Polynomial& p, const GroebnerBasis& gb) {
    const MonomialOrder& order = gb.order();
    const auto& gens = gb.generators();
    DivisionResult out;
    out.cofactors.assign(gens.size(), Polynomial::zero());

    Polynomial work = p;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            auto [glm, glc] = gens[i].leading_term(order);
            if (!glm.divides(lm)) continue;
            Polynomial factor = Polynomial::term(glm.quotient_of(lm), lc / glc);
            work -= factor * gens[i];
            out.cofactors[i] += factor;
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder += Polynomial::term(lm, lc);
            work -= Polynomial::term(lm, lc);
        }
    }
    return out;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    const MonomialOrder& order = gb.order();
    const auto& gens = gb.generators();
    Polynomial remainder;
    Polynomial work = p;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(order);
        bool reduced = false;
        for (const Polynomial& g : gens) {
            auto [glm, glc] = g.leading_term(order);
            if (!glm.divides(lm)) continue;
            work -= Polynomial::term(glm.quotient_of(lm), lc / glc) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder += Polynomial::term(lm, lc);
            work -= Polynomial::term(lm, lc);
        }
    }
    return remainder;
}

} // namespace trivar
