#pragma once

#include <cstddef>
#include <vector>

#include "trivar/polynomial.hpp"

namespace trivar {

// A reduced Gröbner basis: monic generators, no leading monomial divides
// another, every generator fully reduced against the rest, sorted with the
// largest leading monomial first.  For a fixed order this presentation is
// unique, so two runs from permuted inputs produce identical objects.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> gens)
        : order_(std::move(order)), gens_(std::move(gens)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

private:
    MonomialOrder order_;
    std::vector<Polynomial> gens_;
};

inline constexpr std::size_t kDefaultBasisCap = 10000;

// Plain Buchberger with the coprime-leading-term criterion, then full
// interreduction.  Throws ResourceLimitExceeded if the working basis grows
// past max_basis.  Zero input generators are dropped; an all-zero (or
// empty) input yields an empty basis.
GroebnerBasis buchberger(std::vector<Polynomial> gens, MonomialOrder order,
                         std::size_t max_basis = kDefaultBasisCap);

struct DivisionResult {
    Polynomial remainder;
    // cofactors[i] pairs with basis generator i: p = sum cofactors[i]*g_i + remainder.
    std::vector<Polynomial> cofactors;
};

// Multivariate division, fully reducing every term of p.  Ties go to the
// first basis element (in stored order) whose leading monomial divides the
// term under reduction, so the result is deterministic; against a Gröbner
// basis the remainder is the unique normal form.
DivisionResult divide(const Polynomial& p, const GroebnerBasis& gb);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

} // namespace trivar
