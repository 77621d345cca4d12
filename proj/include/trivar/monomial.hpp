#pragma once

#include <map>
#include <vector>

#include "trivar/variable.hpp"

namespace trivar {

// Power product of variables with strictly positive exponents.  The empty
// product is the unit monomial 1.  Stored as an ordered map so that
// structural comparison (used only for container keys, unrelated to any
// monomial *order*) is deterministic.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial{}; }
    static Monomial variable(VariableId v, long long exp = 1);

    long long exponent(const VariableId& v) const;
    const std::map<VariableId, long long>& exponents() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    long long total_degree() const;
    bool contains(const VariableId& v) const { return e_.count(v) != 0; }

    Monomial operator*(const Monomial& o) const;

    // Does this monomial divide o?
    bool divides(const Monomial& o) const;
    // o / this, requires divides(o).
    Monomial quotient_of(const Monomial& o) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    // Structural key order for std::map<Monomial, ...>; NOT a monomial order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    // "T0_1^2*T1_1" with factors in canonical variable order; "1" for unit.
    std::string str() const;

private:
    std::map<VariableId, long long> e_;
};

// Term orders used by the division algorithm and Buchberger.  A custom
// variable priority list (earliest entry = largest variable) may be
// prepended for elimination orders; variables not listed follow in
// canonical precedence after all listed ones.
enum class OrderScheme { Grevlex, Lex };

class MonomialOrder {
public:
    MonomialOrder() : scheme_(OrderScheme::Grevlex) {}
    explicit MonomialOrder(OrderScheme scheme, std::vector<VariableId> priority = {})
        : scheme_(scheme), priority_(std::move(priority)) {}

    OrderScheme scheme() const { return scheme_; }
    const std::vector<VariableId>& priority() const { return priority_; }

    // +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // True when a ranks strictly before b (i.e. a is the larger variable).
    bool var_precedes(const VariableId& a, const VariableId& b) const;

private:
    OrderScheme scheme_;
    std::vector<VariableId> priority_;
};

} // namespace trivar
