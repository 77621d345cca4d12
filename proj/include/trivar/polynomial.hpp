#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "trivar/monomial.hpp"
#include "trivar/rational.hpp"

namespace trivar {

// Multivariate polynomial with exact rational coefficients, stored as a
// sparse monomial -> coefficient map with no zero entries.  Equality is
// term-wise.  Arithmetic is order-agnostic; leading terms are computed on
// demand against whichever MonomialOrder the caller supplies.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(Rational c);
    static Polynomial variable(VariableId v);
    static Polynomial term(Monomial m, Rational c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    // Coefficient of the unit monomial (the whole value if is_constant()).
    Rational constant_part() const;
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }
    Rational coefficient(const Monomial& m) const;
    long long total_degree() const; // -1 for the zero polynomial
    std::set<VariableId> support() const;
    long long degree_in(const VariableId& v) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.t_ != b.t_; }

    Polynomial pow(long long e) const;

    // Largest term under the given order; requires a nonzero polynomial.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

    // Ring homomorphism fixing every variable not in the map.
    Polynomial substitute(const std::map<VariableId, Polynomial>& images) const;

    Polynomial partial_derivative(const VariableId& v) const;

    // Checks that every term has the same weighted degree under the given
    // variable weights (missing variables weigh 0); returns that degree,
    // or nullopt if inhomogeneous.  Zero polynomial counts as homogeneous
    // of degree 0.
    std::optional<long long> weighted_degree(const std::map<VariableId, long long>& weights) const;

    // Is q a nonzero rational multiple of *this?  (Both zero also matches.)
    bool proportional_to(const Polynomial& q) const;

    // Terms printed in descending default (grevlex) order: "T0_1^2 - 2*T1_1 + 3/2".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> t_;
};

} // namespace trivar
