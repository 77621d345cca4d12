#include "trivar/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trivar {

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    p.add_term(Monomial::unit(), c);
    return p;
}

Polynomial Polynomial::variable(VariableId v) {
    Polynomial p;
    p.add_term(Monomial::variable(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
}

Rational Polynomial::constant_part() const {
    auto it = t_.find(Monomial::unit());
    return it == t_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

long long Polynomial::total_degree() const {
    long long d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
}

std::set<VariableId> Polynomial::support() const {
    std::set<VariableId> out;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.exponents()) out.insert(v);
    return out;
}

long long Polynomial::degree_in(const VariableId& v) const {
    long long d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(v));
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.t_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    Polynomial out;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) out.add_term(ma * mb, ca * cb);
    t_ = std::move(out.t_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, coef] : t_) coef *= c;
    return *this;
}

Polynomial Polynomial::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = Polynomial::constant(Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& images) const {
    Polynomial out;
    for (const auto& [m, c] : t_) {
        Polynomial term_val = Polynomial::constant(c);
        Monomial untouched;
        for (const auto& [v, e] : m.exponents()) {
            auto it = images.find(v);
            if (it == images.end())
                untouched = untouched * Monomial::variable(v, e);
            else
                term_val *= it->second.pow(e);
        }
        out += term_val * Polynomial::term(untouched, Rational(1));
    }
    return out;
}

Polynomial Polynomial::partial_derivative(const VariableId& v) const {
    Polynomial out;
    for (const auto& [m, c] : t_) {
        long long e = m.exponent(v);
        if (e == 0) continue;
        Monomial lowered;
        for (const auto& [w, ew] : m.exponents()) {
            long long ne = (w == v) ? ew - 1 : ew;
            if (ne > 0) lowered = lowered * Monomial::variable(w, ne);
        }
        out.add_term(lowered, c * Rational(e));
    }
    return out;
}

std::optional<long long> Polynomial::weighted_degree(
    const std::map<VariableId, long long>& weights) const {
    std::optional<long long> deg;
    for (const auto& [m, c] : t_) {
        long long d = 0;
        for (const auto& [v, e] : m.exponents()) {
            auto it = weights.find(v);
            d += e * (it == weights.end() ? 0 : it->second);
        }
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<long long>(0);
}

bool Polynomial::proportional_to(const Polynomial& q) const {
    if (is_zero() || q.is_zero()) return is_zero() && q.is_zero();
    if (t_.size() != q.t_.size()) return false;
    // Shared sparse layout => same monomial set required; ratio must agree.
    auto a = t_.begin();
    auto b = q.t_.begin();
    Rational ratio = a->second / b->second;
    for (; a != t_.end(); ++a, ++b) {
        if (a->first != b->first) return false;
        if (a->second != ratio * b->second) return false;
    }
    return true;
}

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    MonomialOrder order; // default grevlex, canonical precedence
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(t_.size());
    for (const auto& term : t_) sorted.push_back(&term);
    std::sort(sorted.begin(), sorted.end(),
              [&](auto* x, auto* y) { return order.greater(x->first, y->first); });

    std::string out;
    bool first = true;
    for (auto* term : sorted) {
        const auto& [m, c] = *term;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_unit()) {
            out += a.str();
        } else {
            if (a != Rational(1)) out += a.str() + "*";
            out += m.str();
        }
    }
    return out;
}

} // namespace trivar
