#include "trivar/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace trivar {

std::string variable_name(const VariableId& v) {
    switch (v.kind) {
        case VarKind::T:
            return "T" + std::to_string(v.row) + "_" + std::to_string(v.pos);
        case VarKind::S:
            return "S" + std::to_string(v.pos);
        case VarKind::Param:
            return "t";
    }
    return "?";
}

Monomial Monomial::variable(VariableId v, long long exp) {
    Monomial m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.e_[v] = exp;
    return m;
}

long long Monomial::exponent(const VariableId& v) const {
    auto it = e_.find(v);
    return it == e_.end() ? 0 : it->second;
}

long long Monomial::total_degree() const {
    long long d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial out = *this;
    for (const auto& [v, e] : o.e_) {
        auto [it, fresh] = out.e_.try_emplace(v, e);
        if (!fresh) it->second += e;
    }
    return out;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& [v, e] : e_)
        if (o.exponent(v) < e) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial out;
    for (const auto& [v, e] : o.e_) {
        long long q = e - exponent(v);
        if (q < 0) throw std::invalid_argument("quotient_of: does not divide");
        if (q > 0) out.e_[v] = q;
    }
    // A variable of *this absent from o would make division fail:
    for (const auto& [v, e] : e_)
        if (!o.contains(v)) throw std::invalid_argument("quotient_of: does not divide");
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b.e_) {
        auto [it, fresh] = out.e_.try_emplace(v, e);
        if (!fresh) it->second = std::max(it->second, e);
    }
    return out;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (const auto& [v, e] : a.e_)
        if (b.contains(v)) return false;
    return true;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : e_) {
        if (!out.empty()) out += "*";
        out += variable_name(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool MonomialOrder::var_precedes(const VariableId& a, const VariableId& b) const {
    // Listed variables come first, in list order; everything else follows in
    // canonical precedence.
    auto rank = [&](const VariableId& v) -> std::size_t {
        for (std::size_t i = 0; i < priority_.size(); ++i)
            if (priority_[i] == v) return i;
        return priority_.size();
    };
    std::size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra < priority_.size()) return false; // same listed slot => same var
    return a < b;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a == b) return 0;

    if (scheme_ == OrderScheme::Grevlex) {
        long long da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db ? 1 : -1;
    }

    // Union of the supports, largest variable first.
    std::vector<VariableId> vars;
    for (const auto& [v, e] : a.exponents()) vars.push_back(v);
    for (const auto& [v, e] : b.exponents())
        if (!a.contains(v)) vars.push_back(v);
    std::sort(vars.begin(), vars.end(),
              [&](const VariableId& x, const VariableId& y) { return var_precedes(x, y); });

    if (scheme_ == OrderScheme::Lex) {
        for (const VariableId& v : vars) {
            long long d = a.exponent(v) - b.exponent(v);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }

    // Grevlex tie-break at equal total degree: the last nonzero entry of the
    // exponent difference decides, with the *smaller* entry winning.
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        long long d = a.exponent(*it) - b.exponent(*it);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace trivar
