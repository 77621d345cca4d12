#include "trivar/derivation.hpp"

#include <gmpxx.h>

#include "trivar/errors.hpp"

namespace trivar {

Polynomial apply_derivation(const DerivationImages& images, const Polynomial& p) {
    // Leibniz on each term: d(c * prod v^e) = c * sum_v e * v^(e-1) * (rest) * d(v).
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.exponents()) {
            auto img = images.find(v);
            if (img == images.end() || img->second.is_zero()) continue;
            Monomial rest;
            for (const auto& [w, ew] : m.exponents()) {
                long long ne = (w == v) ? ew - 1 : ew;
                if (ne > 0) rest = rest * Monomial::variable(w, ne);
            }
            out += Polynomial::term(rest, c * Rational(e)) * img->second;
        }
    }
    return out;
}

Polynomial exp_action(const DerivationImages& images, const Polynomial& p, int bound) {
    if (bound < 0) bound = 0;
    Polynomial result = p;
    Polynomial iterate = p;
    mpz_class factorial = 1;
    VariableId t = param_var();
    for (int i = 1; !iterate.is_zero(); ++i) {
        if (i > bound + 1)
            throw NotNilpotentWithinBound(
                "derivative iterate " + std::to_string(bound + 1) +
                " is nonzero; not locally nilpotent within bound " + std::to_string(bound));
        iterate = apply_derivation(images, iterate);
        if (iterate.is_zero()) break;
        factorial *= i;
        Rational inv_fact{mpq_class(mpz_class(1), factorial)};
        result += Polynomial::term(Monomial::variable(t, i), Rational(1)) * iterate * inv_fact;
    }
    return result;
}

} // namespace trivar
