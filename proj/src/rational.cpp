#include "trivar/rational.hpp"

#include <cctype>
#include <ostream>

namespace trivar {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::from_string(const std::string& s) {
    // Accepted grammar: ['-'|'+'] digits ['/' digits], denominator nonzero.
    // mpq_class's own string constructor is more permissive (whitespace,
    // base prefixes), so validate by hand first.
    auto fail = [&]() -> Rational {
        throw ParseError("bad rational literal: \"" + s + "\"");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        negative = (s[i] == '-');
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    std::string num_digits = s.substr(num_begin, i - num_begin);
    std::string den_digits = "1";
    if (i != s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return fail();
        den_digits = s.substr(den_begin);
    }
    mpz_class num(num_digits), den(den_digits);
    if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace trivar
