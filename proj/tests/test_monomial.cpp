#include <doctest.h>

#include "trivar/monomial.hpp"

using trivar::Monomial;
using trivar::MonomialOrder;
using trivar::OrderScheme;
using trivar::param_var;
using trivar::s_var;
using trivar::t_var;

namespace {
const trivar::VariableId x = t_var(0, 1);
const trivar::VariableId y = t_var(1, 1);
const trivar::VariableId z = t_var(2, 1);
} // namespace

TEST_CASE("monomial basics") {
    const Monomial one = Monomial::unit();
    const Monomial x2 = Monomial::variable(x, 2);
    const Monomial xy = Monomial::variable(x) * Monomial::variable(y);

    CHECK(one.is_unit());
    CHECK(one.total_degree() == 0);
    CHECK(x2.total_degree() == 2);
    CHECK(x2.exponent(x) == 2);
    CHECK(x2.exponent(y) == 0);
    CHECK(xy.contains(y));
    CHECK_FALSE(xy.contains(z));
    CHECK((x2 * xy).exponent(x) == 3);
    CHECK(x2.str() == "T0_1^2");
    CHECK(xy.str() == "T0_1*T1_1");
    CHECK(one.str() == "1");
}

TEST_CASE("divisibility, quotient, lcm, coprimality") {
    const Monomial x2y = Monomial::variable(x, 2) * Monomial::variable(y);
    const Monomial xy = Monomial::variable(x) * Monomial::variable(y);
    const Monomial z1 = Monomial::variable(z);

    CHECK(xy.divides(x2y));
    CHECK_FALSE(x2y.divides(xy));
    CHECK(xy.quotient_of(x2y) == Monomial::variable(x));
    CHECK(Monomial::unit().divides(xy));
    CHECK(Monomial::lcm(x2y, z1) == x2y * z1);
    CHECK(Monomial::lcm(xy, x2y) == x2y);
    CHECK(Monomial::coprime(xy, z1));
    CHECK_FALSE(Monomial::coprime(xy, x2y));
}

TEST_CASE("graded reverse lexicographic order") {
    const MonomialOrder grevlex;
    const Monomial x2 = Monomial::variable(x, 2);
    const Monomial xy = Monomial::variable(x) * Monomial::variable(y);
    const Monomial y2 = Monomial::variable(y, 2);
    const Monomial xz = Monomial::variable(x) * Monomial::variable(z);
    const Monomial y1 = Monomial::variable(y);

    // Degree first.
    CHECK(grevlex.compare(x2, y1) > 0);
    // Same degree: smaller exponent on the last distinct variable wins.
    CHECK(grevlex.compare(x2, xy) > 0);
    CHECK(grevlex.compare(xy, y2) > 0);
    CHECK(grevlex.compare(xy, xz) > 0); // z beats y as the tiebreak variable
    CHECK(grevlex.compare(xy, xy) == 0);
}

TEST_CASE("lexicographic order") {
    const MonomialOrder lex(OrderScheme::Lex);
    const Monomial x1 = Monomial::variable(x);
    const Monomial y4 = Monomial::variable(y, 4);

    // x beats any power of y, regardless of degree.
    CHECK(lex.compare(x1, y4) > 0);
    CHECK(lex.compare(y4, Monomial::variable(y)) > 0);
    // T variables precede S variables precede the flow parameter.
    CHECK(lex.compare(Monomial::variable(z), Monomial::variable(s_var(1))) > 0);
    CHECK(lex.compare(Monomial::variable(s_var(1)), Monomial::variable(param_var())) > 0);
}

TEST_CASE("priority lists build elimination orders") {
    // Put y ahead of everything: an elimination order for y.
    const MonomialOrder elim(OrderScheme::Lex, {y});
    CHECK(elim.compare(Monomial::variable(y), Monomial::variable(x, 9)) > 0);
    // Unlisted variables keep canonical precedence among themselves.
    CHECK(elim.compare(Monomial::variable(x), Monomial::variable(z, 3)) > 0);
}
