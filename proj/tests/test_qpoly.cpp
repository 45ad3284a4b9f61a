#include <doctest.h>

#include "iam/core.hpp"
#include "iam/qpoly.hpp"

using namespace iam;

TEST_CASE("polynomial arithmetic") {
  const QPoly a = QPoly::one_minus_q_pow(2);
  const QPoly b = QPoly::one_minus_q_pow(1);
  CHECK(a.to_string() == "1 - q^2");
  CHECK(a.degree() == 2);
  CHECK((a * b).to_csv() == "1,-1,-1,1");
  CHECK(a.divide_exact(b).to_csv() == "1,1");
  CHECK((a - a).is_zero());
  CHECK((a + b).to_csv() == "2,-1,-1");
  CHECK(QPoly::monomial(3, 2).coefficient(3) == 2);
  CHECK(QPoly::monomial(3, 2).coefficient(7) == 0);
  CHECK(a.evaluate(Rational(1, 2)) == Rational(3, 4));
  CHECK_THROWS_AS(b.divide_exact(a), InvariantViolation);
  CHECK_THROWS(a.divide_exact(QPoly()));
}

TEST_CASE("gaussian binomial as an exact quotient") {
  QPoly num = QPoly::constant(1);
  QPoly den = QPoly::constant(1);
  for (int e = 1; e <= 6; ++e) {
    num *= QPoly::one_minus_q_pow(e + 3);
    den *= QPoly::one_minus_q_pow(e);
  }
  const QPoly g = num.divide_exact(den);
  CHECK(g.degree() == 18);
  CHECK(g.evaluate(1) == 84);
  for (int e = 0; e <= 18; ++e) CHECK(g.coefficient(e) == g.coefficient(18 - e));
}
