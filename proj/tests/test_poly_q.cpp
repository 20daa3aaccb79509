#include <catch2/catch_amalgamated.hpp>

#include "qeuler/poly_q.hpp"

using namespace qeuler;

TEST_CASE("PolyQ normalization and accessors") {
  PolyQ z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(PolyQ({BigRat(0), BigRat(0)}).is_zero());

  PolyQ p({BigRat(1, 2), BigRat(0), BigRat(-3)});
  CHECK(p.degree() == 2);
  CHECK(p.leading() == -3);
  CHECK(p.coeff(0) == BigRat(1, 2));
}

TEST_CASE("PolyQ arithmetic and evaluation") {
  PolyQ a({BigRat(1), BigRat(2)});        // 1 + 2q
  PolyQ b({BigRat(-1), BigRat(0), BigRat(1)});  // q^2 - 1
  CHECK((a + b) == PolyQ({BigRat(0), BigRat(2), BigRat(1)}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == PolyQ({BigRat(-1), BigRat(-2), BigRat(1), BigRat(2)}));
  CHECK((a * b).eval(BigRat(3, 2)) == a.eval(BigRat(3, 2)) * b.eval(BigRat(3, 2)));
  CHECK(a.mul_scalar(BigRat(1, 2)) == PolyQ({BigRat(1, 2), BigRat(1)}));
}

TEST_CASE("PolyQ subst_power and monic") {
  PolyQ p({BigRat(1), BigRat(1)});  // 1 + q
  CHECK(p.subst_power(3) == PolyQ({BigRat(1), BigRat(0), BigRat(0), BigRat(1)}));
  CHECK(p.subst_power(1) == p);
  CHECK_THROWS_AS(p.subst_power(0), std::invalid_argument);

  PolyQ m = PolyQ({BigRat(2), BigRat(4)}).monic();
  CHECK(m == PolyQ({BigRat(1, 2), BigRat(1)}));
}

TEST_CASE("PolyQ content and primitive decomposition") {
  PolyQ p({BigRat(2, 3), BigRat(0), BigRat(-4, 9)});
  auto [c, prim] = p.content_primitive();
  CHECK(PolyQ::from_int(prim).mul_scalar(c) == p);
  CHECK(prim.content() == 1);
  CHECK(prim.leading() > 0);
  CHECK(c == BigRat(-2, 9));
  CHECK(prim == IntPoly({BigInt(-3), BigInt(0), BigInt(2)}));
}

TEST_CASE("PolyQ monic gcd") {
  PolyQ q2m1({BigRat(-1), BigRat(0), BigRat(1)});
  PolyQ qm1({BigRat(-1), BigRat(1)});
  CHECK(PolyQ::gcd_monic(q2m1, qm1) == qm1);
  CHECK(PolyQ::gcd_monic(q2m1, PolyQ({BigRat(1), BigRat(1)})) == PolyQ({BigRat(1), BigRat(1)}));
  CHECK(PolyQ::gcd_monic(PolyQ(4), PolyQ({BigRat(2), BigRat(2)})) == PolyQ(1));
  CHECK(PolyQ::gcd_monic(PolyQ(), PolyQ()).is_zero());
}

TEST_CASE("PolyQ printing") {
  CHECK(PolyQ({BigRat(1), BigRat(0), BigRat(-1, 2)}).to_string() == "1 - 1/2*q^2");
  CHECK(PolyQ().to_string() == "0");
  CHECK(PolyQ({BigRat(0), BigRat(1)}).to_string("x") == "x");
}
