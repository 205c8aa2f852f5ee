#include <doctest.h>

#include <cmath>
#include <complex>

#include "osc/numeric.hpp"

using namespace osc;

TEST_CASE("phase multiplication adds exponents mod 2") {
  CHECK(PhaseExp(rat(1, 2)) * PhaseExp(rat(1, 2)) == PhaseExp(Rat(1)));
  PhaseExp p(rat(5, 7));
  CHECK(PhaseExp() * p == p);
  PhaseExp x(rat(3, 2)), y(rat(3, 4));
  CHECK(x * y == PhaseExp(rat(1, 4)));
  CHECK(std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-14);
}

TEST_CASE("phase to complex") {
  CHECK(std::abs(PhaseExp().to_complex() - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(PhaseExp(Rat(1)).to_complex() - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(PhaseExp(rat(1, 3)).to_complex() - cplx(0.5, std::sqrt(3.0) / 2)) < 1e-15);
}

TEST_CASE("phase powers reduce mod 2") {
  PhaseExp p(rat(7, 12));
  for (long n = 0; n <= 24; ++n) CHECK(p.pow(n).rho() == mod_rat(Rat(n) * rat(7, 12), Rat(2)));
  CHECK(p.pow(24).is_one());
}

TEST_CASE("rational and angle parsing") {
  CHECK(parse_rat("-3/6") == rat(-1, 2));
  CHECK(parse_pirat("pi").rho == 1);
  CHECK(parse_pirat("-pi/2").rho == rat(-1, 2));
  CHECK(parse_pirat("5/2 pi").rho == rat(5, 2));
  CHECK(parse_pirat("2pi").rho == 2);
  CHECK_THROWS_AS(parse_pirat("3/4"), ParseError);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
}

TEST_CASE("quadratic field arithmetic is exact") {
  QuadRat s = QuadRat::sqrt3();
  CHECK(s * s == QuadRat(3));
  QuadRat x(rat(1, 2), rat(1, 3));
  CHECK(x * x.inverse() == QuadRat(1));
  CHECK(QuadRat(Rat(2), Rat(-1)).sign() > 0);  // 2 > sqrt3
  CHECK(QuadRat(Rat(1), Rat(-1)).sign() < 0);
  CHECK(floor_quad(s) == 1);
  CHECK(parse_quad("1/2+1/3*sqrt3") == x);
}

TEST_CASE("modulus points") {
  CHECK(ModulusPoint::i().is_i());
  CHECK(ModulusPoint::omega().is_omega());
  CHECK(parse_modulus(str(ModulusPoint::omega())) == ModulusPoint::omega());
  ModulusPoint m = ModulusPoint::rational(rat(1, 5), rat(3, 2));
  CHECK(parse_modulus(str(m)) == m);
}

TEST_CASE("remainders are non-negative") {
  CHECK(rem(-1, 4) == 3);
  CHECK(rem(9, 4) == 1);
  CHECK(mod_rat(rat(-1, 3), Rat(1)) == rat(2, 3));
}
