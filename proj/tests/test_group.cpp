#include <doctest.h>

#include <cmath>
#include <random>

#include "osc/group.hpp"
#include "osc/lattice.hpp"

using namespace osc;

namespace {

OscElement oe(long xr, long xi, Rat z, Rat t) { return {QuadRat(xr), QuadRat(xi), QuadRat(z), PiRat(t)}; }
GElement gel(Rat x, Rat y, Rat z, Rat t) { return {QuadRat(x), QuadRat(y), QuadRat(z), PiRat(t)}; }

Rat small_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("oscillator multiplication") {
  OscElement g = oe(2, -1, rat(1, 3), rat(1, 2));
  CHECK(osc_mul(g, OscElement::identity()) == g);
  CHECK(osc_mul(oe(1, 0, 0, 0), oe(0, 1, 0, 0)) == oe(1, 1, rat(1, 2), 0));
  CHECK(osc_mul(oe(0, 0, 0, 1), oe(1, 0, 0, 0)) == oe(-1, 0, 0, 1));
  CHECK(osc_mul(g, inverse(g)) == OscElement::identity());
}

TEST_CASE("semidirect product G") {
  CHECK(g_mul(gel(1, 0, 0, 0), gel(0, 1, 0, 0)) == gel(1, 1, 1, 0));
  GElement g = gel(3, -2, rat(1, 5), rat(1, 3));
  CHECK(g_mul(g, GElement::identity()) == g);
  // rotation by pi/2 in front of M(x, y, z)(t)
  Rat x(2), y(5), z(rat(1, 7)), t(rat(1, 6));
  CHECK(g_mul(gel(0, 0, 0, rat(1, 2)), gel(x, y, z, t)) == gel(-y, x, z - x * y, t + rat(1, 2)));
}

TEST_CASE("isomorphism phi") {
  CHECK(phi(OscElement::identity()) == GElement::identity());
  CHECK(phi(oe(1, 1, 0, 0)) == gel(-1, 1, rat(-1, 2), 0));
  std::mt19937_64 rng(3);
  const Rat angles[] = {Rat(0), rat(1, 2), rat(1, 3), rat(2, 3), Rat(1), rat(-1, 6)};
  for (int i = 0; i < 2000; ++i) {
    OscElement a{small_rat(rng), small_rat(rng), small_rat(rng), PiRat(angles[rng() % 6])};
    OscElement b{small_rat(rng), small_rat(rng), small_rat(rng), PiRat(angles[rng() % 6])};
    REQUIRE(phi(osc_mul(a, b)) == g_mul(phi(a), phi(b)));
    REQUIRE(phi_inv(phi(a)) == a);
  }
}

TEST_CASE("associativity on float elements") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3, 3);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    OscFloat a{{u(rng), u(rng)}, u(rng), u(rng)}, b{{u(rng), u(rng)}, u(rng), u(rng)}, c{{u(rng), u(rng)}, u(rng), u(rng)};
    OscFloat l = osc_mul(osc_mul(a, b), c), r = osc_mul(a, osc_mul(b, c));
    worst = std::max({worst, std::abs(l.xi - r.xi), std::abs(l.z - r.z), std::abs(l.t - r.t)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("automorphisms") {
  OscElement g = oe(2, 3, rat(1, 2), 0);
  CHECK(apply_automorphism(Shift{rat(3, 4)}, g) == g);
  OscElement h = oe(2, 3, rat(1, 2), rat(1, 2));
  OscElement scaled = apply_automorphism(Linear{Mat2Q::scalar(QuadRat(3))}, h);
  CHECK(scaled == OscElement{QuadRat(6), QuadRat(9), QuadRat(rat(9, 2)), PiRat(rat(1, 2))});
  CHECK(is_inner(InnerConj{QuadRat(1), QuadRat(0)}));
  CHECK_FALSE(is_inner(Shift{Rat(1)}));
  CHECK_THROWS_AS(linear_orientation(Mat2Q{QuadRat(1), QuadRat(1), QuadRat(0), QuadRat(1)}), IllFormedAutomorphism);
}

TEST_CASE("group powers") {
  OscElement g = oe(1, 2, rat(1, 3), rat(1, 2));
  CHECK(group_power(g, 0) == OscElement::identity());
  CHECK(group_power(oe(0, 0, 0, rat(2, 3)), 3) == oe(0, 0, 0, 2));
  CHECK(osc_mul(group_power(g, 5), group_power(g, -5)) == OscElement::identity());
  // l_4 of the standard order-4 lattice: delta^4 is central, (0, 0, 4 lambda)
  for (long r = 1; r <= 4; ++r) {
    LatticeSpec s = to_spec(standard_list(r, PiRat(rat(1, 2)), ModulusPoint::i()).front());
    Frame f{4};
    FrameElement d4 = f.pow(s.generators()[3], 4);
    CHECK(d4.p == Vec2q{Rat(0), Rat(0)});
    CHECK(d4.z == 0);
    CHECK(d4.n == 4);
  }
}

TEST_CASE("group element parsing") {
  CHECK(parse_osc("osc(1, 0, 1/2, pi)") == oe(1, 0, rat(1, 2), 1));
  CHECK(parse_g("g(1, 2, 3, pi/2)") == gel(1, 2, 3, rat(1, 2)));
}
