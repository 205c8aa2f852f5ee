#include <doctest.h>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"

using namespace osc;

namespace {

LatticeSpec spec(long r, Rat lambda_rho) {
  LatticeSpec s;
  s.r = r;
  s.lambda = PiRat(lambda_rho);
  return s;
}

StandardDescriptor find(long r, Rat lambda_rho, const ModulusPoint& m, TypeKind k) {
  for (const auto& d : standard_list(r, PiRat(lambda_rho), m))
    if (d.type.kind == k) return d;
  FAIL("no standard descriptor of the requested type");
  return {};
}

}  // namespace

TEST_CASE("order of lambda") {
  CHECK(order_of_lambda(PiRat(Rat(2))) == 1);
  CHECK(order_of_lambda(PiRat(Rat(1))) == 2);
  CHECK(order_of_lambda(PiRat(rat(5, 2))) == 4);
  CHECK(order_of_lambda(PiRat(rat(-4, 3))) == 3);
  CHECK_THROWS_AS(order_of_lambda(PiRat(rat(-2, 3))), InadmissibleLattice);
  CHECK_THROWS_AS(order_of_lambda(PiRat(rat(2, 5))), InadmissibleLattice);
}

TEST_CASE("invariants") {
  LatticeSpec s = spec(4, Rat(2));
  s.x_delta = rat(1, 2);  // (v, w) = (2, 0)
  InvariantBundle inv = invariants(s);
  CHECK(inv.v == 2);
  CHECK(inv.w == 0);
  CHECK(inv.type.r0 == 2);
  CHECK(inv.s0 == 2);

  LatticeSpec t = spec(3, Rat(1));
  t.z_delta = rat(1, 5);
  CHECK(invariants(t).z0 == 0);

  for (long r = 1; r <= 4; ++r) {
    InvariantBundle f = invariants(to_spec(find(r, rat(1, 2), ModulusPoint::i(), TypeKind::T4)));
    CHECK(f.v == 0);
    CHECK(f.w == 0);
    CHECK(f.s_L == 0);
  }
}

TEST_CASE("type classification") {
  CHECK(type_from_kl(2, 2, 1, 0).kind == TypeKind::T2plus);
  for (long k = -3; k <= 3; ++k)
    for (long l = -3; l <= 3; ++l) CHECK(type_from_kl(2, 3, k, l).kind == TypeKind::T2);
  for (long k = -2; k <= 2; ++k) CHECK(type_from_kl(6, 5, k, 1).kind == TypeKind::T6);
}

TEST_CASE("abelianization") {
  long free_rank = 0;
  auto f = abelianization_factors(2, 3, 0, 0, &free_rank);
  std::vector<Int> torsion;
  for (const auto& x : f)
    if (x > 1) torsion.push_back(x);
  CHECK(torsion == std::vector<Int>{2, 6});
  CHECK(free_rank == 1);

  LatticeSpec t1 = spec(4, Rat(2));
  t1.x_delta = rat(1, 2);
  CHECK(abelianization_type(t1) == TypeTag{TypeKind::T1, 4, 2});

  TypeTag p = abelianization_type(to_spec(find(2, rat(1, 2), ModulusPoint::i(), TypeKind::T4plus)));
  TypeTag n = abelianization_type(to_spec(find(2, rat(1, 2), ModulusPoint::i(), TypeKind::T4)));
  CHECK(p.kind == TypeKind::T4plus);
  CHECK(n.kind == TypeKind::T4);
}

TEST_CASE("normalise and unshift") {
  LatticeSpec s = to_spec(find(2, Rat(1), ModulusPoint::i(), TypeKind::T2));
  CHECK(render_spec(normalise(s)) == render_spec(s));
  LatticeSpec big = denormalise(s, Rat(2));
  big.z_delta = Rat(1);
  LatticeSpec back = normalise(big);
  CHECK(back.scale == 1);
  CHECK(back.z_delta == rat(1, 4));
  CHECK(render_spec(denormalise(normalise(big), Rat(2))) == render_spec(big));

  CHECK(render_spec(unshift(s)) == render_spec(s));
  LatticeSpec shifted = s;
  shifted.z_delta += rat(1, 7);
  const InvariantBundle inv = invariants(s);
  CHECK(invariants(shifted).s_L == mod_rat(inv.s_L + rat(1, 7), rat(1, inv.s0 * s.r)));
  CHECK(invariants(unshift(shifted)).s_L == 0);
}

TEST_CASE("fundamental domain reduction") {
  FdResult a = fd_reduce(ModulusPoint::rational(Rat(0), Rat(2)));
  CHECK(a.point == ModulusPoint::rational(Rat(0), Rat(2)));
  CHECK(a.m == Mat2i{{{1, 0}, {0, 1}}});
  FdResult b = fd_reduce(ModulusPoint::rational(Rat(5), Rat(1)));
  CHECK(b.point == ModulusPoint::i());
  CHECK(b.m == Mat2i{{{1, -5}, {0, 1}}});
  FdResult c = fd_reduce(ModulusPoint::floating(0.5 - 1e-15, 2.0));
  CHECK(c.point.mu_d() == doctest::Approx(0.5));
  CHECK(in_fundamental_domain(c.point));
  // tie on the left edge moves to the right edge
  FdResult d = fd_reduce(ModulusPoint::rational(rat(-1, 2), Rat(3)));
  CHECK(d.point == ModulusPoint::rational(rat(1, 2), Rat(3)));
}

TEST_CASE("standardize") {
  for (long r = 1; r <= 3; ++r) {
    StandardDescriptor d = find(r, rat(1, 2), ModulusPoint::i(), TypeKind::T4);
    CHECK(standardize(to_spec(d)) == d);
  }
  LatticeSpec q1 = spec(2, Rat(2));
  q1.modulus = ModulusPoint::rational(Rat(0), Rat(2));
  q1.x_delta = rat(-1, 2);
  q1.z_delta = rat(1, 2);
  StandardDescriptor d1 = standardize(unshift(q1));
  CHECK(d1.type.kind == TypeKind::T1);
  CHECK(d1.iota == std::make_pair(1L, 0L));

  LatticeSpec q2 = spec(2, Rat(1));
  q2.modulus = ModulusPoint::rational(rat(1, 5), rat(3, 2));
  q2.x_delta = rat(1, 2);
  q2.y_delta = rat(1, 2);
  StandardDescriptor d2 = standardize(unshift(q2));
  CHECK(d2.type.kind == TypeKind::T2plus);
  CHECK(d2.iota == std::make_pair(1L, 1L));
}

TEST_CASE("reduction recovers the standard lattice after moves") {
  StandardDescriptor d = find(3, rat(2, 3), ModulusPoint::omega(), TypeKind::T3plus);
  LatticeSpec s = to_spec(d);
  s = rewrite(s, Move::DeltaAlpha);
  s = conjugate(s, Vec2q{rat(1, 3), rat(-2, 5)});
  s = apply_shift(s, rat(1, 7));
  s = rewrite(s, Move::Rotate);
  s = denormalise(s, rat(3, 2));
  ReductionChain ch = reduce(s);
  CHECK(ch.standard == d);
  CHECK(ch.scale == rat(3, 2));
}

TEST_CASE("z0 closed form") {
  for (long r = 1; r <= 4; ++r) {
    CHECK(z0_closed_form(2, r, Rat(r % 2), Rat(0), Rat(0), Rat(0), false) == 0);
    CHECK(z0_solve(4, r, Rat(1), Rat(0), Rat(0), Rat(0), true) == rat(-1, 4 * r * r));
  }
  for (int q : {3, 4, 6})
    for (long r = 1; r <= 5; ++r)
      for (long v = -r; v <= r; ++v)
        for (long w = -r; w <= r; ++w) {
          Rat a = 0, b = 0;
          if (r % 2 != 0 && q == 3) a = 1, b = rat(1, 2);
          if (r % 2 != 0 && q == 6) a = rat(1, 2);
          for (bool plus : {false, true})
            CHECK(z0_closed_form(q, r, Rat(v), Rat(w), a, b, plus) == z0_solve(q, r, Rat(v), Rat(w), a, b, plus));
        }
}

TEST_CASE("lattice file parsing") {
  LatticeSpec s = parse_lattice("# comment\nr = 2\nlambda = pi/2\nx_delta = 1/2 # trailing\n");
  CHECK(s.r == 2);
  CHECK(s.lambda.rho == rat(1, 2));
  CHECK(s.x_delta == rat(1, 2));
  CHECK(render_spec(parse_lattice(render_spec(s))) == render_spec(s));
  CHECK_THROWS_WITH_AS(parse_lattice("r = 2\nfoo = 1\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_lattice("r = 2\n"), ParseError);
  CHECK_THROWS_AS(parse_lattice("r = 2\nr = 3\nlambda = pi\n"), ParseError);
}
