#include <doctest.h>

#include <cmath>
#include <numbers>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"

using namespace osc;

TEST_CASE("smith normal form") {
  SmithResult a = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(a.factors == std::vector<Int>{1, 6});
  CHECK(a.free_rank == 0);
  CHECK(a.u * IntMatrix::from_rows({{2, 0}, {0, 3}}) * a.v == a.d);

  SmithResult z = smith_normal_form(IntMatrix(3, 3));
  CHECK(z.factors.empty());
  CHECK(z.free_rank == 3);

  IntMatrix t2 = IntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  SmithResult s = smith_normal_form(t2);
  CHECK(s.factors == std::vector<Int>{1, 2, 6});
  CHECK(s.torsion() == std::vector<Int>{2, 6});
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
}

TEST_CASE("gauss sums") {
  for (long a = 1; a <= 5; ++a) CHECK(std::abs(gauss_sum(a, a % 2, 1) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(gauss_sum(2, 0, 2)) < 1e-15);
  double worst = 0;
  for (long a = -12; a <= 12; ++a)
    for (long c = -12; c <= 12; ++c) {
      if (a == 0 || c == 0) continue;
      for (long b = -2 * std::labs(a * c); b <= 2 * std::labs(a * c); ++b)
        if ((a * c + b) % 2 == 0) worst = std::max(worst, std::abs(gauss_sum(a, b, c) - gauss_reciprocity_rhs(a, b, c)));
    }
  CHECK(worst < 1e-9);
  CHECK_THROWS(gauss_sum(1, 0, 0));
  CHECK_THROWS(gauss_sum(1, 0, 1));
}

TEST_CASE("gamma_4 matrices") {
  StandardDescriptor t2{make_type(TypeKind::T2, 1), 1, PiRat(Rat(1)), ModulusPoint::i(), std::nullopt};
  Gamma4Matrix g = gamma4_matrix(t2, 1, 0);
  CHECK(std::get<GenPermMatrix>(g).dim == 1);
  CHECK(fixed_dim(g) == 1);

  const cplx I(0, 1);
  const cplx tS0[4] = {1.0 - I, 1.0, 0.0, -I};
  for (long r = 1; r <= 4; ++r)
    for (long m = 1; m <= 4; ++m) {
      DenseUnitary s0 = fourier_operator_q4(r, m, 0);
      CHECK(s0.unitarity_defect() < 1e-12);
      CHECK(std::abs(s0.trace() - tS0[(r * m) % 4]) < 1e-9);
      DenseUnitary db = fourier_operator_q6(r, m, r % 2);
      CHECK(std::abs(db.trace() - cplx(0.5, -std::sqrt(3.0) / 2)) < 1e-9);
    }
}

TEST_CASE("fixed dimensions") {
  CHECK(fixed_dim(DenseUnitary::identity(5), PhaseExp(), 1) == 5);
  // involution: m+ = (d + t) / 2
  GenPermMatrix refl = reflection_operator_q2(3, 2, 0, 0, 0);
  long t = std::lround(refl.trace_power(1).real());
  CHECK(fixed_dim(refl, PhaseExp()) == (refl.dim + t) / 2);
  // order 4: m+1 = (d + 2 t1 + t) / 4
  for (long A = 1; A <= 9; ++A) {
    DenseUnitary s = fourier_operator_q4(A, 1, 0);
    const long order = gamma4_order(s);
    CHECK(order <= 4);
    double t1 = s.trace().real(), t2 = (s * s).trace().real();
    CHECK(fixed_dim(s, PhaseExp(), order) == std::lround((double(A) + 2 * t1 + t2) / 4));
  }
}

TEST_CASE("ladder Casimir") {
  using std::numbers::pi;
  LadderVerdict f = ladder_casimir(RepKind::F, 1.0, 0.0, 32);
  CHECK(std::abs(f.scalar - cplx(-2 * pi, 0)) < 1e-10 * 2 * pi);
  LadderVerdict c = ladder_casimir(RepKind::C, 0, 0, 32);
  CHECK(std::abs(c.scalar) < 1e-12);
  LadderVerdict s = ladder_casimir(RepKind::S, 1.0, 0.0, 32);
  CHECK(std::abs(s.scalar - cplx(-4 * pi * pi, 0)) < 1e-10 * 4 * pi * pi);
  CHECK_THROWS(ladder_casimir(RepKind::F, 1.0, 0.0, 4));
}

TEST_CASE("gaussian ideal counts") {
  CHECK(gaussian_ideal_count(1) == 1);
  CHECK(gaussian_ideal_count(2) == 1);
  CHECK(gaussian_ideal_count(3) == 0);
  CHECK(gaussian_ideal_count(5) == 2);
  CHECK(gaussian_ideal_count(9) == 1);
  CHECK(gaussian_ideal_count(25) == 3);
  CHECK(gaussian_ideal_count(65) == 4);
}
