#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "osc/spectrum.hpp"

using namespace osc;

namespace {

StandardDescriptor find(long r, Rat lambda_rho, const ModulusPoint& m, TypeKind k) {
  for (const auto& d : standard_list(r, PiRat(lambda_rho), m))
    if (d.type.kind == k) return d;
  FAIL("no standard descriptor of the requested type");
  return {};
}

long s_mult(const SpectrumWindow& w, const QuadRat& a2, const Rat& tau) {
  long m = 0;
  for (const auto& e : w.entries)
    if (auto s = std::get_if<RepS>(&e.rep))
      if (s->a2.exact && *s->a2.exact == a2 && s->tau == tau) m += e.mult;
  return m;
}

}  // namespace

TEST_CASE("a squared") {
  CHECK(*a_squared(1, 0, ModulusPoint::i()).exact == QuadRat(1));
  CHECK(*a_squared(2, 1, ModulusPoint::i()).exact == QuadRat(5));
  CHECK(*a_squared(1, 0, ModulusPoint::omega()).exact == QuadRat(Rat(0), rat(2, 3)));
}

TEST_CASE("H0 of the order-4 lattice") {
  StandardDescriptor d = find(1, rat(1, 2), ModulusPoint::i(), TypeKind::T4);
  SpectrumWindow w = h0_decomposition(d, WindowBounds{2, 1, Rat(10)});
  CHECK(s_mult(w, QuadRat(1), Rat(0)) == 1);
  CHECK(s_mult(w, QuadRat(5), Rat(0)) == 2);
  CHECK(s_mult(w, QuadRat(3), Rat(0)) == 0);
  long c_count = 0;
  for (const auto& e : w.entries)
    if (std::holds_alternative<RepC>(e.rep)) c_count += e.mult;
  CHECK(c_count == 5);  // n = -2..2
}

TEST_CASE("H0 of a straight lattice") {
  // kappa = 2: lambda = 4 pi, tau runs over K / 2
  StandardDescriptor d{make_type(TypeKind::T1, 1, 1), 1, PiRat(Rat(4)), ModulusPoint::i(), std::make_pair(0L, 0L)};
  SpectrumWindow w = h0_decomposition(d, WindowBounds{1, 1, Rat(2)});
  // (+-1, 0) and (0, +-1) at modulus i, once for each tau in {0, 1/2}
  CHECK(s_mult(w, QuadRat(1), Rat(0)) == 4);
  CHECK(s_mult(w, QuadRat(1), rat(1, 2)) == 4);
  CHECK(s_mult(w, QuadRat(2), rat(1, 2)) == 4);
}

TEST_CASE("H1 multiplicities") {
  StandardDescriptor t2 = find(3, Rat(1), ModulusPoint::i(), TypeKind::T2);
  CHECK(h1_multiplicity(t2, 1, 0) == 2);
  CHECK(h1_multiplicity(t2, 1, 1) == 1);
  CHECK(h1_multiplicity(t2, 1, 0) + h1_multiplicity(t2, 1, 1) == 3);

  StandardDescriptor t4 = find(1, rat(1, 2), ModulusPoint::i(), TypeKind::T4);
  CHECK(h1_multiplicity(t4, 1, 0) == 1);
  for (long n = 1; n < 4; ++n) CHECK(h1_multiplicity(t4, 1, n) == 0);

  StandardDescriptor t1{make_type(TypeKind::T1, 2, 1), 2, PiRat(Rat(2)), ModulusPoint::i(), std::make_pair(1L, 0L)};
  for (long n = -3; n <= 3; ++n) CHECK(h1_multiplicity(t1, 3, n) == 3);
}

TEST_CASE("Casimir values") {
  const PiRat lambda(Rat(1));
  CHECK(casimir_value(RepC{QuadRat(3)}, lambda, CasimirConvention::OracleDerived).value() == 0);
  PiPoly f = casimir_value(RepF{QuadRat(1), QuadRat(0)}, lambda, CasimirConvention::OracleDerived);
  CHECK(f.value() == doctest::Approx(-2 * std::numbers::pi));
  PiPoly s = casimir_value(RepS{Real(QuadRat(1)), Rat(0)}, lambda, CasimirConvention::OracleDerived);
  CHECK(s.value() == doctest::Approx(-4 * std::numbers::pi * std::numbers::pi));
  PiPoly sp = casimir_value(RepS{Real(QuadRat(1)), Rat(0)}, lambda, CasimirConvention::PrintedFormula);
  CHECK(sp.value() == doctest::Approx(-4 * std::numbers::pi));
}

TEST_CASE("wave spectrum is finite and sorted") {
  StandardDescriptor d{make_type(TypeKind::T1, 1, 1), 1, PiRat(Rat(2)), ModulusPoint::i(), std::make_pair(0L, 0L)};
  SpectrumWindow w = decomposition(d, WindowBounds{2, 2, Rat(4)});
  auto ev = wave_spectrum(w, CasimirConvention::PrintedFormula);
  REQUIRE(!ev.empty());
  for (size_t i = 1; i < ev.size(); ++i) CHECK(ev[i - 1].value.value() < ev[i].value.value());
  // kappa = 1 is odd: F-eigenvalues are multiples of 2 pi r / kappa
  for (const auto& e : w.entries)
    if (std::holds_alternative<RepF>(e.rep)) {
      double v = -casimir_value(e.rep, w.lambda, CasimirConvention::PrintedFormula).value() / (2 * std::numbers::pi);
      CHECK(std::abs(v - std::round(v)) < 1e-12);
    }

  // C-only window: every Casimir vanishes
  SpectrumWindow c = h0_decomposition(d, WindowBounds{3, 1, rat(1, 2)});
  for (const auto& e : wave_spectrum(c, CasimirConvention::PrintedFormula)) CHECK(e.value.value() == 0);
}

TEST_CASE("pullbacks") {
  SpectrumWindow w;
  w.lambda = PiRat(Rat(1));
  w.entries = {{RepC{QuadRat(2)}, 1}, {RepF{QuadRat(3), QuadRat(1)}, 2}, {RepS{Real(QuadRat(5)), rat(1, 4)}, 1}};
  aggregate(w.entries);
  SpectrumWindow sh = pullback_spectrum(w, Shift{rat(1, 2)});
  bool saw_c = false, saw_f = false;
  for (const auto& e : sh.entries) {
    if (auto c = std::get_if<RepC>(&e.rep)) saw_c = c->t == QuadRat(2);
    // d + u c with u = (1/2)/pi, lambda = pi: t + (1/2) * 3
    if (auto f = std::get_if<RepF>(&e.rep)) saw_f = f->t == QuadRat(rat(5, 2));
  }
  CHECK(saw_c);
  CHECK(saw_f);

  SpectrumWindow sc = pullback_spectrum(w, Linear{Mat2Q::scalar(QuadRat(2))});
  for (const auto& e : sc.entries)
    if (auto s = std::get_if<RepS>(&e.rep)) {
      CHECK(*s->a2.exact == QuadRat(20));
      CHECK(s->tau == rat(1, 4));
    }
  SpectrumWindow back = pullback_spectrum(pullback_spectrum(w, Shift{rat(1, 3)}), inverse(Shift{rat(1, 3)}));
  REQUIRE(back.entries.size() == w.entries.size());
  for (size_t i = 0; i < w.entries.size(); ++i) CHECK(rep_equal(back.entries[i].rep, w.entries[i].rep));
}

TEST_CASE("accumulation demo") {
  const double golden = (1 + std::sqrt(5.0)) / 2;
  AccumulationResult g = accumulation_demo(golden, 10);
  CHECK(g.values.size() == 10);
  CHECK(std::set<double>(g.values.begin(), g.values.end()).size() == 10);
  CHECK_FALSE(g.degenerate);
  CHECK(accumulation_demo(0.75, 10).degenerate);
  CHECK(accumulation_demo(std::sqrt(2.0), 5).values.size() == 5);
}

TEST_CASE("report rendering is deterministic") {
  StandardDescriptor d = find(3, Rat(1), ModulusPoint::i(), TypeKind::T2);
  WindowBounds b{2, 1, Rat(3)};
  std::string a = render_text(decomposition(d, b), CasimirConvention::OracleDerived);
  CHECK(a == render_text(decomposition(d, b), CasimirConvention::OracleDerived));
  CHECK(a.find("F(c=3, d=0) x2") != std::string::npos);
  std::string rec = render_records(decomposition(d, b), CasimirConvention::PrintedFormula);
  CHECK(rec.rfind("{\"", 0) == 0);
}
