#include "osc/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"
#include "osc/spectrum.hpp"

namespace osc {

std::string SuiteResult::line() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", max_residual);
  std::string s = std::string(ok() ? "PASS " : "FAIL ") + std::to_string(identities) + " identities, max residual " + buf;
  if (failures) s += ", " + std::to_string(failures) + " failures";
  return s;
}

void SuiteResult::fail(const std::string& msg) {
  ++failures;
  if (failure_messages.size() < 8) failure_messages.push_back(msg);
}

namespace {

PiRat pi_times(long num, long den) { return PiRat(rat(num, den)); }

// lambdas per order: positive and negative representatives where admissible
std::vector<PiRat> lambdas_for(int q) {
  switch (q) {
    case 1: return {pi_times(2, 1), pi_times(4, 1)};
    case 2: return {pi_times(1, 1), pi_times(3, 1)};
    case 3: return {pi_times(2, 3), pi_times(-4, 3), pi_times(8, 3), pi_times(-10, 3)};
    case 4: return {pi_times(1, 2), pi_times(-3, 2), pi_times(5, 2), pi_times(-7, 2)};
    default: return {pi_times(1, 3), pi_times(-5, 3), pi_times(7, 3), pi_times(-11, 3)};
  }
}

std::vector<ModulusPoint> moduli_for(int q) {
  if (q == 4) return {ModulusPoint::i()};
  if (q == 3 || q == 6) return {ModulusPoint::omega()};
  return {ModulusPoint::i(), ModulusPoint::omega(), ModulusPoint::rational(rat(1, 5), rat(3, 2))};
}

// every standard descriptor swept by the multiplicity suites
std::vector<StandardDescriptor> multiplicity_descriptors(long rmax) {
  std::vector<StandardDescriptor> out;
  for (int q : {1, 2, 3, 4, 6}) {
    std::vector<PiRat> ls = lambdas_for(q);
    if (q <= 2) ls.resize(1);  // multiplicities do not depend on kappa there
    for (const PiRat& l : ls)
      for (long r = 1; r <= rmax; ++r) {
        ModulusPoint m = q <= 2 ? ModulusPoint::rational(rat(1, 5), rat(3, 2)) : moduli_for(q)[0];
        for (auto& d : standard_list(r, l, m))
          if (q != 1 || d.type.r0 <= 2) out.push_back(d);
      }
  }
  return out;
}

long n_period(const StandardDescriptor& d) {
  if (d.type.q() == 1) return d.r / d.type.r0;
  return d.type.q();
}

}  // namespace

// ---- gauss ---------------------------------------------------------------------

SuiteResult verify_gauss(long amax, int b_samples) {
  SuiteResult res{"gauss"};
  for (long a = -amax; a <= amax; ++a) {
    if (a == 0) continue;
    for (long c = -amax; c <= amax; ++c) {
      if (c == 0) continue;
      const long ac = std::labs(a * c);
      // b in [-2|ac|, 2|ac|] with ac + b even, spread over the range
      for (int s = 0; s < b_samples; ++s) {
        long b = -2 * ac + (4 * ac * s) / std::max(1, b_samples - 1);
        if (rem(a * c + b, 2) != 0) b += (b < 2 * ac) ? 1 : -1;
        cplx lhs = gauss_sum(a, b, c), rhs = gauss_reciprocity_rhs(a, b, c);
        double e = std::abs(lhs - rhs);
        res.residual(e);
        ++res.identities;
        if (e > 1e-9)
          res.fail("S(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") residual " +
                   std::to_string(e));
      }
    }
  }
  return res;
}

// ---- multiplicities ------------------------------------------------------------------

SuiteResult verify_multiplicity(long rmax, long mmax) {
  SuiteResult res{"multiplicity"};
  for (const auto& d : multiplicity_descriptors(rmax)) {
    const long period = n_period(d);
    for (long m = -mmax; m <= mmax; ++m) {
      if (m == 0) continue;
      for (long n = 0; n < period; ++n) {
        long closed = h1_multiplicity(d, m, n);
        long oracle = fixed_dim(gamma4_matrix(d, m, n));
        ++res.identities;
        if (closed != oracle) {
          res.residual(std::labs(closed - oracle));
          res.fail(str(d) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": closed form " +
                   std::to_string(closed) + ", oracle " + std::to_string(oracle));
        }
      }
    }
  }
  return res;
}

SuiteResult verify_dimension(long rmax, long mmax) {
  SuiteResult res{"dimension"};
  for (const auto& d : multiplicity_descriptors(rmax)) {
    const long period = n_period(d);
    for (long m = -mmax; m <= mmax; ++m) {
      if (m == 0) continue;
      long sum = 0;
      for (long n = 0; n < period; ++n) sum += h1_multiplicity(d, m, n);
      ++res.identities;
      if (sum != d.r * std::labs(m)) {
        res.residual(std::labs(sum - d.r * std::labs(m)));
        res.fail(str(d) + " m=" + std::to_string(m) + ": sum " + std::to_string(sum));
      }
    }
  }
  return res;
}

// ---- trace tables ---------------------------------------------------------------------

SuiteResult verify_traces(long rmax, long mmax) {
  SuiteResult res{"traces"};
  const double nu = std::sqrt(3.0) / 2;
  const cplx I(0, 1);
  auto check = [&](const std::string& what, cplx got, cplx want) {
    double e = std::abs(got - want);
    res.residual(e);
    ++res.identities;
    if (e > 1e-9) res.fail(what + ": got (" + std::to_string(got.real()) + "," + std::to_string(got.imag()) + ")");
  };
  for (long r = 1; r <= rmax; ++r)
    for (long m = 1; m <= mmax; ++m) {
      const long rm = r * m;
      const std::string tag = " r=" + std::to_string(r) + " m=" + std::to_string(m);
      // order 4
      DenseUnitary s0 = fourier_operator_q4(r, m, 0);
      const cplx tS0[4] = {1.0 - I, 1.0, 0.0, -I};
      check("tr S0" + tag, s0.trace(), tS0[rm % 4]);
      check("tr S0^2" + tag, (s0 * s0).trace(), rm % 2 ? 1.0 : 2.0);
      if (r % 2 == 0) {
        DenseUnitary s1 = fourier_operator_q4(r, m, 1);
        check("tr S1" + tag, s1.trace(), ((rm / 2 + m) % 2 == 0) ? 1.0 - I : 0.0);
        check("tr S1^2" + tag, (s1 * s1).trace(), m % 2 ? 0.0 : 2.0);
      }
      // orders 3 and 6
      const int b = r % 2;
      DenseUnitary db = fourier_operator_q6(r, m, b), db2 = db * db;
      check("tr D_b" + tag, db.trace(), 0.5 - nu * I);
      const cplx tD2[3] = {1.5 - nu * I, -0.5 - nu * I, 0.5 + nu * I};
      check("tr D_b^2" + tag, db2.trace(), tD2[rm % 3]);
      check("tr D_b^3" + tag, (db2 * db).trace(), rm % 2 ? -1.0 : 2.0);
      if (r % 3 == 0) check("tr A~_1b" + tag, twisted_operator_q3plus(r, m, b).trace(), m % 3 ? 0.0 : 1.5 - nu * I);
      // order 2: the reflection table, for all iota in [0, 2)^2
      for (long i1 = 0; i1 < 2; ++i1)
        for (long i2 = 0; i2 < 2; ++i2) {
          GenPermMatrix s = reflection_operator_q2(r, m, 0, i1, i2);
          const bool i2m_even = (i2 * m) % 2 == 0, rm_even = rm % 2 == 0;
          cplx e1 = PhaseExp(Rat(m * i1)).to_complex();
          cplx want = !i2m_even && rm_even ? 0.0 : (i2m_even && !rm_even ? 1.0 : (!i2m_even ? e1 : 1.0 + e1));
          check("tr S_iota" + tag + " iota=(" + std::to_string(i1) + "," + std::to_string(i2) + ")", s.trace_power(1),
                want);
        }
    }
  return res;
}

// ---- Casimir -----------------------------------------------------------------------------

SuiteResult verify_casimir(long truncation) {
  SuiteResult res{"casimir"};
  using std::numbers::pi;
  auto rel = [&](const std::string& what, cplx got, double want) {
    double e = std::abs(got - want) / std::max(1.0, std::fabs(want));
    res.residual(e);
    ++res.identities;
    if (e > 1e-10) res.fail(what + ": got " + std::to_string(got.real()) + ", want " + std::to_string(want));
  };
  rel("C", ladder_casimir(RepKind::C, 0, 0, truncation).scalar, 0.0);
  const PiRat lambda = pi_times(2, 1);
  for (long c : {-3L, -2L, -1L, 1L, 2L, 5L})
    for (long tn : {-3L, -1L, 0L, 1L, 4L}) {
      Rat t = rat(tn, 4);
      double d = t.get_d() / lambda.value();  // d = t / lambda
      double want = c > 0 ? -2 * pi * c * (4 * pi * d + 1) : -2 * pi * c * (4 * pi * d - 1);
      LadderVerdict v = ladder_casimir(RepKind::F, double(c), d * pi, truncation);
      rel("F(c=" + std::to_string(c) + ", t=" + str(t) + ")", v.scalar, want);
      PiPoly cv = casimir_value(RepF{QuadRat(c), QuadRat(t)}, lambda, CasimirConvention::OracleDerived);
      rel("casimir_value F", v.scalar, cv.value());
    }
  for (long a2n : {1L, 2L, 5L, 13L})
    for (long tn : {0L, 1L, 3L}) {
      Rat tau = rat(tn, 4);
      LadderVerdict v = ladder_casimir(RepKind::S, double(a2n), tau.get_d(), truncation);
      rel("S(a2=" + std::to_string(a2n) + ")", v.scalar, -4 * pi * pi * a2n);
      PiPoly cv = casimir_value(RepS{Real(QuadRat(a2n)), tau}, lambda, CasimirConvention::OracleDerived);
      rel("casimir_value S", v.scalar, cv.value());
    }
  return res;
}

// ---- straight lattices -------------------------------------------------------------------

namespace {

StandardDescriptor straight_descriptor(long r, long kappa, const Rat& mu, const Rat& nu) {
  StandardDescriptor d;
  d.type = make_type(TypeKind::T1, r, r);
  d.r = r;
  d.lambda = pi_times(2 * kappa, 1);
  d.modulus = ModulusPoint::rational(mu, nu);
  d.iota = std::pair{0L, 0L};
  return d;
}

const std::vector<std::pair<Rat, Rat>>& straight_moduli() {
  static const std::vector<std::pair<Rat, Rat>> v{
      {Rat(0), Rat(1)}, {rat(1, 3), rat(5, 4)}, {rat(-1, 2), Rat(2)}, {rat(1, 4), Rat(3)}};
  return v;
}

}  // namespace

SuiteResult verify_straight_spectrum() {
  SuiteResult res{"straight-spectrum"};
  WindowBounds b{5, 3, Rat(12)};
  for (long r = 1; r <= 3; ++r)
    for (long kappa = 1; kappa <= 3; ++kappa)
      for (const auto& [mu, nu] : straight_moduli()) {
        StandardDescriptor d = straight_descriptor(r, kappa, mu, nu);
        SpectrumWindow w = decomposition(d, b);
        // independent enumeration of the closed form
        std::map<std::pair<Rat, Rat>, long> s_expect;  // (a2, tau)
        const long kb = 20;
        for (long l = -kb; l <= kb; ++l)
          for (long k = -kb; k <= kb; ++k) {
            if (l == 0 && k == 0) continue;
            Rat a2 = nu * k * k + (l - mu * k) * (l - mu * k) / nu;
            if (a2 > b.amax) continue;
            for (long K = 0; K < kappa; ++K) ++s_expect[{a2, rat(K, kappa)}];
          }
        std::map<std::pair<Rat, Rat>, long> s_got;
        std::set<long> c_got;
        std::map<std::pair<long, Rat>, long> f_got;
        for (const auto& e : w.entries) {
          if (auto c = std::get_if<RepC>(&e.rep)) {
            if (e.mult != 1 || !c->t.is_rational() || !is_int(c->t.a)) res.fail("C entry " + format_entry(e));
            c_got.insert(to_long(c->t.a));
          } else if (auto s = std::get_if<RepS>(&e.rep)) {
            s_got[{s->a2.exact->a, s->tau}] += e.mult;
          } else {
            const auto& f = std::get<RepF>(e.rep);
            f_got[{to_long(f.c.a), f.t.a}] += e.mult;
          }
        }
        ++res.identities;
        if (s_got != s_expect) res.fail(str(d) + ": S entries differ from direct enumeration");
        std::set<long> c_want;
        for (long n = -b.nmax; n <= b.nmax; ++n) c_want.insert(n);
        ++res.identities;
        if (c_got != c_want) res.fail(str(d) + ": C entries differ");
        std::map<std::pair<long, Rat>, long> f_want;
        for (long m = -b.mmax; m <= b.mmax; ++m)
          for (long n = -b.nmax; n <= b.nmax; ++n)
            if (m != 0) f_want[{r * m, Rat(n)}] = r * std::labs(m);
        ++res.identities;
        if (f_got != f_want) res.fail(str(d) + ": F entries differ");
      }
  return res;
}

SuiteResult verify_straight_wave() {
  SuiteResult res{"straight-wave"};
  for (long r = 1; r <= 3; ++r)
    for (long kappa = 1; kappa <= 3; ++kappa)
      for (const auto& [mu, nu] : straight_moduli()) {
        StandardDescriptor d = straight_descriptor(r, kappa, mu, nu);
        // window on the pi-coefficient: |value| <= J * unit with unit = 4r/kappa or 2r/kappa
        const long J = 12;
        const Rat unit = kappa % 2 == 0 ? rat(4 * r, kappa) : rat(2 * r, kappa);
        const Rat vmax = unit * J;
        WindowBounds b{J + kappa + 1, J, vmax / 4};
        SpectrumWindow w = decomposition(d, b);
        std::set<Rat> got, want;
        for (const auto& ev : wave_spectrum(w, CasimirConvention::PrintedFormula)) {
          if (!ev.value.pi1.exact || !ev.value.pi1.exact->is_rational() ||
              !(ev.value.pi2.exact && *ev.value.pi2.exact == QuadRat(0))) {
            res.fail(str(d) + ": inexact eigenvalue");
            continue;
          }
          Rat v = ev.value.pi1.exact->a;
          if (abs(v) <= vmax) got.insert(v);
        }
        for (long j = -J; j <= J; ++j) want.insert(unit * j);
        const long kb = 40;
        for (long l = -kb; l <= kb; ++l)
          for (long k = -kb; k <= kb; ++k) {
            if (l == 0 && k == 0) continue;
            Rat a2 = nu * k * k + (l - mu * k) * (l - mu * k) / nu;
            if (4 * a2 <= vmax) want.insert(4 * a2);
          }
        ++res.identities;
        if (got != want)
          res.fail(str(d) + ": wave spectrum differs (" + std::to_string(got.size()) + " vs " +
                   std::to_string(want.size()) + " values)");
      }
  return res;
}

// ---- classification ------------------------------------------------------------------------

namespace {

// the spec with zeta = 0 whose rotation part gives (k, l)
LatticeSpec spec_from_kl(int q, long r, long k, long l, const PiRat& lambda) {
  Mat2i s = rotation_matrix(q);
  Vec2q base{Rat(r * s[0][1] * s[1][1]) / 2, Rat(-r * s[0][0] * s[1][0]) / 2};
  Vec2q mlk{Rat(-l), Rat(k)};
  Vec2q vw = mat_apply(s, {base[0] - mlk[0], base[1] - mlk[1]});
  LatticeSpec out;
  out.r = r;
  out.lambda = lambda;
  out.modulus = q == 4 ? ModulusPoint::i() : (q == 3 || q == 6 ? ModulusPoint::omega() : ModulusPoint::i());
  out.x_delta = vw[0] / r;
  out.y_delta = vw[1] / r;
  return out;
}

Rat random_rat(std::mt19937_64& rng, long num, long den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return rat(n(rng), d(rng));
}

LatticeSpec random_move(const LatticeSpec& s, std::mt19937_64& rng, bool allow_shift) {
  const int q = s.q();
  std::uniform_int_distribution<int> pick(0, allow_shift ? 8 : 7);
  int k = pick(rng);
  bool inv = rng() & 1;
  switch (k) {
    case 0: return rewrite(s, Move::DeltaAlpha, inv);
    case 1: return rewrite(s, Move::DeltaBeta, inv);
    case 2: return rewrite(s, Move::DeltaGamma, inv);
    case 3: return rewrite(s, Move::AlphaGamma, inv);
    case 4: return rewrite(s, Move::BetaGamma, inv);
    case 5: return q <= 2 ? rewrite(s, Move::BetaAlphaBeta, inv) : rewrite(s, Move::Rotate, inv);
    case 6: return rewrite(s, Move::Rotate, inv);
    case 7: return conjugate(s, {random_rat(rng, 6, 6), random_rat(rng, 6, 6)});
    default: return apply_shift(s, random_rat(rng, 5, 7));
  }
}

}  // namespace

SuiteResult verify_classification(std::uint64_t seed, int trials, int moves) {
  SuiteResult res{"classification"};
  std::mt19937_64 rng(seed);
  for (int q : {1, 2, 3, 4, 6})
    for (const PiRat& lambda : lambdas_for(q))
      for (const ModulusPoint& mod : moduli_for(q))
        for (long r = 1; r <= 4; ++r)
          for (const auto& d : standard_list(r, lambda, mod)) {
            const LatticeSpec base = to_spec(d);
            {
              ReductionChain ch = reduce(base);
              ++res.identities;
              if (!(ch.standard == d)) res.fail("standard " + str(d) + " reduces to " + str(ch.standard));
            }
            for (int t = 0; t < trials; ++t) {
              LatticeSpec s = base;
              for (int i = 0; i < moves; ++i) s = random_move(s, rng, true);
              Rat h = rat(std::uniform_int_distribution<long>(1, 5)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
              s = denormalise(s, h);
              try {
                ReductionChain ch = reduce(s);
                ++res.identities;
                if (!(ch.standard == d)) res.fail(str(d) + " perturbed reduces to " + str(ch.standard));
              } catch (const std::exception& e) {
                res.fail(str(d) + " perturbed: " + e.what());
              }
            }
          }
  // type by rotation data against type by abelianization
  for (int q : {1, 2, 3, 4, 6})
    for (long r = 1; r <= 6; ++r)
      for (long k = -r; k <= r; ++k)
        for (long l = -r; l <= r; ++l) {
          LatticeSpec s = spec_from_kl(q, r, k, l, lambdas_for(q)[0]);
          ++res.identities;
          try {
            TypeTag a = classify_type(s), b = abelianization_type(s);
            if (!(a == b)) res.fail("q=" + std::to_string(q) + " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                                    " l=" + std::to_string(l) + ": " + str(a) + " vs " + str(b));
          } catch (const std::exception& e) {
            res.fail("q=" + std::to_string(q) + " r=" + std::to_string(r) + ": " + e.what());
          }
        }
  return res;
}

SuiteResult verify_shift_invariance(std::uint64_t seed, int cases_per_type) {
  SuiteResult res{"shift-invariance"};
  std::mt19937_64 rng(seed);
  std::map<TypeKind, std::vector<StandardDescriptor>> by_type;
  for (int q : {1, 2, 3, 4, 6})
    for (const PiRat& lambda : lambdas_for(q))
      for (const ModulusPoint& mod : moduli_for(q))
        for (long r = 1; r <= 4; ++r)
          for (const auto& d : standard_list(r, lambda, mod)) by_type[d.type.kind].push_back(d);
  for (auto& [kind, ds] : by_type) {
    (void)kind;
    for (int c = 0; c < cases_per_type; ++c) {
      const auto& d = ds[rng() % ds.size()];
      LatticeSpec s = apply_shift(to_spec(d), random_rat(rng, 5, 9));
      const Rat before = invariants(s).s_L;
      LatticeSpec t = random_move(s, rng, false);
      t = random_move(t, rng, false);
      const Rat after = invariants(t).s_L;
      ++res.identities;
      if (before != after) res.fail(str(d) + ": s_L " + str(before) + " -> " + str(after));
    }
  }
  return res;
}

// ---- ideal counts, accumulation ---------------------------------------------------------------

SuiteResult verify_ideal_counts(long amax, long density_bound) {
  SuiteResult res{"ideal-counts"};
  StandardDescriptor d = standard_list(1, pi_times(1, 2), ModulusPoint::i()).front();
  auto counts = [&](long bound) {
    std::map<long, long> c;
    SpectrumWindow w = h0_decomposition(d, WindowBounds{0, 0, Rat(bound)});
    for (const auto& e : w.entries)
      if (auto s = std::get_if<RepS>(&e.rep)) {
        if (s->tau != 0) res.fail("kappa = 0 produced tau != 0");
        c[to_long(s->a2.exact->a)] += e.mult;
      }
    return c;
  };
  auto small = counts(amax);
  for (long a = 1; a <= amax; ++a) {
    ++res.identities;
    long got = small.count(a) ? small[a] : 0, want = gaussian_ideal_count(a);
    if (got != want) res.fail("a=" + std::to_string(a) + ": " + std::to_string(got) + " vs " + std::to_string(want));
  }
  long total = 0;
  for (auto& [a, m] : counts(density_bound)) total += m;
  double density = double(total) / double(density_bound);
  res.residual(std::fabs(density - std::numbers::pi / 4));
  ++res.identities;
  if (density < 0.76 || density > 0.81) res.fail("density " + std::to_string(density) + " outside [0.76, 0.81]");
  return res;
}

SuiteResult verify_accumulation(long count) {
  SuiteResult res{"accumulation"};
  const long r = 1, kappa = 2;
  const double half = 4 * std::numbers::pi * r / kappa;
  AccumulationResult a = accumulation_demo((1 + std::sqrt(5.0)) / 2, count, r, kappa);
  ++res.identities;
  if (a.degenerate || static_cast<long>(a.values.size()) < count) res.fail("fewer distinct values than requested");
  std::vector<double> v = a.values;
  std::sort(v.begin(), v.end());
  double min_gap = 1e300;
  for (size_t i = 0; i < v.size(); ++i) {
    ++res.identities;
    if (std::fabs(v[i]) > half) res.fail("value outside the interval");
    if (i && v[i] == v[i - 1]) res.fail("duplicate value");
    if (i) min_gap = std::min(min_gap, v[i] - v[i - 1]);
  }
  res.residual(min_gap / (2 * half));
  ++res.identities;
  if (!(min_gap < 1e-3 * 2 * half)) res.fail("gaps do not shrink below 1e-3 of the interval");
  AccumulationResult deg = accumulation_demo(0.75, count, r, kappa);
  ++res.identities;
  if (!deg.degenerate) res.fail("rational u not reported as degenerate");
  return res;
}

std::vector<SuiteResult> run_suite(const std::string& name) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "gauss") out.push_back(verify_gauss());
  if (all || name == "multiplicity") {
    out.push_back(verify_multiplicity());
    out.push_back(verify_dimension());
    out.push_back(verify_traces());
    out.push_back(verify_ideal_counts());
  }
  if (all || name == "casimir") {
    out.push_back(verify_casimir());
    out.push_back(verify_straight_spectrum());
    out.push_back(verify_straight_wave());
    out.push_back(verify_accumulation());
  }
  if (all || name == "classification") {
    out.push_back(verify_classification());
    out.push_back(verify_shift_invariance());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace osc
