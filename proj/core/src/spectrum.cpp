#include "osc/spectrum.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>

namespace osc {

// ---- rep ordering -----------------------------------------------------------

namespace {

int cmp_real(const Real& x, const Real& y) {
  if (key_less(x, y)) return -1;
  if (key_less(y, x)) return 1;
  return 0;
}
int cmp_quad(const QuadRat& x, const QuadRat& y) { return (x - y).sign(); }
int cmp_rat(const Rat& x, const Rat& y) { return cmp(x, y) < 0 ? -1 : (cmp(x, y) > 0 ? 1 : 0); }

int cmp_rep(const IrrRep& x, const IrrRep& y) {
  if (x.index() != y.index()) return x.index() < y.index() ? -1 : 1;
  if (auto c = std::get_if<RepC>(&x)) return cmp_quad(c->t, std::get<RepC>(y).t);
  if (auto s = std::get_if<RepS>(&x)) {
    const auto& o = std::get<RepS>(y);
    if (int c = cmp_real(s->a2, o.a2)) return c;
    return cmp_rat(s->tau, o.tau);
  }
  const auto& f = std::get<RepF>(x);
  const auto& o = std::get<RepF>(y);
  if (int c = cmp_quad(f.c, o.c)) return c;
  return cmp_quad(f.t, o.t);
}

Real scale_real(const Real& x, const QuadRat& c) {
  Real r;
  if (x.exact) r.exact = c * *x.exact;
  r.approx = c.value() * x.approx;
  return r;
}

}  // namespace

bool rep_equal(const IrrRep& x, const IrrRep& y) { return cmp_rep(x, y) == 0; }
bool rep_less(const IrrRep& x, const IrrRep& y) { return cmp_rep(x, y) < 0; }

void aggregate(std::vector<SpectrumEntry>& e) {
  std::stable_sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return rep_less(a.rep, b.rep); });
  std::vector<SpectrumEntry> out;
  for (auto& x : e) {
    if (!out.empty() && rep_equal(out.back().rep, x.rep))
      out.back().mult += x.mult;
    else
      out.push_back(x);
  }
  std::erase_if(out, [](const SpectrumEntry& x) { return x.mult <= 0; });
  e = std::move(out);
}

// ---- H0 ---------------------------------------------------------------------

Real a_squared(long l, long k, const ModulusPoint& m) {
  if (l == 0 && k == 0) throw std::invalid_argument("a(l, k) needs (l, k) != (0, 0)");
  if (m.is_exact()) {
    QuadRat kk(k), d = QuadRat(l) - m.mu * kk;
    return Real(m.nu * kk * kk + d * d / m.nu);
  }
  double d = l - m.fmu * k;
  return Real::floating(m.fnu * k * k + d * d / m.fnu);
}

std::pair<long, long> orbit_representative(int q, long l, long k) {
  Mat2i s = rotation_matrix(q);
  std::pair<long, long> best{l, k}, cur{l, k};
  for (int i = 1; i < q; ++i) {
    cur = {s[0][0] * cur.first + s[0][1] * cur.second, s[1][0] * cur.first + s[1][1] * cur.second};
    best = std::min(best, cur);
  }
  return best;
}

namespace {

// all (l, k) != 0 with a^2 <= amax
template <class F>
void for_each_lattice_point(const ModulusPoint& m, const Rat& amax, F&& f) {
  const double A = amax.get_d(), mu = m.mu_d(), nu = m.nu_d();
  const long kb = static_cast<long>(std::floor(std::sqrt(A / nu))) + 1;
  for (long k = -kb; k <= kb; ++k) {
    const double c = mu * k, w = std::sqrt(A * nu) + 1;
    for (long l = static_cast<long>(std::floor(c - w)); l <= static_cast<long>(std::ceil(c + w)); ++l) {
      if (l == 0 && k == 0) continue;
      Real a2 = a_squared(l, k, m);
      bool inside = a2.exact ? *a2.exact <= QuadRat(amax) : a2.approx <= A * (1 + 1e-12);
      if (inside) f(l, k, a2);
    }
  }
}

SpectrumWindow empty_window(const StandardDescriptor& d, const WindowBounds& b) {
  SpectrumWindow w;
  w.lambda = d.lambda;
  w.bounds = b;
  w.standard = d;
  return w;
}

}  // namespace

SpectrumWindow h0_decomposition(const StandardDescriptor& d, const WindowBounds& b) {
  SpectrumWindow w = empty_window(d, b);
  const int q = d.type.q();
  for (long n = -b.nmax; n <= b.nmax; ++n) w.entries.push_back({RepC{QuadRat(n)}, 1});
  const ModulusPoint mod = q == 4 ? ModulusPoint::i() : (q == 3 || q == 6 ? ModulusPoint::omega() : d.modulus);
  if (q >= 2) {
    const long kp = kappa_prime(d.lambda);
    for_each_lattice_point(mod, b.amax, [&](long l, long k, const Real& a2) {
      if (orbit_representative(q, l, k) != std::pair{l, k}) return;
      for (long K = 0; K < kp; ++K) w.entries.push_back({RepS{a2, rat(K, kp)}, 1});
    });
  } else {
    if (!d.iota) throw std::invalid_argument("L1 descriptor needs iota");
    const auto [i1, i2] = *d.iota;
    const long kappa = kappa_of(d.lambda);
    for_each_lattice_point(mod, b.amax, [&](long l, long k, const Real& a2) {
      for (long j = 0; j < kappa; ++j) {
        Rat K = Rat(j) - rat(i1 * k - i2 * l, d.r);
        w.entries.push_back({RepS{a2, mod_rat(K / kappa, Rat(1))}, 1});
      }
    });
    w.notes.push_back("S-rep count per (l,k) uses j = 0..kappa-1 (kappa terms)");
  }
  aggregate(w.entries);
  return w;
}

// ---- H1 ---------------------------------------------------------------------

long h1_multiplicity(const StandardDescriptor& d, long m, long n) {
  if (m == 0) throw std::invalid_argument("H1 multiplicity needs m != 0");
  const long r = d.r, am = std::labs(m);
  const int q = d.type.q();
  if (q == 1) return d.type.r0 * am;
  const int q0 = q == 3 ? 3 : 2;
  const int sl = d.lambda.sign(), sm = m > 0 ? 1 : -1;
  auto base = [&](long shift) {
    long x = r * am - rem(sl * sm * n, q) - shift;
    return static_cast<long>(std::floor(double(x) / q)) + 1;
  };
  if (!d.type.plus()) {
    long rbar = (q % 3 == 0) ? sl * r * m : 0;
    return rem(n - rbar, q0) == 0 ? base(0) : base(2);
  }
  if (r % q0 != 0) throw std::invalid_argument("plus type needs q0 | r");
  if (m % q0 != 0 && r % q == 0) return r * am / q;
  return rem(m + n, q0) == 0 ? base(0) : base(2);
}

Rat h1_label(const StandardDescriptor& d, long m, long n) {
  (void)m;
  const int q = d.type.q();
  if (q == 1) return rat(d.type.r0 * n, d.r);
  return rat(n, q);
}

SpectrumWindow h1_decomposition(const StandardDescriptor& d, const WindowBounds& b) {
  SpectrumWindow w = empty_window(d, b);
  for (long m = -b.mmax; m <= b.mmax; ++m) {
    if (m == 0) continue;
    for (long n = -b.nmax; n <= b.nmax; ++n) {
      long mult = h1_multiplicity(d, m, n);
      if (mult > 0) w.entries.push_back({RepF{QuadRat(d.r * m), QuadRat(h1_label(d, m, n))}, mult});
    }
  }
  aggregate(w.entries);
  return w;
}

SpectrumWindow decomposition(const StandardDescriptor& d, const WindowBounds& b) {
  SpectrumWindow w = h0_decomposition(d, b);
  SpectrumWindow h1 = h1_decomposition(d, b);
  w.entries.insert(w.entries.end(), h1.entries.begin(), h1.entries.end());
  aggregate(w.entries);
  return w;
}

// ---- Casimir ------------------------------------------------------------------

std::string str(CasimirConvention c) {
  return c == CasimirConvention::OracleDerived ? "oracle" : "paper";
}

double PiPoly::value() const {
  using std::numbers::pi;
  return pi1.approx * pi + pi2.approx * pi * pi + 0.0;  // no negative zero
}

std::string str(const PiPoly& p) {
  bool z1 = p.pi1.exact ? *p.pi1.exact == QuadRat(0) : p.pi1.approx == 0;
  bool z2 = p.pi2.exact ? *p.pi2.exact == QuadRat(0) : p.pi2.approx == 0;
  if (z1 && z2) return "0";
  std::string s;
  if (!z1) s = "(" + str(p.pi1) + ")·π";
  if (!z2) s += (s.empty() ? "" : " + ") + ("(" + str(p.pi2) + ")·π²");
  return s;
}

PiPoly casimir_value(const IrrRep& rep, const PiRat& lambda, CasimirConvention conv) {
  PiPoly p;
  if (std::holds_alternative<RepC>(rep)) return p;
  if (auto s = std::get_if<RepS>(&rep)) {
    Real v = s->a2.scaled(Rat(-4));
    (conv == CasimirConvention::OracleDerived ? p.pi2 : p.pi1) = v;
    return p;
  }
  const auto& f = std::get<RepF>(rep);
  // -2 pi c (4 pi d +- 1) with 4 pi d = 4 t / rho
  QuadRat sign(f.c.sign());
  p.pi1 = Real(QuadRat(-2) * f.c * (QuadRat(4) * f.t / QuadRat(lambda.rho) + sign));
  return p;
}

std::vector<WaveEigenvalue> wave_spectrum(const SpectrumWindow& w, CasimirConvention conv) {
  std::vector<WaveEigenvalue> out;
  for (const auto& e : w.entries) {
    PiPoly c = casimir_value(e.rep, w.lambda, conv);
    out.push_back({PiPoly{c.pi1.scaled(Rat(-1)), c.pi2.scaled(Rat(-1))}, e.mult});
  }
  auto less = [](const WaveEigenvalue& a, const WaveEigenvalue& b) {
    double va = a.value.value(), vb = b.value.value();
    if (va != vb) return va < vb;
    if (int c = cmp_real(a.value.pi1, b.value.pi1)) return c < 0;
    return cmp_real(a.value.pi2, b.value.pi2) < 0;
  };
  std::sort(out.begin(), out.end(), less);
  std::vector<WaveEigenvalue> merged;
  for (auto& x : out) {
    if (!merged.empty() && cmp_real(merged.back().value.pi1, x.value.pi1) == 0 &&
        cmp_real(merged.back().value.pi2, x.value.pi2) == 0)
      merged.back().mult += x.mult;
    else
      merged.push_back(x);
  }
  return merged;
}

// ---- pullbacks ----------------------------------------------------------------

Automorphism inverse(const Automorphism& f) {
  if (auto s = std::get_if<Shift>(&f)) return Shift{-s->c};
  if (auto c = std::get_if<InnerConj>(&f)) return InnerConj{-c->er, -c->ei};
  const auto& m = std::get<Linear>(f).s;
  QuadRat det = m.det();
  if (det == QuadRat(0)) throw IllFormedAutomorphism("singular linear map");
  QuadRat id = det.inverse();
  return Linear{Mat2Q{m.a22 * id, -m.a12 * id, -m.a21 * id, m.a11 * id}};
}

SpectrumWindow pullback_spectrum(const SpectrumWindow& w, const Automorphism& f) {
  SpectrumWindow out = w;
  if (auto s = std::get_if<Shift>(&f)) {
    // F_u with u = c / pi: d + u c_rep = (t + c rho c_rep) / lambda
    QuadRat k(s->c * w.lambda.rho);
    for (auto& e : out.entries)
      if (auto fr = std::get_if<RepF>(&e.rep)) fr->t = fr->t + k * fr->c;
    out.chain.push_back("shift(u=(" + str(s->c) + ")/pi)");
  } else if (std::holds_alternative<InnerConj>(f)) {
    out.chain.push_back("inner");
  } else {
    const Mat2Q& m = std::get<Linear>(f).s;
    const int mu = linear_orientation(m);
    const QuadRat det = m.det(), adet = det.sign() < 0 ? -det : det;
    for (auto& e : out.entries) {
      if (auto c = std::get_if<RepC>(&e.rep)) {
        c->t = QuadRat(mu) * c->t;
      } else if (auto s = std::get_if<RepS>(&e.rep)) {
        s->a2 = scale_real(s->a2, adet);
        s->tau = mod_rat(Rat(mu) * s->tau, Rat(1));
      } else {
        auto& fr = std::get<RepF>(e.rep);
        fr.c = det * fr.c;
        fr.t = QuadRat(mu) * fr.t;
      }
    }
    out.chain.push_back("linear(det=" + str(det) + ")");
  }
  aggregate(out.entries);
  return out;
}

SpectrumWindow lattice_spectrum(const LatticeSpec& s, const WindowBounds& b) {
  ReductionChain ch = reduce(s);
  SpectrumWindow w = decomposition(ch.standard, b);
  if (ch.shift_c != 0) w = pullback_spectrum(w, Shift{ch.shift_c});
  if (ch.scale != 1) w = pullback_spectrum(w, Linear{Mat2Q::scalar(QuadRat(Rat(1) / ch.scale))});
  return w;
}

// ---- accumulation ---------------------------------------------------------------

AccumulationResult accumulation_demo(double u, long count, long r, long kappa) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  if (kappa < 1 || r < 1) throw std::invalid_argument("r and kappa must be positive");
  using std::numbers::pi;
  AccumulationResult res;
  const long double scale = 4.0L * pi * r / kappa, ul = u;
  // convergents p_k / q_k of u
  long double x = u;
  Int p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(x)), q1 = 1;
  auto emit = [&](const Int& p, const Int& q) {
    if (q <= 0) return;
    long double m = q.get_d(), n = p.get_d();
    long double v = scale * (n - ul * m) * m;
    if (std::fabs(v) > scale) return;
    for (double old : res.values)
      if (old == static_cast<double>(v)) return;
    res.values.push_back(static_cast<double>(v));
    res.convergents.emplace_back(p.get_si(), q.get_si());
  };
  emit(p1, q1);
  long double frac = x - std::floor(x);
  for (int it = 0; it < 64 && static_cast<long>(res.values.size()) < count; ++it) {
    if (frac < 1e-12L) {
      res.degenerate = true;
      break;
    }
    x = 1.0L / frac;
    long a = static_cast<long>(std::floor(x));
    frac = x - a;
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (q1 > Int(1) << 40) break;  // beyond double resolution of u
    emit(p1, q1);
  }
  if (!res.degenerate && static_cast<long>(res.values.size()) < count)
    throw std::runtime_error("insufficient convergents within the iteration cap");
  return res;
}

// ---- reports --------------------------------------------------------------------

namespace {

std::string frac_str(const Rat& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

std::string d_str(const QuadRat& t) {
  if (t == QuadRat(0)) return "0";
  if (!t.is_rational()) return "(" + str(t) + ")/lambda";
  const Rat& q = t.a;
  if (q.get_den() == 1) return q.get_num().get_str() + "/lambda";
  return q.get_num().get_str() + "/(" + q.get_den().get_str() + "·lambda)";
}

}  // namespace

std::string format_rep(const IrrRep& r) {
  if (auto c = std::get_if<RepC>(&r)) return "C(d=" + d_str(c->t) + ")";
  if (auto s = std::get_if<RepS>(&r)) return "S(a2=" + str(s->a2) + ", tau=" + frac_str(s->tau) + ")";
  const auto& f = std::get<RepF>(r);
  return "F(c=" + str(f.c) + ", d=" + d_str(f.t) + ")";
}

std::string format_entry(const SpectrumEntry& e) { return format_rep(e.rep) + " x" + std::to_string(e.mult); }

static std::string header(const SpectrumWindow& w, CasimirConvention conv) {
  std::ostringstream os;
  os << "# lattice " << str(w.standard) << "\n";
  os << "# window nmax=" << w.bounds.nmax << " mmax=" << w.bounds.mmax << " amax=" << str(w.bounds.amax)
     << " lambda=" << str(w.lambda) << " convention=" << str(conv) << "\n";
  for (const auto& c : w.chain) os << "# pullback " << c << "\n";
  for (const auto& n : w.notes) os << "# note " << n << "\n";
  return os.str();
}

std::string render_text(const SpectrumWindow& w, CasimirConvention conv) {
  std::string s = header(w, conv);
  for (const auto& e : w.entries) s += format_entry(e) + "\n";
  return s;
}

std::string render_records(const SpectrumWindow& w, CasimirConvention conv) {
  using nlohmann::json;
  std::string out;
  json h{{"record", "header"},
         {"lattice", str(w.standard)},
         {"nmax", w.bounds.nmax},
         {"mmax", w.bounds.mmax},
         {"amax", str(w.bounds.amax)},
         {"lambda", str(w.lambda)},
         {"convention", str(conv)},
         {"pullbacks", w.chain},
         {"notes", w.notes}};
  out += h.dump() + "\n";
  for (const auto& e : w.entries) {
    json j{{"record", "rep"}, {"mult", e.mult}};
    if (auto c = std::get_if<RepC>(&e.rep)) {
      j["kind"] = "C";
      j["d"] = d_str(c->t);
    } else if (auto s = std::get_if<RepS>(&e.rep)) {
      j["kind"] = "S";
      j["a2"] = str(s->a2);
      j["a2_float"] = s->a2.approx;
      j["tau"] = frac_str(s->tau);
    } else {
      const auto& f = std::get<RepF>(e.rep);
      j["kind"] = "F";
      j["c"] = str(f.c);
      j["d"] = d_str(f.t);
    }
    PiPoly cv = casimir_value(e.rep, w.lambda, conv);
    j["casimir"] = str(cv);
    j["casimir_float"] = cv.value();
    out += j.dump() + "\n";
  }
  return out;
}

std::string render_wave_text(const SpectrumWindow& w, CasimirConvention conv) {
  std::string s = header(w, conv);
  char buf[48];
  for (const auto& e : wave_spectrum(w, conv)) {
    std::snprintf(buf, sizeof buf, "%.12g", e.value.value());
    s += str(e.value) + " = " + buf + " x" + std::to_string(e.mult) + "\n";
  }
  return s;
}

std::string render_wave_records(const SpectrumWindow& w, CasimirConvention conv) {
  using nlohmann::json;
  std::string out = json{{"record", "header"},
                         {"lattice", str(w.standard)},
                         {"nmax", w.bounds.nmax},
                         {"mmax", w.bounds.mmax},
                         {"amax", str(w.bounds.amax)},
                         {"lambda", str(w.lambda)},
                         {"convention", str(conv)},
                         {"pullbacks", w.chain},
                         {"notes", w.notes}}
                        .dump() +
                    "\n";
  for (const auto& e : wave_spectrum(w, conv))
    out += json{{"record", "eigenvalue"}, {"value", str(e.value)}, {"value_float", e.value.value()}, {"mult", e.mult}}
               .dump() +
           "\n";
  return out;
}

}  // namespace osc
