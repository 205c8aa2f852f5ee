#include "osc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "osc/oracle.hpp"

namespace osc {

Mat2i rotation_matrix(int q) {
  switch (q) {
    case 1: return {{{1, 0}, {0, 1}}};
    case 2: return {{{-1, 0}, {0, -1}}};
    case 3: return {{{0, -1}, {1, -1}}};
    case 4: return {{{0, -1}, {1, 0}}};
    case 6: return {{{1, -1}, {1, 0}}};
    default: throw std::invalid_argument("no rotation matrix of order " + std::to_string(q));
  }
}

Mat2i mat_mul(const Mat2i& a, const Mat2i& b) {
  Mat2i c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Mat2i mat_inv(const Mat2i& a) {
  long d = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (d != 1 && d != -1) throw std::invalid_argument("matrix not unimodular");
  return {{{a[1][1] * d, -a[0][1] * d}, {-a[1][0] * d, a[0][0] * d}}};
}

Mat2i mat_pow(const Mat2i& a, long n) {
  Mat2i base = n < 0 ? mat_inv(a) : a;
  Mat2i acc{{{1, 0}, {0, 1}}};
  for (long k = std::labs(n); k > 0; --k) acc = mat_mul(acc, base);
  return acc;
}

Vec2q mat_apply(const Mat2i& a, const Vec2q& v) {
  return {Rat(a[0][0]) * v[0] + Rat(a[0][1]) * v[1], Rat(a[1][0]) * v[0] + Rat(a[1][1]) * v[1]};
}

static Vec2q add(const Vec2q& a, const Vec2q& b) { return {a[0] + b[0], a[1] + b[1]}; }
static Vec2q sub(const Vec2q& a, const Vec2q& b) { return {a[0] - b[0], a[1] - b[1]}; }
static Vec2q scale(const Rat& c, const Vec2q& a) { return {c * a[0], c * a[1]}; }

FrameElement Frame::mul(const FrameElement& a, const FrameElement& b) const {
  Vec2q rb = mat_apply(mat_pow(rotation_matrix(q), rem(a.n, q)), b.p);
  return {add(a.p, rb), a.z + b.z + det2(a.p, rb) / 2, a.n + b.n};
}

FrameElement Frame::inv(const FrameElement& a) const {
  Vec2q p = mat_apply(mat_pow(rotation_matrix(q), rem(-a.n, q)), a.p);
  return {{-p[0], -p[1]}, -a.z, -a.n};
}

FrameElement Frame::pow(const FrameElement& a, long k) const {
  FrameElement base = k < 0 ? inv(a) : a;
  FrameElement acc;
  for (long j = std::labs(k); j > 0; --j) acc = mul(acc, base);
  return acc;
}

int order_of_lambda(const PiRat& lambda) {
  const Rat& rho = lambda.rho;
  int q = 0;
  for (int c : {1, 2, 3, 4, 6}) {
    if (PiRat(Rat(c) * rho).in_2piZ()) {
      q = c;
      break;
    }
  }
  if (q == 0) throw InadmissibleLattice("lambda = " + str(lambda) + " has order outside {1,2,3,4,6}");
  Rat base = mod_rat(rho, Rat(2));
  bool ok = false;
  switch (q) {
    case 1: case 2: ok = rho > 0; break;
    case 3: ok = base == rat(2, 3); break;
    case 4: ok = base == rat(1, 2); break;
    case 6: ok = base == rat(1, 3); break;
  }
  if (!ok) throw InadmissibleLattice("lambda = " + str(lambda) + " is not in the admissible classes");
  return q;
}

std::array<FrameElement, 4> LatticeSpec::generators() const {
  if (!normalised()) throw std::invalid_argument("generators need a normalised spec");
  return {FrameElement{{Rat(1), Rat(0)}, z_alpha, 0}, FrameElement{{Rat(0), Rat(1)}, z_beta, 0},
          FrameElement{{Rat(0), Rat(0)}, rat(1, r), 0}, FrameElement{{x_delta, y_delta}, z_delta, 1}};
}

LatticeSpec LatticeSpec::from_generators(const LatticeSpec& base, const std::array<FrameElement, 4>& g) {
  const Vec2q e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
  if (g[0].p != e1 || g[0].n != 0 || g[1].p != e2 || g[1].n != 0 || g[2].p != Vec2q{Rat(0), Rat(0)} ||
      g[2].z != rat(1, base.r) || g[2].n != 0 || g[3].n != 1)
    throw InternalError("generators are not in basis form");
  LatticeSpec s = base;
  s.z_alpha = g[0].z;
  s.z_beta = g[1].z;
  s.x_delta = g[3].p[0];
  s.y_delta = g[3].p[1];
  s.z_delta = g[3].z;
  s.scale = 1;
  return s;
}

int TypeTag::q() const {
  switch (kind) {
    case TypeKind::T1: return 1;
    case TypeKind::T2: case TypeKind::T2plus: return 2;
    case TypeKind::T3: case TypeKind::T3plus: return 3;
    case TypeKind::T4: case TypeKind::T4plus: return 4;
    case TypeKind::T6: return 6;
  }
  return 0;
}

std::string str(const TypeTag& t) {
  switch (t.kind) {
    case TypeKind::T1: return "L1(r=" + std::to_string(t.r) + ", r0=" + std::to_string(t.r0) + ")";
    case TypeKind::T2: return "L2(r=" + std::to_string(t.r) + ")";
    case TypeKind::T2plus: return "L2+(r=" + std::to_string(t.r) + ")";
    case TypeKind::T3: return "L3(r=" + std::to_string(t.r) + ")";
    case TypeKind::T3plus: return "L3+(r=" + std::to_string(t.r) + ")";
    case TypeKind::T4: return "L4(r=" + std::to_string(t.r) + ")";
    case TypeKind::T4plus: return "L4+(r=" + std::to_string(t.r) + ")";
    case TypeKind::T6: return "L6(r=" + std::to_string(t.r) + ")";
  }
  return "?";
}

TypeTag make_type(TypeKind k, long r, long r0) {
  if (r < 1) throw InadmissibleLattice("r must be positive");
  if ((k == TypeKind::T2plus || k == TypeKind::T4plus) && r % 2 != 0)
    throw InadmissibleLattice("plus types of order 2 and 4 need even r");
  if (k == TypeKind::T3plus && r % 3 != 0) throw InadmissibleLattice("L3+ needs 3 | r");
  if (k == TypeKind::T1 && (r0 < 1 || r % r0 != 0)) throw InadmissibleLattice("L1 needs r0 | r");
  return {k, r, k == TypeKind::T1 ? r0 : 1};
}

std::pair<long, long> kl_from_vw(int q, long r, const Rat& v, const Rat& w) {
  Mat2i s = rotation_matrix(q), si = mat_inv(s);
  Vec2q base{Rat(r * s[0][1] * s[1][1]) / 2, Rat(-r * s[0][0] * s[1][0]) / 2};
  Vec2q mlk = sub(base, mat_apply(si, {v, w}));
  if (!is_int(mlk[0]) || !is_int(mlk[1]))
    throw InadmissibleLattice("generator data does not define a lattice: (k,l) = (" + str(mlk[1]) + ", " +
                              str(-mlk[0]) + ") not integral");
  return {to_long(mlk[1]), to_long(-mlk[0])};
}

std::pair<long, long> kl_by_conjugation(const LatticeSpec& s) {
  Frame f{s.q()};
  auto g = s.generators();
  Mat2i sq = rotation_matrix(f.q);
  auto coefficient = [&](const FrameElement& x, long e1, long e2) -> long {
    FrameElement c = f.conj(g[3], x);
    FrameElement word = f.mul(f.pow(g[0], e1), f.pow(g[1], e2));
    if (c.p != word.p || c.n != 0) throw InternalError("conjugation does not act by S_q");
    Rat k = (c.z - word.z) * s.r;
    if (!is_int(k)) throw InadmissibleLattice("generator data does not define a lattice (non-integral gamma power)");
    return to_long(k);
  };
  return {coefficient(g[0], sq[0][0], sq[1][0]), coefficient(g[1], sq[0][1], sq[1][1])};
}

TypeTag type_from_kl(int q, long r, long k, long l) {
  switch (q) {
    case 1: return make_type(TypeKind::T1, r, std::gcd(std::gcd(r, std::labs(k)), std::labs(l)));
    case 2: return make_type((r % 2 != 0 || (rem(k, 2) == 0 && rem(l, 2) == 0)) ? TypeKind::T2 : TypeKind::T2plus, r);
    case 3: return make_type((r % 3 != 0 || rem(k - l, 3) == 0) ? TypeKind::T3 : TypeKind::T3plus, r);
    case 4: return make_type((r % 2 != 0 || rem(k - l, 2) == 0) ? TypeKind::T4 : TypeKind::T4plus, r);
    case 6: return make_type(TypeKind::T6, r);
  }
  throw std::invalid_argument("bad order");
}

static Rat zeta_of(const LatticeSpec& s, int i) { return i == 0 ? -s.z_beta : s.z_alpha; }

static Vec2q vw_of(const LatticeSpec& s, int q) {
  Mat2i sm = rotation_matrix(q);
  Mat2i smi = sm;
  smi[0][0] -= 1;
  smi[1][1] -= 1;
  Vec2q zeta{zeta_of(s, 0), zeta_of(s, 1)};
  return sub(scale(Rat(s.r), {s.x_delta, s.y_delta}), scale(Rat(s.r), mat_apply(smi, zeta)));
}

void validate(const LatticeSpec& s) {
  if (s.r < 1) throw InadmissibleLattice("r must be a positive integer");
  if (s.scale <= 0) throw InadmissibleLattice("scale must be positive");
  int q = order_of_lambda(s.lambda);
  if (q == 4 && !s.modulus.is_i()) throw InadmissibleLattice("order 4 needs modulus I");
  if ((q == 3 || q == 6) && !s.modulus.is_omega()) throw InadmissibleLattice("order 3 and 6 need modulus omega");
  LatticeSpec n = normalise(s);
  Vec2q vw = vw_of(n, q);
  kl_from_vw(q, n.r, vw[0], vw[1]);
}

TypeTag classify_type(const LatticeSpec& s) {
  LatticeSpec n = normalise(s);
  int q = n.q();
  Vec2q vw = vw_of(n, q);
  auto [k, l] = kl_from_vw(q, n.r, vw[0], vw[1]);
  return type_from_kl(q, n.r, k, l);
}

std::vector<Int> abelianization_factors(int q, long r, long k, long l, long* free_rank) {
  Mat2i s = rotation_matrix(q);
  IntMatrix m = IntMatrix::from_rows({{0, 0, r, 0}, {s[0][0] - 1, s[1][0], k, 0}, {s[0][1], s[1][1] - 1, l, 0}});
  SmithResult res = smith_normal_form(m);
  if (free_rank) *free_rank = res.free_rank;
  return res.torsion();
}

static std::vector<Int> torsion_of(const std::vector<long>& orders) {
  IntMatrix d(orders.size(), orders.size());
  for (size_t i = 0; i < orders.size(); ++i) d.at(i, i) = orders[i];
  return smith_normal_form(d).torsion();
}

static std::vector<long> expected_orders(TypeKind k, long r) {
  switch (k) {
    case TypeKind::T2: return {2, 2, r};
    case TypeKind::T2plus: return {2, 2 * r};
    case TypeKind::T3: return {3, r};
    case TypeKind::T3plus: return {3 * r};
    case TypeKind::T4: return {2, r};
    case TypeKind::T4plus: return {2 * r};
    case TypeKind::T6: return {r};
    case TypeKind::T1: break;
  }
  return {};
}

TypeTag abelianization_type(const LatticeSpec& s) {
  LatticeSpec n = normalise(s);
  int q = n.q();
  auto [k, l] = kl_by_conjugation(n);
  long free_rank = 0;
  std::vector<Int> tors = abelianization_factors(q, n.r, k, l, &free_rank);
  if (q == 1) {
    if (free_rank != 3 || tors.size() > 1) throw InternalError("abelianization does not match L1");
    long r0 = tors.empty() ? 1 : tors[0].get_si();
    return make_type(TypeKind::T1, n.r, r0);
  }
  if (free_rank != 1) throw InternalError("abelianization has free rank != 1");
  std::vector<TypeKind> cands;
  switch (q) {
    case 2: cands = {TypeKind::T2, TypeKind::T2plus}; break;
    case 3: cands = {TypeKind::T3, TypeKind::T3plus}; break;
    case 4: cands = {TypeKind::T4, TypeKind::T4plus}; break;
    default: cands = {TypeKind::T6};
  }
  for (TypeKind c : cands) {
    if ((c == TypeKind::T2plus || c == TypeKind::T4plus) && n.r % 2 != 0) continue;
    if (c == TypeKind::T3plus && n.r % 3 != 0) continue;
    if (torsion_of(expected_orders(c, n.r)) == tors) return make_type(c, n.r);
  }
  throw InternalError("abelianization matches no discrete oscillator group");
}

Rat z0_closed_form(int q, long r, const Rat& v, const Rat& w, const Rat& a, const Rat& b, bool plus) {
  if (q == 2) return Rat(0);
  int q0 = (q % 2 == 0) ? 2 : 3;
  long rt = rem(r, q0);
  Vec2q vv = plus ? Vec2q{v, w}
                  : Vec2q{v - Rat(r * rt) * v + Rat(r * rt) * a, w - Rat(r * rt) * w + Rat(r * rt) * b};
  long c = q == 3 ? 1 : (q == 4 ? 2 : 6);
  return -Rat(c) / Rat(2 * q * r * r) * det2(vv, mat_apply(rotation_matrix(q), vv));
}

InvariantBundle invariants(const LatticeSpec& s) {
  if (!s.normalised()) throw std::invalid_argument("invariants need a normalised spec (scale = 1)");
  validate(s);
  InvariantBundle inv;
  const long r = s.r;
  inv.q = s.q();
  const int q = inv.q;
  Mat2i sq = rotation_matrix(q);
  Vec2q zeta{zeta_of(s, 0), zeta_of(s, 1)};
  Vec2q vw = vw_of(s, q);
  inv.v = vw[0];
  inv.w = vw[1];
  inv.a = 0;
  inv.b = 0;
  if (r % 2 != 0 && q == 3) inv.a = 1, inv.b = rat(1, 2);
  if (r % 2 != 0 && q == 6) inv.a = rat(1, 2);
  auto [k, l] = kl_from_vw(q, r, inv.v, inv.w);
  if (kl_by_conjugation(s) != std::make_pair(k, l)) throw InternalError("(k,l) from (v,w) disagrees with conjugation");
  inv.k = k;
  inv.l = l;
  inv.type = type_from_kl(q, r, k, l);
  Rat sl;
  if (q == 1) {
    inv.s0 = r / inv.type.r0;
    sl = s.z_delta - inv.v * inv.w / 2 - det2(vw, zeta) / r;
  } else {
    inv.q0 = (q % 2 == 0) ? 2 : 3;
    inv.rt = rem(r, inv.q0);
    bool plus = inv.type.plus();
    bool special = (r % 4 == 2) && q == 4;
    inv.s0 = plus ? (special ? 1 : inv.q0) : (special ? inv.q0 : 1);
    inv.z0 = z0_closed_form(q, r, inv.v, inv.w, inv.a, inv.b, plus);
    Rat solved = z0_solve(q, r, inv.v, inv.w, inv.a, inv.b, plus);
    if (solved != inv.z0)
      throw InternalError("z0 closed form " + str(inv.z0) + " disagrees with power solve " + str(solved));
    Mat2i spi = sq;
    spi[0][0] += 1;
    spi[1][1] += 1;
    sl = s.z_delta - det2(vw, mat_apply(spi, zeta)) / (2 * r) - det2(mat_apply(sq, zeta), zeta) / 2 - inv.z0;
    if (!plus) {
      Rat rt(inv.rt);
      sl -= (inv.v - inv.a) * (inv.w - inv.b) * rt * rt / 2 + rt / (2 * r) * det2(vw, {inv.a, inv.b});
    }
  }
  inv.s_L = mod_rat(sl, rat(1, inv.s0 * r));
  return inv;
}

LatticeSpec normalise(const LatticeSpec& s) {
  if (s.scale <= 0) throw InadmissibleLattice("scale must be positive");
  if (s.scale == 1) return s;
  LatticeSpec n = s;
  Rat h2 = s.scale * s.scale;
  n.z_alpha /= h2;
  n.z_beta /= h2;
  n.z_delta /= h2;
  n.scale = 1;
  return n;
}

LatticeSpec denormalise(const LatticeSpec& s, const Rat& h) {
  LatticeSpec n = normalise(s);
  Rat h2 = h * h;
  n.z_alpha *= h2;
  n.z_beta *= h2;
  n.z_delta *= h2;
  n.scale = h;
  return n;
}

LatticeSpec apply_shift(const LatticeSpec& s, const Rat& c) {
  LatticeSpec n = s;
  n.z_delta += c * s.lambda.rho;
  return n;
}

LatticeSpec unshift(const LatticeSpec& s, Rat* c_out) {
  InvariantBundle inv = invariants(s);
  Rat c = -inv.s_L / s.lambda.rho;
  if (c_out) *c_out = c;
  LatticeSpec out = apply_shift(s, c);
  if (invariants(out).s_L != 0) throw InternalError("unshift did not reach s_L = 0");
  return out;
}

LatticeSpec conjugate(const LatticeSpec& s, const Vec2q& eta) {
  LatticeSpec n = normalise(s);
  Frame f{n.q()};
  FrameElement e{eta, Rat(0), 0};
  auto g = n.generators();
  for (auto& x : g) x = f.conj(e, x);
  return LatticeSpec::from_generators(n, g);
}

std::string str(Move m) {
  switch (m) {
    case Move::DeltaAlpha: return "delta->alpha*delta";
    case Move::DeltaBeta: return "delta->beta*delta";
    case Move::DeltaGamma: return "delta->gamma*delta";
    case Move::AlphaGamma: return "alpha->alpha*gamma";
    case Move::BetaGamma: return "beta->beta*gamma";
    case Move::BetaAlphaBeta: return "beta->alpha*beta";
    case Move::Rotate: return "rotate(alpha,beta)";
  }
  return "?";
}

LatticeSpec change_basis(const LatticeSpec& s, const Mat2i& nmat) {
  LatticeSpec n = normalise(s);
  int q = n.q();
  Mat2i sq = rotation_matrix(q);
  if (nmat[0][0] * nmat[1][1] - nmat[0][1] * nmat[1][0] != 1) throw std::invalid_argument("basis change needs det 1");
  if (mat_mul(nmat, sq) != mat_mul(sq, nmat)) throw std::invalid_argument("basis change does not commute with S_q");
  Frame f{q};
  auto g = n.generators();
  FrameElement a2 = f.mul(f.pow(g[0], nmat[0][0]), f.pow(g[1], nmat[1][0]));
  FrameElement b2 = f.mul(f.pow(g[0], nmat[0][1]), f.pow(g[1], nmat[1][1]));
  std::array<FrameElement, 4> h{a2, b2, g[2], g[3]};
  Mat2i ni = mat_inv(nmat);
  for (auto& x : h) x.p = mat_apply(ni, x.p);
  LatticeSpec out = LatticeSpec::from_generators(n, h);
  out.modulus = mobius(ni, n.modulus);
  return out;
}

LatticeSpec rewrite(const LatticeSpec& s, Move m, bool inverse) {
  LatticeSpec n = normalise(s);
  int q = n.q();
  Frame f{q};
  auto g = n.generators();
  auto pick = [&](int i) { return inverse ? f.inv(g[i]) : g[i]; };
  switch (m) {
    case Move::DeltaAlpha: g[3] = f.mul(pick(0), g[3]); break;
    case Move::DeltaBeta: g[3] = f.mul(pick(1), g[3]); break;
    case Move::DeltaGamma: g[3] = f.mul(pick(2), g[3]); break;
    case Move::AlphaGamma: g[0] = f.mul(g[0], pick(2)); break;
    case Move::BetaGamma: g[1] = f.mul(g[1], pick(2)); break;
    case Move::BetaAlphaBeta: {
      if (q > 2) throw std::invalid_argument("beta->alpha*beta changes S_q for q > 2");
      return change_basis(n, inverse ? Mat2i{{{1, -1}, {0, 1}}} : Mat2i{{{1, 1}, {0, 1}}});
    }
    case Move::Rotate: {
      Mat2i r = (q == 3 || q == 6) ? rotation_matrix(6) : rotation_matrix(4);
      return change_basis(n, inverse ? mat_inv(r) : r);
    }
  }
  return LatticeSpec::from_generators(n, g);
}

// ---- modulus reduction ----------------------------------------------------

ModulusPoint mobius(const Mat2i& m, const ModulusPoint& p) {
  const long a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
  if (p.is_exact()) {
    QuadRat den_re = QuadRat(c) * p.mu + QuadRat(d), den_im = QuadRat(c) * p.nu;
    QuadRat n2 = den_re * den_re + den_im * den_im;
    QuadRat num_re = QuadRat(a) * p.mu + QuadRat(b), num_im = QuadRat(a) * p.nu;
    QuadRat re = (num_re * den_re + num_im * den_im) / n2;
    QuadRat im = (num_im * den_re - num_re * den_im) / n2;
    return ModulusPoint::exact(re, im);
  }
  cplx t(p.fmu, p.fnu);
  cplx out = (double(a) * t + double(b)) / (double(c) * t + double(d));
  return ModulusPoint::floating(out.real(), out.imag());
}

static const Mat2i kS{{{0, -1}, {1, 0}}};
static Mat2i translation(long n) { return {{{1, n}, {0, 1}}}; }

FdResult fd_reduce(const ModulusPoint& p) {
  Mat2i m{{{1, 0}, {0, 1}}};
  if (p.is_exact()) {
    QuadRat mu = p.mu, nu = p.nu;
    const QuadRat half(rat(1, 2));
    for (int iter = 0; iter < 10000; ++iter) {
      long n = floor_quad(mu + half).get_si();
      if (n != 0) {
        mu -= QuadRat(n);
        m = mat_mul(translation(-n), m);
      }
      QuadRat n2 = mu * mu + nu * nu;
      if (n2 >= QuadRat(1)) break;
      mu = -mu / n2;
      nu = nu / n2;
      m = mat_mul(kS, m);
    }
    if (mu == -half) {
      mu = half;
      m = mat_mul(translation(1), m);
    }
    if (mu * mu + nu * nu == QuadRat(1) && mu.sign() < 0) {
      mu = -mu;
      m = mat_mul(kS, m);
    }
    return {ModulusPoint::exact(mu, nu), m};
  }
  const double tol = kTol.fd_snap;
  double mu = p.fmu, nu = p.fnu;
  for (int iter = 0; iter < 10000; ++iter) {
    long n = static_cast<long>(std::floor(mu + 0.5 + tol));
    if (n != 0) {
      mu -= double(n);
      m = mat_mul(translation(-n), m);
    }
    double n2 = mu * mu + nu * nu;
    if (n2 >= 1.0 - tol) break;
    mu = -mu / n2;
    nu = nu / n2;
    m = mat_mul(kS, m);
  }
  if (std::fabs(mu + 0.5) <= tol) {
    mu += 1.0;
    m = mat_mul(translation(1), m);
  }
  if (std::fabs(mu * mu + nu * nu - 1.0) <= tol && mu < 0) {
    mu = -mu;
    m = mat_mul(kS, m);
  }
  if (std::fabs(mu) <= tol && std::fabs(nu - 1.0) <= tol) return {ModulusPoint::i(), m};
  if (std::fabs(mu - 0.5) <= tol && std::fabs(nu - std::sqrt(3.0) / 2) <= tol) return {ModulusPoint::omega(), m};
  if (std::fabs(mu - 0.5) <= tol) mu = 0.5;
  return {ModulusPoint::floating(mu, nu), m};
}

bool in_fundamental_domain(const ModulusPoint& p) {
  if (p.is_exact()) {
    QuadRat n2 = p.mu * p.mu + p.nu * p.nu;
    QuadRat half(rat(1, 2));
    if (p.mu.sign() >= 0) return p.mu <= half && n2 >= QuadRat(1);
    return p.mu > -half && n2 > QuadRat(1);
  }
  double n2 = p.fmu * p.fmu + p.fnu * p.fnu;
  if (p.fmu >= 0) return p.fmu <= 0.5 && n2 >= 1.0 - kTol.fd_snap;
  return p.fmu > -0.5 && n2 > 1.0;
}

// ---- standard descriptors -------------------------------------------------

static std::string pi_str(const PiRat& p) {
  const Rat& r = p.rho;
  std::string num = r.get_num() == 1 ? "" : (r.get_num() == -1 ? "-" : r.get_num().get_str());
  std::string out = num + "pi";
  if (r.get_den() != 1) out += "/" + r.get_den().get_str();
  return out;
}

std::string str(const StandardDescriptor& d) {
  std::string head;
  switch (d.type.kind) {
    case TypeKind::T1: head = "L1(r0=" + std::to_string(d.type.r0) + ", r=" + std::to_string(d.r); break;
    case TypeKind::T2: head = "L2(r=" + std::to_string(d.r); break;
    case TypeKind::T2plus: head = "L2+(r=" + std::to_string(d.r); break;
    case TypeKind::T3: head = "L3(r=" + std::to_string(d.r); break;
    case TypeKind::T3plus: head = "L3+(r=" + std::to_string(d.r); break;
    case TypeKind::T4: head = "L4(r=" + std::to_string(d.r); break;
    case TypeKind::T4plus: head = "L4+(r=" + std::to_string(d.r); break;
    case TypeKind::T6: head = "L6(r=" + std::to_string(d.r); break;
  }
  head += ", lambda=" + pi_str(d.lambda);
  if (d.type.q() <= 2) head += ", modulus=" + str(d.modulus);
  if (d.iota) head += ", iota=(" + std::to_string(d.iota->first) + "," + std::to_string(d.iota->second) + ")";
  return head + ")";
}

static std::vector<Mat2i> stabilizer_generators(const ModulusPoint& m) {
  if (m.is_i()) return {rotation_matrix(4)};
  if (m.is_omega()) return {rotation_matrix(6)};
  return {rotation_matrix(2)};
}

std::pair<long, long> canonical_iota(long i1, long i2, long r, const ModulusPoint& m) {
  std::pair<long, long> best{rem(i1, r), rem(i2, r)};
  Mat2i g = stabilizer_generators(m)[0];
  long x = best.first, y = best.second;
  for (int k = 0; k < 6; ++k) {
    long nx = rem(g[0][0] * x + g[0][1] * y, r), ny = rem(g[1][0] * x + g[1][1] * y, r);
    x = nx;
    y = ny;
    best = std::min(best, std::make_pair(x, y));
  }
  return best;
}

std::pair<long, long> canonical_iota_2plus(long i1, long i2, const ModulusPoint& m) {
  std::pair<long, long> p{rem(i1, 2), rem(i2, 2)};
  if (p == std::make_pair(0L, 0L)) throw InternalError("L2+ needs (v,w) not both even");
  if (m.is_omega()) return {1, 1};
  if (m.is_i() && p == std::make_pair(0L, 1L)) return {1, 0};
  return p;
}

long kappa_of(const PiRat& lambda) {
  int q = order_of_lambda(lambda);
  const Rat& rho = lambda.rho;
  if (q == 1) return to_long(rho / 2);
  if (q == 2) return to_long((rho - 1) / 2);
  return to_long((Rat(q) * rho / 2 - 1) / q);
}

long kappa_prime(const PiRat& lambda) {
  int q = order_of_lambda(lambda);
  if (q == 1) return kappa_of(lambda);
  return std::labs(to_long(Rat(q) * lambda.rho / 2));
}

StandardDescriptor standardize(const LatticeSpec& s) {
  if (!s.normalised()) throw std::invalid_argument("standardize needs a normalised spec");
  InvariantBundle inv = invariants(s);
  if (inv.s_L != 0) throw NotUnshifted(inv.s_L);
  StandardDescriptor d;
  d.type = inv.type;
  d.r = s.r;
  d.lambda = s.lambda;
  if (inv.q >= 3) {
    d.modulus = s.modulus;
    return d;
  }
  FdResult fd = fd_reduce(s.modulus);
  LatticeSpec t = change_basis(s, mat_inv(fd.m));
  t.modulus = fd.point;
  d.modulus = fd.point;
  InvariantBundle ti = invariants(t);
  if (ti.type.kind == TypeKind::T1)
    d.iota = canonical_iota(to_long(ti.v), to_long(ti.w), s.r, fd.point);
  else if (ti.type.kind == TypeKind::T2plus)
    d.iota = canonical_iota_2plus(to_long(ti.v), to_long(ti.w), fd.point);
  return d;
}

LatticeSpec to_spec(const StandardDescriptor& d) {
  LatticeSpec s;
  s.r = d.r;
  s.lambda = d.lambda;
  const long r = d.r;
  const bool odd = r % 2 != 0;
  switch (d.type.kind) {
    case TypeKind::T1: {
      if (!d.iota) throw std::invalid_argument("L1 descriptor needs iota");
      auto [i1, i2] = *d.iota;
      s.x_delta = rat(i1, r);
      s.y_delta = rat(i2, r);
      s.z_delta = rat(rem(r * i1 * i2, 2), 2);
      break;
    }
    case TypeKind::T2: break;
    case TypeKind::T2plus: {
      if (!d.iota) throw std::invalid_argument("L2+ descriptor needs iota");
      s.x_delta = rat(d.iota->first, r);
      s.y_delta = rat(d.iota->second, r);
      break;
    }
    case TypeKind::T3:
      if (odd) s.x_delta = rat(1, r), s.y_delta = rat(1, 2 * r), s.z_delta = rat(-1, 8 * r * r);
      break;
    case TypeKind::T3plus:
      if (odd)
        s.y_delta = rat(1, 2 * r), s.z_delta = rat(-1, 24 * r * r);
      else
        s.x_delta = rat(-1, r), s.z_delta = rat(-1, 6 * r * r);
      break;
    case TypeKind::T4: break;
    case TypeKind::T4plus: s.x_delta = rat(1, r), s.z_delta = rat(-1, 4 * r * r); break;
    case TypeKind::T6:
      if (odd) s.x_delta = rat(1, 2 * r), s.z_delta = rat(-1, 8 * r * r);
      break;
  }
  int q = d.type.q();
  s.modulus = q == 4 ? ModulusPoint::i() : ((q == 3 || q == 6) ? ModulusPoint::omega() : d.modulus);
  return s;
}

std::vector<StandardDescriptor> standard_list(long r, const PiRat& lambda, const ModulusPoint& m) {
  int q = order_of_lambda(lambda);
  std::vector<StandardDescriptor> out;
  ModulusPoint mod = q == 4 ? ModulusPoint::i() : ((q == 3 || q == 6) ? ModulusPoint::omega() : fd_reduce(m).point);
  auto push = [&](TypeKind k, long r0, std::optional<std::pair<long, long>> iota) {
    StandardDescriptor d;
    d.type = make_type(k, r, r0);
    d.r = r;
    d.lambda = lambda;
    d.modulus = mod;
    d.iota = iota;
    out.push_back(d);
  };
  switch (q) {
    case 1: {
      std::vector<std::pair<long, long>> seen;
      for (long i1 = 0; i1 < r; ++i1)
        for (long i2 = 0; i2 < r; ++i2) {
          auto c = canonical_iota(i1, i2, r, mod);
          if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
          seen.push_back(c);
          push(TypeKind::T1, std::gcd(std::gcd(c.first, c.second), r), c);
        }
      break;
    }
    case 2:
      push(TypeKind::T2, 0, std::nullopt);
      if (r % 2 == 0) {
        std::vector<std::pair<long, long>> iotas;
        if (mod.is_omega())
          iotas = {{1, 1}};
        else if (mod.is_i())
          iotas = {{1, 0}, {1, 1}};
        else
          iotas = {{1, 0}, {0, 1}, {1, 1}};
        for (auto io : iotas) push(TypeKind::T2plus, 0, io);
      }
      break;
    case 3:
      push(TypeKind::T3, 0, std::nullopt);
      if (r % 3 == 0) push(TypeKind::T3plus, 0, std::nullopt);
      break;
    case 4:
      push(TypeKind::T4, 0, std::nullopt);
      if (r % 2 == 0) push(TypeKind::T4plus, 0, std::nullopt);
      break;
    case 6: push(TypeKind::T6, 0, std::nullopt); break;
  }
  return out;
}

ReductionChain reduce(const LatticeSpec& s) {
  validate(s);
  ReductionChain ch;
  ch.scale = s.scale;
  LatticeSpec n = normalise(s);
  ch.s_L_before = invariants(n).s_L;
  LatticeSpec u = unshift(n, &ch.shift_c);
  ch.normalised_unshifted = u;
  ch.standard = standardize(u);
  if (u.q() <= 2) ch.basis = mat_inv(fd_reduce(u.modulus).m);
  return ch;
}

}  // namespace osc
