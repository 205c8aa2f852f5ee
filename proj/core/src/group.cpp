#include "osc/group.hpp"

#include <cmath>
#include <vector>

namespace osc {

std::optional<std::pair<QuadRat, QuadRat>> exact_rotation(const PiRat& t) {
  Rat k6 = mod_rat(t.rho, Rat(2)) * 6;
  if (!is_int(k6)) return std::nullopt;
  const QuadRat h(rat(1, 2)), s3h(Rat(0), rat(1, 2));
  // cos and sin of k pi / 6, k = 0..11
  static const int sgn_c[12] = {1, 1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  static const int sgn_s[12] = {0, 1, 1, 1, 1, 1, 0, -1, -1, -1, -1, -1};
  long k = to_long(k6);
  auto mag = [&](long j) -> QuadRat {
    switch (j % 6) {
      case 0: return QuadRat(1);
      case 1: case 5: return s3h;
      case 2: case 4: return h;
      default: return QuadRat(0);
    }
  };
  QuadRat c = mag(k) * QuadRat(sgn_c[k]);
  QuadRat s = mag((k + 3) % 12) * QuadRat(sgn_s[k]);
  return std::make_pair(c, s);
}

static std::pair<QuadRat, QuadRat> rotation_or_throw(const PiRat& t) {
  auto r = exact_rotation(t);
  if (!r) throw std::domain_error("exact rotation needs an angle in (pi/6)Z, got " + str(t));
  return *r;
}

OscElement osc_mul(const OscElement& a, const OscElement& b) {
  auto [c, s] = rotation_or_throw(a.t);
  QuadRat br = c * b.xr - s * b.xi, bi = s * b.xr + c * b.xi;
  OscElement out;
  out.xr = a.xr + br;
  out.xi = a.xi + bi;
  out.z = a.z + b.z + QuadRat(rat(1, 2)) * omega2(a.xr, a.xi, br, bi);
  out.t = a.t + b.t;
  return out;
}

OscElement inverse(const OscElement& a) {
  auto [c, s] = rotation_or_throw(a.t);
  // -e^{-it} xi
  OscElement out;
  out.xr = -(c * a.xr + s * a.xi);
  out.xi = -(-s * a.xr + c * a.xi);
  out.z = -a.z;
  out.t = -a.t;
  return out;
}

OscFloat osc_mul(const OscFloat& a, const OscFloat& b) {
  cplx rb = std::polar(1.0, a.t) * b.xi;
  return {a.xi + rb, a.z + b.z + 0.5 * omega2(a.xi.real(), a.xi.imag(), rb.real(), rb.imag()), a.t + b.t};
}

OscFloat inverse(const OscFloat& a) { return {-std::polar(1.0, -a.t) * a.xi, -a.z, -a.t}; }

OscFloat to_float(const OscElement& a) { return {cplx(a.xr.value(), a.xi.value()), a.z.value(), a.t.value()}; }

// l(t)M(x,y,z) for exact cos t, sin t
static void twist_exact(const QuadRat& c, const QuadRat& s, const QuadRat& x, const QuadRat& y, const QuadRat& z,
                        QuadRat& ox, QuadRat& oy, QuadRat& oz) {
  QuadRat c2 = c * c - s * s, s2 = QuadRat(2) * s * c;
  ox = x * c - y * s;
  oy = x * s + y * c;
  oz = z + QuadRat(rat(1, 2)) * x * y * (c2 - QuadRat(1)) + QuadRat(rat(1, 4)) * (x * x - y * y) * s2;
}

GElement g_mul(const GElement& a, const GElement& b) {
  auto [c, s] = rotation_or_throw(a.t);
  QuadRat x, y, z;
  twist_exact(c, s, b.x, b.y, b.z, x, y, z);
  return {a.x + x, a.y + y, a.z + z + a.x * y, a.t + b.t};
}

GElement inverse(const GElement& a) {
  auto [c, s] = rotation_or_throw(-a.t);
  QuadRat x, y, z;
  twist_exact(c, s, -a.x, -a.y, -a.z + a.x * a.y, x, y, z);
  return {x, y, z, -a.t};
}

GFloat twist(double t, const GFloat& m) {
  double c = std::cos(t), s = std::sin(t);
  return {m.x * c - m.y * s, m.x * s + m.y * c,
          m.z + 0.5 * m.x * m.y * (std::cos(2 * t) - 1) + 0.25 * (m.x * m.x - m.y * m.y) * std::sin(2 * t), 0.0};
}

GFloat g_mul(const GFloat& a, const GFloat& b) {
  GFloat w = twist(a.t, b);
  return {a.x + w.x, a.y + w.y, a.z + w.z + a.x * w.y, a.t + b.t};
}

GFloat inverse(const GFloat& a) {
  GFloat w = twist(-a.t, GFloat{-a.x, -a.y, -a.z + a.x * a.y, 0.0});
  w.t = -a.t;
  return w;
}

GFloat to_float(const GElement& a) { return {a.x.value(), a.y.value(), a.z.value(), a.t.value()}; }

GElement phi(const OscElement& g) {
  return {-g.xi, g.xr, g.z - QuadRat(rat(1, 2)) * g.xr * g.xi, g.t};
}

OscElement phi_inv(const GElement& g) {
  return {g.y, -g.x, g.z - QuadRat(rat(1, 2)) * g.x * g.y, g.t};
}

GFloat phi(const OscFloat& g) {
  double x = g.xi.real(), y = g.xi.imag();
  return {-y, x, g.z - 0.5 * x * y, g.t};
}

OscFloat phi_inv(const GFloat& g) { return {cplx(g.y, -g.x), g.z - 0.5 * g.x * g.y, g.t}; }

int linear_orientation(const Mat2Q& s) {
  int mu = s.det().sign();
  if (mu == 0) throw IllFormedAutomorphism("linear automorphism needs det S != 0");
  QuadRat m(mu);
  // S J = mu J S with J the rotation by pi/2
  bool ok = s.a12 == m * -s.a21 && -s.a11 == m * -s.a22 && s.a22 == m * s.a11 && -s.a21 == m * s.a12;
  if (!ok) throw IllFormedAutomorphism("S(i xi) != mu i S(xi)");
  return mu;
}

bool is_inner(const Automorphism& f) {
  if (std::holds_alternative<InnerConj>(f)) return true;
  if (const auto* l = std::get_if<Linear>(&f)) return l->s.det() == QuadRat(1) && linear_orientation(l->s) == 1;
  return std::get<Shift>(f).c == 0;
}

OscElement apply_automorphism(const Automorphism& f, const OscElement& g) {
  if (const auto* sh = std::get_if<Shift>(&f)) {
    OscElement out = g;
    out.z += QuadRat(sh->c * g.t.rho);
    return out;
  }
  if (const auto* in = std::get_if<InnerConj>(&f)) {
    OscElement eta{in->er, in->ei, QuadRat(0), PiRat()};
    return osc_mul(osc_mul(eta, g), inverse(eta));
  }
  const Mat2Q& s = std::get<Linear>(f).s;
  int mu = linear_orientation(s);
  OscElement out;
  out.xr = s.a11 * g.xr + s.a12 * g.xi;
  out.xi = s.a21 * g.xr + s.a22 * g.xi;
  out.z = s.det() * g.z;
  out.t = Rat(mu) * g.t;
  return out;
}

static std::vector<std::string> literal_args(std::string_view s, std::string_view head) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.rfind(head, 0) != 0 || t.size() < head.size() + 2 || t[head.size()] != '(' || t.back() != ')')
    throw ParseError("expected " + std::string(head) + "(...) literal, got '" + std::string(s) + "'");
  std::string body = t.substr(head.size() + 1, t.size() - head.size() - 2);
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t k = 0; k <= body.size(); ++k)
    if (k == body.size() || body[k] == ',') {
      out.push_back(body.substr(start, k - start));
      start = k + 1;
    }
  if (out.size() != 4) throw ParseError("element literal needs 4 coordinates");
  return out;
}

static PiRat parse_angle(const std::string& s) {
  if (s.find("pi") != std::string::npos) return parse_pirat(s);
  Rat v = parse_rat(s);
  if (v != 0) throw ParseError("t-coordinate must be a rational multiple of pi: '" + s + "'");
  return PiRat();
}

OscElement parse_osc(std::string_view s) {
  auto a = literal_args(s, "osc");
  return {parse_quad(a[0]), parse_quad(a[1]), parse_quad(a[2]), parse_angle(a[3])};
}

GElement parse_g(std::string_view s) {
  auto a = literal_args(s, "g");
  return {parse_quad(a[0]), parse_quad(a[1]), parse_quad(a[2]), parse_angle(a[3])};
}

std::string str(const OscElement& g) {
  return "osc(" + str(g.xr) + ", " + str(g.xi) + ", " + str(g.z) + ", " + str(g.t.rho) + "pi)";
}

std::string str(const GElement& g) {
  return "g(" + str(g.x) + ", " + str(g.y) + ", " + str(g.z) + ", " + str(g.t.rho) + "pi)";
}

}  // namespace osc
