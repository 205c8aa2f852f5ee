#include "osc/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace osc {

Rat rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

static std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

static Int parse_int(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("bad integer literal '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

Rat parse_rat(std::string_view sv) {
  std::string s = trim(sv);
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    // decimal literals are accepted and converted exactly
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      if (digits == "-" || digits.empty()) throw ParseError("bad decimal literal '" + s + "'");
      Int den = 1;
      for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
      return rat(parse_int(digits), den);
    }
    return Rat(parse_int(s));
  }
  Int num = parse_int(trim(s.substr(0, slash)));
  Int den = parse_int(trim(s.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return rat(num, den);
}

std::string str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string str(const Int& z) { return z.get_str(); }

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Rat mod_rat(const Rat& q, const Rat& m) {
  Rat t = q / m;
  return q - Rat(floor_rat(t)) * m;
}

bool is_int(const Rat& q) { return q.get_den() == 1; }

long to_long(const Rat& q) {
  if (!is_int(q) || !q.get_num().fits_slong_p()) throw std::domain_error("not a machine integer: " + str(q));
  return q.get_num().get_si();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

long rem(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool PiRat::in_2piZ() const { return is_int(rho) && mpz_even_p(rho.get_num_mpz_t()); }

double PiRat::value() const { return rho.get_d() * std::numbers::pi; }

PiRat parse_pirat(std::string_view sv) {
  // accepts "p/q pi", "p/q*pi", "pi", "-pi/2", "2pi", "p/q"
  std::string s;
  for (char c : sv)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto at = s.find("pi");
  if (at == std::string::npos) throw ParseError("angle literal needs 'pi': '" + std::string(sv) + "'");
  std::string pre = s.substr(0, at), post = s.substr(at + 2);
  if (!pre.empty() && (pre.back() == '*' || pre.back() == '.')) pre.pop_back();
  Rat c = 1;
  if (pre == "-")
    c = -1;
  else if (!pre.empty() && pre != "+")
    c = parse_rat(pre);
  if (!post.empty()) {
    if (post[0] != '/') throw ParseError("bad angle literal '" + std::string(sv) + "'");
    c /= parse_rat(post.substr(1));
  }
  return PiRat(c);
}

std::string str(const PiRat& p) { return "(" + str(p.rho) + ")·π"; }

int QuadRat::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 3 b^2
  int c = cmp(a * a, 3 * b * b);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

double QuadRat::value() const { return a.get_d() + b.get_d() * std::numbers::sqrt3; }

QuadRat QuadRat::inverse() const {
  Rat n = norm();
  if (n == 0) throw std::domain_error("QuadRat division by zero");
  return {a / n, -b / n};
}

Int floor_quad(const QuadRat& x) {
  Int f(std::floor(x.value()));
  // exact correction of the float estimate
  while ((x - QuadRat(Rat(f))).sign() < 0) f -= 1;
  while ((x - QuadRat(Rat(f + 1))).sign() >= 0) f += 1;
  return f;
}

std::string str(const QuadRat& x) {
  if (x.b == 0) return str(x.a);
  std::string rt = (x.b == 1) ? "√3" : (x.b == -1 ? "-√3" : str(x.b) + "√3");
  if (x.a == 0) return rt;
  return str(x.a) + (x.b > 0 ? "+" : "") + rt;
}

PhaseExp::PhaseExp(const Rat& rho) : rho_(mod_rat(rho, Rat(2))) {}

cplx PhaseExp::to_complex() const {
  // reduce to the first octant-free form for accuracy on exact quarter turns
  const Rat& r = rho_;
  if (r == 0) return {1.0, 0.0};
  if (r == 1) return {-1.0, 0.0};
  if (r == rat(1, 2)) return {0.0, 1.0};
  if (r == rat(3, 2)) return {0.0, -1.0};
  double ang = r.get_d() * std::numbers::pi;
  return {std::cos(ang), std::sin(ang)};
}

PhaseExp phase_mul(const PhaseExp& p, const PhaseExp& q) { return PhaseExp(p.rho() + q.rho()); }

std::string str(const PhaseExp& p) { return "e^{iπ·" + str(p.rho()) + "}"; }

ModulusPoint ModulusPoint::exact(const QuadRat& mu, const QuadRat& nu) {
  if (nu.sign() <= 0) throw std::domain_error("modulus needs nu > 0");
  ModulusPoint m;
  m.mu = mu;
  m.nu = nu;
  if (mu == QuadRat(0) && nu == QuadRat(1))
    m.kind = Kind::PointI;
  else if (mu == QuadRat(rat(1, 2)) && nu == QuadRat(Rat(0), rat(1, 2)))
    m.kind = Kind::PointOmega;
  else if (mu.is_rational() && nu.is_rational())
    m.kind = Kind::ExactRat;
  else
    m.kind = Kind::ExactQuad;
  m.fmu = mu.value();
  m.fnu = nu.value();
  return m;
}

ModulusPoint ModulusPoint::floating(double mu, double nu) {
  if (!(nu > 0) || !std::isfinite(mu) || !std::isfinite(nu)) throw std::domain_error("modulus needs finite nu > 0");
  ModulusPoint m;
  m.kind = Kind::Float;
  m.fmu = mu;
  m.fnu = nu;
  return m;
}

bool operator==(const ModulusPoint& x, const ModulusPoint& y) {
  if (x.is_exact() != y.is_exact()) return false;
  if (x.is_exact()) return x.mu == y.mu && x.nu == y.nu;
  return x.fmu == y.fmu && x.fnu == y.fnu;
}

QuadRat parse_quad(std::string_view sv) {
  std::string s;
  for (char c : sv)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  // "a", "a+b*sqrt3", "b*sqrt3"
  auto at = s.find("sqrt3");
  if (at == std::string::npos) return QuadRat(parse_rat(s));
  std::string head = s.substr(0, at);
  if (!head.empty() && head.back() == '*') head.pop_back();
  size_t split = std::string::npos;
  for (size_t k = head.size(); k-- > 1;)
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] != '/') {
      split = k;
      break;
    }
  Rat a = 0;
  std::string coef = head;
  if (split != std::string::npos) {
    a = parse_rat(head.substr(0, split));
    coef = head.substr(split);
  }
  Rat b = 1;
  if (coef == "-")
    b = -1;
  else if (!coef.empty() && coef != "+")
    b = parse_rat(coef);
  std::string tail = s.substr(at + 5);
  if (!tail.empty()) {
    if (tail[0] != '/') throw ParseError("bad sqrt3 literal '" + s + "'");
    b /= parse_rat(tail.substr(1));
  }
  return {a, b};
}

ModulusPoint parse_modulus(std::string_view sv) {
  std::string s;
  for (char c : sv)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "I" || s == "i") return ModulusPoint::i();
  if (s == "omega") return ModulusPoint::omega();
  auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("bad modulus literal '" + std::string(sv) + "'");
  std::string tag = s.substr(0, open), body = s.substr(open + 1, close - open - 1);
  auto comma = body.find(',');
  if (comma == std::string::npos) throw ParseError("modulus needs two coordinates");
  std::string a = body.substr(0, comma), b = body.substr(comma + 1);
  try {
    if (tag == "rat") return ModulusPoint::rational(parse_rat(a), parse_rat(b));
    if (tag == "quad") return ModulusPoint::exact(parse_quad(a), parse_quad(b));
    if (tag == "float") return ModulusPoint::floating(std::stod(a), std::stod(b));
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("bad float in modulus literal");
  }
  throw ParseError("unknown modulus tag '" + tag + "'");
}

std::string str(const ModulusPoint& m) {
  using K = ModulusPoint::Kind;
  switch (m.kind) {
    case K::PointI: return "I";
    case K::PointOmega: return "omega";
    case K::ExactRat: return "rat(" + str(m.mu) + ", " + str(m.nu) + ")";
    case K::ExactQuad: return "quad(" + str(m.mu) + ", " + str(m.nu) + ")";
    case K::Float: {
      std::ostringstream os;
      os.precision(17);
      os << "float(" << m.fmu << ", " << m.fnu << ")";
      return os.str();
    }
  }
  return "?";
}

Real Real::scaled(const Rat& c) const {
  Real r;
  if (exact) r.exact = QuadRat(c) * *exact;
  r.approx = c.get_d() * approx;
  return r;
}

static double round12(double x) {
  if (x == 0) return 0;
  double e = std::pow(10.0, 11 - std::floor(std::log10(std::fabs(x))));
  return std::round(x * e) / e;
}

bool same_key(const Real& x, const Real& y) {
  if (x.exact && y.exact) return *x.exact == *y.exact;
  return round12(x.approx) == round12(y.approx);
}

bool key_less(const Real& x, const Real& y) {
  if (x.exact && y.exact) return *x.exact < *y.exact;
  return round12(x.approx) < round12(y.approx);
}

std::string str(const Real& x) {
  if (x.exact) return str(*x.exact);
  std::ostringstream os;
  os.precision(12);
  os << x.approx;
  return os.str();
}

}  // namespace osc
