#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace osc {

using Int = mpz_class;
using Rat = mpq_class;
using cplx = std::complex<double>;

struct Tolerances {
  double eig = 1e-8;     // eigenvalue clustering, trace-average rounding
  double phase = 1e-13;  // phase round trip
  double fd_snap = 1e-12;
};
inline constexpr Tolerances kTol{};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);
Rat parse_rat(std::string_view s);
std::string str(const Rat& q);
std::string str(const Int& z);
Int floor_rat(const Rat& q);
// representative of q mod m in [0, m), m > 0
Rat mod_rat(const Rat& q, const Rat& m);
bool is_int(const Rat& q);
long to_long(const Rat& q);  // requires is_int
Int gcd(const Int& a, const Int& b);
// smallest non-negative remainder
long rem(long a, long m);

// the real number rho * pi
struct PiRat {
  Rat rho;
  PiRat() = default;
  explicit PiRat(Rat r) : rho(std::move(r)) {}
  bool in_2piZ() const;
  double value() const;
  int sign() const { return sgn(rho); }
  friend PiRat operator+(const PiRat& a, const PiRat& b) { return PiRat(a.rho + b.rho); }
  friend PiRat operator-(const PiRat& a, const PiRat& b) { return PiRat(a.rho - b.rho); }
  friend PiRat operator-(const PiRat& a) { return PiRat(-a.rho); }
  friend PiRat operator*(const Rat& c, const PiRat& a) { return PiRat(c * a.rho); }
  friend bool operator==(const PiRat& a, const PiRat& b) { return a.rho == b.rho; }
  friend bool operator<(const PiRat& a, const PiRat& b) { return a.rho < b.rho; }
};
PiRat parse_pirat(std::string_view s);
std::string str(const PiRat& p);

// a + b*sqrt(3); a field, so division is exact
struct QuadRat {
  Rat a, b;
  QuadRat() = default;
  QuadRat(Rat a_) : a(std::move(a_)) {}
  QuadRat(long n) : a(n) {}
  QuadRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  static QuadRat sqrt3() { return {Rat(0), Rat(1)}; }
  bool is_rational() const { return b == 0; }
  Rat norm() const { return a * a - 3 * b * b; }
  QuadRat conj() const { return {a, -b}; }
  int sign() const;
  double value() const;
  QuadRat inverse() const;
  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadRat operator-(const QuadRat& x) { return {-x.a, -x.b}; }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }
  QuadRat& operator+=(const QuadRat& y) { return *this = *this + y; }
  QuadRat& operator-=(const QuadRat& y) { return *this = *this - y; }
  QuadRat& operator*=(const QuadRat& y) { return *this = *this * y; }
  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const QuadRat& x, const QuadRat& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadRat& x, const QuadRat& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadRat& x, const QuadRat& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadRat& x, const QuadRat& y) { return (x - y).sign() >= 0; }
};
Int floor_quad(const QuadRat& x);
QuadRat parse_quad(std::string_view s);  // "a", "a+b*sqrt3", "b*sqrt3/2"
std::string str(const QuadRat& x);

// e^{i pi rho}, rho kept in [0, 2)
class PhaseExp {
 public:
  PhaseExp() = default;
  explicit PhaseExp(const Rat& rho);
  const Rat& rho() const { return rho_; }
  bool is_one() const { return rho_ == 0; }
  PhaseExp inverse() const { return PhaseExp(-rho_); }
  PhaseExp pow(long n) const { return PhaseExp(Rat(n) * rho_); }
  cplx to_complex() const;
  friend bool operator==(const PhaseExp& x, const PhaseExp& y) { return x.rho_ == y.rho_; }
  friend bool operator<(const PhaseExp& x, const PhaseExp& y) { return x.rho_ < y.rho_; }

 private:
  Rat rho_;
};
PhaseExp phase_mul(const PhaseExp& p, const PhaseExp& q);
inline PhaseExp operator*(const PhaseExp& p, const PhaseExp& q) { return phase_mul(p, q); }
inline cplx to_complex(const PhaseExp& p) { return p.to_complex(); }
std::string str(const PhaseExp& p);

// point mu + i nu of the upper half plane
struct ModulusPoint {
  enum class Kind { ExactRat, PointI, PointOmega, ExactQuad, Float };
  Kind kind = Kind::PointI;
  QuadRat mu{0}, nu{1};  // exact kinds
  double fmu = 0.0, fnu = 1.0;  // Float only

  static ModulusPoint exact(const QuadRat& mu, const QuadRat& nu);  // picks the tag
  static ModulusPoint rational(const Rat& mu, const Rat& nu) { return exact(mu, nu); }
  static ModulusPoint i() { return exact(Rat(0), Rat(1)); }
  static ModulusPoint omega() { return exact(rat(1, 2), QuadRat(Rat(0), rat(1, 2))); }
  static ModulusPoint floating(double mu, double nu);

  bool is_exact() const { return kind != Kind::Float; }
  bool is_i() const { return kind == Kind::PointI; }
  bool is_omega() const { return kind == Kind::PointOmega; }
  double mu_d() const { return is_exact() ? mu.value() : fmu; }
  double nu_d() const { return is_exact() ? nu.value() : fnu; }
  friend bool operator==(const ModulusPoint& x, const ModulusPoint& y);
};
ModulusPoint parse_modulus(std::string_view s);
std::string str(const ModulusPoint& m);

// exact Q(sqrt3) value when available, double always
struct Real {
  std::optional<QuadRat> exact;
  double approx = 0.0;
  Real() = default;
  Real(const QuadRat& q) : exact(q), approx(q.value()) {}
  static Real floating(double d) {
    Real r;
    r.approx = d;
    return r;
  }
  Real scaled(const Rat& c) const;
};
// exact comparison when both exact, else by the rounded double
bool same_key(const Real& x, const Real& y);
bool key_less(const Real& x, const Real& y);
std::string str(const Real& x);

}  // namespace osc
