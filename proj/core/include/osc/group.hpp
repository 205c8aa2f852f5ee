#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "osc/numeric.hpp"

namespace osc {

// omega(a, b) = Im(conj(a) b) = a_re b_im - a_im b_re
template <class S>
S omega2(const S& ar, const S& ai, const S& br, const S& bi) {
  return ar * bi - ai * br;
}

// cos and sin of rho*pi; exact only when the denominator of rho divides 6
std::optional<std::pair<QuadRat, QuadRat>> exact_rotation(const PiRat& t);

// (xi, z, t) in Osc_1 over the exact tower
struct OscElement {
  QuadRat xr, xi, z;
  PiRat t;
  static OscElement identity() { return {}; }
  friend bool operator==(const OscElement& a, const OscElement& b) {
    return a.xr == b.xr && a.xi == b.xi && a.z == b.z && a.t == b.t;
  }
};

struct OscFloat {
  cplx xi{};
  double z = 0, t = 0;
  static OscFloat identity() { return {}; }
};

// M(x, y, z)(t) in G = H(1) x_l R
struct GElement {
  QuadRat x, y, z;
  PiRat t;
  static GElement identity() { return {}; }
  friend bool operator==(const GElement& a, const GElement& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z && a.t == b.t;
  }
};

struct GFloat {
  double x = 0, y = 0, z = 0, t = 0;
  static GFloat identity() { return {}; }
};

OscElement osc_mul(const OscElement& a, const OscElement& b);  // throws if e^{it} leaves Q(sqrt3)
OscElement inverse(const OscElement& a);
OscFloat osc_mul(const OscFloat& a, const OscFloat& b);
OscFloat inverse(const OscFloat& a);
OscFloat to_float(const OscElement& a);

GElement g_mul(const GElement& a, const GElement& b);
GElement inverse(const GElement& a);
GFloat g_mul(const GFloat& a, const GFloat& b);
GFloat inverse(const GFloat& a);
GFloat to_float(const GElement& a);
// l(t) acting on H(1)
GFloat twist(double t, const GFloat& m);

GElement phi(const OscElement& g);
OscElement phi_inv(const GElement& g);
GFloat phi(const OscFloat& g);
OscFloat phi_inv(const GFloat& g);

inline OscElement mul(const OscElement& a, const OscElement& b) { return osc_mul(a, b); }
inline OscFloat mul(const OscFloat& a, const OscFloat& b) { return osc_mul(a, b); }
inline GElement mul(const GElement& a, const GElement& b) { return g_mul(a, b); }
inline GFloat mul(const GFloat& a, const GFloat& b) { return g_mul(a, b); }

template <class E>
E group_power(const E& g, long n) {
  E base = n < 0 ? inverse(g) : g;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  E acc = E::identity();
  while (k) {
    if (k & 1) acc = mul(acc, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return acc;
}

struct Mat2Q {
  QuadRat a11, a12, a21, a22;
  QuadRat det() const { return a11 * a22 - a12 * a21; }
  static Mat2Q scalar(const QuadRat& c) { return {c, 0, 0, c}; }
};

// u is stored as c/pi so that u*t stays rational for t in pi*Q
struct Shift {
  Rat c;
};
struct InnerConj {
  QuadRat er, ei;
};
struct Linear {
  Mat2Q s;
};
using Automorphism = std::variant<Shift, InnerConj, Linear>;

struct IllFormedAutomorphism : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// S(i xi) = mu i S(xi) with mu = sgn det S; throws IllFormedAutomorphism otherwise
int linear_orientation(const Mat2Q& s);
bool is_inner(const Automorphism& f);
OscElement apply_automorphism(const Automorphism& f, const OscElement& g);

OscElement parse_osc(std::string_view s);  // "osc(xi_re, xi_im, z, t)"
GElement parse_g(std::string_view s);      // "g(x, y, z, t)"
std::string str(const OscElement& g);
std::string str(const GElement& g);

}  // namespace osc
