#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osc/group.hpp"
#include "osc/numeric.hpp"

namespace osc {

struct InadmissibleLattice : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Mat2i = std::array<std::array<long, 2>, 2>;
using Vec2q = std::array<Rat, 2>;

Mat2i rotation_matrix(int q);  // S_q, q in {1,2,3,4,6}
Mat2i mat_mul(const Mat2i& a, const Mat2i& b);
Mat2i mat_inv(const Mat2i& a);  // det must be +-1
Mat2i mat_pow(const Mat2i& a, long n);
Vec2q mat_apply(const Mat2i& a, const Vec2q& v);
inline Rat det2(const Vec2q& a, const Vec2q& b) { return a[0] * b[1] - a[1] * b[0]; }

// element (p1 abar + p2 bbar, z, n lambda) of a normalised lattice, coordinates
// in the (abar, bbar) basis with omega(abar, bbar) = 1 and e^{i lambda} acting as S_q
struct FrameElement {
  Vec2q p{Rat(0), Rat(0)};
  Rat z;
  long n = 0;
  friend bool operator==(const FrameElement& a, const FrameElement& b) {
    return a.p == b.p && a.z == b.z && a.n == b.n;
  }
};

struct Frame {
  int q = 1;
  FrameElement mul(const FrameElement& a, const FrameElement& b) const;
  FrameElement inv(const FrameElement& a) const;
  FrameElement pow(const FrameElement& a, long k) const;
  FrameElement conj(const FrameElement& g, const FrameElement& h) const { return mul(mul(g, h), inv(g)); }
};

int order_of_lambda(const PiRat& lambda);  // throws InadmissibleLattice

struct LatticeSpec {
  long r = 1;
  PiRat lambda{Rat(2)};
  ModulusPoint modulus = ModulusPoint::i();
  Rat z_alpha, z_beta, x_delta, y_delta, z_delta;
  Rat scale{1};

  int q() const { return order_of_lambda(lambda); }
  bool normalised() const { return scale == 1; }
  std::array<FrameElement, 4> generators() const;  // alpha, beta, gamma, delta; requires normalised
  // rebuild from generators with alpha, beta projecting to the unit basis vectors
  static LatticeSpec from_generators(const LatticeSpec& base, const std::array<FrameElement, 4>& g);
};
void validate(const LatticeSpec& s);  // throws InadmissibleLattice

enum class TypeKind { T1, T2, T2plus, T3, T3plus, T4, T4plus, T6 };
struct TypeTag {
  TypeKind kind = TypeKind::T1;
  long r = 1;
  long r0 = 1;  // T1 only
  bool plus() const { return kind == TypeKind::T2plus || kind == TypeKind::T3plus || kind == TypeKind::T4plus; }
  int q() const;
  friend bool operator==(const TypeTag& a, const TypeTag& b) {
    return a.kind == b.kind && a.r == b.r && (a.kind != TypeKind::T1 || a.r0 == b.r0);
  }
};
std::string str(const TypeTag& t);
TypeTag make_type(TypeKind k, long r, long r0 = 0);  // checks the divisibility constraints

struct InvariantBundle {
  int q = 1;
  int q0 = 1;
  long rt = 0;  // rem_{q0}(r)
  Rat v, w, a, b;
  long k = 0, l = 0;
  Rat z0;          // closed form, equals the power solve
  long s0 = 1;
  Rat s_L;         // in [0, 1/(s0 r))
  TypeTag type;
};

// (k, l) from (v, w); throws InadmissibleLattice when not integral
std::pair<long, long> kl_from_vw(int q, long r, const Rat& v, const Rat& w);
// the same integers read off delta alpha delta^-1 and delta beta delta^-1
std::pair<long, long> kl_by_conjugation(const LatticeSpec& s);
TypeTag type_from_kl(int q, long r, long k, long l);
TypeTag classify_type(const LatticeSpec& s);
TypeTag abelianization_type(const LatticeSpec& s);
std::vector<Int> abelianization_factors(int q, long r, long k, long l, long* free_rank);

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Rat z0_closed_form(int q, long r, const Rat& v, const Rat& w, const Rat& a, const Rat& b, bool plus);
InvariantBundle invariants(const LatticeSpec& s);

LatticeSpec normalise(const LatticeSpec& s);
LatticeSpec denormalise(const LatticeSpec& s, const Rat& h);
LatticeSpec apply_shift(const LatticeSpec& s, const Rat& c);  // F_u with u = c/pi
LatticeSpec unshift(const LatticeSpec& s, Rat* c_out = nullptr);
LatticeSpec conjugate(const LatticeSpec& s, const Vec2q& eta);  // F_eta, eta in basis coordinates

enum class Move { DeltaAlpha, DeltaBeta, DeltaGamma, AlphaGamma, BetaGamma, BetaAlphaBeta, Rotate };
std::string str(Move m);
// generator rewrite; Rotate uses the basis symmetry compatible with S_q
// ((beta, alpha^-1) for q in {1,2,4}, (alpha beta, alpha^-1) for q in {3,6})
LatticeSpec rewrite(const LatticeSpec& s, Move m, bool inverse = false);
// new basis (abar, bbar) N with N in SL(2,Z); requires N S_q = S_q N
LatticeSpec change_basis(const LatticeSpec& s, const Mat2i& n);

struct FdResult {
  ModulusPoint point;
  Mat2i m;  // m . input = point
};
ModulusPoint mobius(const Mat2i& m, const ModulusPoint& p);
FdResult fd_reduce(const ModulusPoint& p);
bool in_fundamental_domain(const ModulusPoint& p);

struct StandardDescriptor {
  TypeTag type;
  long r = 1;
  PiRat lambda;
  ModulusPoint modulus = ModulusPoint::i();
  std::optional<std::pair<long, long>> iota;
  friend bool operator==(const StandardDescriptor& a, const StandardDescriptor& b) {
    return a.type == b.type && a.r == b.r && a.lambda == b.lambda && a.modulus == b.modulus && a.iota == b.iota;
  }
};
std::string str(const StandardDescriptor& d);

struct NotUnshifted : std::invalid_argument {
  Rat s_L;
  NotUnshifted(const Rat& s) : std::invalid_argument("lattice is not unshifted: s_L = " + osc::str(s)), s_L(s) {}
};

std::pair<long, long> canonical_iota(long i1, long i2, long r, const ModulusPoint& m);
std::pair<long, long> canonical_iota_2plus(long i1, long i2, const ModulusPoint& m);
StandardDescriptor standardize(const LatticeSpec& s);
LatticeSpec to_spec(const StandardDescriptor& d);
// all standard descriptors for the given r, lambda and modulus (modulus ignored for q >= 3)
std::vector<StandardDescriptor> standard_list(long r, const PiRat& lambda, const ModulusPoint& m);
// lambda = lambda0 + 2 pi kappa; kappa' = |1 + q kappa| for q >= 2, kappa for q = 1
long kappa_of(const PiRat& lambda);
long kappa_prime(const PiRat& lambda);

struct ReductionChain {
  Rat scale{1};        // F_S with S = scale^-1 I
  Rat shift_c;         // F_u with u = shift_c / pi
  Mat2i basis{{{1, 0}, {0, 1}}};
  Rat s_L_before;      // of the normalised lattice
  StandardDescriptor standard;
  LatticeSpec normalised_unshifted;
};
ReductionChain reduce(const LatticeSpec& s);

// lattice input file: key = value lines, '#' comments
LatticeSpec parse_lattice(std::string_view text);
std::string render_spec(const LatticeSpec& s);

}  // namespace osc
