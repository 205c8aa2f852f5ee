#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "osc/numeric.hpp"

namespace osc {

struct StandardDescriptor;

// ---- Smith normal form ----------------------------------------------------

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;
  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};
Int determinant(const IntMatrix& m);  // square, Bareiss

struct SmithResult {
  std::vector<Int> factors;  // nonzero diagonal d1 | d2 | ..., positive, units included
  long free_rank = 0;        // cols - rank
  IntMatrix u, v, d;         // u * m * v = d
  std::vector<Int> torsion() const;  // factors > 1
};
SmithResult smith_normal_form(const IntMatrix& m);

// ---- z0 by group power ----------------------------------------------------

// the z0 with ((x, y), z0, lambda)^q = (0, 0, q lambda) in the frame of order q
Rat z0_power_solve(int q, const Rat& x, const Rat& y);
// z0 of the invariant definition, computed through the power solve
Rat z0_solve(int q, long r, const Rat& v, const Rat& w, const Rat& a, const Rat& b, bool plus);

// ---- generalised quadratic Gauss sums --------------------------------------

struct PhaseSum {
  std::map<PhaseExp, long> terms;
  void add(const PhaseExp& p, long count = 1);
  cplx value() const;
};
// S(a, b, c) = sum_{r=0}^{|c|-1} e^{pi i (a r^2 + b r)/c}; requires ac != 0, ac + b even
PhaseSum gauss_sum_exact(long a, long b, long c);
cplx gauss_sum(long a, long b, long c);
// |c/a|^{1/2} e^{pi i (|ac| - b^2)/(4ac)} sum_{r=0}^{|a|-1} e^{-pi i (c r^2 + b r)/a}
cplx gauss_reciprocity_rhs(long a, long b, long c);

// ---- finite gamma_4 actions ------------------------------------------------

// theta_k -> phase[k] theta_{perm[k]}
struct GenPermMatrix {
  long dim = 0;
  std::vector<long> perm;
  std::vector<PhaseExp> phase;
  cplx trace_power(long p) const;
  bool is_identity() const;
};
GenPermMatrix compose(const GenPermMatrix& outer, const GenPermMatrix& inner);

struct DenseUnitary {
  long dim = 0;
  std::vector<cplx> a;  // row-major, column k is the image of theta_k
  cplx& at(long i, long j) { return a[i * dim + j]; }
  const cplx& at(long i, long j) const { return a[i * dim + j]; }
  static DenseUnitary identity(long d);
  DenseUnitary operator*(const DenseUnitary& o) const;
  cplx trace() const;
  double unitarity_defect() const;  // max |U*U - I|
  double distance_to_identity() const;
};
DenseUnitary to_dense(const GenPermMatrix& g);

using Gamma4Matrix = std::variant<GenPermMatrix, DenseUnitary>;

struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// raw operators from the multiplicity proofs (dimension A = r|m|)
GenPermMatrix shift_operator_q1(long r, long m, long n, long i1, long i2);
GenPermMatrix reflection_operator_q2(long r, long m, long n, long i1, long i2);
DenseUnitary fourier_operator_q4(long r, long m, int a);          // S_a without the n-prefactor
DenseUnitary fourier_operator_q6(long r, long m, int b);          // D_b
DenseUnitary twisted_operator_q3plus(long r, long m, int b);      // A~_{1,b} = D_b^2 diag(...)
Gamma4Matrix gamma4_matrix(const StandardDescriptor& d, long m, long n);

long gamma4_order(const Gamma4Matrix& g, long max_order = 48);  // smallest N with g^N = I
// multiplicity of the eigenvalue to_complex(eig)
long fixed_dim(const GenPermMatrix& g, const PhaseExp& eig);
long fixed_dim(const DenseUnitary& g, const PhaseExp& eig, long order);
long fixed_dim(const Gamma4Matrix& g, const PhaseExp& eig = PhaseExp());
cplx trace_power(const Gamma4Matrix& g, long p);

// ---- Casimir through ladder operators -------------------------------------

enum class RepKind { C, S, F };
struct LadderVerdict {
  long truncation = 0;
  long interior_rows = 0;
  cplx scalar;
  double max_offdiag = 0;     // largest off-diagonal entry in the interior block
  double max_diag_spread = 0; // largest |diag - scalar| in the interior block
  std::vector<cplx> matrix;   // full truncated Casimir, row-major
};
// F: params (c, d_times_pi); S: params (a2, tau); C: ignored
LadderVerdict ladder_casimir(RepKind kind, double p1, double p2, long truncation);

// number of ideals of norm a in Z[i], by factorisation
long gaussian_ideal_count(long a);

}  // namespace osc
