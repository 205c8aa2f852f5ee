#include <cmath>
#include <numeric>

#include "osc/lattice.hpp"
#include "osc/oracle.hpp"

namespace osc {

// ---- generalised permutations ---------------------------------------------

cplx GenPermMatrix::trace_power(long p) const {
  cplx t = 0;
  for (long k = 0; k < dim; ++k) {
    long j = k;
    PhaseExp ph;
    for (long s = 0; s < p; ++s) {
      ph = ph * phase[j];
      j = perm[j];
    }
    if (j == k) t += ph.to_complex();
  }
  return t;
}

bool GenPermMatrix::is_identity() const {
  for (long k = 0; k < dim; ++k)
    if (perm[k] != k || !phase[k].is_one()) return false;
  return true;
}

GenPermMatrix compose(const GenPermMatrix& outer, const GenPermMatrix& inner) {
  if (outer.dim != inner.dim) throw std::invalid_argument("dimension mismatch");
  GenPermMatrix g{inner.dim, std::vector<long>(inner.dim), std::vector<PhaseExp>(inner.dim)};
  for (long k = 0; k < inner.dim; ++k) {
    long j = inner.perm[k];
    g.perm[k] = outer.perm[j];
    g.phase[k] = inner.phase[k] * outer.phase[j];
  }
  return g;
}

// ---- dense unitaries -------------------------------------------------------

DenseUnitary DenseUnitary::identity(long d) {
  DenseUnitary u{d, std::vector<cplx>(d * d, 0.0)};
  for (long i = 0; i < d; ++i) u.at(i, i) = 1.0;
  return u;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& o) const {
  DenseUnitary c{dim, std::vector<cplx>(dim * dim, 0.0)};
  for (long i = 0; i < dim; ++i)
    for (long k = 0; k < dim; ++k) {
      cplx x = at(i, k);
      for (long j = 0; j < dim; ++j) c.at(i, j) += x * o.at(k, j);
    }
  return c;
}

cplx DenseUnitary::trace() const {
  cplx t = 0;
  for (long i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

double DenseUnitary::unitarity_defect() const {
  double m = 0;
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) {
      cplx s = 0;
      for (long k = 0; k < dim; ++k) s += std::conj(at(k, i)) * at(k, j);
      m = std::max(m, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return m;
}

double DenseUnitary::distance_to_identity() const {
  double m = 0;
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) m = std::max(m, std::abs(at(i, j) - (i == j ? 1.0 : 0.0)));
  return m;
}

DenseUnitary to_dense(const GenPermMatrix& g) {
  DenseUnitary u{g.dim, std::vector<cplx>(g.dim * g.dim, 0.0)};
  for (long k = 0; k < g.dim; ++k) u.at(g.perm[k], k) = g.phase[k].to_complex();
  return u;
}

// ---- the operators ---------------------------------------------------------

namespace {

void require_positive(long r, long m) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (m < 1) throw std::invalid_argument("operator needs m > 0");
}

long modp(long a, long n) { return rem(a, n); }

}  // namespace

GenPermMatrix shift_operator_q1(long r, long m, long n, long i1, long i2) {
  require_positive(r, m);
  const long A = r * m;
  const long r0 = std::gcd(std::gcd(std::labs(i1), std::labs(i2)), r);
  const long s0 = r / r0;
  GenPermMatrix g{A, std::vector<long>(A), std::vector<PhaseExp>(A)};
  // 2 r m z0 with z0 = rem_2(r i1 i2) / 2
  Rat fixed = Rat(r * m * rem(r * i1 * i2, 2)) + rat(2 * n, s0);
  for (long k = 0; k < A; ++k) {
    g.perm[k] = modp(k - m * i2, A);
    g.phase[k] = PhaseExp(rat((2 * k - m * i2) * i1, r) + fixed);
  }
  return g;
}

GenPermMatrix reflection_operator_q2(long r, long m, long n, long i1, long i2) {
  require_positive(r, m);
  const long A = r * m;
  GenPermMatrix g{A, std::vector<long>(A), std::vector<PhaseExp>(A)};
  for (long k = 0; k < A; ++k) {
    g.perm[k] = modp(i2 * m - k, A);
    g.phase[k] = PhaseExp(Rat(n) + rat(2 * k * i1 - m * i1 * i2, r));
  }
  return g;
}

DenseUnitary fourier_operator_q4(long r, long m, int a) {
  require_positive(r, m);
  const long A = r * m;
  const double norm = 1.0 / std::sqrt(double(A));
  DenseUnitary u{A, std::vector<cplx>(A * A)};
  for (long k = 0; k < A; ++k) {
    Rat col = rat(-a * m, 2 * r) + rat(2 * a * k, r);
    for (long kb = 0; kb < A; ++kb) u.at(kb, k) = norm * PhaseExp(col + rat(-2 * k * kb, A)).to_complex();
  }
  return u;
}

DenseUnitary fourier_operator_q6(long r, long m, int b) {
  require_positive(r, m);
  const long A = r * m;
  const double norm = 1.0 / std::sqrt(double(A));
  DenseUnitary u{A, std::vector<cplx>(A * A)};
  for (long k = 0; k < A; ++k) {
    Rat col = rat(-1, 12) + Rat(b) * (Rat(k) - rat(m, 4)) / r;
    for (long kb = 0; kb < A; ++kb) u.at(kb, k) = norm * PhaseExp(col + rat(k * k - 2 * k * kb, A)).to_complex();
  }
  return u;
}

DenseUnitary twisted_operator_q3plus(long r, long m, int b) {
  DenseUnitary d = fourier_operator_q6(r, m, b);
  DenseUnitary d2 = d * d;
  // the translation part acts first; its phase depends on the input index
  for (long k = 0; k < d2.dim; ++k) {
    cplx ph = PhaseExp(rat(m * (3 * b - 1), 3 * r) + rat(-2 * k, r)).to_complex();
    for (long i = 0; i < d2.dim; ++i) d2.at(i, k) *= ph;
  }
  return d2;
}

Gamma4Matrix gamma4_matrix(const StandardDescriptor& d, long m, long n) {
  if (m == 0) throw std::invalid_argument("gamma_4 acts on ground states only for m != 0");
  const long r = d.r;
  const int q = d.type.q();
  const int sg = d.lambda.sign();
  bool flip = m < 0;
  if (flip) m = -m, n = -n;
  const int b = r % 2 != 0 ? 1 : 0;
  auto scaled = [](DenseUnitary u, const PhaseExp& p) {
    cplx c = p.to_complex();
    for (auto& x : u.a) x *= c;
    return u;
  };
  switch (d.type.kind) {
    case TypeKind::T1: {
      if (!d.iota) throw std::invalid_argument("L1 descriptor needs iota");
      auto [i1, i2] = *d.iota;
      // the mirror lattice with negated first coordinate carries (-m, -n)
      return shift_operator_q1(r, m, n, flip ? -i1 : i1, i2);
    }
    case TypeKind::T2:
      return reflection_operator_q2(r, m, n, 0, 0);
    case TypeKind::T2plus: {
      if (!d.iota) throw std::invalid_argument("L2+ descriptor needs iota");
      if (r % 2 != 0) throw std::invalid_argument("L2+ needs even r");
      auto [i1, i2] = *d.iota;
      return reflection_operator_q2(r, m, n, i1, flip ? -i2 : i2);
    }
    case TypeKind::T4:
    case TypeKind::T4plus: {
      int a = d.type.kind == TypeKind::T4plus ? 1 : 0;
      if (a == 1 && r % 2 != 0) throw std::invalid_argument("L4+ needs even r");
      return scaled(fourier_operator_q4(r, m, a), PhaseExp(rat(sg * n, 2)));
    }
    case TypeKind::T6:
      return scaled(fourier_operator_q6(r, m, b), PhaseExp(rat(sg * n, 3)));
    case TypeKind::T3: {
      DenseUnitary d1 = fourier_operator_q6(r, m, b);
      return scaled(d1 * d1, PhaseExp(rat(2 * sg * n, 3)));
    }
    case TypeKind::T3plus:
      if (r % 3 != 0) throw std::invalid_argument("L3+ needs r divisible by 3");
      return scaled(twisted_operator_q3plus(r, m, b), PhaseExp(rat(2 * sg * n, 3)));
  }
  (void)q;
  throw std::logic_error("unreachable type");
}

// ---- orders, traces, eigenvalue multiplicities ------------------------------

long gamma4_order(const Gamma4Matrix& g, long max_order) {
  if (auto p = std::get_if<GenPermMatrix>(&g)) {
    GenPermMatrix acc = *p;
    for (long N = 1; N <= max_order; ++N) {
      if (acc.is_identity()) return N;
      acc = compose(*p, acc);
    }
  } else {
    const auto& u = std::get<DenseUnitary>(g);
    DenseUnitary acc = u;
    for (long N = 1; N <= max_order; ++N) {
      if (acc.distance_to_identity() < kTol.eig) return N;
      acc = u * acc;
    }
  }
  throw OracleFailure("gamma_4 matrix has no finite order up to " + std::to_string(max_order));
}

long fixed_dim(const GenPermMatrix& g, const PhaseExp& eig) {
  // a cycle of length L and phase product P has the L-th roots of P as eigenvalues
  std::vector<bool> seen(g.dim, false);
  long count = 0;
  for (long k = 0; k < g.dim; ++k) {
    if (seen[k]) continue;
    long len = 0, j = k;
    PhaseExp prod;
    do {
      seen[j] = true;
      prod = prod * g.phase[j];
      j = g.perm[j];
      ++len;
    } while (j != k);
    if (eig.pow(len) == prod) ++count;
  }
  return count;
}

long fixed_dim(const DenseUnitary& g, const PhaseExp& eig, long order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  cplx sum = 0;
  DenseUnitary acc = DenseUnitary::identity(g.dim);
  for (long p = 0; p < order; ++p) {
    sum += eig.pow(-p).to_complex() * acc.trace();
    acc = g * acc;
  }
  sum /= double(order);
  double rounded = std::round(sum.real());
  if (std::abs(sum - rounded) > 1e-6)
    throw OracleFailure("trace average is not an integer: " + std::to_string(sum.real()) + " + " +
                        std::to_string(sum.imag()) + "i");
  return static_cast<long>(rounded);
}

long fixed_dim(const Gamma4Matrix& g, const PhaseExp& eig) {
  if (auto p = std::get_if<GenPermMatrix>(&g)) return fixed_dim(*p, eig);
  return fixed_dim(std::get<DenseUnitary>(g), eig, gamma4_order(g));
}

cplx trace_power(const Gamma4Matrix& g, long p) {
  if (auto gp = std::get_if<GenPermMatrix>(&g)) return gp->trace_power(p);
  const auto& u = std::get<DenseUnitary>(g);
  DenseUnitary acc = DenseUnitary::identity(u.dim);
  for (long s = 0; s < p; ++s) acc = u * acc;
  return acc.trace();
}

}  // namespace osc
