#include "osc/oracle.hpp"

#include <cmath>
#include <numbers>

#include "osc/lattice.hpp"

namespace osc {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k)
      if (x.at(i, k) != 0)
        for (size_t j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
  return z;
}

Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& a, size_t i, size_t j) {
  for (size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
}
void swap_cols(IntMatrix& a, size_t i, size_t j) {
  for (size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
}
// row i += f * row j
void add_row(IntMatrix& a, size_t i, size_t j, const Int& f) {
  for (size_t c = 0; c < a.cols; ++c) a.at(i, c) += f * a.at(j, c);
}
void add_col(IntMatrix& a, size_t i, size_t j, const Int& f) {
  for (size_t r = 0; r < a.rows; ++r) a.at(r, i) += f * a.at(r, j);
}
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Int> SmithResult::torsion() const {
  std::vector<Int> t;
  for (const auto& f : factors)
    if (f > 1) t.push_back(f);
  return t;
}

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  IntMatrix d = m, u = IntMatrix::identity(m.rows), v = IntMatrix::identity(m.cols);
  const size_t n = std::min(m.rows, m.cols);
  size_t t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      size_t pi = 0, pj = 0;
      bool found = false;
      for (size_t i = t; i < d.rows; ++i)
        for (size_t j = t; j < d.cols; ++j)
          if (d.at(i, j) != 0 && (!found || abs(d.at(i, j)) < abs(d.at(pi, pj)))) pi = i, pj = j, found = true;
      if (!found) goto done;
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
      bool clean = true;
      for (size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = fdiv(d.at(i, t), d.at(t, t));
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = fdiv(d.at(t, j), d.at(t, t));
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (size_t i = t + 1; i < d.rows && divides; ++i)
        for (size_t j = t + 1; j < d.cols; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            add_row(d, t, i, Int(1));
            add_row(u, t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      for (size_t j = 0; j < d.cols; ++j) d.at(t, j) = -d.at(t, j);
      for (size_t j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
    }
    res.factors.push_back(d.at(t, t));
  }
done:
  res.free_rank = static_cast<long>(m.cols) - static_cast<long>(res.factors.size());
  res.u = u;
  res.v = v;
  res.d = d;
  return res;
}

// ---- z0 -------------------------------------------------------------------

Rat z0_power_solve(int q, const Rat& x, const Rat& y) {
  Frame f{q};
  FrameElement g = f.pow(FrameElement{{x, y}, Rat(0), 1}, q);
  if (g.p[0] != 0 || g.p[1] != 0) throw InternalError("q-th power is not central");
  // z0 enters the q-th power as q * z0
  return -g.z / q;
}

Rat z0_solve(int q, long r, const Rat& v, const Rat& w, const Rat& a, const Rat& b, bool plus) {
  if (q < 2) throw std::invalid_argument("z0 is defined for q >= 2");
  int q0 = (q % 2 == 0) ? 2 : 3;
  Rat rt(rem(r, q0));
  Rat x = plus ? Rat(v / r) : Rat(v / r - rt * v + rt * a);
  Rat y = plus ? Rat(w / r) : Rat(w / r - rt * w + rt * b);
  return z0_power_solve(q, x, y);
}

// ---- Gauss sums -------------------------------------------------------------

void PhaseSum::add(const PhaseExp& p, long count) { terms[p] += count; }

cplx PhaseSum::value() const {
  cplx s = 0;
  for (const auto& [p, c] : terms) s += double(c) * p.to_complex();
  return s;
}

static void check_gauss_args(long a, long b, long c) {
  if (a == 0 || c == 0) throw std::invalid_argument("Gauss sum needs ac != 0");
  if (rem(a * c + b, 2) != 0) throw std::invalid_argument("Gauss sum needs ac + b even");
}

PhaseSum gauss_sum_exact(long a, long b, long c) {
  check_gauss_args(a, b, c);
  PhaseSum s;
  for (long r = 0; r < std::labs(c); ++r) s.add(PhaseExp(rat(a * r * r + b * r, c)));
  return s;
}

cplx gauss_sum(long a, long b, long c) { return gauss_sum_exact(a, b, c).value(); }

cplx gauss_reciprocity_rhs(long a, long b, long c) {
  check_gauss_args(a, b, c);
  PhaseSum inner;
  for (long r = 0; r < std::labs(a); ++r) inner.add(PhaseExp(rat(-(c * r * r + b * r), a)));
  PhaseExp pre(rat(std::labs(a * c) - b * b, 4 * a * c));
  return std::sqrt(std::fabs(double(c) / double(a))) * pre.to_complex() * inner.value();
}

// ---- ideal counts in Z[i] ---------------------------------------------------

long gaussian_ideal_count(long a) {
  if (a < 1) throw std::invalid_argument("norm must be positive");
  long count = 1;
  long n = a;
  while (n % 2 == 0) n /= 2;
  for (long p = 3; p * p <= n; p += 2) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e == 0) continue;
    if (p % 4 == 1)
      count *= e + 1;
    else if (e % 2 != 0)
      return 0;
  }
  if (n > 1) {
    if (n % 4 == 1)
      count *= 2;
    else
      return 0;
  }
  return count;
}

// ---- ladder Casimir ---------------------------------------------------------

LadderVerdict ladder_casimir(RepKind kind, double p1, double p2, long n) {
  if (n < 8) throw std::invalid_argument("ladder truncation must be >= 8");
  using std::numbers::pi;
  const cplx I(0, 1);
  LadderVerdict out;
  out.truncation = n;
  if (kind == RepKind::C) {
    out.matrix = {0.0};
    out.scalar = 0.0;
    out.interior_rows = 1;
    return out;
  }
  // dim x dim operators, column j = image of basis vector j
  long dim = kind == RepKind::F ? n : 2 * n + 1;
  auto zero = [&] { return std::vector<cplx>(dim * dim, 0.0); };
  std::vector<cplx> X = zero(), Y = zero(), Z = zero(), T = zero();
  auto mm = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> c = zero();
    for (long i = 0; i < dim; ++i)
      for (long k = 0; k < dim; ++k)
        if (a[i * dim + k] != 0.0)
          for (long j = 0; j < dim; ++j) c[i * dim + j] += a[i * dim + k] * b[k * dim + j];
    return c;
  };
  std::vector<bool> interior(dim, true);
  if (kind == RepKind::F) {
    double c = p1, d = p2 / pi, ac = std::fabs(c);
    std::vector<cplx> Ap = zero(), Am = zero();
    for (long j = 0; j < dim; ++j) {
      if (j + 1 < dim) Ap[(j + 1) * dim + j] = 2.0 * std::sqrt(pi * ac * (j + 1));
      if (j >= 1) Am[(j - 1) * dim + j] = -2.0 * std::sqrt(pi * ac * j);
      Z[j * dim + j] = 2.0 * pi * I * c;
      T[j * dim + j] = (c > 0 ? (2 * pi * d - j) : (2 * pi * d + j)) * I;
    }
    // X + iY is A+ for c > 0 and A- for c < 0
    const auto& P = c > 0 ? Ap : Am;
    const auto& M = c > 0 ? Am : Ap;
    for (long k = 0; k < dim * dim; ++k) {
      X[k] = (P[k] + M[k]) / 2.0;
      Y[k] = (P[k] - M[k]) / (2.0 * I);
    }
    interior[dim - 1] = false;  // A- A+ leaves the window from the top row
  } else {
    double a = std::sqrt(p1), tau = p2;
    std::vector<cplx> P = zero(), M = zero();  // X + iY, X - iY on phi_{j - n}
    for (long j = 0; j < dim; ++j) {
      if (j >= 1) P[(j - 1) * dim + j] = 2.0 * pi * I * a;
      if (j + 1 < dim) M[(j + 1) * dim + j] = 2.0 * pi * I * a;
      T[j * dim + j] = I * (double(j - n) + tau);
    }
    for (long k = 0; k < dim * dim; ++k) {
      X[k] = (P[k] + M[k]) / 2.0;
      Y[k] = (P[k] - M[k]) / (2.0 * I);
    }
    interior[0] = interior[dim - 1] = false;
  }
  auto X2 = mm(X, X), Y2 = mm(Y, Y), ZT = mm(Z, T);
  out.matrix.resize(dim * dim);
  for (long k = 0; k < dim * dim; ++k) out.matrix[k] = X2[k] + Y2[k] + 2.0 * ZT[k];
  long first = -1;
  for (long i = 0; i < dim; ++i)
    if (interior[i]) {
      if (first < 0) first = i;
      ++out.interior_rows;
    }
  out.scalar = out.matrix[first * dim + first];
  for (long i = 0; i < dim; ++i) {
    if (!interior[i]) continue;
    for (long j = 0; j < dim; ++j) {
      if (!interior[j]) continue;
      cplx e = out.matrix[i * dim + j];
      if (i == j)
        out.max_diag_spread = std::max(out.max_diag_spread, std::abs(e - out.scalar));
      else
        out.max_offdiag = std::max(out.max_offdiag, std::abs(e));
    }
  }
  double scale = std::max(1.0, std::abs(out.scalar));
  if (out.max_offdiag > 1e-10 * scale || out.max_diag_spread > 1e-10 * scale)
    throw OracleFailure("ladder Casimir interior block is not scalar");
  return out;
}

}  // namespace osc
