#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith/Hermite normal
// forms with unimodular multipliers, integer kernels and lattice arithmetic,
// plus Gaussian elimination over F_p. Everything is int64; inputs in this
// project are small lattice data, not numerical matrices.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modsat {

using i64 = long long;
using Vec = std::vector<i64>;

struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};
struct input_error : error {
  explicit input_error(const std::string& m) : error(m) {}
};
struct hypothesis_error : error {
  explicit hypothesis_error(const std::string& m) : error(m) {}
};
struct internal_error : error {
  explicit internal_error(const std::string& m) : error(m) {}
};

class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, 0) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols())
        throw input_error("ragged matrix rows");
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
      if (static_cast<int>(cols[j].size()) != m.rows())
        throw input_error("ragged matrix columns");
      for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  i64& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  i64 operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * c_ + j];
  }

  Vec col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec row(int i) const {
    Vec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vec& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
  bool is_zero() const {
    for (i64 x : a_)
      if (x != 0) return false;
    return true;
  }

 private:
  int r_, c_;
  std::vector<i64> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw internal_error("matmul shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      i64 v = a(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
    }
  return c;
}

inline Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw internal_error("matvec shape mismatch");
  Vec y(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

inline Mat scalar_mul(i64 s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline Mat hconcat(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw internal_error("hconcat shape mismatch");
  Mat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

inline Mat mat_pow(Mat a, i64 e) {
  Mat r = Mat::identity(a.rows());
  while (e > 0) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

inline i64 dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw internal_error("dot shape mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
inline Vec vsub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
inline Vec vneg(const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}
inline Vec vscale(i64 s, const Vec& a) {
  Vec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}
inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Smith normal form: U * A * V = D with U, V unimodular, D diagonal with
// d_1 | d_2 | ... (nonnegative).

struct SmithResult {
  Mat d, u, v;               // u: rows x rows, v: cols x cols
  std::vector<i64> divisors;  // nonzero diagonal entries, in divisibility order
};

inline SmithResult smith_normal_form(Mat a) {
  const int r = a.rows(), c = a.cols();
  Mat u = Mat::identity(r), v = Mat::identity(c);

  auto row_add = [&](int dst, int src, i64 k) {
    for (int j = 0; j < c; ++j) a(dst, j) += k * a(src, j);
    for (int j = 0; j < r; ++j) u(dst, j) += k * u(src, j);
  };
  auto col_add = [&](int dst, int src, i64 k) {
    for (int i = 0; i < r; ++i) a(i, dst) += k * a(i, src);
    for (int i = 0; i < c; ++i) v(i, dst) += k * v(i, src);
  };
  auto row_swap = [&](int x, int y) {
    if (x == y) return;
    for (int j = 0; j < c; ++j) std::swap(a(x, j), a(y, j));
    for (int j = 0; j < r; ++j) std::swap(u(x, j), u(y, j));
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < r; ++i) std::swap(a(i, x), a(i, y));
    for (int i = 0; i < c; ++i) std::swap(v(i, x), v(i, y));
  };
  auto row_neg = [&](int x) {
    for (int j = 0; j < c; ++j) a(x, j) = -a(x, j);
    for (int j = 0; j < r; ++j) u(x, j) = -u(x, j);
  };

  int t = 0;
  const int n = std::min(r, c);
  while (t < n) {
    // find pivot of minimal absolute value in the trailing block
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        i64 x = a(i, j) < 0 ? -a(i, j) : a(i, j);
        if (x != 0 && (pi < 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    if (a(t, t) < 0) row_neg(t);

    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (a(i, t) % a(t, t) != 0) {
        clean = false;
      }
      row_add(i, t, -(a(i, t) / a(t, t)));
      if (a(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < c; ++j) {
      col_add(j, t, -(a(t, j) / a(t, t)));
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot changed size, redo this step

    // enforce divisibility d_t | trailing entries
    bool div_ok = true;
    for (int i = t + 1; i < r && div_ok; ++i)
      for (int j = t + 1; j < c && div_ok; ++j)
        if (a(i, j) % a(t, t) != 0) {
          row_add(t, i, 1);
          div_ok = false;
        }
    if (!div_ok) continue;
    ++t;
  }

  SmithResult res;
  res.d = a;
  res.u = u;
  res.v = v;
  for (int i = 0; i < n; ++i)
    if (a(i, i) != 0) res.divisors.push_back(a(i, i));
  return res;
}

inline int rank_z(const Mat& a) {
  return static_cast<int>(smith_normal_form(a).divisors.size());
}

// Basis of the integer kernel {x : A x = 0}, as columns.
inline Mat integer_kernel(const Mat& a) {
  SmithResult s = smith_normal_form(a);
  int rk = static_cast<int>(s.divisors.size());
  Mat k(a.cols(), a.cols() - rk);
  for (int j = rk; j < a.cols(); ++j)
    for (int i = 0; i < a.cols(); ++i) k(i, j - rk) = s.v(i, j);
  return k;
}

// One integer solution of A x = b, if any.
inline std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
  SmithResult s = smith_normal_form(a);
  Vec ub = s.u * b;
  Vec z(a.cols(), 0);
  int rk = static_cast<int>(s.divisors.size());
  for (int i = 0; i < a.rows(); ++i) {
    if (i < rk) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      z[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * z;
}

// Column Hermite form used as a canonical form for a column span (lattice).
// Returns a matrix whose columns are a canonical basis of the lattice
// generated by the columns of A.
inline Mat lattice_basis(const Mat& a) {
  if (a.cols() == 0) return Mat(a.rows(), 0);
  Mat h = a;
  const int r = h.rows();
  int row = 0, col = 0;
  auto col_add = [&](int dst, int src, i64 k) {
    for (int i = 0; i < r; ++i) h(i, dst) += k * h(i, src);
  };
  auto col_swap = [&](int x, int y) {
    if (x == y) return;
    for (int i = 0; i < r; ++i) std::swap(h(i, x), h(i, y));
  };
  while (row < r && col < h.cols()) {
    // gcd out row `row` across columns col..end
    while (true) {
      int p = -1;
      i64 best = 0;
      for (int j = col; j < h.cols(); ++j) {
        i64 x = h(row, j) < 0 ? -h(row, j) : h(row, j);
        if (x != 0 && (p < 0 || x < best)) {
          best = x;
          p = j;
        }
      }
      if (p < 0) break;
      col_swap(col, p);
      if (h(row, col) < 0)
        for (int i = 0; i < r; ++i) h(i, col) = -h(i, col);
      bool done = true;
      for (int j = col + 1; j < h.cols(); ++j) {
        col_add(j, col, -(h(row, j) / h(row, col)));
        if (h(row, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) != 0) {
      // reduce earlier columns against this pivot
      for (int j = 0; j < col; ++j) {
        i64 q = h(row, j) / h(row, col);
        if (h(row, j) % h(row, col) < 0) q -= 1;  // floor division
        col_add(j, col, -q);
      }
      ++col;
    }
    ++row;
  }
  Mat out(r, col);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < col; ++j) out(i, j) = h(i, j);
  return out;
}

inline bool same_lattice(const Mat& a, const Mat& b) {
  return lattice_basis(a) == lattice_basis(b);
}

inline bool in_lattice(const Mat& a, const Vec& v) {
  return solve_integer(a, v).has_value();
}

// Basis (as columns) of the preimage lattice {x : F x in colspan(P)}.
inline Mat preimage_lattice(const Mat& f, const Mat& p) {
  if (p.cols() == 0) return integer_kernel(f);
  Mat stacked = hconcat(f, scalar_mul(-1, p));
  Mat k = integer_kernel(stacked);
  Mat top(f.cols(), k.cols());
  for (int i = 0; i < f.cols(); ++i)
    for (int j = 0; j < k.cols(); ++j) top(i, j) = k(i, j);
  return lattice_basis(top);
}

// Invariants of the quotient span(K)/span(L), assuming L <= span(K).
// Returns elementary divisors (>1 entries meaningful), free rank, and
// representative vectors for the torsion generators with divisor d_i.
struct QuotientInvariants {
  std::vector<i64> divisors;  // one per torsion generator, in div. order
  int free_rank = 0;
  std::vector<Vec> torsion_reps;  // in ambient coordinates
  std::vector<Vec> free_reps;
};

inline QuotientInvariants lattice_quotient(const Mat& kbasis, const Mat& lgens) {
  QuotientInvariants q;
  const int k = kbasis.cols();
  if (k == 0) return q;
  // coordinates of L generators in the K basis
  Mat y(k, lgens.cols());
  for (int j = 0; j < lgens.cols(); ++j) {
    auto sol = solve_integer(kbasis, lgens.col(j));
    if (!sol) throw internal_error("lattice_quotient: L not inside K");
    y.set_col(j, *sol);
  }
  if (lgens.cols() == 0) {
    q.free_rank = k;
    for (int j = 0; j < k; ++j) q.free_reps.push_back(kbasis.col(j));
    return q;
  }
  SmithResult s = smith_normal_form(y);
  // New basis of span(K): columns of kbasis * u^{-1}; quotient is
  // (+) Z/d_i (+) Z^{k - rank}. u is unimodular; invert columnwise.
  Mat uinv_m(k, k);
  for (int j = 0; j < k; ++j) {
    Vec e(k, 0);
    e[j] = 1;
    auto col = solve_integer(s.u, e);
    if (!col) throw internal_error("unimodular inverse failed");
    uinv_m.set_col(j, *col);
  }
  Mat nb = kbasis * uinv_m;
  int rk = static_cast<int>(s.divisors.size());
  for (int i = 0; i < rk; ++i) {
    if (s.divisors[i] != 1) {
      q.divisors.push_back(s.divisors[i]);
      q.torsion_reps.push_back(nb.col(i));
    }
  }
  q.free_rank = k - rk;
  for (int i = rk; i < k; ++i) q.free_reps.push_back(nb.col(i));
  return q;
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p.

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline i64 mod_norm(i64 x, i64 p) {
  x %= p;
  if (x < 0) x += p;
  return x;
}

inline i64 mod_inv(i64 a, i64 p) {
  // p prime
  i64 t = 0, nt = 1, r = p, nr = mod_norm(a, p);
  while (nr != 0) {
    i64 qt = r / nr;
    std::swap(t -= qt * nt, nt);
    std::swap(r -= qt * nr, nr);
  }
  if (r != 1) throw internal_error("mod_inv: not invertible");
  return mod_norm(t, p);
}

class FpMat {
 public:
  FpMat() : r_(0), c_(0), p_(2) {}
  FpMat(int r, int c, i64 p) : r_(r), c_(c), p_(p), a_(size_t(r) * c, 0) {}
  static FpMat reduce(const Mat& m, i64 p) {
    FpMat f(m.rows(), m.cols(), p);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) f(i, j) = mod_norm(m(i, j), p);
    return f;
  }
  static FpMat identity(int n, i64 p) {
    FpMat f(n, n, p);
    for (int i = 0; i < n; ++i) f(i, i) = 1;
    return f;
  }
  int rows() const { return r_; }
  int cols() const { return c_; }
  i64 p() const { return p_; }
  i64& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  i64 operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }
  bool operator==(const FpMat& o) const {
    return r_ == o.r_ && c_ == o.c_ && p_ == o.p_ && a_ == o.a_;
  }

  Vec col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const Vec& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = mod_norm(v[i], p_);
  }

  friend FpMat operator*(const FpMat& a, const FpMat& b) {
    if (a.cols() != b.rows() || a.p_ != b.p_)
      throw internal_error("FpMat mul mismatch");
    FpMat c(a.rows(), b.cols(), a.p_);
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) {
        i64 v = a(i, k);
        if (v == 0) continue;
        for (int j = 0; j < b.cols(); ++j)
          c(i, j) = (c(i, j) + v * b(k, j)) % a.p_;
      }
    return c;
  }

 private:
  int r_, c_;
  i64 p_;
  std::vector<i64> a_;
};

// Row-reduce in place; returns pivot columns.
inline std::vector<int> fp_rref(FpMat& m) {
  std::vector<int> pivots;
  const i64 p = m.p();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
    i64 inv = mod_inv(m(row, col), p);
    for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv % p;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      i64 f = m(i, col);
      for (int j = 0; j < m.cols(); ++j)
        m(i, j) = mod_norm(m(i, j) - f * m(row, j), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int fp_rank(FpMat m) { return static_cast<int>(fp_rref(m).size()); }

// Kernel basis as columns.
inline FpMat fp_kernel(FpMat m) {
  const i64 p = m.p();
  const int c = m.cols();
  std::vector<int> pivots = fp_rref(m);
  std::vector<bool> is_pivot(c, false);
  for (int j : pivots) is_pivot[j] = true;
  FpMat k(c, c - static_cast<int>(pivots.size()), p);
  int out = 0;
  for (int j = 0; j < c; ++j) {
    if (is_pivot[j]) continue;
    k(j, out) = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      k(pivots[i], out) = mod_norm(-m(static_cast<int>(i), j), p);
    ++out;
  }
  return k;
}

// Solve M x = b over F_p (one solution), if consistent.
inline std::optional<Vec> fp_solve(const FpMat& m, const Vec& b) {
  FpMat aug(m.rows(), m.cols() + 1, m.p());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = mod_norm(b[i], m.p());
  }
  std::vector<int> pivots = fp_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(static_cast<int>(i), m.cols());
  return x;
}

// Canonical basis of the column span (columns of the rref of the transpose,
// transposed back); usable as a subspace identity.
inline FpMat fp_column_space(const FpMat& m) {
  FpMat t(m.cols(), m.rows(), m.p());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  std::vector<int> pivots = fp_rref(t);
  FpMat out(m.rows(), static_cast<int>(pivots.size()), m.p());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int i = 0; i < m.rows(); ++i)
      out(i, static_cast<int>(r)) = t(static_cast<int>(r), i);
  return out;
}

}  // namespace modsat
