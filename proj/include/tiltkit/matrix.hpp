#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tiltkit/common.hpp"
#include "tiltkit/field.hpp"

namespace tiltkit {

template <class K>
using Vec = std::vector<K>;

template <class K>
Vec<K> zero_vec(std::size_t n) {
  return Vec<K>(n, K::zero());
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class K>
void axpy(Vec<K>& y, const K& c, const Vec<K>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

/// Dense matrix over an exact field.  Row-major; immutable in spirit — the
/// engine treats matrices as values and never shares mutable state across
/// threads.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, K::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::one();
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      check(rows[i].size() == cols, "from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec<K> row(std::size_t r) const {
    return Vec<K>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  Vec<K> col(std::size_t c) const {
    Vec<K> v(rows_, K::zero());
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  bool is_zero() const { return is_zero_vec(a_); }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (x.a_[i] != y.a_[i]) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

// --- parallel kernels -------------------------------------------------------
//
// The row updates in elimination and the output rows of a product are
// independent, so the OpenMP versions produce bit-identical results to the
// serial reference implementations in tiltkit::ref below.  Small operands
// skip the parallel path entirely.

namespace detail {
constexpr std::size_t kParallelWork = 1 << 15;
}

template <class K>
Matrix<K> mul(const Matrix<K>& a, const Matrix<K>& b) {
  check(a.cols() == b.rows(), "mul: dimension mismatch");
  Matrix<K> c(a.rows(), b.cols());
  const std::size_t work = a.rows() * a.cols() * b.cols();
  const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static) if (work > detail::kParallelWork)
  for (long i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const K& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

template <class K>
Matrix<K> add(const Matrix<K>& a, const Matrix<K>& b) {
  check(a.rows() == b.rows() && a.cols() == b.cols(), "add: dimension mismatch");
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

template <class K>
Matrix<K> negate(const Matrix<K>& a) {
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = -a.at(i, j);
  return c;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

/// Row vector times matrix.
template <class K>
Vec<K> apply_row(const Vec<K>& v, const Matrix<K>& m) {
  check(v.size() == m.rows(), "apply_row: dimension mismatch");
  Vec<K> out(m.cols(), K::zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

/// Matrix times column vector.
template <class K>
Vec<K> apply_col(const Matrix<K>& m, const Vec<K>& v) {
  check(v.size() == m.cols(), "apply_col: dimension mismatch");
  Vec<K> out(m.rows(), K::zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out[i] += m.at(i, j) * v[j];
  return out;
}

template <class K>
struct RrefResult {
  Matrix<K> mat;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form.  Pivot is the first nonzero entry in column
/// order, scanning rows top to bottom, so the result is deterministic.
template <class K>
RrefResult<K> rref(const Matrix<K>& input) {
  Matrix<K> m = input;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, pc).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(sel, j));
    K piv_inv = m.at(pr, pc).inv();
    for (std::size_t j = pc; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * piv_inv;
    const std::size_t work = m.rows() * (m.cols() - pc);
    const long nrows = static_cast<long>(m.rows());
#pragma omp parallel for schedule(static) if (work > detail::kParallelWork)
    for (long r = 0; r < nrows; ++r) {
      if (static_cast<std::size_t>(r) == pr) continue;
      K f = m.at(r, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

/// Columns form a basis of { x : m x = 0 }.
template <class K>
Matrix<K> nullspace(const Matrix<K>& m) {
  RrefResult<K> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<K> ns(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    ns.at(fc, k) = K::one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      ns.at(r.pivots[i], k) = -r.mat.at(i, fc);
  }
  return ns;
}

/// Particular solution of m x = b, or nullopt when inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  check(b.size() == m.rows(), "solve: dimension mismatch");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult<K> r = rref(aug);
  Vec<K> x(m.cols(), K::zero());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == m.cols()) return std::nullopt;  // pivot in the b column
    x[r.pivots[i]] = r.mat.at(i, m.cols());
  }
  return x;
}

/// Basis of the column space: the pivot columns of the input itself.
template <class K>
Matrix<K> image_basis(const Matrix<K>& m) {
  RrefResult<K> r = rref(m);
  Matrix<K> im(m.rows(), r.pivots.size());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) im.at(i, k) = m.at(i, r.pivots[k]);
  return im;
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  check(m.rows() == m.cols(), "inverse: not square");
  if (m.rows() == 0) return m;
  Matrix<K> aug(m.rows(), 2 * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols() + i) = K::one();
  }
  RrefResult<K> r = rref(aug);
  check(r.pivots.size() == m.rows() && r.pivots.back() == m.rows() - 1,
        "inverse: singular matrix");
  Matrix<K> inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inv.at(i, j) = r.mat.at(i, m.cols() + j);
  return inv;
}

/// Coset representatives spanning a complement of the subspace spanned by the
/// columns of `sub` inside k^ambient: the standard basis vectors at the
/// non-pivot coordinates of the subspace's echelon form.
template <class K>
Matrix<K> quotient_basis(const Matrix<K>& sub, std::size_t ambient) {
  check(sub.rows() == ambient || sub.cols() == 0, "quotient_basis: dimension mismatch");
  RrefResult<K> r = rref(transpose(sub));
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::size_t k = 0;
  Matrix<K> q(ambient, ambient - r.pivots.size());
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) q.at(c, k++) = K::one();
  return q;
}

// --- serial reference implementations ---------------------------------------
//
// Kept verbatim, without pragmas, as the ground truth the parallel kernels
// are tested and benchmarked against.

namespace ref {

template <class K>
Matrix<K> mul(const Matrix<K>& a, const Matrix<K>& b) {
  check(a.cols() == b.rows(), "ref::mul: dimension mismatch");
  Matrix<K> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const K& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

template <class K>
RrefResult<K> rref(const Matrix<K>& input) {
  Matrix<K> m = input;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, pc).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(sel, j));
    K piv_inv = m.at(pr, pc).inv();
    for (std::size_t j = pc; j < m.cols(); ++j) m.at(pr, j) = m.at(pr, j) * piv_inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      K f = m.at(r, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace ref

/// Repeated-solve helper for a fixed tall matrix of full column rank: selects
/// an invertible square of rows once, then each solve is a multiplication.
/// Callers guarantee consistency of the right-hand sides.
template <class K>
class ColumnSolver {
 public:
  ColumnSolver() = default;
  explicit ColumnSolver(const Matrix<K>& B) : cols_(B.cols()) {
    RrefResult<K> r = rref(transpose(B));
    rows_ = r.pivots;
    check(rows_.size() == cols_, "ColumnSolver: matrix lacks full column rank");
    Matrix<K> sel(cols_, cols_);
    for (std::size_t i = 0; i < cols_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) sel.at(i, j) = B.at(rows_[i], j);
    inv_ = inverse(sel);
  }

  Vec<K> solve(const Vec<K>& v) const {
    Vec<K> vs(cols_, K::zero());
    for (std::size_t i = 0; i < cols_; ++i) vs[i] = v[rows_[i]];
    return apply_col(inv_, vs);
  }

 private:
  std::size_t cols_ = 0;
  std::vector<std::size_t> rows_;
  Matrix<K> inv_;
};

// --- incremental echelon ----------------------------------------------------

/// Incrementally maintained reduced row echelon basis of a subspace of
/// row vectors.  Workhorse for span, membership and quotient computations.
template <class K>
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<K>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating all current pivots.
  Vec<K> reduce(Vec<K> v) const {
    check(v.size() == ambient_, "Echelon::reduce: dimension mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const K& c = v[pivots_[i]];
      if (c.is_zero()) continue;
      K f = c;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v to the span; returns false when v was already in it.
  bool add(const Vec<K>& v) {
    Vec<K> r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    K inv = r[p].inv();
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = r[j] * inv;
    // keep the existing rows reduced against the new one
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      K f = rows_[i][p];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) rows_[i][j] -= f * r[j];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
  }

  void add_all(const std::vector<Vec<K>>& vs) {
    for (const auto& v : vs) add(v);
  }

 private:
  std::size_t ambient_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tiltkit
