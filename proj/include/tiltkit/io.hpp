#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/complex.hpp"

namespace tiltkit {

// --- parsed file forms -------------------------------------------------------------

struct FieldSpec {
  bool rational = false;
  std::uint32_t prime = 0;
};

struct AlgebraSpec {
  FieldSpec field;
  QuiverPresentation quiver;
};

/// One summand of a differential entry: (num/den) * path, the path written as
/// whitespace-separated arrow labels (a single vertex label is a lazy path).
struct ExprTerm {
  long long num = 1;
  long long den = 1;
  std::vector<std::string> labels;
};

struct ComplexSpec {
  std::string algebra_label;  // informational
  std::map<int, std::vector<std::string>> terms;
  struct DiffEntry {
    int degree = 0;
    int row = 0, col = 0;
    std::vector<ExprTerm> expr;
    int line = 0;
  };
  std::vector<DiffEntry> diffs;
};

/// Parse errors carry 1-based line positions and the offending text.
AlgebraSpec parse_algebra_file(const std::string& path);
AlgebraSpec parse_algebra_text(const std::string& text, const std::string& name);
ComplexSpec parse_complex_file(const std::string& path);
ComplexSpec parse_complex_text(const std::string& text, const std::string& name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// --- builders ----------------------------------------------------------------------

template <class K>
AlgPtr<K> build_algebra(const AlgebraSpec& spec) {
  return algebra_from_quiver<K>(spec.quiver);
}

/// Evaluates a path expression in the parent algebra of a quiver.
template <class K>
Vec<K> eval_expr(const Algebra<K>& A, const std::vector<ExprTerm>& expr) {
  check(A.quiver != nullptr, "eval_expr: algebra has no quiver presentation");
  const QuiverPresentation& q = A.quiver->pres;
  Vec<K> out = zero_vec<K>(A.dim());
  for (const auto& t : expr) {
    check(!t.labels.empty(), "empty path expression");
    Vec<K> acc;
    if (t.labels.size() == 1 && q.vertex_index(t.labels[0]) >= 0) {
      acc = A.idems[q.vertex_index(t.labels[0])];
    } else {
      bool first = true;
      for (const auto& lbl : t.labels) {
        int a = q.arrow_index(lbl);
        check(a >= 0, "unknown arrow label '" + lbl + "' in path expression");
        // the arrow is a basis element of the algebra
        int b = -1;
        for (std::size_t i = 0; i < A.dim(); ++i)
          if (A.quiver->words[i] == std::vector<int>{a}) b = static_cast<int>(i);
        check(b >= 0, "arrow '" + lbl + "' vanishes in the algebra");
        acc = first ? basis_elem(A, b) : multiply(A, acc, basis_elem(A, b));
        first = false;
      }
    }
    check(t.den != 0, "zero denominator in path expression");
    K c = K::from_int(t.num) / K::from_int(t.den);
    axpy(out, c, acc);
  }
  return out;
}

/// Builds a complex over the algebra itself.
template <class K>
ProjComplex<K> build_complex(const ComplexSpec& spec, const AlgPtr<K>& A) {
  check(A->quiver != nullptr, "build_complex: algebra has no quiver presentation");
  const QuiverPresentation& q = A->quiver->pres;
  ProjComplex<K> X;
  X.A = A;
  check(!spec.terms.empty(), "complex file declares no terms");
  X.lo = spec.terms.begin()->first;
  int hi = spec.terms.rbegin()->first;
  for (int d = X.lo; d <= hi; ++d) {
    std::vector<int> t;
    auto it = spec.terms.find(d);
    if (it != spec.terms.end())
      for (const auto& lbl : it->second) {
        int v = q.vertex_index(lbl);
        check(v >= 0, "unknown vertex label '" + lbl + "' in term");
        t.push_back(v);
      }
    X.terms.push_back(std::move(t));
  }
  for (int d = X.lo; d < hi; ++d)
    X.diffs.emplace_back(X.summand_count(d + 1), X.summand_count(d), A->dim());
  for (const auto& e : spec.diffs) {
    check(e.degree >= X.lo && e.degree < hi,
          "diff line " + std::to_string(e.line) + ": degree out of range");
    AlgMat<K>& m = X.diffs[e.degree - X.lo];
    check(e.row >= 0 && static_cast<std::size_t>(e.row) < m.rows && e.col >= 0 &&
              static_cast<std::size_t>(e.col) < m.cols,
          "diff line " + std::to_string(e.line) + ": entry position out of range");
    m.at(e.row, e.col) = eval_expr(*A, e.expr);
  }
  validate(X);
  return X;
}

/// Builds a complex over a corner: vertex labels come from the parent, the
/// entries are parent path expressions restricted to the corner.
template <class K>
ProjComplex<K> build_corner_complex(const ComplexSpec& spec, const AlgPtr<K>& A,
                                    const CornerAlgebra<K>& C) {
  const QuiverPresentation& q = A->quiver->pres;
  std::vector<int> idem_pos(A->nidem(), -1);
  for (std::size_t t = 0; t < C.idem_to_parent.size(); ++t)
    idem_pos[C.idem_to_parent[t]] = static_cast<int>(t);
  std::vector<int> basis_pos(A->dim(), -1);
  for (std::size_t b = 0; b < C.basis_to_parent.size(); ++b)
    basis_pos[C.basis_to_parent[b]] = static_cast<int>(b);

  ProjComplex<K> X;
  X.A = C.alg;
  check(!spec.terms.empty(), "complex file declares no terms");
  X.lo = spec.terms.begin()->first;
  int hi = spec.terms.rbegin()->first;
  for (int d = X.lo; d <= hi; ++d) {
    std::vector<int> t;
    auto it = spec.terms.find(d);
    if (it != spec.terms.end())
      for (const auto& lbl : it->second) {
        int v = q.vertex_index(lbl);
        check(v >= 0, "unknown vertex label '" + lbl + "' in term");
        check(idem_pos[v] >= 0,
              "vertex '" + lbl + "' lies outside the idempotent subset");
        t.push_back(idem_pos[v]);
      }
    X.terms.push_back(std::move(t));
  }
  for (int d = X.lo; d < hi; ++d)
    X.diffs.emplace_back(X.summand_count(d + 1), X.summand_count(d), C.alg->dim());
  for (const auto& e : spec.diffs) {
    check(e.degree >= X.lo && e.degree < hi,
          "diff line " + std::to_string(e.line) + ": degree out of range");
    AlgMat<K>& m = X.diffs[e.degree - X.lo];
    check(e.row >= 0 && static_cast<std::size_t>(e.row) < m.rows && e.col >= 0 &&
              static_cast<std::size_t>(e.col) < m.cols,
          "diff line " + std::to_string(e.line) + ": entry position out of range");
    Vec<K> parent = eval_expr(*A, e.expr);
    Vec<K> local = zero_vec<K>(C.alg->dim());
    for (std::size_t b = 0; b < A->dim(); ++b)
      if (!parent[b].is_zero()) {
        check(basis_pos[b] >= 0, "diff line " + std::to_string(e.line) +
                                     ": entry leaves the corner algebra");
        local[basis_pos[b]] = parent[b];
      }
    m.at(e.row, e.col) = local;
  }
  validate(X);
  return X;
}

/// Line-oriented serialization; parsing the output reproduces the complex.
template <class K>
std::string serialize_complex(const ProjComplex<K>& X, const std::string& algebra_label) {
  const Algebra<K>& A = *X.A;
  check(!A.path_exprs.empty(), "serialize_complex: algebra carries no path expressions");
  std::string out = "algebra " + algebra_label + "\n";
  for (int d = X.lo; d <= X.hi(); ++d) {
    if (X.summand_count(d) == 0) continue;
    out += "term " + std::to_string(d);
    for (int i : X.term(d)) {
      // the label of the distinguished idempotent: its lazy-path expression
      std::string lbl;
      for (std::size_t b = 0; b < A.dim(); ++b)
        if (!A.idems[i][b].is_zero()) lbl = A.path_exprs[b];
      out += " " + lbl;
    }
    out += "\n";
  }
  for (int d = X.lo; d < X.hi(); ++d) {
    const AlgMat<K> m = X.diff(d);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) {
        const Vec<K>& z = m.at(r, c);
        if (is_zero_vec(z)) continue;
        std::string expr;
        for (std::size_t b = 0; b < A.dim(); ++b) {
          if (z[b].is_zero()) continue;
          if (!expr.empty()) expr += " + ";
          if (!(z[b] == K::one())) expr += z[b].str() + "* ";
          expr += A.path_exprs[b];
        }
        out += "diff " + std::to_string(d) + " " + std::to_string(r) + " " +
               std::to_string(c) + " " + expr + "\n";
      }
  }
  return out;
}

}  // namespace tiltkit
