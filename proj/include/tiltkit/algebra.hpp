#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltkit/matrix.hpp"

namespace tiltkit {

// --- quiver presentations ----------------------------------------------------

struct Arrow {
  std::string label;
  int src = 0;
  int tgt = 0;
};

/// One summand of a relation: (num/den) * path, the path given as a sequence
/// of arrow indices composing left to right.
struct RelTerm {
  long long num = 1;
  long long den = 1;
  std::vector<int> word;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelTerm>> relations;
  int nilpotency = 1;  // paths of length >= nilpotency vanish

  int vertex_index(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return static_cast<int>(i);
    return -1;
  }
  int arrow_index(const std::string& label) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].label == label) return static_cast<int>(i);
    return -1;
  }
};

/// Provenance kept on algebras built from a quiver: the path word behind each
/// basis element.  Words list arrow indices, composing left to right; an
/// empty word is the lazy path at the vertex given by the Peirce position.
struct QuiverData {
  QuiverPresentation pres;
  std::vector<std::vector<int>> words;
};

// --- algebras ----------------------------------------------------------------

/// Finite-dimensional algebra with a Peirce-adapted basis: every basis element
/// lies in exactly one component e_i A e_j of the distinguished orthogonal
/// idempotent decomposition.  Values are immutable once built.
template <class K>
struct Algebra {
  std::vector<std::string> labels;                 // per basis element
  std::vector<std::vector<Vec<K>>> mul_table;      // mul_table[i][j] = b_i * b_j
  Vec<K> unit;
  std::vector<Vec<K>> idems;                       // orthogonal, summing to unit
  std::vector<std::pair<int, int>> peirce;         // (i, j) per basis element
  std::optional<std::vector<Vec<K>>> radical;      // cached basis when known
  std::shared_ptr<const QuiverData> quiver;        // provenance, may be null
  std::vector<std::string> path_exprs;             // serializable expressions, may be empty

  // derived index structures, built by finalize()
  std::vector<std::vector<int>> row_of_idem;       // basis indices of e_i A
  std::vector<std::vector<std::vector<int>>> block;  // block[i][j]
  std::vector<int> block_pos;                      // position of b within its block

  std::size_t dim() const { return labels.size(); }
  std::size_t nidem() const { return idems.size(); }

  const std::vector<int>& block_indices(int i, int j) const { return block[i][j]; }

  void finalize() {
    const int m = static_cast<int>(idems.size());
    row_of_idem.assign(m, {});
    block.assign(m, std::vector<std::vector<int>>(m));
    block_pos.assign(dim(), -1);
    for (std::size_t b = 0; b < dim(); ++b) {
      auto [i, j] = peirce[b];
      check(i >= 0 && i < m && j >= 0 && j < m, "algebra: bad Peirce index");
      row_of_idem[i].push_back(static_cast<int>(b));
      block_pos[b] = static_cast<int>(block[i][j].size());
      block[i][j].push_back(static_cast<int>(b));
    }
  }
};

template <class K>
using AlgPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
Vec<K> basis_elem(const Algebra<K>& A, std::size_t i) {
  Vec<K> v(A.dim(), K::zero());
  v[i] = K::one();
  return v;
}

template <class K>
Vec<K> multiply(const Algebra<K>& A, const Vec<K>& x, const Vec<K>& y) {
  check(x.size() == A.dim() && y.size() == A.dim(), "multiply: dimension mismatch");
  Vec<K> out(A.dim(), K::zero());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], A.mul_table[i][j]);
    }
  }
  return out;
}

template <class K>
Vec<K> scale(const Vec<K>& x, const K& c) {
  Vec<K> out(x);
  for (auto& v : out) v = v * c;
  return out;
}

template <class K>
Vec<K> add_vec(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

template <class K>
Vec<K> sub_vec(const Vec<K>& x, const Vec<K>& y) {
  Vec<K> out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
  return out;
}

/// Basis of e_i A e_j as a list of basis indices.
template <class K>
const std::vector<int>& peirce_indices(const Algebra<K>& A, int i, int j) {
  check(i >= 0 && i < static_cast<int>(A.nidem()) && j >= 0 &&
            j < static_cast<int>(A.nidem()),
        "peirce: idempotent index out of range");
  return A.block[i][j];
}

/// Left multiplication by z as a k-linear map e_cA -> e_rA, in column-vector
/// convention with respect to the row_of_idem coordinate lists.
template <class K>
Matrix<K> left_mult_matrix(const Algebra<K>& A, const Vec<K>& z, int c, int r) {
  const auto& src = A.row_of_idem[c];
  const auto& dst = A.row_of_idem[r];
  std::vector<int> pos(A.dim(), -1);
  for (std::size_t t = 0; t < dst.size(); ++t) pos[dst[t]] = static_cast<int>(t);
  Matrix<K> L(dst.size(), src.size());
  for (std::size_t u = 0; u < src.size(); ++u) {
    Vec<K> img = multiply(A, z, basis_elem(A, src[u]));
    for (std::size_t b = 0; b < A.dim(); ++b) {
      if (img[b].is_zero()) continue;
      check(pos[b] >= 0, "left_mult_matrix: image leaves target row");
      L.at(pos[b], u) = img[b];
    }
  }
  return L;
}

// --- construction from a quiver ----------------------------------------------

namespace detail {

struct PathKey {
  int start;
  std::vector<int> word;
  bool operator<(const PathKey& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    if (start != o.start) return start < o.start;
    return word < o.word;
  }
};

}  // namespace detail

std::string render_path(const QuiverPresentation& q, int start, const std::vector<int>& word);

/// All paths of length < bound, ordered by (length, start, word); returns the
/// key list plus endpoint data.
std::vector<detail::PathKey> enumerate_paths(const QuiverPresentation& q);

void validate_presentation(const QuiverPresentation& q);

/// Path algebra modulo (relations) + (all paths of length >= nilpotency).
/// Basis: the path classes at the non-pivot coordinates of the relation
/// ideal's echelon form, found by degreewise spanning-set reduction.
template <class K>
AlgPtr<K> algebra_from_quiver(const QuiverPresentation& q) {
  validate_presentation(q);
  const auto paths = enumerate_paths(q);
  const std::size_t P = paths.size();
  std::map<detail::PathKey, std::size_t> index;
  for (std::size_t i = 0; i < P; ++i) index[paths[i]] = i;

  auto path_target = [&](const detail::PathKey& p) {
    return p.word.empty() ? p.start : q.arrows[p.word.back()].tgt;
  };

  // span of the two-sided ideal generated by the relations, inside the space
  // of paths of length < bound (longer paths are zero by fiat)
  Echelon<K> ideal(P);
  for (const auto& rel : q.relations) {
    std::size_t rel_len = rel.front().word.size();
    for (const auto& t : rel) rel_len = std::min(rel_len, t.word.size());
    for (const auto& pre : paths) {
      int pre_end = path_target(pre);
      if (pre.word.size() + rel_len >= static_cast<std::size_t>(q.nilpotency)) break;
      if (pre_end != q.arrows[rel.front().word.front()].src) continue;
      for (const auto& post : paths) {
        Vec<K> v(P, K::zero());
        bool nonzero = false;
        bool endpoint_ok = true;
        for (const auto& term : rel) {
          if (post.word.empty()) {
            int rel_tgt = q.arrows[term.word.back()].tgt;
            if (rel_tgt != post.start) { endpoint_ok = false; break; }
          } else {
            int rel_tgt = q.arrows[term.word.back()].tgt;
            if (rel_tgt != q.arrows[post.word.front()].src) { endpoint_ok = false; break; }
          }
          std::vector<int> w = pre.word;
          w.insert(w.end(), term.word.begin(), term.word.end());
          w.insert(w.end(), post.word.begin(), post.word.end());
          if (w.size() >= static_cast<std::size_t>(q.nilpotency)) continue;
          auto it = index.find(detail::PathKey{pre.start, w});
          check(it != index.end(), "quiver: internal path lookup failure");
          v[it->second] += K::from_int(term.num) / K::from_int(term.den);
          nonzero = true;
        }
        if (endpoint_ok && nonzero && !is_zero_vec(v)) ideal.add(v);
      }
    }
  }

  std::vector<bool> is_pivot(P, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < P; ++i)
    if (!is_pivot[i]) kept.push_back(i);
  std::vector<int> kept_pos(P, -1);
  for (std::size_t t = 0; t < kept.size(); ++t) kept_pos[kept[t]] = static_cast<int>(t);

  auto reduce_to_basis = [&](const Vec<K>& full) {
    Vec<K> r = ideal.reduce(full);
    Vec<K> out(kept.size(), K::zero());
    for (std::size_t i = 0; i < P; ++i) {
      if (r[i].is_zero()) continue;
      check(kept_pos[i] >= 0, "quiver: reduction left a pivot coordinate");
      out[kept_pos[i]] = r[i];
    }
    return out;
  };

  auto A = std::make_shared<Algebra<K>>();
  const std::size_t d = kept.size();
  A->labels.resize(d);
  A->path_exprs.resize(d);
  A->peirce.resize(d);
  auto qd = std::make_shared<QuiverData>();
  qd->pres = q;
  qd->words.resize(d);
  for (std::size_t t = 0; t < d; ++t) {
    const auto& p = paths[kept[t]];
    A->labels[t] = render_path(q, p.start, p.word);
    A->path_exprs[t] = A->labels[t];
    A->peirce[t] = {p.start, path_target(p)};
    qd->words[t] = p.word;
  }
  A->quiver = qd;

  A->mul_table.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
  for (std::size_t u = 0; u < d; ++u) {
    const auto& pu = paths[kept[u]];
    int u_end = path_target(pu);
    for (std::size_t v = 0; v < d; ++v) {
      const auto& pv = paths[kept[v]];
      if (pv.start != u_end) continue;  // non-composable, product is zero
      std::vector<int> w = pu.word;
      w.insert(w.end(), pv.word.begin(), pv.word.end());
      if (w.size() >= static_cast<std::size_t>(q.nilpotency)) continue;
      Vec<K> full(P, K::zero());
      full[index.at(detail::PathKey{pu.start, w})] = K::one();
      A->mul_table[u][v] = reduce_to_basis(full);
    }
  }

  // vertex idempotents; lazy paths survive reduction since the ideal sits in
  // the square of the arrow ideal
  const int nv = static_cast<int>(q.vertices.size());
  A->idems.assign(nv, zero_vec<K>(d));
  for (int i = 0; i < nv; ++i) {
    auto it = index.find(detail::PathKey{i, {}});
    check(it != index.end() && kept_pos[it->second] >= 0,
          "quiver: vertex idempotent reduced away (ideal not admissible)");
    A->idems[i][kept_pos[it->second]] = K::one();
  }
  A->unit = zero_vec<K>(d);
  for (int i = 0; i < nv; ++i) A->unit = add_vec(A->unit, A->idems[i]);

  std::vector<Vec<K>> rad;
  for (std::size_t t = 0; t < d; ++t)
    if (!qd->words[t].empty()) rad.push_back(basis_elem(*A, t));
  A->radical = std::move(rad);

  A->finalize();
  return A;
}

// --- radical ------------------------------------------------------------------

/// Jacobson radical basis.  Quiver-derived algebras carry the arrow ideal;
/// otherwise the trace-form radical is computed, which requires characteristic
/// zero or characteristic exceeding the dimension.
template <class K>
std::vector<Vec<K>> radical_basis(const Algebra<K>& A) {
  if (A.radical) return *A.radical;
  const std::uint64_t c = FieldInfo<K>::characteristic();
  if (c != 0 && c <= A.dim())
    fail("radical: characteristic too small for the trace method and no quiver provenance");
  const std::size_t d = A.dim();
  Vec<K> tr(d, K::zero());
  for (std::size_t k = 0; k < d; ++k) {
    K s = K::zero();
    for (std::size_t i = 0; i < d; ++i) s += A.mul_table[k][i][i];
    tr[k] = s;
  }
  Matrix<K> T(d, d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      K s = K::zero();
      for (std::size_t k = 0; k < d; ++k) {
        const K& c2 = A.mul_table[u][v][k];
        if (!c2.is_zero()) s += c2 * tr[k];
      }
      T.at(u, v) = s;
    }
  Matrix<K> ns = nullspace(T);
  std::vector<Vec<K>> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(ns.col(j));
  return out;
}

template <class K>
bool in_radical(const Algebra<K>& A, const Vec<K>& x) {
  Echelon<K> e(A.dim());
  for (const auto& r : radical_basis(A)) e.add(r);
  return e.contains(x);
}

// --- corners and idempotent-ideal quotients ------------------------------------

template <class K>
struct CornerAlgebra {
  AlgPtr<K> alg;
  std::vector<int> basis_to_parent;  // corner basis index -> parent basis index
  std::vector<int> idem_to_parent;   // corner idem index -> parent idem index
};

/// eAe for e the sum of the selected distinguished idempotents.
template <class K>
CornerAlgebra<K> corner(const Algebra<K>& A, const std::vector<int>& subset) {
  check(!subset.empty(), "corner: empty idempotent subset");
  std::vector<bool> in(A.nidem(), false);
  for (int s : subset) {
    check(s >= 0 && s < static_cast<int>(A.nidem()), "corner: idempotent index out of range");
    check(!in[s], "corner: repeated idempotent index");
    in[s] = true;
  }
  std::vector<int> to_parent;
  std::vector<int> pos(A.dim(), -1);
  for (std::size_t b = 0; b < A.dim(); ++b) {
    auto [i, j] = A.peirce[b];
    if (in[i] && in[j]) {
      pos[b] = static_cast<int>(to_parent.size());
      to_parent.push_back(static_cast<int>(b));
    }
  }
  const std::size_t d = to_parent.size();
  auto C = std::make_shared<Algebra<K>>();
  C->labels.resize(d);
  C->path_exprs.resize(d);
  C->peirce.resize(d);
  std::vector<int> idem_pos(A.nidem(), -1);
  std::vector<int> idem_to_parent;
  for (int s : subset) {
    idem_pos[s] = static_cast<int>(idem_to_parent.size());
    idem_to_parent.push_back(s);
  }
  for (std::size_t t = 0; t < d; ++t) {
    int b = to_parent[t];
    C->labels[t] = A.labels[b];
    if (!A.path_exprs.empty()) C->path_exprs[t] = A.path_exprs[b];
    C->peirce[t] = {idem_pos[A.peirce[b].first], idem_pos[A.peirce[b].second]};
  }
  auto restrict_vec = [&](const Vec<K>& full) {
    Vec<K> out(d, K::zero());
    for (std::size_t t = 0; t < d; ++t) out[t] = full[to_parent[t]];
    return out;
  };
  C->mul_table.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      Vec<K> prod = A.mul_table[to_parent[u]][to_parent[v]];
      // the product of corner elements is supported on corner blocks
      C->mul_table[u][v] = restrict_vec(prod);
    }
  C->idems.clear();
  for (int s : idem_to_parent) C->idems.push_back(restrict_vec(A.idems[s]));
  C->unit = zero_vec<K>(d);
  for (const auto& e : C->idems) C->unit = add_vec(C->unit, e);
  std::vector<Vec<K>> rad;
  for (const auto& r : radical_basis(A)) {
    Vec<K> rr = restrict_vec(r);
    if (!is_zero_vec(rr)) rad.push_back(rr);
  }
  {
    Echelon<K> e(d);
    std::vector<Vec<K>> rbasis;
    for (auto& r : rad)
      if (e.add(r)) rbasis.push_back(e.basis()[e.dim() - 1]);
    C->radical = e.basis();
  }
  C->finalize();
  return {C, to_parent, idem_to_parent};
}

template <class K>
struct IdemQuotient {
  AlgPtr<K> alg;                  // A / AeA (may have dimension zero)
  Matrix<K> projection;           // dim(A) x dim(quotient), row convention
  std::vector<Vec<K>> ideal;      // basis of AeA inside A
  std::vector<int> kept_idems;    // parent idem index per quotient idem
};

template <class K>
Vec<K> idem_sum(const Algebra<K>& A, const std::vector<int>& subset) {
  Vec<K> e = zero_vec<K>(A.dim());
  for (int s : subset) {
    check(s >= 0 && s < static_cast<int>(A.nidem()), "idempotent index out of range");
    e = add_vec(e, A.idems[s]);
  }
  return e;
}

/// Span of A e A, e the subsum of distinguished idempotents (may be empty).
template <class K>
std::vector<Vec<K>> aea_span(const Algebra<K>& A, const std::vector<int>& subset) {
  Vec<K> e = idem_sum(A, subset);
  Echelon<K> span(A.dim());
  for (std::size_t u = 0; u < A.dim(); ++u) {
    Vec<K> xe = multiply(A, basis_elem(A, u), e);
    if (is_zero_vec(xe)) continue;
    for (std::size_t v = 0; v < A.dim(); ++v)
      span.add(multiply(A, xe, basis_elem(A, v)));
  }
  return span.basis();
}

/// Quotient by the ideal A e A.  An empty subset (e = 0) returns the algebra
/// unchanged, which the negative controls rely on.
template <class K>
IdemQuotient<K> quotient_by_idempotent_ideal(const Algebra<K>& A,
                                             const std::vector<int>& subset) {
  Echelon<K> J(A.dim());
  for (const auto& v : aea_span(A, subset)) J.add(v);

  std::vector<bool> is_pivot(A.dim(), false);
  for (std::size_t p : J.pivots()) is_pivot[p] = true;
  std::vector<int> kept;  // surviving coordinates of A's basis
  for (std::size_t b = 0; b < A.dim(); ++b)
    if (!is_pivot[b]) kept.push_back(static_cast<int>(b));
  std::vector<int> kept_pos(A.dim(), -1);
  for (std::size_t t = 0; t < kept.size(); ++t) kept_pos[kept[t]] = static_cast<int>(t);
  const std::size_t d = kept.size();

  auto reduce_coords = [&](const Vec<K>& x) {
    Vec<K> r = J.reduce(x);
    Vec<K> out(d, K::zero());
    for (std::size_t b = 0; b < A.dim(); ++b) {
      if (r[b].is_zero()) continue;
      check(kept_pos[b] >= 0, "quotient: reduction left a pivot coordinate");
      out[kept_pos[b]] = r[b];
    }
    return out;
  };

  auto Q = std::make_shared<Algebra<K>>();
  Q->labels.resize(d);
  Q->path_exprs.resize(d);
  Q->peirce.resize(d);

  // surviving distinguished idempotents
  std::vector<int> kept_idems;
  std::vector<Vec<K>> idem_classes;
  std::vector<int> idem_pos(A.nidem(), -1);
  for (std::size_t i = 0; i < A.nidem(); ++i) {
    Vec<K> cls = reduce_coords(A.idems[i]);
    if (is_zero_vec(cls)) continue;
    idem_pos[i] = static_cast<int>(kept_idems.size());
    kept_idems.push_back(static_cast<int>(i));
    idem_classes.push_back(cls);
  }

  for (std::size_t t = 0; t < d; ++t) {
    int b = kept[t];
    Q->labels[t] = A.labels[b];
    if (!A.path_exprs.empty()) Q->path_exprs[t] = A.path_exprs[b];
    auto [i, j] = A.peirce[b];
    check(idem_pos[i] >= 0 && idem_pos[j] >= 0,
          "quotient: surviving coordinate in a killed Peirce block");
    Q->peirce[t] = {idem_pos[i], idem_pos[j]};
  }

  Q->mul_table.assign(d, std::vector<Vec<K>>(d, zero_vec<K>(d)));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      Q->mul_table[u][v] = reduce_coords(A.mul_table[kept[u]][kept[v]]);
  Q->idems = idem_classes;
  Q->unit = reduce_coords(A.unit);
  {
    Vec<K> s = zero_vec<K>(d);
    for (const auto& e : Q->idems) s = add_vec(s, e);
    check(s == Q->unit, "quotient: idempotents do not sum to the unit");
  }
  {
    Echelon<K> e(d);
    for (const auto& r : radical_basis(A)) e.add(reduce_coords(r));
    Q->radical = e.basis();
  }
  Q->finalize();

  Matrix<K> proj(A.dim(), d);
  for (std::size_t b = 0; b < A.dim(); ++b) {
    Vec<K> row = reduce_coords(basis_elem(A, b));
    for (std::size_t t = 0; t < d; ++t) proj.at(b, t) = row[t];
  }
  return {Q, std::move(proj), J.basis(), std::move(kept_idems)};
}

// --- symmetrizing forms ---------------------------------------------------------

template <class K>
struct SymmetrizingForm {
  bool symmetric = false;
  Vec<K> form;  // witness when symmetric
};

template <class K>
Matrix<K> gram_matrix(const Algebra<K>& A, const Vec<K>& form) {
  Matrix<K> G(A.dim(), A.dim());
  for (std::size_t u = 0; u < A.dim(); ++u)
    for (std::size_t v = 0; v < A.dim(); ++v) {
      K s = K::zero();
      for (std::size_t k = 0; k < A.dim(); ++k) {
        const K& c = A.mul_table[u][v][k];
        if (!c.is_zero()) s += c * form[k];
      }
      G.at(u, v) = s;
    }
  return G;
}

/// Searches the space W of symmetric associative forms for a nondegenerate
/// one.  A negative verdict is only reported once certified: either W = 0, or
/// the forms share a common Gram kernel, or an exhaustive/grid sweep of W
/// found nothing.
template <class K>
SymmetrizingForm<K> symmetrizing_form(const Algebra<K>& A,
                                      const SearchPolicy& policy = {}) {
  const std::size_t d = A.dim();
  if (d == 0) return {true, {}};
  // linear symmetry conditions lambda(xy) = lambda(yx)
  Matrix<K> sys(d * d, d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t k = 0; k < d; ++k)
        sys.at(u * d + v, k) = A.mul_table[u][v][k] - A.mul_table[v][u][k];
  Matrix<K> W = nullspace(sys);
  const std::size_t w = W.cols();
  if (w == 0) return {false, {}};

  auto form_of = [&](const Vec<K>& c) {
    Vec<K> f(d, K::zero());
    for (std::size_t i = 0; i < w; ++i)
      if (!c[i].is_zero())
        for (std::size_t b = 0; b < d; ++b) f[b] += c[i] * W.at(b, i);
    return f;
  };
  auto try_coeffs = [&](const Vec<K>& c) -> std::optional<Vec<K>> {
    Vec<K> f = form_of(c);
    if (is_invertible(gram_matrix(A, f))) return f;
    return std::nullopt;
  };

  for (std::size_t attempt = 0; attempt < w + 8; ++attempt)
    if (auto f = try_coeffs(generic_coefficients<K>(w, attempt))) return {true, *f};
  Rng rng(policy.seed);
  for (int t = 0; t < policy.random_trials; ++t) {
    Vec<K> c(w);
    for (auto& x : c) x = random_scalar<K>(rng);
    if (auto f = try_coeffs(c)) return {true, *f};
  }

  // common Gram kernel: a nonzero solution degenerates every form in W
  Matrix<K> stacked(w * d, d);
  for (std::size_t i = 0; i < w; ++i) {
    Matrix<K> G = gram_matrix(A, form_of(generic_coefficients<K>(w, i)));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c2 = 0; c2 < d; ++c2) stacked.at(i * d + r, c2) = G.at(r, c2);
  }
  if (nullspace(stacked).cols() > 0) return {false, {}};

  // complete grid sweep: det is a polynomial of degree <= d in each of the w
  // coefficients, so vanishing on a (d+1)^w grid certifies it vanishes
  double grid_size = 1;
  for (std::size_t i = 0; i < w; ++i) {
    grid_size *= static_cast<double>(d + 1);
    if (grid_size > 300000.0) break;
  }
  if (grid_size <= 300000.0) {
    std::vector<std::size_t> idx(w, 0);
    for (;;) {
      Vec<K> c(w);
      for (std::size_t i = 0; i < w; ++i) c[i] = K::from_int(static_cast<long long>(idx[i]));
      if (auto f = try_coeffs(c)) return {true, *f};
      std::size_t i = 0;
      while (i < w && ++idx[i] > d) idx[i++] = 0;
      if (i == w) break;
    }
    return {false, {}};
  }
  fail("symmetrizing_form: cannot certify a negative (solution space too large)");
}

// --- validation -----------------------------------------------------------------

/// Full structural check of the Algebra invariants: associativity on all
/// basis triples, unit, idempotent axioms, Peirce adaptation.
template <class K>
void validate_algebra(const Algebra<K>& A) {
  const std::size_t d = A.dim();
  check(A.mul_table.size() == d && A.peirce.size() == d, "algebra: ragged tables");
  for (std::size_t i = 0; i < d; ++i) {
    Vec<K> b = basis_elem(A, i);
    check(multiply(A, A.unit, b) == b && multiply(A, b, A.unit) == b,
          "algebra: unit fails on basis element " + A.labels[i]);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> ij = A.mul_table[i][j];
      for (std::size_t k = 0; k < d; ++k) {
        Vec<K> lhs = multiply(A, ij, basis_elem(A, k));
        Vec<K> rhs = multiply(A, basis_elem(A, i), A.mul_table[j][k]);
        check(lhs == rhs, "algebra: associativity fails at triple (" + A.labels[i] +
                              ", " + A.labels[j] + ", " + A.labels[k] + ")");
      }
    }
  Vec<K> s = zero_vec<K>(d);
  for (std::size_t i = 0; i < A.nidem(); ++i) {
    for (std::size_t j = 0; j < A.nidem(); ++j) {
      Vec<K> p = multiply(A, A.idems[i], A.idems[j]);
      if (i == j)
        check(p == A.idems[i], "algebra: idempotent not idempotent");
      else
        check(is_zero_vec(p), "algebra: idempotents not orthogonal");
    }
    s = add_vec(s, A.idems[i]);
  }
  check(s == A.unit, "algebra: idempotents do not sum to the unit");
  for (std::size_t b = 0; b < d; ++b) {
    auto [i, j] = A.peirce[b];
    Vec<K> x = basis_elem(A, b);
    Vec<K> y = multiply(A, A.idems[i], multiply(A, x, A.idems[j]));
    check(y == x, "algebra: basis element " + A.labels[b] + " not Peirce-adapted");
  }
}

}  // namespace tiltkit
