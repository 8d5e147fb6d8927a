#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/idempotents.hpp"
#include "tiltkit/modules.hpp"

namespace tiltkit {

// --- matrices of algebra elements ---------------------------------------------

template <class K>
struct AlgMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Vec<K>> e;  // row-major, each an algebra element

  AlgMat() = default;
  AlgMat(std::size_t r, std::size_t c, std::size_t alg_dim)
      : rows(r), cols(c), e(r * c, zero_vec<K>(alg_dim)) {}

  Vec<K>& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  const Vec<K>& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

  bool is_zero() const {
    for (const auto& v : e)
      if (!is_zero_vec(v)) return false;
    return true;
  }
};

template <class K>
AlgMat<K> algmat_mul(const Algebra<K>& A, const AlgMat<K>& a, const AlgMat<K>& b) {
  check(a.cols == b.rows, "algmat_mul: dimension mismatch");
  AlgMat<K> c(a.rows, b.cols, A.dim());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (is_zero_vec(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        if (is_zero_vec(b.at(k, j))) continue;
        c.at(i, j) = add_vec(c.at(i, j), multiply(A, a.at(i, k), b.at(k, j)));
      }
    }
  return c;
}

template <class K>
AlgMat<K> algmat_neg(const AlgMat<K>& a) {
  AlgMat<K> c = a;
  for (auto& v : c.e)
    for (auto& x : v) x = -x;
  return c;
}

// --- bounded complexes of projectives ------------------------------------------

/// Bounded complex of the projectives e_iA.  terms[k] lists the idempotent
/// indices of the degree (lo + k) term; diffs[k] maps terms[k] to terms[k+1],
/// its (r, c) entry constrained to e_{i_r} A e_{i_c} and acting by left
/// multiplication.
template <class K>
struct ProjComplex {
  AlgPtr<K> A;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<AlgMat<K>> diffs;

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  bool is_zero() const {
    for (const auto& t : terms)
      if (!t.empty()) return false;
    return true;
  }
  std::size_t summand_count(int d) const {
    if (d < lo || d > hi()) return 0;
    return terms[d - lo].size();
  }
  const std::vector<int>& term(int d) const {
    static const std::vector<int> empty;
    if (d < lo || d > hi()) return empty;
    return terms[d - lo];
  }
  /// k-dimension of the degree d term.
  std::size_t term_kdim(int d) const {
    std::size_t s = 0;
    for (int i : term(d)) s += A->row_of_idem[i].size();
    return s;
  }
  AlgMat<K> diff(int d) const {
    if (d < lo || d >= hi())
      return AlgMat<K>(summand_count(d + 1), summand_count(d), A->dim());
    return diffs[d - lo];
  }
};

template <class K>
bool same_shape(const ProjComplex<K>& x, const ProjComplex<K>& y) {
  if (x.A != y.A) return false;
  int lo = std::min(x.lo, y.lo), hi = std::max(x.hi(), y.hi());
  for (int d = lo; d <= hi; ++d)
    if (x.term(d) != y.term(d)) return false;
  for (int d = lo; d < hi; ++d) {
    AlgMat<K> a = x.diff(d), b = y.diff(d);
    if (!(a.rows == b.rows && a.cols == b.cols && a.e == b.e)) return false;
  }
  return true;
}

template <class K>
ProjComplex<K> trimmed(ProjComplex<K> x) {
  while (!x.terms.empty() && x.terms.front().empty()) {
    x.terms.erase(x.terms.begin());
    if (!x.diffs.empty()) x.diffs.erase(x.diffs.begin());
    ++x.lo;
  }
  while (!x.terms.empty() && x.terms.back().empty()) {
    x.terms.pop_back();
    if (!x.diffs.empty()) x.diffs.pop_back();
  }
  if (x.terms.empty()) x.lo = 0;
  if (!x.terms.empty() && x.diffs.size() + 1 != x.terms.size())
    x.diffs.resize(x.terms.size() - 1, AlgMat<K>(0, 0, x.A->dim()));
  return x;
}

template <class K>
ProjComplex<K> stalk_complex(const AlgPtr<K>& A, const std::vector<int>& idems, int degree = 0) {
  ProjComplex<K> x;
  x.A = A;
  x.lo = degree;
  x.terms = {idems};
  return x;
}

template <class K>
ProjComplex<K> algebra_stalk(const AlgPtr<K>& A, int degree = 0) {
  std::vector<int> all(A->nidem());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return stalk_complex(A, all, degree);
}

/// Structural validation: every differential entry in its Peirce component,
/// d о d = 0 exactly.
template <class K>
void validate(const ProjComplex<K>& x) {
  const Algebra<K>& A = *x.A;
  if (x.terms.empty()) return;
  check(x.diffs.size() + 1 == x.terms.size() || (x.terms.size() == 1 && x.diffs.empty()),
        "complex: differential count does not match terms");
  for (int d = x.lo; d <= x.hi(); ++d)
    for (int i : x.term(d))
      check(i >= 0 && i < static_cast<int>(A.nidem()), "complex: bad idempotent index");
  for (int d = x.lo; d < x.hi(); ++d) {
    const AlgMat<K>& m = x.diff(d);
    check(m.rows == x.summand_count(d + 1) && m.cols == x.summand_count(d),
          "complex: differential shape mismatch at degree " + std::to_string(d));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) {
        const Vec<K>& z = m.at(r, c);
        int ir = x.term(d + 1)[r], ic = x.term(d)[c];
        for (std::size_t b = 0; b < A.dim(); ++b)
          if (!z[b].is_zero())
            check(A.peirce[b] == std::make_pair(ir, ic),
                  "complex: entry (" + std::to_string(r) + "," + std::to_string(c) +
                      ") at degree " + std::to_string(d) +
                      " leaves its Peirce component");
      }
  }
  for (int d = x.lo; d + 1 < x.hi(); ++d) {
    AlgMat<K> sq = algmat_mul(A, x.diff(d + 1), x.diff(d));
    check(sq.is_zero(), "complex: d^2 != 0 between degrees " + std::to_string(d) +
                            " and " + std::to_string(d + 2));
  }
}

/// Translation: shift(x, n) = x[n], with x[n]^d = x^{d+n} and the
/// differential negated n times.
template <class K>
ProjComplex<K> shift(const ProjComplex<K>& x, int n) {
  ProjComplex<K> y = x;
  y.lo = x.lo - n;
  if (n % 2 != 0)
    for (auto& m : y.diffs) m = algmat_neg(m);
  return y;
}

template <class K>
ProjComplex<K> direct_sum(const ProjComplex<K>& x, const ProjComplex<K>& y) {
  check(x.A == y.A, "direct_sum: complexes over different algebras");
  if (x.is_zero()) return trimmed(y);
  if (y.is_zero()) return trimmed(x);
  ProjComplex<K> s;
  s.A = x.A;
  s.lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  for (int d = s.lo; d <= hi; ++d) {
    std::vector<int> t = x.term(d);
    const auto& ty = y.term(d);
    t.insert(t.end(), ty.begin(), ty.end());
    s.terms.push_back(std::move(t));
  }
  for (int d = s.lo; d < hi; ++d) {
    AlgMat<K> m(s.summand_count(d + 1), s.summand_count(d), s.A->dim());
    AlgMat<K> mx = x.diff(d), my = y.diff(d);
    for (std::size_t r = 0; r < mx.rows; ++r)
      for (std::size_t c = 0; c < mx.cols; ++c) m.at(r, c) = mx.at(r, c);
    std::size_t ro = x.summand_count(d + 1), co = x.summand_count(d);
    for (std::size_t r = 0; r < my.rows; ++r)
      for (std::size_t c = 0; c < my.cols; ++c) m.at(ro + r, co + c) = my.at(r, c);
    s.diffs.push_back(std::move(m));
  }
  return s;
}

// --- degreewise k-linear expansion ----------------------------------------------

/// Column offsets of the summands inside the k-linear expansion of a term.
template <class K>
std::vector<std::size_t> term_offsets(const Algebra<K>& A, const std::vector<int>& term) {
  std::vector<std::size_t> off(term.size() + 1, 0);
  for (std::size_t i = 0; i < term.size(); ++i)
    off[i + 1] = off[i] + A.row_of_idem[term[i]].size();
  return off;
}

/// Expansion of an AlgMat between two terms as a k-matrix, column convention.
template <class K>
Matrix<K> expand_algmat(const Algebra<K>& A, const AlgMat<K>& m,
                        const std::vector<int>& src_term,
                        const std::vector<int>& dst_term) {
  auto so = term_offsets(A, src_term);
  auto to = term_offsets(A, dst_term);
  Matrix<K> out(to.back(), so.back());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (is_zero_vec(m.at(r, c))) continue;
      Matrix<K> L = left_mult_matrix(A, m.at(r, c), src_term[c], dst_term[r]);
      for (std::size_t i = 0; i < L.rows(); ++i)
        for (std::size_t j = 0; j < L.cols(); ++j)
          out.at(to[r] + i, so[c] + j) = L.at(i, j);
    }
  return out;
}

template <class K>
Matrix<K> expand_diff(const ProjComplex<K>& x, int d) {
  return expand_algmat(*x.A, x.diff(d), x.term(d), x.term(d + 1));
}

/// Dimension of H^d for each degree in the support window.
template <class K>
std::map<int, std::size_t> cohomology_dims(const ProjComplex<K>& x) {
  std::map<int, std::size_t> h;
  if (x.is_zero()) return h;
  for (int d = x.lo; d <= x.hi(); ++d) {
    std::size_t dim = x.term_kdim(d);
    if (dim == 0) continue;
    std::size_t r_out = (d < x.hi()) ? rank(expand_diff(x, d)) : 0;
    std::size_t r_in = (d > x.lo) ? rank(expand_diff(x, d - 1)) : 0;
    std::size_t hd = dim - r_out - r_in;
    if (hd > 0) h[d] = hd;
  }
  return h;
}

// --- chain maps -----------------------------------------------------------------

/// Degreewise map of complexes with Peirce-constrained entries; commutes with
/// the differentials exactly (checked at construction).
template <class K>
struct ChainMap {
  ProjComplex<K> src, tgt;
  std::vector<AlgMat<K>> comps;  // indexed over src degrees

  AlgMat<K> comp(int d) const {
    if (d < src.lo || d > src.hi() || src.terms.empty())
      return AlgMat<K>(tgt.summand_count(d), 0, src.A->dim());
    return comps[d - src.lo];
  }
};

template <class K>
void validate_chain_map(const ChainMap<K>& f) {
  check(f.src.A == f.tgt.A, "chain map: algebra mismatch");
  const Algebra<K>& A = *f.src.A;
  check(f.comps.size() == f.src.terms.size(), "chain map: component count mismatch");
  for (int d = f.src.lo; d <= f.src.hi(); ++d) {
    const AlgMat<K>& m = f.comp(d);
    check(m.rows == f.tgt.summand_count(d) && m.cols == f.src.summand_count(d),
          "chain map: component shape mismatch at degree " + std::to_string(d));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) {
        const Vec<K>& z = m.at(r, c);
        int ir = f.tgt.term(d)[r], ic = f.src.term(d)[c];
        for (std::size_t b = 0; b < A.dim(); ++b)
          if (!z[b].is_zero())
            check(A.peirce[b] == std::make_pair(ir, ic),
                  "chain map: entry outside its Peirce component at degree " +
                      std::to_string(d));
      }
  }
  int lo = std::min(f.src.lo, f.tgt.lo), hi = std::max(f.src.hi(), f.tgt.hi());
  for (int d = lo; d < hi; ++d) {
    // tgt.diff(d) o f(d) == f(d+1) o src.diff(d), with absent terms zero
    AlgMat<K> lhs(f.tgt.summand_count(d + 1), f.src.summand_count(d), A.dim());
    if (f.tgt.summand_count(d) > 0) lhs = algmat_mul(A, f.tgt.diff(d), f.comp(d));
    AlgMat<K> rhs(f.tgt.summand_count(d + 1), f.src.summand_count(d), A.dim());
    if (f.src.summand_count(d + 1) > 0) rhs = algmat_mul(A, f.comp(d + 1), f.src.diff(d));
    check(lhs.rows == rhs.rows && lhs.cols == rhs.cols && lhs.e == rhs.e,
          "chain map: does not commute with differentials at degree " + std::to_string(d));
  }
}

template <class K>
ChainMap<K> make_chain_map(ProjComplex<K> src, ProjComplex<K> tgt,
                           std::vector<AlgMat<K>> comps, bool validate_it = true) {
  ChainMap<K> f{std::move(src), std::move(tgt), std::move(comps)};
  if (validate_it) validate_chain_map(f);
  return f;
}

template <class K>
AlgMat<K> identity_algmat(const Algebra<K>& A, const std::vector<int>& term) {
  AlgMat<K> m(term.size(), term.size(), A.dim());
  for (std::size_t i = 0; i < term.size(); ++i) m.at(i, i) = A.idems[term[i]];
  return m;
}

template <class K>
ChainMap<K> identity_map(const ProjComplex<K>& x) {
  std::vector<AlgMat<K>> comps;
  for (int d = x.lo; d <= x.hi(); ++d) comps.push_back(identity_algmat(*x.A, x.term(d)));
  if (x.terms.empty()) comps.clear();
  return make_chain_map(x, x, std::move(comps), false);
}

template <class K>
ChainMap<K> zero_map(const ProjComplex<K>& src, const ProjComplex<K>& tgt) {
  std::vector<AlgMat<K>> comps;
  for (int d = src.lo; d <= src.hi(); ++d)
    comps.emplace_back(tgt.summand_count(d), src.summand_count(d), src.A->dim());
  if (src.terms.empty()) comps.clear();
  return make_chain_map(src, tgt, std::move(comps), false);
}

template <class K>
ChainMap<K> compose(const ChainMap<K>& g, const ChainMap<K>& f) {
  check(same_shape(f.tgt, g.src), "compose: middle complexes differ");
  std::vector<AlgMat<K>> comps;
  for (int d = f.src.lo; d <= f.src.hi(); ++d) {
    AlgMat<K> gf(g.tgt.summand_count(d), f.src.summand_count(d), f.src.A->dim());
    if (g.src.summand_count(d) > 0) gf = algmat_mul(*f.src.A, g.comp(d), f.comp(d));
    comps.push_back(std::move(gf));
  }
  if (f.src.terms.empty()) comps.clear();
  return make_chain_map(f.src, g.tgt, std::move(comps), false);
}

template <class K>
ChainMap<K> shift(const ChainMap<K>& f, int n) {
  ChainMap<K> g;
  g.src = shift(f.src, n);
  g.tgt = shift(f.tgt, n);
  g.comps = f.comps;
  return g;
}

template <class K>
ChainMap<K> add_maps(const ChainMap<K>& f, const ChainMap<K>& g) {
  check(same_shape(f.src, g.src) && same_shape(f.tgt, g.tgt), "add_maps: shape mismatch");
  ChainMap<K> h = f;
  for (std::size_t i = 0; i < h.comps.size(); ++i)
    for (std::size_t j = 0; j < h.comps[i].e.size(); ++j)
      h.comps[i].e[j] = add_vec(h.comps[i].e[j], g.comps[i].e[j]);
  return h;
}

template <class K>
ChainMap<K> scale_map(const ChainMap<K>& f, const K& c) {
  ChainMap<K> h = f;
  for (auto& m : h.comps)
    for (auto& v : m.e) v = scale(v, c);
  return h;
}

/// Horizontal assembly: maps f_i : X_i -> Y with a common target combine into
/// direct_sum(X_i) -> Y.
template <class K>
ChainMap<K> hstack_maps(const std::vector<ChainMap<K>>& fs) {
  check(!fs.empty(), "hstack_maps: empty");
  ProjComplex<K> src = fs[0].src;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    check(same_shape(fs[i].tgt, fs[0].tgt), "hstack_maps: targets differ");
    src = direct_sum(src, fs[i].src);
  }
  const ProjComplex<K>& tgt = fs[0].tgt;
  std::vector<AlgMat<K>> comps;
  for (int d = src.lo; d <= src.hi(); ++d) {
    AlgMat<K> m(tgt.summand_count(d), src.summand_count(d), src.A->dim());
    std::size_t co = 0;
    for (const auto& f : fs) {
      AlgMat<K> fm = f.comp(d);
      for (std::size_t r = 0; r < fm.rows; ++r)
        for (std::size_t c = 0; c < fm.cols; ++c) m.at(r, co + c) = fm.at(r, c);
      co += f.src.summand_count(d);
    }
    comps.push_back(std::move(m));
  }
  if (src.terms.empty()) comps.clear();
  return make_chain_map(src, tgt, std::move(comps), false);
}

// --- the hom complex -------------------------------------------------------------

/// Coordinate system for the degree-n term of Hom^*(X, Y): one slot per
/// (source degree p, target summand r, source summand c, Peirce basis element).
template <class K>
struct HomBasis {
  ProjComplex<K> X, Y;
  int n = 0;
  struct Slot {
    int p, r, c, b;
  };
  std::vector<Slot> slots;
  // lookup: start offset per (p, r, c)
  std::map<std::tuple<int, int, int>, std::size_t> start;

  std::size_t dim() const { return slots.size(); }
};

template <class K>
HomBasis<K> hom_basis(const ProjComplex<K>& X, const ProjComplex<K>& Y, int n) {
  HomBasis<K> hb;
  hb.X = X;
  hb.Y = Y;
  hb.n = n;
  const Algebra<K>& A = *X.A;
  for (int p = X.lo; p <= X.hi(); ++p) {
    const auto& xs = X.term(p);
    const auto& ys = Y.term(p + n);
    for (std::size_t r = 0; r < ys.size(); ++r)
      for (std::size_t c = 0; c < xs.size(); ++c) {
        hb.start[{p, static_cast<int>(r), static_cast<int>(c)}] = hb.slots.size();
        for (int b : A.block_indices(ys[r], xs[c]))
          hb.slots.push_back({p, static_cast<int>(r), static_cast<int>(c), b});
      }
  }
  return hb;
}

/// Flattens the degree-p components of a collection of entry matrices into
/// hom-basis coordinates.  The map must respect the Peirce constraints.
template <class K>
Vec<K> flatten_components(const HomBasis<K>& hb,
                          const std::vector<AlgMat<K>>& comps_by_p) {
  const Algebra<K>& A = *hb.X.A;
  Vec<K> v(hb.dim(), K::zero());
  for (int p = hb.X.lo; p <= hb.X.hi(); ++p) {
    const AlgMat<K>& m = comps_by_p[p - hb.X.lo];
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) {
        const Vec<K>& z = m.at(r, c);
        if (is_zero_vec(z)) continue;
        auto it = hb.start.find({p, static_cast<int>(r), static_cast<int>(c)});
        check(it != hb.start.end(), "flatten: missing slot group");
        std::size_t base = it->second;
        int ir = hb.Y.term(p + hb.n)[r], ic = hb.X.term(p)[c];
        for (std::size_t b = 0; b < A.dim(); ++b) {
          if (z[b].is_zero()) continue;
          check(A.peirce[b] == std::make_pair(ir, ic), "flatten: entry outside block");
          v[base + A.block_pos[b]] = z[b];
        }
      }
  }
  return v;
}

template <class K>
Vec<K> flatten_chain_map(const HomBasis<K>& hb, const ChainMap<K>& f) {
  std::vector<AlgMat<K>> comps;
  for (int p = hb.X.lo; p <= hb.X.hi(); ++p) comps.push_back(f.comp(p));
  return flatten_components(hb, comps);
}

template <class K>
ChainMap<K> unflatten_chain_map(const HomBasis<K>& hb, const Vec<K>& v) {
  const Algebra<K>& A = *hb.X.A;
  ProjComplex<K> shifted_Y = shift(hb.Y, hb.n);
  std::vector<AlgMat<K>> comps;
  for (int p = hb.X.lo; p <= hb.X.hi(); ++p)
    comps.emplace_back(hb.Y.summand_count(p + hb.n), hb.X.summand_count(p), A.dim());
  for (std::size_t s = 0; s < hb.slots.size(); ++s) {
    if (v[s].is_zero()) continue;
    const auto& sl = hb.slots[s];
    comps[sl.p - hb.X.lo].at(sl.r, sl.c)[sl.b] = v[s];
  }
  if (hb.X.terms.empty()) comps.clear();
  return make_chain_map(hb.X, shifted_Y, std::move(comps), false);
}

/// The differential Hom^n(X, Y) -> Hom^{n+1}(X, Y),
/// (D phi)_p = d_Y o phi_p - (-1)^n phi_{p+1} o d_X.
template <class K>
Matrix<K> hom_differential(const HomBasis<K>& hn, const HomBasis<K>& hn1) {
  const Algebra<K>& A = *hn.X.A;
  const ProjComplex<K>&X = hn.X, &Y = hn.Y;
  const int n = hn.n;
  Matrix<K> D(hn1.dim(), hn.dim());
  const K sign = (n % 2 == 0) ? -K::one() : K::one();  // -(-1)^n
  for (std::size_t s = 0; s < hn.slots.size(); ++s) {
    const auto& sl = hn.slots[s];
    Vec<K> z = basis_elem(A, sl.b);
    // d_Y term: slots (p, r', c)
    {
      AlgMat<K> dy = Y.diff(sl.p + n);
      for (std::size_t r2 = 0; r2 < dy.rows; ++r2) {
        if (is_zero_vec(dy.at(r2, sl.r))) continue;
        Vec<K> prod = multiply(A, dy.at(r2, sl.r), z);
        auto it = hn1.start.find({sl.p, static_cast<int>(r2), sl.c});
        if (it == hn1.start.end()) {
          check(is_zero_vec(prod), "hom_differential: product outside slot system");
          continue;
        }
        for (std::size_t b = 0; b < A.dim(); ++b)
          if (!prod[b].is_zero()) D.at(it->second + A.block_pos[b], s) += prod[b];
      }
    }
    // phi o d_X term: slots (p-1, r, c')
    {
      AlgMat<K> dx = X.diff(sl.p - 1);
      for (std::size_t c2 = 0; c2 < dx.cols; ++c2) {
        if (is_zero_vec(dx.at(sl.c, c2))) continue;
        Vec<K> prod = multiply(A, z, dx.at(sl.c, c2));
        auto it = hn1.start.find({sl.p - 1, sl.r, static_cast<int>(c2)});
        if (it == hn1.start.end()) {
          check(is_zero_vec(prod), "hom_differential: product outside slot system");
          continue;
        }
        for (std::size_t b = 0; b < A.dim(); ++b)
          if (!prod[b].is_zero()) D.at(it->second + A.block_pos[b], s) += sign * prod[b];
      }
    }
  }
  return D;
}

/// Total hom complex as a complex of vector spaces: term dimensions and
/// differentials over the full support window.
template <class K>
struct HomComplex {
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix<K>> diffs;  // diffs[i] : dims[i] -> dims[i+1]
};

template <class K>
HomComplex<K> hom_complex(const ProjComplex<K>& X, const ProjComplex<K>& Y) {
  check(X.A == Y.A, "hom_complex: complexes over different algebras");
  HomComplex<K> out;
  if (X.is_zero() || Y.is_zero()) return out;
  out.lo = Y.lo - X.hi();
  int hi = Y.hi() - X.lo;
  std::vector<HomBasis<K>> bases;
  for (int n = out.lo; n <= hi; ++n) bases.push_back(hom_basis(X, Y, n));
  for (const auto& hb : bases) out.dims.push_back(hb.dim());
  for (std::size_t i = 0; i + 1 < bases.size(); ++i)
    out.diffs.push_back(hom_differential(bases[i], bases[i + 1]));
  return out;
}

// --- hom in the homotopy category -------------------------------------------------

/// Hom_{K(A)}(X, Y[n]) with representative chain maps and the data needed to
/// reduce an arbitrary chain map to coordinates on the representatives.
template <class K>
struct HomotopyHomSpace {
  int n = 0;
  std::size_t dim = 0;
  std::vector<ChainMap<K>> reps;  // maps X -> Y[n]
  HomBasis<K> hb;
  std::vector<Vec<K>> rep_coords;
  std::vector<Vec<K>> boundary_basis;
  ColumnSolver<K> solver;  // over [reps | boundaries]; any chain map is a cycle

  /// Coefficients of [f] on the representatives.
  Vec<K> coords_of(const ChainMap<K>& f) const {
    if (hb.dim() == 0) return {};
    Vec<K> v = flatten_chain_map(hb, f);
    Vec<K> sol = solver.solve(v);
    return Vec<K>(sol.begin(), sol.begin() + rep_coords.size());
  }

  bool is_null_homotopic(const ChainMap<K>& f) const {
    Vec<K> c = coords_of(f);
    return is_zero_vec(c);
  }

  void build_solver() {
    const std::size_t m = hb.dim();
    if (m == 0) return;
    Matrix<K> sys(m, rep_coords.size() + boundary_basis.size());
    for (std::size_t j = 0; j < rep_coords.size(); ++j)
      for (std::size_t i = 0; i < m; ++i) sys.at(i, j) = rep_coords[j][i];
    for (std::size_t j = 0; j < boundary_basis.size(); ++j)
      for (std::size_t i = 0; i < m; ++i)
        sys.at(i, rep_coords.size() + j) = boundary_basis[j][i];
    solver = ColumnSolver<K>(sys);
  }
};

/// Cohomology of the hom complex at degree n: cycles are chain maps
/// X -> Y[n], boundaries the null-homotopic ones.  `preferred` cycles are
/// used as leading representatives when given.
template <class K>
HomotopyHomSpace<K> homotopy_hom(const ProjComplex<K>& X, const ProjComplex<K>& Y, int n,
                                 const std::vector<ChainMap<K>>* preferred = nullptr) {
  check(X.A == Y.A, "homotopy_hom: complexes over different algebras");
  HomotopyHomSpace<K> H;
  H.n = n;
  H.hb = hom_basis(X, Y, n);
  if (H.hb.dim() == 0) return H;
  HomBasis<K> hb1 = hom_basis(X, Y, n + 1);
  HomBasis<K> hbm = hom_basis(X, Y, n - 1);
  Matrix<K> Dn = hom_differential(H.hb, hb1);
  Matrix<K> Dm = hom_differential(hbm, H.hb);
  Matrix<K> cycles = nullspace(Dn);

  Echelon<K> bnd(H.hb.dim());
  for (std::size_t j = 0; j < hbm.dim(); ++j) {
    bnd.add(Dm.col(j));
  }
  H.boundary_basis = bnd.basis();

  Echelon<K> occupied = bnd;
  auto try_rep = [&](const Vec<K>& v) {
    if (occupied.add(v)) {
      H.rep_coords.push_back(v);
      H.reps.push_back(unflatten_chain_map(H.hb, v));
    }
  };
  if (preferred)
    for (const auto& f : *preferred) try_rep(flatten_chain_map(H.hb, f));
  for (std::size_t j = 0; j < cycles.cols(); ++j) try_rep(cycles.col(j));
  H.dim = H.reps.size();
  H.build_solver();
  return H;
}

/// dim Hom_{K(A)}(X, Y[n]) without keeping representatives.
template <class K>
std::size_t homotopy_hom_dim(const ProjComplex<K>& X, const ProjComplex<K>& Y, int n) {
  HomBasis<K> hb = hom_basis(X, Y, n);
  if (hb.dim() == 0) return 0;
  HomBasis<K> hb1 = hom_basis(X, Y, n + 1);
  HomBasis<K> hbm = hom_basis(X, Y, n - 1);
  std::size_t cyc = hb.dim() - rank(hom_differential(hb, hb1));
  std::size_t bnd = rank(hom_differential(hbm, hb));
  return cyc - bnd;
}

/// Full table of dim Hom_K(X, Y[n]) over the window where it can be nonzero.
template <class K>
std::map<int, std::size_t> homotopy_hom_table(const ProjComplex<K>& X,
                                              const ProjComplex<K>& Y) {
  std::map<int, std::size_t> t;
  if (X.is_zero() || Y.is_zero()) return t;
  for (int n = Y.lo - X.hi(); n <= Y.hi() - X.lo; ++n) t[n] = homotopy_hom_dim(X, Y, n);
  return t;
}

// --- cones -------------------------------------------------------------------------

template <class K>
struct ConeResult {
  ProjComplex<K> cone;
  ChainMap<K> incl;        // Y -> cone
  ChainMap<K> proj;        // cone -> X[1]
};

/// Mapping cone of f : X -> Y, with C^d = X^{d+1} (+) Y^d and differential
/// [[-d_X, 0], [f, d_Y]].
template <class K>
ConeResult<K> cone(const ChainMap<K>& f) {
  const ProjComplex<K>&X = f.src, &Y = f.tgt;
  const Algebra<K>& A = *X.A;
  ProjComplex<K> C;
  C.A = X.A;
  int lo = std::min(X.lo - 1, Y.lo);
  int hi = std::max(X.hi() - 1, Y.hi());
  C.lo = lo;
  for (int d = lo; d <= hi; ++d) {
    std::vector<int> t = X.term(d + 1);
    const auto& ty = Y.term(d);
    t.insert(t.end(), ty.begin(), ty.end());
    C.terms.push_back(std::move(t));
  }
  for (int d = lo; d < hi; ++d) {
    std::size_t xr = X.summand_count(d + 2), yr = Y.summand_count(d + 1);
    std::size_t xc = X.summand_count(d + 1), yc = Y.summand_count(d);
    AlgMat<K> m(xr + yr, xc + yc, A.dim());
    AlgMat<K> dx = X.diff(d + 1);
    for (std::size_t r = 0; r < dx.rows; ++r)
      for (std::size_t c = 0; c < dx.cols; ++c) m.at(r, c) = scale(dx.at(r, c), -K::one());
    AlgMat<K> fc = f.comp(d + 1);
    for (std::size_t r = 0; r < fc.rows; ++r)
      for (std::size_t c = 0; c < fc.cols; ++c) m.at(xr + r, c) = fc.at(r, c);
    AlgMat<K> dy = Y.diff(d);
    for (std::size_t r = 0; r < dy.rows; ++r)
      for (std::size_t c = 0; c < dy.cols; ++c) m.at(xr + r, xc + c) = dy.at(r, c);
    C.diffs.push_back(std::move(m));
  }
  C = trimmed(C);

  // canonical triangle maps
  std::vector<AlgMat<K>> incl_comps;
  for (int d = Y.lo; d <= Y.hi(); ++d) {
    std::size_t xr = X.summand_count(d + 1);
    AlgMat<K> m(C.summand_count(d), Y.summand_count(d), A.dim());
    for (std::size_t i = 0; i < Y.summand_count(d); ++i)
      m.at(xr + i, i) = A.idems[Y.term(d)[i]];
    incl_comps.push_back(std::move(m));
  }
  if (Y.terms.empty()) incl_comps.clear();
  ChainMap<K> incl = make_chain_map(Y, C, std::move(incl_comps), false);

  ProjComplex<K> X1 = shift(X, 1);
  std::vector<AlgMat<K>> proj_comps;
  for (int d = C.lo; d <= C.hi(); ++d) {
    AlgMat<K> m(X1.summand_count(d), C.summand_count(d), A.dim());
    for (std::size_t i = 0; i < X1.summand_count(d); ++i)
      m.at(i, i) = A.idems[X1.term(d)[i]];
    proj_comps.push_back(std::move(m));
  }
  if (C.terms.empty()) proj_comps.clear();
  ChainMap<K> proj = make_chain_map(C, X1, std::move(proj_comps), false);
  return {std::move(C), std::move(incl), std::move(proj)};
}

}  // namespace tiltkit
