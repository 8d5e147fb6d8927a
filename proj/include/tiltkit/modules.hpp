#pragma once

#include <optional>
#include <vector>

#include "tiltkit/algebra.hpp"

namespace tiltkit {

/// Finite-dimensional right module, given by one action matrix per algebra
/// basis element in row convention: (m . b_k) = row(m) * act[k].
template <class K>
struct ModuleRep {
  std::size_t mdim = 0;
  std::vector<Matrix<K>> act;

  Matrix<K> act_elem(const Vec<K>& x) const {
    Matrix<K> M(mdim, mdim);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].is_zero()) continue;
      for (std::size_t r = 0; r < mdim; ++r)
        for (std::size_t c = 0; c < mdim; ++c) M.at(r, c) += x[k] * act[k].at(r, c);
    }
    return M;
  }
};

template <class K>
void validate_module(const Algebra<K>& A, const ModuleRep<K>& M) {
  check(M.act.size() == A.dim(), "module: wrong number of action matrices");
  check(M.act_elem(A.unit) == Matrix<K>::identity(M.mdim), "module: unit acts nontrivially");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Matrix<K> lhs = mul(M.act[i], M.act[j]);
      Matrix<K> rhs = M.act_elem(A.mul_table[i][j]);
      check(lhs == rhs, "module: action violates structure constants at (" +
                            A.labels[i] + ", " + A.labels[j] + ")");
    }
}

/// The projective right module e_i A, on the Peirce row basis of the algebra.
template <class K>
struct RightIdealModule {
  ModuleRep<K> rep;
  std::vector<int> coords;  // module basis index -> algebra basis index
};

template <class K>
RightIdealModule<K> right_ideal_module(const Algebra<K>& A, int i) {
  const auto& rows = A.row_of_idem[i];
  std::vector<int> pos(A.dim(), -1);
  for (std::size_t t = 0; t < rows.size(); ++t) pos[rows[t]] = static_cast<int>(t);
  ModuleRep<K> M;
  M.mdim = rows.size();
  M.act.assign(A.dim(), Matrix<K>(M.mdim, M.mdim));
  for (std::size_t k = 0; k < A.dim(); ++k)
    for (std::size_t u = 0; u < rows.size(); ++u) {
      const Vec<K>& img = A.mul_table[rows[u]][k];
      for (std::size_t b = 0; b < A.dim(); ++b) {
        if (img[b].is_zero()) continue;
        check(pos[b] >= 0, "right_ideal_module: action leaves the row");
        M.act[k].at(u, pos[b]) = img[b];
      }
    }
  return {std::move(M), rows};
}

template <class K>
ModuleRep<K> regular_module(const Algebra<K>& A) {
  ModuleRep<K> M;
  M.mdim = A.dim();
  M.act.assign(A.dim(), Matrix<K>(A.dim(), A.dim()));
  for (std::size_t k = 0; k < A.dim(); ++k)
    for (std::size_t u = 0; u < A.dim(); ++u)
      for (std::size_t b = 0; b < A.dim(); ++b)
        M.act[k].at(u, b) = A.mul_table[u][k][b];
  return M;
}

/// Module structure on the span of the given rows (must be action-stable).
template <class K>
ModuleRep<K> submodule(const ModuleRep<K>& M, const std::vector<Vec<K>>& rows) {
  ModuleRep<K> S;
  S.mdim = rows.size();
  S.act.assign(M.act.size(), Matrix<K>(S.mdim, S.mdim));
  if (rows.empty()) return S;
  Matrix<K> B(rows.size(), M.mdim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < M.mdim; ++c) B.at(r, c) = rows[r][c];
  Matrix<K> Bt = transpose(B);
  for (std::size_t k = 0; k < M.act.size(); ++k)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Vec<K> img = apply_row(rows[r], M.act[k]);
      auto sol = solve(Bt, img);
      check(sol.has_value(), "submodule: rows are not action-stable");
      for (std::size_t c = 0; c < rows.size(); ++c) S.act[k].at(r, c) = (*sol)[c];
    }
  return S;
}

/// Quotient of M by the submodule spanned by the given rows.
template <class K>
struct QuotientModule {
  ModuleRep<K> rep;
  Matrix<K> projection;  // M.mdim x rep.mdim, row convention
};

template <class K>
QuotientModule<K> quotient_module(const ModuleRep<K>& M, const std::vector<Vec<K>>& sub) {
  Echelon<K> S(M.mdim);
  for (const auto& r : sub) S.add(r);
  std::vector<bool> is_pivot(M.mdim, false);
  for (std::size_t p : S.pivots()) is_pivot[p] = true;
  std::vector<int> kept;
  for (std::size_t i = 0; i < M.mdim; ++i)
    if (!is_pivot[i]) kept.push_back(static_cast<int>(i));
  std::vector<int> pos(M.mdim, -1);
  for (std::size_t t = 0; t < kept.size(); ++t) pos[kept[t]] = static_cast<int>(t);
  auto reduce_coords = [&](const Vec<K>& x) {
    Vec<K> r = S.reduce(x);
    Vec<K> out(kept.size(), K::zero());
    for (std::size_t i = 0; i < M.mdim; ++i)
      if (!r[i].is_zero()) out[pos[i]] = r[i];
    return out;
  };
  QuotientModule<K> Q;
  Q.rep.mdim = kept.size();
  Q.rep.act.assign(M.act.size(), Matrix<K>(Q.rep.mdim, Q.rep.mdim));
  for (std::size_t k = 0; k < M.act.size(); ++k)
    for (std::size_t u = 0; u < kept.size(); ++u) {
      Vec<K> img = reduce_coords(M.act[k].row(kept[u]));
      for (std::size_t c = 0; c < kept.size(); ++c) Q.rep.act[k].at(u, c) = img[c];
    }
  Q.projection = Matrix<K>(M.mdim, kept.size());
  for (std::size_t u = 0; u < M.mdim; ++u) {
    Vec<K> e(M.mdim, K::zero());
    e[u] = K::one();
    Vec<K> row = reduce_coords(e);
    for (std::size_t c = 0; c < kept.size(); ++c) Q.projection.at(u, c) = row[c];
  }
  return Q;
}

/// A generating set of the algebra: vertex idempotents and arrows for
/// quiver-derived algebras, the whole basis otherwise.  Linearity over the
/// quotient makes commuting with a generating set equivalent to A-linearity.
template <class K>
std::vector<Vec<K>> generating_set(const Algebra<K>& A) {
  if (A.quiver) {
    std::vector<Vec<K>> gens = A.idems;
    for (std::size_t b = 0; b < A.dim(); ++b)
      if (A.quiver->words[b].size() == 1) gens.push_back(basis_elem(A, b));
    return gens;
  }
  std::vector<Vec<K>> gens;
  for (std::size_t b = 0; b < A.dim(); ++b) gens.push_back(basis_elem(A, b));
  return gens;
}

/// Basis of Hom_A(M, N) as matrices F in row convention, phi(m) = row(m) F.
template <class K>
std::vector<Matrix<K>> hom_module(const Algebra<K>& A, const ModuleRep<K>& M,
                                  const ModuleRep<K>& N) {
  check(M.act.size() == A.dim() && N.act.size() == A.dim(),
        "hom_module: modules over different algebras");
  const std::size_t m = M.mdim, n = N.mdim;
  if (m == 0 || n == 0) return {};
  std::vector<Matrix<K>> gact_m, gact_n;
  for (const auto& g : generating_set(A)) {
    gact_m.push_back(M.act_elem(g));
    gact_n.push_back(N.act_elem(g));
  }
  Matrix<K> sys(gact_m.size() * m * n, m * n);
  std::size_t row = 0;
  for (std::size_t k = 0; k < gact_m.size(); ++k) {
    // R_M(g) F - F R_N(g) = 0
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t p = 0; p < m; ++p)
          sys.at(row, p * n + q) += gact_m[k].at(i, p);
        for (std::size_t q2 = 0; q2 < n; ++q2)
          sys.at(row, i * n + q2) -= gact_n[k].at(q2, q);
        ++row;
      }
  }
  Matrix<K> ns = nullspace(sys);
  std::vector<Matrix<K>> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    Matrix<K> F(m, n);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < n; ++q) F.at(p, q) = ns.at(p * n + q, j);
    out.push_back(std::move(F));
  }
  return out;
}

template <class K>
bool modules_isomorphic(const Algebra<K>& A, const ModuleRep<K>& M, const ModuleRep<K>& N,
                        const SearchPolicy& policy = {}) {
  if (M.mdim != N.mdim) return false;
  if (M.mdim == 0) return true;
  auto homs = hom_module(A, M, N);
  if (homs.empty()) return false;
  auto combine = [&](const Vec<K>& c) {
    Matrix<K> F(M.mdim, N.mdim);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t p = 0; p < M.mdim; ++p)
        for (std::size_t q = 0; q < N.mdim; ++q) F.at(p, q) += c[i] * homs[i].at(p, q);
    }
    return F;
  };
  for (std::size_t attempt = 0; attempt < homs.size() + 8; ++attempt)
    if (is_invertible(combine(generic_coefficients<K>(homs.size(), attempt)))) return true;
  Rng rng(policy.seed ^ 0xc2b2ae3d27d4eb4fULL);
  for (int t = 0; t < policy.random_trials; ++t) {
    Vec<K> c(homs.size());
    for (auto& x : c) x = random_scalar<K>(rng);
    if (is_invertible(combine(c))) return true;
  }
  return false;
}

/// Top of M and a minimal generating lift.  Generators are returned per
/// idempotent block: generator g with block i satisfies g = g.e_i, and one
/// copy of e_iA covers the whole simple top(e_iA)-copy its class generates.
/// When distinct idempotents carry isomorphic projectives the simple modules
/// have dimension > 1, so after choosing a generator everything it generates
/// counts as covered.
template <class K>
struct TopInfo {
  std::vector<std::size_t> mult;                      // per distinguished idem
  std::vector<std::pair<int, Vec<K>>> generators;     // (idem index, row in M)
  std::size_t top_dim = 0;
};

template <class K>
TopInfo<K> top_and_min_generators(const Algebra<K>& A, const ModuleRep<K>& M) {
  TopInfo<K> info;
  info.mult.assign(A.nidem(), 0);
  if (M.mdim == 0) return info;
  Echelon<K> mrad(M.mdim);
  for (const auto& r : radical_basis(A)) {
    Matrix<K> R = M.act_elem(r);
    for (std::size_t u = 0; u < M.mdim; ++u) mrad.add(R.row(u));
  }
  info.top_dim = M.mdim - mrad.dim();
  Echelon<K> covered = mrad;
  for (std::size_t i = 0; i < A.nidem(); ++i) {
    Matrix<K> Ei = M.act_elem(A.idems[i]);
    for (std::size_t u = 0; u < M.mdim; ++u) {
      Vec<K> g = Ei.row(u);  // lies in M e_i
      if (covered.contains(g)) continue;
      info.generators.emplace_back(static_cast<int>(i), g);
      ++info.mult[i];
      // everything the generator reaches is covered
      covered.add(g);
      for (std::size_t k = 0; k < A.dim(); ++k) covered.add(apply_row(g, M.act[k]));
    }
  }
  check(covered.dim() == M.mdim,
        "top_and_min_generators: generators fail to span the module");
  return info;
}

}  // namespace tiltkit
