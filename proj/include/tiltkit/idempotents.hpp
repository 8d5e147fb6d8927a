#pragma once

#include <optional>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/poly.hpp"

namespace tiltkit {

/// Bare associative algebra: basis-indexed multiplication table and a unit,
/// with no distinguished idempotents.  Endomorphism algebras of complexes
/// enter the idempotent machinery in this form.
template <class K>
struct RawAlgebra {
  std::vector<std::vector<Vec<K>>> mul;  // mul[i][j]
  Vec<K> unit;

  std::size_t dim() const { return unit.size(); }
};

template <class K>
RawAlgebra<K> raw_view(const Algebra<K>& A) {
  return {A.mul_table, A.unit};
}

template <class K>
Vec<K> raw_multiply(const RawAlgebra<K>& E, const Vec<K>& x, const Vec<K>& y) {
  Vec<K> out(E.dim(), K::zero());
  for (std::size_t i = 0; i < E.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < E.dim(); ++j) {
      if (y[j].is_zero()) continue;
      axpy(out, x[i] * y[j], E.mul[i][j]);
    }
  }
  return out;
}

template <class K>
Vec<K> raw_power(const RawAlgebra<K>& E, Vec<K> x, unsigned n) {
  Vec<K> acc = E.unit;
  while (n) {
    if (n & 1) acc = raw_multiply(E, acc, x);
    x = raw_multiply(E, x, x);
    n >>= 1;
  }
  return acc;
}

/// Evaluates p at x relative to the given unit (the constant term is a
/// multiple of `unit`), so the result stays inside the corner unit*E*unit.
template <class K>
Vec<K> raw_poly_eval(const RawAlgebra<K>& E, const Poly<K>& p, const Vec<K>& x,
                     const Vec<K>& unit) {
  Vec<K> acc(E.dim(), K::zero());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = raw_multiply(E, acc, x);
    if (!p[i].is_zero()) acc = add_vec(acc, scale(unit, p[i]));
  }
  return acc;
}

/// Minimal polynomial of x, relative to the given unit (so x is taken inside
/// the corner u E u when u is an idempotent and x = u x u).
template <class K>
Poly<K> minimal_polynomial(const RawAlgebra<K>& E, const Vec<K>& x, const Vec<K>& unit) {
  std::vector<Vec<K>> powers{unit};
  Echelon<K> span(E.dim());
  span.add(unit);
  for (;;) {
    Vec<K> next = raw_multiply(E, powers.back(), x);
    if (!span.add(next)) {
      // solve for the dependence: next = sum c_i powers[i]
      Matrix<K> M(E.dim(), powers.size());
      for (std::size_t j = 0; j < powers.size(); ++j)
        for (std::size_t r = 0; r < E.dim(); ++r) M.at(r, j) = powers[j][r];
      auto sol = solve(M, next);
      check(sol.has_value(), "minimal_polynomial: dependence solve failed");
      Poly<K> p(powers.size() + 1, K::zero());
      for (std::size_t i = 0; i < powers.size(); ++i) p[i] = -(*sol)[i];
      p[powers.size()] = K::one();
      return p;
    }
    powers.push_back(std::move(next));
  }
}

/// The spectral projector of x at the root lambda of its minimal polynomial:
/// an exact idempotent polynomial in x, nontrivial whenever the minimal
/// polynomial is not a pure power of (t - lambda).
template <class K>
std::optional<Vec<K>> spectral_idempotent(const RawAlgebra<K>& E, const Vec<K>& x,
                                          const Vec<K>& unit, const K& lambda) {
  Poly<K> mu = minimal_polynomial(E, x, unit);
  int m = root_multiplicity(mu, lambda);
  if (m == 0 || m == poly_deg(mu)) return std::nullopt;
  Poly<K> lin{-lambda, K::one()};
  Poly<K> h{K::one()};
  for (int i = 0; i < m; ++i) h = poly_mul(h, lin);
  Poly<K> g = poly_divmod(mu, h).quo;
  auto xg = poly_xgcd(h, g);
  check(poly_deg(xg.g) == 0, "spectral_idempotent: factors not coprime");
  // e = (t*g)(x): s*h + t*g = 1, so e = 1 mod h and 0 mod g
  Poly<K> proj = poly_mul(xg.t, g);
  Vec<K> e = raw_poly_eval(E, proj, x, unit);
  check(raw_multiply(E, e, e) == e, "spectral_idempotent: projector not idempotent");
  return e;
}

/// Radical of a raw algebra by the trace form; characteristic 0 or > dim.
template <class K>
std::vector<Vec<K>> raw_radical(const RawAlgebra<K>& E) {
  const std::uint64_t c = FieldInfo<K>::characteristic();
  if (c != 0 && c <= E.dim())
    fail("raw_radical: characteristic too small for the trace method");
  const std::size_t d = E.dim();
  Vec<K> tr(d, K::zero());
  for (std::size_t k = 0; k < d; ++k) {
    K s = K::zero();
    for (std::size_t i = 0; i < d; ++i) s += E.mul[k][i][i];
    tr[k] = s;
  }
  Matrix<K> T(d, d);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      K s = K::zero();
      for (std::size_t k = 0; k < d; ++k)
        if (!E.mul[u][v][k].is_zero()) s += E.mul[u][v][k] * tr[k];
      T.at(u, v) = s;
    }
  Matrix<K> ns = nullspace(T);
  std::vector<Vec<K>> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(ns.col(j));
  return out;
}

/// Radical of E given a known nilpotent ideal: rad(E) is the preimage of the
/// trace-form radical of E modulo that ideal.  Quotienting first keeps the
/// trace method inside its characteristic bound.
template <class K>
std::vector<Vec<K>> radical_mod_nilpotent(const RawAlgebra<K>& E,
                                          const std::vector<Vec<K>>& nilpotent_ideal);

namespace detail {

template <class K>
Vec<K> basis_elem_raw(std::size_t dim, int i) {
  Vec<K> v(dim, K::zero());
  v[i] = K::one();
  return v;
}

template <class K>
struct SemisimpleQuotient {
  RawAlgebra<K> S;
  Matrix<K> project;         // dim(E) x dim(S), row convention
  std::vector<int> section;  // dim(S) coordinates of E (complement coords)
  std::size_t edim;

  Vec<K> to_S(const Vec<K>& x) const { return apply_row(x, project); }
  Vec<K> lift(const Vec<K>& s) const {
    Vec<K> x(edim, K::zero());
    for (std::size_t i = 0; i < s.size(); ++i) x[section[i]] = s[i];
    return x;
  }
};

template <class K>
SemisimpleQuotient<K> semisimple_quotient(const RawAlgebra<K>& E,
                                          const std::vector<Vec<K>>& rad) {
  Echelon<K> R(E.dim());
  for (const auto& r : rad) R.add(r);
  std::vector<bool> is_pivot(E.dim(), false);
  for (std::size_t p : R.pivots()) is_pivot[p] = true;
  std::vector<int> kept;
  for (std::size_t i = 0; i < E.dim(); ++i)
    if (!is_pivot[i]) kept.push_back(static_cast<int>(i));
  const std::size_t d = kept.size();
  std::vector<int> pos(E.dim(), -1);
  for (std::size_t t = 0; t < d; ++t) pos[kept[t]] = static_cast<int>(t);
  auto reduce_coords = [&](const Vec<K>& x) {
    Vec<K> r = R.reduce(x);
    Vec<K> out(d, K::zero());
    for (std::size_t i = 0; i < E.dim(); ++i)
      if (!r[i].is_zero()) out[pos[i]] = r[i];
    return out;
  };
  SemisimpleQuotient<K> q;
  q.edim = E.dim();
  q.section = kept;
  q.S.mul.assign(d, std::vector<Vec<K>>(d));
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      q.S.mul[u][v] =
          reduce_coords(raw_multiply(E, basis_elem_raw<K>(E.dim(), kept[u]),
                                     basis_elem_raw<K>(E.dim(), kept[v])));
  q.S.unit = reduce_coords(E.unit);
  q.project = Matrix<K>(E.dim(), d);
  for (std::size_t b = 0; b < E.dim(); ++b) {
    Vec<K> x(E.dim(), K::zero());
    x[b] = K::one();
    Vec<K> row = reduce_coords(x);
    for (std::size_t t = 0; t < d; ++t) q.project.at(b, t) = row[t];
  }
  return q;
}

/// Basis of the center { z : zx = xz for all x }.
template <class K>
std::vector<Vec<K>> raw_center(const RawAlgebra<K>& E) {
  const std::size_t d = E.dim();
  Matrix<K> sys(d * d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t z = 0; z < d; ++z)
        sys.at(k * d + r, z) = E.mul[z][k][r] - E.mul[k][z][r];
  Matrix<K> ns = nullspace(sys);
  std::vector<Vec<K>> out;
  for (std::size_t j = 0; j < ns.cols(); ++j) out.push_back(ns.col(j));
  return out;
}

/// Tries to split the idempotent u of the semisimple algebra S using the
/// element y = u x u: any root of its minimal polynomial that does not
/// account for the whole polynomial yields a complementary idempotent pair.
template <class K>
std::optional<std::pair<Vec<K>, Vec<K>>> try_split(const RawAlgebra<K>& S,
                                                   const Vec<K>& u, const Vec<K>& y) {
  Poly<K> mu = minimal_polynomial(S, y, u);
  if (poly_deg(mu) <= 1) return std::nullopt;
  for (const K& lambda : field_roots(mu)) {
    auto e = spectral_idempotent(S, y, u, lambda);
    if (e && !is_zero_vec(*e) && *e != u) return std::make_pair(*e, sub_vec(u, *e));
  }
  return std::nullopt;
}

/// Complete orthogonal primitive idempotent set of a split semisimple
/// algebra.  Central elements are split first (their minimal polynomials are
/// squarefree with roots in k when the center splits); matrix blocks are then
/// peeled with corner elements.  Failure to split a corner of dimension > 1
/// is reported with that dimension, which is the division-algebra obstruction
/// in the genuinely non-split case.
template <class K>
std::vector<Vec<K>> semisimple_primitives(const RawAlgebra<K>& S,
                                          const SearchPolicy& policy) {
  std::vector<Vec<K>> done;
  std::vector<Vec<K>> work{S.unit};
  if (is_zero_vec(S.unit)) return {};
  const auto center = raw_center(S);
  Rng rng(policy.seed ^ 0x9e3779b97f4a7c15ULL);
  while (!work.empty()) {
    Vec<K> u = std::move(work.back());
    work.pop_back();
    // corner uSu
    std::vector<Vec<K>> corner_basis;
    {
      Echelon<K> span(S.dim());
      for (std::size_t b = 0; b < S.dim(); ++b)
        span.add(raw_multiply(S, raw_multiply(S, u, basis_elem_raw<K>(S.dim(), b)), u));
      corner_basis = span.basis();
    }
    if (corner_basis.size() <= 1) {
      done.push_back(std::move(u));
      continue;
    }
    std::optional<std::pair<Vec<K>, Vec<K>>> split;
    // candidates: central elements first, then corner basis, then pairwise
    // products and sums, then seeded random corner elements
    std::vector<Vec<K>> cands;
    for (const auto& z : center) cands.push_back(raw_multiply(S, raw_multiply(S, u, z), u));
    for (const auto& b : corner_basis) cands.push_back(b);
    for (std::size_t i = 0; i < corner_basis.size() && !split; ++i)
      for (std::size_t j = 0; j < corner_basis.size(); ++j) {
        cands.push_back(raw_multiply(S, corner_basis[i], corner_basis[j]));
        cands.push_back(add_vec(corner_basis[i], corner_basis[j]));
      }
    for (int t = 0; t < policy.random_trials; ++t) {
      Vec<K> x(S.dim(), K::zero());
      for (const auto& b : corner_basis) axpy(x, random_scalar<K>(rng), b);
      cands.push_back(std::move(x));
    }
    for (const auto& y : cands) {
      if (is_zero_vec(y)) continue;
      split = try_split(S, u, y);
      if (split) break;
    }
    if (!split)
      fail("primitive_idempotents: cannot split a semisimple corner of dimension " +
           std::to_string(corner_basis.size()) +
           " (non-split component or root search failure)");
    work.push_back(std::move(split->first));
    work.push_back(std::move(split->second));
  }
  return done;
}

}  // namespace detail

template <class K>
std::vector<Vec<K>> radical_mod_nilpotent(const RawAlgebra<K>& E,
                                          const std::vector<Vec<K>>& nilpotent_ideal) {
  Echelon<K> I(E.dim());
  I.add_all(nilpotent_ideal);
  if (I.dim() == 0) return raw_radical(E);
  auto q = detail::semisimple_quotient(E, I.basis());  // quotient by the ideal
  std::vector<Vec<K>> out = I.basis();
  for (const auto& r : raw_radical(q.S)) out.push_back(q.lift(r));
  return out;
}

/// Complete orthogonal set of primitive idempotents, lifted from the
/// semisimple quotient by the Newton iteration x <- 3x^2 - 2x^3 (terminates
/// exactly since the radical is nilpotent).
template <class K>
std::vector<Vec<K>> primitive_idempotents_raw(const RawAlgebra<K>& E,
                                              const std::vector<Vec<K>>& rad,
                                              const SearchPolicy& policy = {}) {
  if (E.dim() == 0) return {};
  auto q = detail::semisimple_quotient(E, rad);
  auto prims = detail::semisimple_primitives(q.S, policy);
  std::vector<Vec<K>> lifted;
  Vec<K> used(E.dim(), K::zero());
  for (std::size_t i = 0; i < prims.size(); ++i) {
    Vec<K> x = q.lift(prims[i]);
    Vec<K> u = sub_vec(E.unit, used);
    x = raw_multiply(E, raw_multiply(E, u, x), u);
    for (int it = 0;; ++it) {
      Vec<K> x2 = raw_multiply(E, x, x);
      if (x2 == x) break;
      check(it < 64, "primitive_idempotents: Newton iteration failed to converge");
      Vec<K> x3 = raw_multiply(E, x2, x);
      x = add_vec(scale(x2, K::from_int(3)), scale(x3, K::from_int(-2)));
    }
    check(!is_zero_vec(x), "primitive_idempotents: idempotent lifted to zero");
    lifted.push_back(x);
    used = add_vec(used, x);
  }
  check(used == E.unit, "primitive_idempotents: lifted set does not sum to one");
  return lifted;
}

template <class K>
std::vector<Vec<K>> primitive_idempotents(const Algebra<K>& A,
                                          const SearchPolicy& policy = {}) {
  return primitive_idempotents_raw(raw_view(A), radical_basis(A), policy);
}

}  // namespace tiltkit
