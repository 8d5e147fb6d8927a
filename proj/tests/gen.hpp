#pragma once

// Random complex generators for property tests and the acceptance suite.

#include <vector>

#include "tiltkit/reduce.hpp"

namespace gen {

using namespace tiltkit;

/// Random element of the strict chain-map space between two complexes.
template <class K>
ChainMap<K> random_chain_map(const ProjComplex<K>& X, const ProjComplex<K>& Y, Rng& rng) {
  StrictHom<K> sh = strict_hom(X, Y, 0);
  Vec<K> c(sh.dim());
  for (auto& x : c) x = random_scalar<K>(rng);
  if (sh.dim() == 0) return zero_map(X, Y);
  return sh.map_of(c);
}

/// Random valid bounded complex built from projective stalks by shifts,
/// direct sums and cones of random chain maps.
template <class K>
ProjComplex<K> random_complex(const AlgPtr<K>& A, Rng& rng, int steps = 3) {
  auto atom = [&]() {
    int i = static_cast<int>(rng() % A->nidem());
    int d = static_cast<int>(rng() % 3) - 1;
    return shift(stalk_complex(A, {i}), d);
  };
  ProjComplex<K> X = atom();
  for (int s = 0; s < steps; ++s) {
    switch (rng() % 4) {
      case 0:
        X = direct_sum(X, atom());
        break;
      case 1:
        X = shift(X, static_cast<int>(rng() % 3) - 1);
        break;
      case 2: {
        ProjComplex<K> Y = atom();
        X = cone(random_chain_map(X, Y, rng)).cone;
        break;
      }
      default: {
        ProjComplex<K> Y = atom();
        X = cone(random_chain_map(Y, X, rng)).cone;
        break;
      }
    }
    if (X.is_zero()) X = atom();
    // keep the widths desk-sized
    if (X.hi() - X.lo > 4) X = minimize(X).min;
    if (X.is_zero() || X.hi() - X.lo > 4) X = atom();
  }
  return X;
}

/// Random element of a Peirce block intersected with the radical; quiver
/// provenance makes the radical part of a block a span of basis elements.
template <class K>
Vec<K> random_radical_entry(const Algebra<K>& A, int i, int j, Rng& rng) {
  Vec<K> v = zero_vec<K>(A.dim());
  Echelon<K> rad(A.dim());
  for (const auto& r : radical_basis(A)) rad.add(r);
  for (int b : A.block_indices(i, j)) {
    if (!rad.contains(basis_elem(A, b))) continue;
    v[b] = random_scalar<K>(rng);
  }
  return v;
}

/// Two-term complex with radical entries (minimal whenever nonzero).
template <class K>
ProjComplex<K> random_two_term(const AlgPtr<K>& A, Rng& rng, std::size_t max_width = 2) {
  ProjComplex<K> X;
  X.A = A;
  X.lo = -1;
  auto rand_term = [&]() {
    std::vector<int> t(1 + rng() % max_width);
    for (auto& i : t) i = static_cast<int>(rng() % A->nidem());
    return t;
  };
  X.terms = {rand_term(), rand_term()};
  AlgMat<K> d(X.terms[1].size(), X.terms[0].size(), A->dim());
  for (std::size_t r = 0; r < d.rows; ++r)
    for (std::size_t c = 0; c < d.cols; ++c)
      d.at(r, c) = random_radical_entry(*A, X.terms[1][r], X.terms[0][c], rng);
  X.diffs = {std::move(d)};
  return X;
}

/// Three-term complex with radical entries: the last differential is drawn
/// from the solution space of d2 d1 = 0.
template <class K>
std::optional<ProjComplex<K>> random_three_term(const AlgPtr<K>& A, Rng& rng,
                                                std::size_t max_width = 2) {
  ProjComplex<K> X;
  X.A = A;
  X.lo = -2;
  auto rand_term = [&]() {
    std::vector<int> t(1 + rng() % max_width);
    for (auto& i : t) i = static_cast<int>(rng() % A->nidem());
    return t;
  };
  X.terms = {rand_term(), rand_term(), rand_term()};
  AlgMat<K> d1(X.terms[1].size(), X.terms[0].size(), A->dim());
  for (std::size_t r = 0; r < d1.rows; ++r)
    for (std::size_t c = 0; c < d1.cols; ++c)
      d1.at(r, c) = random_radical_entry(*A, X.terms[1][r], X.terms[0][c], rng);

  // unknown entries of d2 on the radical parts of their blocks
  Echelon<K> rad(A->dim());
  for (const auto& r : radical_basis(*A)) rad.add(r);
  struct Unknown {
    std::size_t r, c;
    int b;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t r = 0; r < X.terms[2].size(); ++r)
    for (std::size_t c = 0; c < X.terms[1].size(); ++c)
      for (int b : A->block_indices(X.terms[2][r], X.terms[1][c]))
        if (rad.contains(basis_elem(*A, b)))
          unknowns.push_back({r, c, b});
  if (unknowns.empty()) return std::nullopt;
  // d2 d1 = 0: for each (r, c0) the sum over middle columns must vanish
  Matrix<K> sys(X.terms[2].size() * X.terms[0].size() * A->dim(), unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    for (std::size_t c0 = 0; c0 < X.terms[0].size(); ++c0) {
      Vec<K> prod = multiply(*A, basis_elem(*A, unknowns[u].b), d1.at(unknowns[u].c, c0));
      for (std::size_t k = 0; k < A->dim(); ++k)
        sys.at((unknowns[u].r * X.terms[0].size() + c0) * A->dim() + k, u) = prod[k];
    }
  }
  Matrix<K> ns = nullspace(sys);
  if (ns.cols() == 0) return std::nullopt;
  AlgMat<K> d2(X.terms[2].size(), X.terms[1].size(), A->dim());
  for (std::size_t j = 0; j < ns.cols(); ++j) {
    K c = random_scalar<K>(rng);
    if (c.is_zero()) continue;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      d2.at(unknowns[u].r, unknowns[u].c)[unknowns[u].b] += c * ns.at(u, j);
  }
  X.diffs = {std::move(d1), std::move(d2)};
  validate(X);
  return X;
}

}  // namespace gen
