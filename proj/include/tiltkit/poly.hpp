#pragma once

#include <vector>

#include "tiltkit/field.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit {

/// Polynomials as ascending coefficient vectors, normalized so the leading
/// coefficient is nonzero (the zero polynomial is the empty vector).
template <class K>
using Poly = std::vector<K>;

template <class K>
Poly<K> poly_trim(Poly<K> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

template <class K>
int poly_deg(const Poly<K>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class K>
K poly_eval(const Poly<K>& p, const K& x) {
  K acc = K::zero();
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<K> c(a.size() + b.size() - 1, K::zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(std::move(c));
}

template <class K>
Poly<K> poly_scale(Poly<K> a, const K& c) {
  for (auto& x : a) x = x * c;
  return poly_trim(std::move(a));
}

template <class K>
Poly<K> poly_sub(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> c = a;
  if (b.size() > c.size()) c.resize(b.size(), K::zero());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return poly_trim(std::move(c));
}

template <class K>
struct PolyDivMod {
  Poly<K> quo, rem;
};

template <class K>
PolyDivMod<K> poly_divmod(Poly<K> a, const Poly<K>& b) {
  check(!b.empty(), "polynomial division by zero");
  Poly<K> q;
  K lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    K c = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    if (q.size() < shift + 1) q.resize(shift + 1, K::zero());
    q[shift] += c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return {poly_trim(std::move(q)), std::move(a)};
}

/// Extended Euclid: returns (g, s, t) with s a + t b = g, g monic.
template <class K>
struct PolyXgcd {
  Poly<K> g, s, t;
};

template <class K>
PolyXgcd<K> poly_xgcd(Poly<K> a, Poly<K> b) {
  Poly<K> s0{K::one()}, s1{}, t0{}, t1{K::one()};
  while (!b.empty()) {
    auto dm = poly_divmod(a, b);
    Poly<K> s2 = poly_sub(s0, poly_mul(dm.quo, s1));
    Poly<K> t2 = poly_sub(t0, poly_mul(dm.quo, t1));
    a = std::move(b);
    b = std::move(dm.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!a.empty()) {
    K inv = a.back().inv();
    a = poly_scale(std::move(a), inv);
    s0 = poly_scale(std::move(s0), inv);
    t0 = poly_scale(std::move(t0), inv);
  }
  return {std::move(a), std::move(s0), std::move(t0)};
}

/// Multiplicity of the root lambda, by repeated synthetic division.
template <class K>
int root_multiplicity(Poly<K> p, const K& lambda) {
  int m = 0;
  Poly<K> lin{-lambda, K::one()};
  while (!p.empty() && poly_eval(p, lambda).is_zero()) {
    p = poly_divmod(p, lin).quo;
    ++m;
  }
  return m;
}

// --- root finding in the ground field -----------------------------------------

/// Distinct roots of p lying in F_p, by scanning the field.  Complete.
std::vector<Fp> field_roots(const Poly<Fp>& p);

/// Distinct rational roots, via the rational root theorem on the integerized
/// polynomial.  Complete for roots in Q; throws when the divisor enumeration
/// would be unreasonably large.
std::vector<Rat> field_roots(const Poly<Rat>& p);

}  // namespace tiltkit
