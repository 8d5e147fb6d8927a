#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tiltkit/algebra.hpp"

namespace fixtures {

using namespace tiltkit;

/// k[x]/(x^2): one vertex, one loop, bound 2.
inline QuiverPresentation kx2() {
  QuiverPresentation q;
  q.vertices = {"v"};
  q.arrows = {{"x", 0, 0}};
  q.nilpotency = 2;
  return q;
}

/// Symmetric Nakayama algebra on two vertices: arrows a:1->2, b:2->1,
/// relations aba = bab = 0 (equivalently bound 3).
inline QuiverPresentation sn2() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  q.relations = {{{1, 1, {0, 1, 0}}}, {{1, 1, {1, 0, 1}}}};
  q.nilpotency = 3;
  return q;
}

/// Symmetric Nakayama algebra on three vertices with Loewy length 4.
inline QuiverPresentation sn3() {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}};
  q.nilpotency = 4;
  return q;
}

/// Product field k^n: n vertices, no arrows.
inline QuiverPresentation kn(int n) {
  QuiverPresentation q;
  for (int i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  q.nilpotency = 1;
  return q;
}

/// Radical-square-zero two-cycle: 1 <-> 2 with all length-2 paths zero.
/// Not a symmetric algebra.
inline QuiverPresentation two_cycle_rad2() {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  q.nilpotency = 2;
  return q;
}

// --- an independent path oracle for monomial-relation quivers --------------------
//
// Test-side reimplementation: nonzero paths are the words that avoid every
// relation word as a factor and are shorter than the bound.  Valid for the
// fixtures above, whose relations are single paths.

struct PathOracle {
  QuiverPresentation q;
  std::vector<std::vector<int>> rel_words;

  explicit PathOracle(const QuiverPresentation& pres) : q(pres) {
    for (const auto& rel : pres.relations) {
      if (rel.size() == 1) rel_words.push_back(rel[0].word);
    }
  }

  bool word_is_zero(const std::vector<int>& w) const {
    if (w.size() >= static_cast<std::size_t>(q.nilpotency)) return true;
    for (const auto& r : rel_words)
      if (r.size() <= w.size())
        for (std::size_t i = 0; i + r.size() <= w.size(); ++i) {
          bool hit = true;
          for (std::size_t j = 0; j < r.size(); ++j) hit = hit && w[i + j] == r[j];
          if (hit) return true;
        }
    return false;
  }

  bool composable(const std::vector<int>& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (q.arrows[w[i]].tgt != q.arrows[w[i + 1]].src) return false;
    return true;
  }

  /// All nonzero paths from s to t as arrow words (the empty word iff s == t).
  std::vector<std::vector<int>> paths(int s, int t) const {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> frontier = {{}};
    for (int len = 0; len < q.nilpotency; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : frontier) {
        int end = w.empty() ? s : q.arrows[w.back()].tgt;
        if (end == t && !word_is_zero(w)) out.push_back(w);
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
          if (q.arrows[a].src == end) {
            auto w2 = w;
            w2.push_back(a);
            next.push_back(std::move(w2));
          }
      }
      frontier = std::move(next);
    }
    return out;
  }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (int s = 0; s < static_cast<int>(q.vertices.size()); ++s)
      for (int t = 0; t < static_cast<int>(q.vertices.size()); ++t) n += paths(s, t).size();
    return n;
  }

  /// Product of two paths (as (start, word) pairs); nullopt means zero.
  std::optional<std::vector<int>> mult(int s1, const std::vector<int>& w1, int s2,
                                       const std::vector<int>& w2) const {
    int end1 = w1.empty() ? s1 : q.arrows[w1.back()].tgt;
    if (end1 != s2) return std::nullopt;
    std::vector<int> w = w1;
    w.insert(w.end(), w2.begin(), w2.end());
    if (word_is_zero(w)) return std::nullopt;
    return w;
  }
};

/// Basis index of the path (start, word) in a quiver-built algebra.
template <class K>
int basis_index_of_word(const Algebra<K>& A, int start, const std::vector<int>& word) {
  for (std::size_t b = 0; b < A.dim(); ++b)
    if (A.quiver->words[b] == word && A.peirce[b].first == start)
      return static_cast<int>(b);
  return -1;
}

}  // namespace fixtures
