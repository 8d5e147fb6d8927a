#include "tiltkit/algebra.hpp"

#include <set>

namespace tiltkit {

std::string render_path(const QuiverPresentation& q, int start,
                        const std::vector<int>& word) {
  if (word.empty()) return q.vertices[start];
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += q.arrows[word[i]].label;
  }
  return s;
}

std::vector<detail::PathKey> enumerate_paths(const QuiverPresentation& q) {
  std::vector<detail::PathKey> out;
  std::vector<detail::PathKey> frontier;
  for (int v = 0; v < static_cast<int>(q.vertices.size()); ++v)
    frontier.push_back({v, {}});
  for (int len = 0; len < q.nilpotency; ++len) {
    std::sort(frontier.begin(), frontier.end());
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<detail::PathKey> next;
    for (const auto& p : frontier) {
      int end = p.word.empty() ? p.start : q.arrows[p.word.back()].tgt;
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        if (q.arrows[a].src != end) continue;
        detail::PathKey np = p;
        np.word.push_back(a);
        next.push_back(std::move(np));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

void validate_presentation(const QuiverPresentation& q) {
  check(!q.vertices.empty(), "quiver: no vertices");
  check(q.nilpotency >= 1, "quiver: nilpotency bound must be at least 1");
  std::set<std::string> labels(q.vertices.begin(), q.vertices.end());
  check(labels.size() == q.vertices.size(), "quiver: duplicate vertex label");
  for (const auto& a : q.arrows) {
    check(a.src >= 0 && a.src < static_cast<int>(q.vertices.size()) && a.tgt >= 0 &&
              a.tgt < static_cast<int>(q.vertices.size()),
          "quiver: arrow endpoint out of range");
    check(labels.insert(a.label).second, "quiver: label '" + a.label + "' reused");
  }
  if (!q.arrows.empty())
    check(q.nilpotency >= 2, "quiver: ideal not admissible (bound kills arrows)");
  for (const auto& rel : q.relations) {
    check(!rel.empty(), "quiver: empty relation");
    int src = -1, tgt = -1;
    for (const auto& term : rel) {
      check(term.word.size() >= 2,
            "quiver: ideal not admissible (relation term of length < 2)");
      check(term.den != 0, "quiver: zero denominator in relation coefficient");
      for (std::size_t i = 0; i < term.word.size(); ++i) {
        int a = term.word[i];
        check(a >= 0 && a < static_cast<int>(q.arrows.size()),
              "quiver: relation uses unknown arrow");
        if (i + 1 < term.word.size())
          check(q.arrows[a].tgt == q.arrows[term.word[i + 1]].src,
                "quiver: relation term is not a composable path");
      }
      int s = q.arrows[term.word.front()].src;
      int t = q.arrows[term.word.back()].tgt;
      if (src < 0) {
        src = s;
        tgt = t;
      } else {
        check(s == src && t == tgt, "quiver: relation mixes endpoints");
      }
    }
  }
}

}  // namespace tiltkit
