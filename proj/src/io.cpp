#include "tiltkit/io.hpp"

#include <fstream>
#include <sstream>

namespace tiltkit {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write '" + path + "'");
  out << content;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
  fail(name + ":" + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& name, int line, const std::string& tok) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (...) {
    parse_fail(name, line, "expected an integer, got '" + tok + "'");
  }
}

/// Coefficient tokens end in '*': "3*", "-1*", "2/5*".
bool is_coefficient(const std::string& tok) {
  return !tok.empty() && tok.back() == '*';
}

std::pair<long long, long long> parse_coefficient(const std::string& name, int line,
                                                  std::string tok) {
  tok.pop_back();  // strip '*'
  auto slash = tok.find('/');
  if (slash == std::string::npos) return {parse_int(name, line, tok), 1};
  long long num = parse_int(name, line, tok.substr(0, slash));
  long long den = parse_int(name, line, tok.substr(slash + 1));
  if (den == 0) parse_fail(name, line, "zero denominator in coefficient");
  return {num, den};
}

/// Grammar: term (('+' | '-') term)*, term = [coefficient*] label+.
std::vector<ExprTerm> parse_expr(const std::string& name, int line,
                                 const std::vector<std::string>& toks, std::size_t from) {
  std::vector<ExprTerm> expr;
  ExprTerm cur;
  bool negative = false;
  bool in_term = false;
  auto flush = [&]() {
    if (!in_term) parse_fail(name, line, "empty term in path expression");
    if (negative) cur.num = -cur.num;
    expr.push_back(cur);
    cur = ExprTerm{};
    in_term = false;
  };
  for (std::size_t i = from; i < toks.size(); ++i) {
    const std::string& t = toks[i];
    if (t == "+" || t == "-") {
      flush();
      negative = t == "-";
    } else if (is_coefficient(t)) {
      if (in_term) parse_fail(name, line, "coefficient inside a path: '" + t + "'");
      auto [num, den] = parse_coefficient(name, line, t);
      cur.num = num;
      cur.den = den;
      in_term = true;  // a bare coefficient with no labels is caught at flush
      cur.labels.clear();
    } else {
      cur.labels.push_back(t);
      in_term = true;
    }
  }
  flush();
  for (const auto& t : expr)
    if (t.labels.empty()) parse_fail(name, line, "coefficient without a path");
  return expr;
}

}  // namespace

AlgebraSpec parse_algebra_text(const std::string& text, const std::string& name) {
  AlgebraSpec spec;
  bool field_seen = false, nilp_seen = false;
  for (const Line& ln : tokenize(text)) {
    const auto& t = ln.tokens;
    if (t[0] == "field") {
      if (t.size() != 2) parse_fail(name, ln.number, "usage: field rational|<prime>");
      if (t[1] == "rational")
        spec.field.rational = true;
      else
        spec.field.prime = static_cast<std::uint32_t>(parse_int(name, ln.number, t[1]));
      field_seen = true;
    } else if (t[0] == "vertices" || t[0] == "vertex") {
      for (std::size_t i = 1; i < t.size(); ++i) spec.quiver.vertices.push_back(t[i]);
    } else if (t[0] == "arrow") {
      if (t.size() != 4) parse_fail(name, ln.number, "usage: arrow <label> <src> <tgt>");
      int s = spec.quiver.vertex_index(t[2]);
      int g = spec.quiver.vertex_index(t[3]);
      if (s < 0 || g < 0)
        parse_fail(name, ln.number, "arrow endpoints must be declared vertices");
      spec.quiver.arrows.push_back({t[1], s, g});
    } else if (t[0] == "relation") {
      std::vector<ExprTerm> expr = parse_expr(name, ln.number, t, 1);
      std::vector<RelTerm> rel;
      for (const auto& term : expr) {
        RelTerm rt;
        rt.num = term.num;
        rt.den = term.den;
        for (const auto& lbl : term.labels) {
          int a = spec.quiver.arrow_index(lbl);
          if (a < 0)
            parse_fail(name, ln.number,
                       "unknown arrow '" + lbl + "' in relation '" +
                           [&] {
                             std::string s;
                             for (const auto& l : term.labels) s += l + " ";
                             return s;
                           }() +
                           "'");
          rt.word.push_back(a);
        }
        rel.push_back(std::move(rt));
      }
      spec.quiver.relations.push_back(std::move(rel));
    } else if (t[0] == "nilpotency") {
      if (t.size() != 2) parse_fail(name, ln.number, "usage: nilpotency <bound>");
      spec.quiver.nilpotency = static_cast<int>(parse_int(name, ln.number, t[1]));
      nilp_seen = true;
    } else {
      parse_fail(name, ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!field_seen) fail(name + ": missing 'field' line");
  if (!nilp_seen) fail(name + ": missing 'nilpotency' line");
  return spec;
}

AlgebraSpec parse_algebra_file(const std::string& path) {
  return parse_algebra_text(read_file(path), path);
}

ComplexSpec parse_complex_text(const std::string& text, const std::string& name) {
  ComplexSpec spec;
  for (const Line& ln : tokenize(text)) {
    const auto& t = ln.tokens;
    if (t[0] == "algebra") {
      if (t.size() >= 2) spec.algebra_label = t[1];
    } else if (t[0] == "term") {
      if (t.size() < 2) parse_fail(name, ln.number, "usage: term <degree> <vertex>...");
      int d = static_cast<int>(parse_int(name, ln.number, t[1]));
      auto& list = spec.terms[d];
      for (std::size_t i = 2; i < t.size(); ++i) list.push_back(t[i]);
    } else if (t[0] == "diff") {
      if (t.size() < 5)
        parse_fail(name, ln.number, "usage: diff <degree> <row> <col> <path expr>");
      ComplexSpec::DiffEntry e;
      e.degree = static_cast<int>(parse_int(name, ln.number, t[1]));
      e.row = static_cast<int>(parse_int(name, ln.number, t[2]));
      e.col = static_cast<int>(parse_int(name, ln.number, t[3]));
      e.expr = parse_expr(name, ln.number, t, 4);
      e.line = ln.number;
      spec.diffs.push_back(std::move(e));
    } else {
      parse_fail(name, ln.number, "unknown directive '" + t[0] + "'");
    }
  }
  return spec;
}

ComplexSpec parse_complex_file(const std::string& path) {
  return parse_complex_text(read_file(path), path);
}

}  // namespace tiltkit
