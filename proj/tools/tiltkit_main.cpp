// tiltkit: construct and verify tilting complexes over quiver algebras.
//
// Subcommands: check, complete, pipeline, symcheck, homtable, quotcompare,
// extcheck.  Exit codes: 0 = verdict true / completed, 1 = verdict false,
// 2 = error.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tiltkit/io.hpp"
#include "tiltkit/recollement.hpp"

using nlohmann::json;
using namespace tiltkit;

namespace {

struct Options {
  std::string command;
  std::string algebra_file, algebra2_file;
  std::string complex_file, complex2_file;
  std::string idemps, idemps2;
  std::string report_path, out_path;
  std::string field_override;
  std::uint64_t seed = 0;
  int max_stage = -1;
  bool timings = false;
  std::vector<std::string> argv_echo;
};

std::vector<int> parse_subset(const QuiverPresentation& q, const std::string& csv) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    int v = q.vertex_index(cur);
    check(v >= 0, "unknown vertex label '" + cur + "' in idempotent subset");
    out.push_back(v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (!isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  return out;
}

json table_json(const std::map<int, std::size_t>& t) {
  json out = json::object();
  for (const auto& [n, d] : t) out[std::to_string(n)] = d;
  return out;
}

template <class K>
json report_envelope(const Options& opt) {
  json r;
  r["schema"] = 1;
  r["command"] = opt.command;
  json inputs = json::object();
  if (!opt.algebra_file.empty()) inputs["algebra"] = opt.algebra_file;
  if (!opt.algebra2_file.empty()) inputs["algebra2"] = opt.algebra2_file;
  if (!opt.complex_file.empty()) inputs["complex"] = opt.complex_file;
  if (!opt.complex2_file.empty()) inputs["complex2"] = opt.complex2_file;
  if (!opt.idemps.empty()) inputs["idempotents"] = opt.idemps;
  if (!opt.idemps2.empty()) inputs["idempotents2"] = opt.idemps2;
  r["inputs"] = inputs;
  r["options"] = {{"field", FieldInfo<K>::name()},
                  {"seed", opt.seed},
                  {"max_stage", opt.max_stage}};
  return r;
}

template <class K>
json trace_summary(const CompletionTrace<K>& tr) {
  json stages = json::array();
  for (std::size_t k = 0; k < tr.stages.size(); ++k) {
    const auto& st = tr.stages[k];
    json s;
    s["stage"] = k + 1;
    s["hom_dim"] = st.vdim;
    s["cover_summands"] = st.cover_summands.size();
    json delta;
    delta["lo"] = st.delta.lo;
    delta["hi"] = st.delta.is_zero() ? st.delta.lo : st.delta.hi();
    delta["zero"] = st.delta.is_zero();
    s["delta"] = delta;
    stages.push_back(std::move(s));
  }
  json out;
  out["r"] = tr.r;
  out["stages"] = std::move(stages);
  return out;
}

template <class K>
json tilting_report_json(const TiltingReport<K>& rep) {
  json out;
  out["vanishing"] = table_json(rep.vanishing);
  out["vanishing_ok"] = rep.vanishing_ok;
  out["indecomposable_types"] = rep.n_theta;
  out["indecomposable_types_of_algebra"] = rep.n_algebra;
  out["generation"] = rep.generation_witnessed ? "witnessed" : "heuristic";
  out["generation_ok"] = rep.generation_ok;
  out["verdict"] = rep.verdict;
  if (!rep.note.empty()) out["note"] = rep.note;
  return out;
}

int finish(const Options& opt, json& report, int exit_code,
           std::chrono::steady_clock::time_point t0) {
  if (opt.timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["timings"] = {{"total_ms", ms}};
  }
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!opt.report_path.empty()) write_file(opt.report_path, text);
  return exit_code;
}

template <class K>
int cmd_check(const Options& opt, std::chrono::steady_clock::time_point t0) {
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  ProjComplex<K> X = build_complex<K>(parse_complex_file(opt.complex_file), A);
  PartialTiltingCert<K> cert = is_partial_tilting(X);
  json r = report_envelope<K>(opt);
  r["partial_tilting"] = cert.verdict;
  r["self_hom_table"] = table_json(cert.table);
  r["verdict"] = cert.verdict;
  return finish(opt, r, cert.verdict ? 0 : 1, t0);
}

template <class K>
int cmd_complete(const Options& opt, std::chrono::steady_clock::time_point t0) {
  check(opt.max_stage >= 0, "usage: complete requires --max-stage n with n >= 0");
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  ProjComplex<K> P = build_complex<K>(parse_complex_file(opt.complex_file), A);
  SearchPolicy policy;
  policy.seed = opt.seed;
  CompletionTrace<K> tr = complete(P, opt.max_stage, policy);
  TiltingReport<K> rep = verify_tilting(tr.theta, &tr, policy);
  std::string serialized = serialize_complex(tr.theta, opt.algebra_file);
  if (!opt.out_path.empty()) write_file(opt.out_path, serialized);
  json r = report_envelope<K>(opt);
  r["trace"] = trace_summary(tr);
  r["tilting"] = tilting_report_json(rep);
  r["theta"] = serialized;
  r["verdict"] = rep.verdict;
  return finish(opt, r, rep.verdict ? 0 : 1, t0);
}

template <class K>
int cmd_pipeline(const Options& opt, std::chrono::steady_clock::time_point t0) {
  check(opt.max_stage >= 0, "usage: pipeline requires --max-stage n with n >= 0");
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  std::vector<int> subset = parse_subset(spec.quiver, opt.idemps);
  check(!subset.empty(), "usage: pipeline requires a nonempty idempotent subset");
  CornerAlgebra<K> C = corner(*A, subset);
  ProjComplex<K> Q =
      build_corner_complex<K>(parse_complex_file(opt.complex_file), A, C);
  SearchPolicy policy;
  policy.seed = opt.seed;
  json r = report_envelope<K>(opt);
  try {
    PipelineResult<K> pr = pipeline(A, subset, Q, opt.max_stage, policy);
    r["trace"] = trace_summary(pr.trace);
    r["tilting"] = tilting_report_json(pr.theta_report);
    r["endomorphism_dim"] = pr.dim_b;
    r["quotients"] = {{"dim_a_mod_aea", pr.comparison.dim_a},
                      {"dim_b_mod_bfb", pr.comparison.dim_b},
                      {"level", match_level_name(pr.comparison.level)}};
    bool ok = pr.theta_report.verdict &&
              static_cast<int>(pr.comparison.level) >=
                  static_cast<int>(MatchLevel::FingerprintsMatch);
    r["verdict"] = ok;
    return finish(opt, r, ok ? 0 : 1, t0);
  } catch (const error& e) {
    r["error"] = e.what();
    r["verdict"] = false;
    finish(opt, r, 2, t0);
    throw;
  }
}

template <class K>
int cmd_symcheck(const Options& opt, std::chrono::steady_clock::time_point t0) {
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  SearchPolicy policy;
  policy.seed = opt.seed;
  SymmetrizingForm<K> sf = symmetrizing_form(*A, policy);
  json r = report_envelope<K>(opt);
  r["symmetric"] = sf.symmetric;
  if (sf.symmetric) {
    json form = json::object();
    for (std::size_t b = 0; b < A->dim(); ++b)
      if (!sf.form[b].is_zero()) form[A->labels[b]] = sf.form[b].str();
    r["form"] = form;
  }
  r["verdict"] = sf.symmetric;
  return finish(opt, r, sf.symmetric ? 0 : 1, t0);
}

template <class K>
int cmd_homtable(const Options& opt, std::chrono::steady_clock::time_point t0) {
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  ProjComplex<K> X = build_complex<K>(parse_complex_file(opt.complex_file), A);
  ProjComplex<K> Y = build_complex<K>(parse_complex_file(opt.complex2_file), A);
  json r = report_envelope<K>(opt);
  r["hom_table"] = table_json(homotopy_hom_table(X, Y));
  r["verdict"] = true;
  return finish(opt, r, 0, t0);
}

template <class K>
int cmd_quotcompare(const Options& opt, std::chrono::steady_clock::time_point t0) {
  AlgebraSpec spec_a = parse_algebra_file(opt.algebra_file);
  AlgebraSpec spec_b = parse_algebra_file(opt.algebra2_file);
  AlgPtr<K> A = build_algebra<K>(spec_a);
  AlgPtr<K> B = build_algebra<K>(spec_b);
  SearchPolicy policy;
  policy.seed = opt.seed;
  QuotientComparison<K> q =
      quotient_compare(*A, parse_subset(spec_a.quiver, opt.idemps), *B,
                       parse_subset(spec_b.quiver, opt.idemps2), policy);
  json r = report_envelope<K>(opt);
  r["dim_a_mod_aea"] = q.dim_a;
  r["dim_b_mod_bfb"] = q.dim_b;
  r["level"] = match_level_name(q.level);
  bool ok = static_cast<int>(q.level) >= static_cast<int>(MatchLevel::FingerprintsMatch);
  r["verdict"] = ok;
  return finish(opt, r, ok ? 0 : 1, t0);
}

template <class K>
int cmd_extcheck(const Options& opt, std::chrono::steady_clock::time_point t0) {
  check(opt.max_stage >= 1, "usage: extcheck requires --max-stage n with n >= 1");
  AlgebraSpec spec = parse_algebra_file(opt.algebra_file);
  AlgPtr<K> A = build_algebra<K>(spec);
  std::vector<int> subset = parse_subset(spec.quiver, opt.idemps);
  ExtTable<K> t = ext_vanishing_check(*A, subset, opt.max_stage);
  json r = report_envelope<K>(opt);
  json ext = json::object();
  for (std::size_t i = 0; i < t.ext.size(); ++i) ext[std::to_string(i)] = t.ext[i];
  r["ext_table"] = ext;
  r["vanishing_through"] = t.vanishing_through;
  bool ok = t.vanishing_through == t.ext.size();
  r["verdict"] = ok;
  return finish(opt, r, ok ? 0 : 1, t0);
}

template <class K>
int dispatch(const Options& opt, std::chrono::steady_clock::time_point t0) {
  if (opt.command == "check") return cmd_check<K>(opt, t0);
  if (opt.command == "complete") return cmd_complete<K>(opt, t0);
  if (opt.command == "pipeline") return cmd_pipeline<K>(opt, t0);
  if (opt.command == "symcheck") return cmd_symcheck<K>(opt, t0);
  if (opt.command == "homtable") return cmd_homtable<K>(opt, t0);
  if (opt.command == "quotcompare") return cmd_quotcompare<K>(opt, t0);
  if (opt.command == "extcheck") return cmd_extcheck<K>(opt, t0);
  fail("unknown command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"exact-arithmetic engine for tilting complexes over quiver algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_algebra = true) {
    if (needs_algebra)
      sub->add_option("--algebra", opt.algebra_file, "algebra spec file")->required();
    sub->add_option("--field", opt.field_override,
                    "override the field of the algebra file ('rational' or a prime)");
    sub->add_option("--seed", opt.seed, "seed for the randomized searches");
    sub->add_option("--report", opt.report_path, "write the JSON report here");
    sub->add_flag("--timings", opt.timings, "include timings in the report");
  };

  CLI::App* c_check = app.add_subcommand("check", "partial-tilting certificate");
  add_common(c_check);
  c_check->add_option("--complex", opt.complex_file, "complex spec file")->required();

  CLI::App* c_complete = app.add_subcommand("complete", "run the completion to stage n");
  add_common(c_complete);
  c_complete->add_option("--complex", opt.complex_file, "complex spec file")->required();
  c_complete->add_option("--max-stage", opt.max_stage, "completion stage n");
  c_complete->add_option("--out", opt.out_path, "write the completed complex here");

  CLI::App* c_pipeline =
      app.add_subcommand("pipeline", "induce a corner tilting complex up and complete it");
  add_common(c_pipeline);
  c_pipeline->add_option("--idemps", opt.idemps, "idempotent subset, e.g. 1,2")->required();
  c_pipeline->add_option("--corner-complex", opt.complex_file, "complex over the corner")
      ->required();
  c_pipeline->add_option("--max-stage", opt.max_stage, "completion stage n");

  CLI::App* c_sym = app.add_subcommand("symcheck", "find a symmetrizing form");
  add_common(c_sym);

  CLI::App* c_hom = app.add_subcommand("homtable", "hom dimensions between two complexes");
  add_common(c_hom);
  c_hom->add_option("--complex", opt.complex_file, "first complex")->required();
  c_hom->add_option("--complex2", opt.complex2_file, "second complex")->required();

  CLI::App* c_quot = app.add_subcommand("quotcompare", "compare A/AeA with B/BfB");
  add_common(c_quot);
  c_quot->add_option("--idemps", opt.idemps, "idempotent subset of the first algebra");
  c_quot->add_option("--algebra2", opt.algebra2_file, "second algebra spec")->required();
  c_quot->add_option("--idemps2", opt.idemps2, "idempotent subset of the second algebra");

  CLI::App* c_ext = app.add_subcommand("extcheck", "Ext^i(A/AeA, eA) vanishing table");
  add_common(c_ext);
  c_ext->add_option("--idemps", opt.idemps, "idempotent subset")->required();
  c_ext->add_option("--max-stage", opt.max_stage, "resolution length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opt.command = app.get_subcommands()[0]->get_name();
    AlgebraSpec probe = parse_algebra_file(opt.algebra_file);
    FieldSpec field = probe.field;
    if (!opt.field_override.empty()) {
      if (opt.field_override == "rational") {
        field.rational = true;
        field.prime = 0;
      } else {
        field.rational = false;
        field.prime = static_cast<std::uint32_t>(std::stoul(opt.field_override));
      }
    }
    if (field.rational) return dispatch<Rat>(opt, t0);
    Fp::set_modulus(field.prime);
    return dispatch<Fp>(opt, t0);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
