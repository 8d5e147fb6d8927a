#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/tilting.hpp"

namespace tiltkit {

// --- induction and restriction along an idempotent -----------------------------------

/// Rereads a complex over eAe as a complex over A: each corner projective
/// e_i(eAe) becomes e_iA and every differential entry is the same algebra
/// element.  Exact because the terms are projective.
template <class K>
ProjComplex<K> induce_up(const AlgPtr<K>& A, const CornerAlgebra<K>& C,
                         const ProjComplex<K>& Q) {
  check(Q.A->dim() == C.alg->dim() && Q.A->nidem() == C.alg->nidem(),
        "induce_up: complex is not over the given corner");
  ProjComplex<K> P;
  P.A = A;
  P.lo = Q.lo;
  for (const auto& t : Q.terms) {
    std::vector<int> tt;
    for (int i : t) {
      check(i >= 0 && i < static_cast<int>(C.idem_to_parent.size()),
            "induce_up: vertex outside the idempotent subset");
      tt.push_back(C.idem_to_parent[i]);
    }
    P.terms.push_back(std::move(tt));
  }
  for (const auto& m : Q.diffs) {
    AlgMat<K> mm(m.rows, m.cols, A->dim());
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t b = 0; b < C.alg->dim(); ++b)
          if (!m.at(r, c)[b].is_zero()) mm.at(r, c)[C.basis_to_parent[b]] = m.at(r, c)[b];
    P.diffs.push_back(std::move(mm));
  }
  validate(P);
  return P;
}

/// Left inverse of induce_up: rereads a complex supported on add(eA) over the
/// corner.  When terms outside the subset occur the complex is minimized
/// first; if the support still leaves the subset this is an error.
template <class K>
ProjComplex<K> restrict_down(const AlgPtr<K>& A, const CornerAlgebra<K>& C,
                             const ProjComplex<K>& X0) {
  std::vector<int> idem_pos(A->nidem(), -1);
  for (std::size_t t = 0; t < C.idem_to_parent.size(); ++t)
    idem_pos[C.idem_to_parent[t]] = static_cast<int>(t);
  auto supported = [&](const ProjComplex<K>& X) {
    for (const auto& t : X.terms)
      for (int i : t)
        if (idem_pos[i] < 0) return false;
    return true;
  };
  ProjComplex<K> X = X0;
  if (!supported(X)) {
    X = minimize(X0).min;
    check(supported(X), "restrict: complex is not supported on add(eA)");
  }
  std::vector<int> basis_pos(A->dim(), -1);
  for (std::size_t b = 0; b < C.basis_to_parent.size(); ++b)
    basis_pos[C.basis_to_parent[b]] = static_cast<int>(b);
  ProjComplex<K> Q;
  Q.A = C.alg;
  Q.lo = X.lo;
  for (const auto& t : X.terms) {
    std::vector<int> tt;
    for (int i : t) tt.push_back(idem_pos[i]);
    Q.terms.push_back(std::move(tt));
  }
  for (const auto& m : X.diffs) {
    AlgMat<K> mm(m.rows, m.cols, C.alg->dim());
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        for (std::size_t b = 0; b < A->dim(); ++b)
          if (!m.at(r, c)[b].is_zero()) {
            check(basis_pos[b] >= 0, "restrict: entry outside the corner");
            mm.at(r, c)[basis_pos[b]] = m.at(r, c)[b];
          }
    Q.diffs.push_back(std::move(mm));
  }
  validate(Q);
  return Q;
}

// --- quotient comparison ----------------------------------------------------------------

enum class MatchLevel { Mismatch, DimensionsMatch, FingerprintsMatch, ExplicitIso };

inline std::string match_level_name(MatchLevel m) {
  switch (m) {
    case MatchLevel::Mismatch: return "mismatch";
    case MatchLevel::DimensionsMatch: return "dimensions-match";
    case MatchLevel::FingerprintsMatch: return "fingerprints-match";
    default: return "explicit-iso-found";
  }
}

struct AlgebraFingerprint {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::vector<std::size_t> radical_layers;          // dim rad^k, k = 1, 2, ...
  std::vector<std::vector<std::size_t>> cartan;     // basic version, class-grouped
  std::vector<std::size_t> class_sizes;             // idempotents per class

  bool operator==(const AlgebraFingerprint&) const = default;
};

namespace detail {

template <class K>
std::size_t center_dim(const Algebra<K>& A) {
  if (A.dim() == 0) return 0;
  const std::size_t d = A.dim();
  Matrix<K> sys(d * d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t z = 0; z < d; ++z)
        sys.at(k * d + r, z) = A.mul_table[z][k][r] - A.mul_table[k][z][r];
  return d - rank(sys);
}

template <class K>
std::vector<std::size_t> radical_layer_dims(const Algebra<K>& A) {
  std::vector<std::size_t> out;
  if (A.dim() == 0) return out;
  std::vector<Vec<K>> layer = radical_basis(A);
  while (!layer.empty()) {
    Echelon<K> e(A.dim());
    for (const auto& v : layer) e.add(v);
    if (e.dim() == 0) break;
    out.push_back(e.dim());
    std::vector<Vec<K>> next;
    for (const auto& u : e.basis())
      for (const auto& r : radical_basis(A)) next.push_back(multiply(A, u, r));
    layer = std::move(next);
  }
  return out;
}

/// Groups the distinguished idempotents by isomorphism of their projectives
/// and returns (class of each idem, Cartan matrix over class representatives).
template <class K>
std::pair<std::vector<std::size_t>, std::vector<std::vector<std::size_t>>> basic_cartan(
    const Algebra<K>& A, const SearchPolicy& policy) {
  std::vector<std::size_t> cls(A.nidem(), 0);
  std::vector<std::size_t> reps;
  std::vector<RightIdealModule<K>> mods;
  for (std::size_t i = 0; i < A.nidem(); ++i) mods.push_back(right_ideal_module(A, i));
  for (std::size_t i = 0; i < A.nidem(); ++i) {
    bool matched = false;
    for (std::size_t t = 0; t < reps.size() && !matched; ++t)
      if (modules_isomorphic(A, mods[i].rep, mods[reps[t]].rep, policy)) {
        cls[i] = t;
        matched = true;
      }
    if (!matched) {
      cls[i] = reps.size();
      reps.push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> cartan(reps.size(),
                                               std::vector<std::size_t>(reps.size(), 0));
  for (std::size_t s = 0; s < reps.size(); ++s)
    for (std::size_t t = 0; t < reps.size(); ++t)
      cartan[s][t] = A.block_indices(static_cast<int>(reps[s]), static_cast<int>(reps[t])).size();
  return {cls, cartan};
}

template <class K>
AlgebraFingerprint fingerprint(const Algebra<K>& A, const SearchPolicy& policy) {
  AlgebraFingerprint fp;
  fp.dim = A.dim();
  if (A.dim() == 0) return fp;
  fp.center_dim = center_dim(A);
  fp.radical_layers = radical_layer_dims(A);
  auto [cls, cartan] = basic_cartan(A, policy);
  fp.cartan = cartan;
  fp.class_sizes.assign(cartan.size(), 0);
  for (std::size_t c : cls) ++fp.class_sizes[c];
  return fp;
}

inline bool fingerprints_compatible(AlgebraFingerprint a, AlgebraFingerprint b) {
  if (a.dim != b.dim || a.center_dim != b.center_dim ||
      a.radical_layers != b.radical_layers)
    return false;
  if (a.cartan.size() != b.cartan.size()) return false;
  // Cartan matrices must agree up to a simultaneous permutation of classes
  std::vector<std::size_t> perm(a.cartan.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      ok = a.class_sizes[i] == b.class_sizes[perm[i]];
      for (std::size_t j = 0; j < perm.size() && ok; ++j)
        ok = a.cartan[i][j] == b.cartan[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Bounded search for an explicit algebra isomorphism.  Builds a
/// multiplicative spanning set of the source from idempotents and a first
/// radical layer, enumerates idempotent bijections and small scalar choices
/// for the generator images, and verifies any hit bilinearly.
template <class K>
std::optional<Matrix<K>> explicit_iso_search(const Algebra<K>& QA, const Algebra<K>& QB,
                                             const SearchPolicy& policy) {
  if (QA.dim() != QB.dim()) return std::nullopt;
  const std::size_t d = QA.dim();
  if (d == 0) return Matrix<K>(0, 0);

  // generators: idempotents, then a basis of rad/rad^2 per Peirce block
  auto rad1_blocks = [](const Algebra<K>& A) {
    std::map<std::pair<int, int>, std::vector<Vec<K>>> blocks;
    Echelon<K> rad2(A.dim());
    auto rad = radical_basis(A);
    for (const auto& u : rad)
      for (const auto& v : rad) rad2.add(multiply(A, u, v));
    for (const auto& r : rad) {
      // split into Peirce components and reduce modulo rad^2 + previous
      for (std::size_t i = 0; i < A.nidem(); ++i)
        for (std::size_t j = 0; j < A.nidem(); ++j) {
          Vec<K> comp = multiply(A, A.idems[i], multiply(A, r, A.idems[j]));
          if (is_zero_vec(comp)) continue;
          auto key = std::make_pair(static_cast<int>(i), static_cast<int>(j));
          Echelon<K> seen(A.dim());
          for (const auto& b : rad2.basis()) seen.add(b);
          for (const auto& g : blocks[key]) seen.add(g);
          if (seen.add(comp)) blocks[key].push_back(comp);
        }
    }
    return blocks;
  };
  auto ablocks = rad1_blocks(QA);
  auto bblocks = rad1_blocks(QB);

  struct Gen {
    Vec<K> elem;
    int i, j;       // Peirce block
    bool idem;
    std::size_t block_pos;
  };
  std::vector<Gen> gens;
  for (std::size_t i = 0; i < QA.nidem(); ++i)
    gens.push_back({QA.idems[i], static_cast<int>(i), static_cast<int>(i), true, 0});
  for (auto& [key, vecs] : ablocks)
    for (std::size_t k = 0; k < vecs.size(); ++k)
      gens.push_back({vecs[k], key.first, key.second, false, k});

  // multiplicative spanning set: products of generators covering QA
  struct Word {
    Vec<K> elem;
    std::vector<std::size_t> word;
  };
  std::vector<Word> words;
  Echelon<K> span(d);
  std::vector<Word> frontier;
  for (std::size_t g = 0; g < gens.size(); ++g) frontier.push_back({gens[g].elem, {g}});
  for (int len = 1; len <= 8 && span.dim() < d; ++len) {
    std::vector<Word> next;
    for (auto& w : frontier) {
      if (span.add(w.elem)) words.push_back(w);
      if (w.word.size() == static_cast<std::size_t>(len))
        for (std::size_t g = 0; g < gens.size(); ++g) {
          if (gens[g].idem) continue;
          Vec<K> prod = multiply(QA, w.elem, gens[g].elem);
          if (is_zero_vec(prod)) continue;
          Word nw{prod, w.word};
          nw.word.push_back(g);
          next.push_back(std::move(nw));
        }
    }
    frontier = std::move(next);
  }
  if (span.dim() < d) return std::nullopt;  // no multiplicative basis found

  Matrix<K> M(d, d);  // rows: the chosen product basis, in QA coordinates
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) M.at(r, c) = words[r].elem[c];
  Matrix<K> Minv_t = inverse(transpose(M));

  // candidate idempotent bijections and generator images
  std::vector<std::size_t> perm(QB.nidem());
  if (QA.nidem() != QB.nidem()) return std::nullopt;
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  long budget = policy.iso_search_budget;
  const std::vector<long long> scalars = {1, -1, 2, -2, 3, -3};
  do {
    // block dimensions must match under the bijection
    bool plausible = true;
    for (const auto& g : gens)
      if (!g.idem) {
        auto it = bblocks.find({static_cast<int>(perm[g.i]), static_cast<int>(perm[g.j])});
        plausible = plausible && it != bblocks.end() &&
                    it->second.size() > g.block_pos;
      }
    if (!plausible) continue;

    // scalar sweep over the non-idempotent generators
    std::vector<std::size_t> ngen_idx;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (!gens[g].idem) ngen_idx.push_back(g);
    std::vector<std::size_t> sc(ngen_idx.size(), 0);
    for (;;) {
      if (--budget < 0) return std::nullopt;
      std::vector<Vec<K>> images(gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g].idem) images[g] = QB.idems[perm[gens[g].i]];
      for (std::size_t t = 0; t < ngen_idx.size(); ++t) {
        const Gen& g = gens[ngen_idx[t]];
        const auto& blk =
            bblocks.at({static_cast<int>(perm[g.i]), static_cast<int>(perm[g.j])});
        images[ngen_idx[t]] = scale(blk[g.block_pos], K::from_int(scalars[sc[t]]));
      }
      // evaluate the product basis in QB and read off the linear map
      std::vector<Vec<K>> prod_images(d);
      for (std::size_t r = 0; r < d; ++r) {
        Vec<K> acc = images[words[r].word[0]];
        for (std::size_t k = 1; k < words[r].word.size(); ++k)
          acc = multiply(QB, acc, images[words[r].word[k]]);
        prod_images[r] = acc;
      }
      Matrix<K> T(d, d);
      for (std::size_t b = 0; b < d; ++b) {
        Vec<K> coeffs = Minv_t.col(b);  // e_b = sum coeffs[r] * words[r]
        Vec<K> img(d, K::zero());
        for (std::size_t r = 0; r < d; ++r)
          if (!coeffs[r].is_zero()) axpy(img, coeffs[r], prod_images[r]);
        for (std::size_t c = 0; c < d; ++c) T.at(b, c) = img[c];
      }
      bool ok = is_invertible(T) && apply_row(QA.unit, T) == QB.unit;
      for (std::size_t u = 0; u < d && ok; ++u)
        for (std::size_t v = 0; v < d && ok; ++v) {
          Vec<K> lhs = apply_row(QA.mul_table[u][v], T);
          Vec<K> rhs = multiply(QB, T.row(u), T.row(v));
          ok = lhs == rhs;
        }
      if (ok) return T;
      // advance the scalar odometer
      std::size_t t = 0;
      while (t < sc.size() && ++sc[t] == scalars.size()) sc[t++] = 0;
      if (t == sc.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace detail

template <class K>
struct QuotientComparison {
  std::size_t dim_a = 0, dim_b = 0;
  AlgebraFingerprint fp_a, fp_b;
  MatchLevel level = MatchLevel::Mismatch;
  std::optional<Matrix<K>> iso;
};

/// Compares A/AeA with B/BfB: dimensions, then invariant fingerprints, then a
/// bounded explicit-isomorphism search.
template <class K>
QuotientComparison<K> quotient_compare(const Algebra<K>& A, const std::vector<int>& e_subset,
                                       const Algebra<K>& B, const std::vector<int>& f_subset,
                                       const SearchPolicy& policy = {}) {
  QuotientComparison<K> out;
  IdemQuotient<K> QA = quotient_by_idempotent_ideal(A, e_subset);
  IdemQuotient<K> QB = quotient_by_idempotent_ideal(B, f_subset);
  out.dim_a = QA.alg->dim();
  out.dim_b = QB.alg->dim();
  if (out.dim_a != out.dim_b) return out;
  out.level = MatchLevel::DimensionsMatch;
  out.fp_a = detail::fingerprint(*QA.alg, policy);
  out.fp_b = detail::fingerprint(*QB.alg, policy);
  if (!detail::fingerprints_compatible(out.fp_a, out.fp_b)) return out;
  out.level = MatchLevel::FingerprintsMatch;
  if (out.dim_a == 0) {
    out.level = MatchLevel::ExplicitIso;
    out.iso = Matrix<K>(0, 0);
    return out;
  }
  out.iso = detail::explicit_iso_search(*QA.alg, *QB.alg, policy);
  if (out.iso) out.level = MatchLevel::ExplicitIso;
  return out;
}

// --- recollement-tilting verification ---------------------------------------------------

template <class K>
struct RecollementCheck {
  bool verdict = false;
  TiltingReport<K> ambient_report;      // verify_tilting of P itself
  std::vector<std::size_t> p1_summands; // summands supported in add(eA)
  ProjComplex<K> p1;                    // their sum, over A
  ProjComplex<K> restricted;            // over eAe
  TiltingReport<K> corner_report;
  Vec<K> f_coords;                      // projection idempotent in End(P)
  std::string note;
};

/// Checks the recollement-tilting condition relative to the idempotent
/// subset: splits off the largest summand P1 supported on add(eA) and tests
/// that its restriction is a tilting complex for eAe.  Generation verdicts on
/// the corner are witness-backed only when a corner trace is supplied.
template <class K>
RecollementCheck<K> recollement_tilting_check(const ProjComplex<K>& P,
                                              const std::vector<int>& subset,
                                              const CompletionTrace<K>* trace = nullptr,
                                              const CompletionTrace<K>* corner_trace = nullptr,
                                              const SearchPolicy& policy = {}) {
  RecollementCheck<K> out;
  const AlgPtr<K>& A = P.A;
  out.ambient_report = verify_tilting(P, trace, policy);
  if (!out.ambient_report.verdict) {
    out.note = "input complex is not tilting";
    return out;
  }
  std::vector<bool> in(A->nidem(), false);
  for (int s : subset) in[s] = true;

  EndAlgebra<K> E = end_algebra(P, policy);
  for (std::size_t s = 0; s < E.dec.summands.size(); ++s) {
    bool supported = true;
    for (const auto& t : E.dec.summands[s].piece.terms)
      for (int i : t) supported = supported && in[i];
    if (supported) out.p1_summands.push_back(s);
  }
  if (out.p1_summands.empty()) {
    out.note = "no summand lies in add(eA)";
    return out;
  }
  out.p1.A = A;
  for (std::size_t s : out.p1_summands)
    out.p1 = direct_sum(out.p1, E.dec.summands[s].piece);
  CornerAlgebra<K> C = corner(*A, subset);
  out.restricted = restrict_down(A, C, out.p1);
  out.corner_report = verify_tilting(out.restricted, corner_trace, policy);

  // f: the subsum of the distinguished idempotents of End(P) over the
  // supported summands
  out.f_coords = zero_vec<K>(E.B->dim());
  for (std::size_t s : out.p1_summands) out.f_coords = add_vec(out.f_coords, E.B->idems[s]);
  check(multiply(*E.B, out.f_coords, out.f_coords) == out.f_coords,
        "recollement check: projection is not idempotent");
  out.verdict = out.corner_report.verdict;
  if (!out.verdict) out.note = "restricted complex is not tilting over the corner";
  return out;
}

// --- the recollement-tilting pipeline ----------------------------------------------------

template <class K>
struct PipelineResult {
  CompletionTrace<K> trace;
  TiltingReport<K> theta_report;
  EndAlgebra<K> B;                 // End of Theta, idempotents grouped by part
  std::vector<int> f_idems;        // idempotents of the P[n-r] part
  QuotientComparison<K> comparison;
  std::size_t dim_b = 0;
  std::string stage;               // last completed stage, for error reports
};

/// Induces the corner tilting complex up, completes it, extracts the
/// endomorphism algebra with the distinguished idempotent f of the shifted
/// P-summand, and compares A/AeA with B/BfB.
template <class K>
PipelineResult<K> pipeline(const AlgPtr<K>& A, const std::vector<int>& subset,
                           const ProjComplex<K>& Q, int n,
                           const SearchPolicy& policy = {}) {
  PipelineResult<K> out;
  out.stage = "symmetry";
  check(symmetrizing_form(*A, policy).symmetric, "pipeline: algebra is not symmetric");

  out.stage = "corner tilting";
  TiltingReport<K> qrep = verify_tilting(Q, static_cast<const CompletionTrace<K>*>(nullptr),
                                         policy);
  check(qrep.verdict, "pipeline: input is not a tilting complex over the corner");

  out.stage = "induction";
  CornerAlgebra<K> C = corner(*A, subset);
  ProjComplex<K> P = induce_up(A, C, Q);
  PartialTiltingCert<K> cert = is_partial_tilting(P);
  check(cert.verdict, "pipeline: induced complex is not partial tilting");

  out.stage = "completion";
  std::size_t len = complex_length(P);
  check(len >= 1, "pipeline: induced complex is null-homotopic");
  const int r = static_cast<int>(len) - 1;
  check(n >= r, "pipeline: stage must be at least r = " + std::to_string(r));
  out.trace = complete(P, n, policy);

  out.stage = "tilting verification";
  out.theta_report = verify_tilting(out.trace.theta, &out.trace, policy);
  check(out.theta_report.verdict, "pipeline: Theta_n failed tilting verification");

  out.stage = "endomorphism algebra";
  ProjComplex<K> delta_part = out.trace.delta(n);
  ProjComplex<K> p_part = shift(out.trace.P_norm, n - out.trace.r);
  ProjComplex<K> theta = direct_sum(delta_part, p_part);
  SumWithMaps<K> sums = sum_with_maps<K>({delta_part, p_part});
  std::vector<Summand<K>> parts;
  std::size_t delta_count = 0;
  if (!delta_part.is_zero()) {
    Decomposition<K> dd = decompose(delta_part, policy);
    delta_count = dd.summands.size();
    for (auto& s : dd.summands)
      parts.push_back({s.piece, compose(sums.incl[0], s.embed),
                       compose(s.project, sums.proj[0])});
  }
  {
    Decomposition<K> dp = decompose(p_part, policy);
    for (auto& s : dp.summands)
      parts.push_back({s.piece, compose(sums.incl[1], s.embed),
                       compose(s.project, sums.proj[1])});
  }
  out.B = end_algebra_from_summands(theta, std::move(parts), policy);
  out.dim_b = out.B.B->dim();
  for (std::size_t s = delta_count; s < out.B.dec.summands.size(); ++s)
    out.f_idems.push_back(static_cast<int>(s));

  out.stage = "quotient comparison";
  out.comparison = quotient_compare(*A, subset, *out.B.B, out.f_idems, policy);
  out.stage = "done";
  return out;
}

// --- finite shadows of the idempotent recollement ----------------------------------------

template <class K>
struct AeaCheck {
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
};

/// Verifies that the image of the multiplication map Ae (x) eA -> A equals
/// the closure span of A e A; the cokernel is then A/AeA on the nose.
template <class K>
AeaCheck<K> aea_cokernel_check(const Algebra<K>& A, const std::vector<int>& subset) {
  Vec<K> e = idem_sum(A, subset);
  Echelon<K> closure(A.dim());
  for (const auto& v : aea_span(A, subset)) closure.add(v);

  // image route: products of basis vectors of Ae and eA
  std::vector<Vec<K>> ae, ea;
  {
    Echelon<K> l(A.dim()), r(A.dim());
    for (std::size_t u = 0; u < A.dim(); ++u) {
      l.add(multiply(A, basis_elem(A, u), e));
      r.add(multiply(A, e, basis_elem(A, u)));
    }
    ae = l.basis();
    ea = r.basis();
  }
  Echelon<K> image(A.dim());
  for (const auto& p : ae)
    for (const auto& q : ea) image.add(multiply(A, p, q));

  check(image.dim() == closure.dim(), "aea_cokernel_check: route dimensions differ");
  for (const auto& v : closure.basis())
    check(image.contains(v), "aea_cokernel_check: closure escapes the image");
  for (const auto& v : image.basis())
    check(closure.contains(v), "aea_cokernel_check: image escapes the closure");
  return {closure.dim(), A.dim() - closure.dim()};
}

// --- Ext vanishing against eA -------------------------------------------------------------

template <class K>
struct ExtTable {
  std::vector<std::size_t> ext;       // dim Ext^i(A/AeA, eA), i = 0 .. n-1
  std::size_t vanishing_through = 0;  // largest t with ext[i] = 0 for all i < t
};

/// Dimensions of Ext^i(A/AeA, eA) for 0 <= i < n, from a minimal projective
/// resolution of the quotient module.
template <class K>
ExtTable<K> ext_vanishing_check(const Algebra<K>& A, const std::vector<int>& subset, int n) {
  check(n >= 1, "ext_vanishing_check: need n >= 1");
  ExtTable<K> out;

  // A/AeA as a right module
  ModuleRep<K> reg = regular_module(A);
  ModuleRep<K> M = quotient_module(reg, aea_span(A, subset)).rep;

  // eA as a right module: the term module of the subset
  ModuleRep<K> eA = detail::term_module(A, subset).rep;

  // minimal resolution P_n -> ... -> P_0 -> M
  struct Step {
    std::vector<int> term;      // idempotents of P_k
    ModuleRep<K> pmod;
    Matrix<K> d_prev;           // row-convention map P_k -> P_{k-1} (k >= 1)
  };
  std::vector<Step> steps;
  ModuleRep<K> target = M;      // module the next projective covers
  std::vector<Vec<K>> target_rows_in_prev;  // target basis inside P_{k-1}
  for (int k = 0; k <= n; ++k) {
    TopInfo<K> top = top_and_min_generators(A, target);
    Step st;
    for (const auto& [i, g] : top.generators) st.term.push_back(i);
    st.pmod = detail::term_module(A, st.term).rep;
    // cover matrix: P_k -> target (row convention)
    Matrix<K> cover(st.pmod.mdim, target.mdim);
    auto offs = term_offsets(A, st.term);
    for (std::size_t t = 0; t < st.term.size(); ++t) {
      const auto& rows = A.row_of_idem[st.term[t]];
      for (std::size_t u = 0; u < rows.size(); ++u) {
        Vec<K> img = apply_row(top.generators[t].second, target.act[rows[u]]);
        for (std::size_t c = 0; c < target.mdim; ++c) cover.at(offs[t] + u, c) = img[c];
      }
    }
    if (k > 0) {
      // compose with the inclusion of the previous kernel
      const ModuleRep<K>& prev = steps.back().pmod;
      Matrix<K> d(st.pmod.mdim, prev.mdim);
      for (std::size_t u = 0; u < st.pmod.mdim; ++u) {
        Vec<K> in_target = cover.row(u);
        Vec<K> in_prev(prev.mdim, K::zero());
        for (std::size_t j = 0; j < target_rows_in_prev.size(); ++j)
          if (!in_target[j].is_zero()) axpy(in_prev, in_target[j], target_rows_in_prev[j]);
        for (std::size_t c = 0; c < prev.mdim; ++c) d.at(u, c) = in_prev[c];
      }
      st.d_prev = std::move(d);
    }
    // kernel of the cover, as rows of P_k
    Matrix<K> ker = nullspace(transpose(cover));
    std::vector<Vec<K>> krows;
    for (std::size_t j = 0; j < ker.cols(); ++j) krows.push_back(ker.col(j));
    ModuleRep<K> kmod = submodule(st.pmod, krows);
    steps.push_back(std::move(st));
    target = std::move(kmod);
    target_rows_in_prev = std::move(krows);
  }

  // Hom(P_k, eA) dimensions and the induced differentials
  std::vector<std::vector<Matrix<K>>> homs;
  for (const auto& st : steps) homs.push_back(hom_module(A, st.pmod, eA));
  for (int i = 0; i < n; ++i) {
    // Ext^i = ker(d_{i+1}^*) / im(d_i^*)
    const auto& Hi = homs[i];
    auto flat = [&](const Matrix<K>& F) {
      Vec<K> v(F.rows() * F.cols(), K::zero());
      for (std::size_t r = 0; r < F.rows(); ++r)
        for (std::size_t c = 0; c < F.cols(); ++c) v[r * F.cols() + c] = F.at(r, c);
      return v;
    };
    std::size_t ker_dim = 0;
    // kernel of composition with d_{i+1}
    {
      std::size_t rows = steps[i + 1].pmod.mdim * eA.mdim;
      Matrix<K> sys(rows == 0 ? 1 : rows, Hi.size());
      for (std::size_t j = 0; j < Hi.size(); ++j) {
        Matrix<K> comp = mul(steps[i + 1].d_prev, Hi[j]);
        Vec<K> v = flat(comp);
        for (std::size_t rr = 0; rr < v.size(); ++rr) sys.at(rr, j) = v[rr];
      }
      ker_dim = Hi.size() - rank(sys);
    }
    std::size_t img_dim = 0;
    if (i > 0) {
      Echelon<K> e(steps[i].pmod.mdim * eA.mdim == 0 ? 1
                                                     : steps[i].pmod.mdim * eA.mdim);
      for (const auto& F : homs[i - 1]) e.add(flat(mul(steps[i].d_prev, F)));
      img_dim = e.dim();
    }
    out.ext.push_back(ker_dim - img_dim);
  }
  while (out.vanishing_through < out.ext.size() && out.ext[out.vanishing_through] == 0)
    ++out.vanishing_through;
  return out;
}

}  // namespace tiltkit
