#pragma once

#include <optional>
#include <vector>

#include "tiltkit/complex.hpp"

namespace tiltkit {

// --- minimization ---------------------------------------------------------------

template <class K>
struct MinimizeResult {
  ProjComplex<K> min;
  ChainMap<K> to_min;    // homotopy equivalence X -> min
  ChainMap<K> from_min;  // its inverse up to homotopy; to_min o from_min = id exactly
};

namespace detail {

/// Map realizing the identity between a complex and a window-trimmed copy.
template <class K>
ChainMap<K> window_map(const ProjComplex<K>& src, const ProjComplex<K>& tgt) {
  std::vector<AlgMat<K>> comps;
  for (int d = src.lo; d <= src.hi(); ++d) {
    AlgMat<K> m(tgt.summand_count(d), src.summand_count(d), src.A->dim());
    check(tgt.summand_count(d) == src.summand_count(d) || src.summand_count(d) == 0 ||
              tgt.summand_count(d) == 0,
          "window_map: terms differ");
    for (std::size_t i = 0; i < std::min(m.rows, m.cols); ++i)
      m.at(i, i) = src.A->idems[src.term(d)[i]];
    comps.push_back(std::move(m));
  }
  if (src.terms.empty()) comps.clear();
  return make_chain_map(src, tgt, std::move(comps), false);
}

/// Inverse of z inside Hom(e_c A, e_r A) (+) Hom(e_r A, e_c A): the element w
/// of e_c A e_r with z w = e_r and w z = e_c, when left multiplication by z
/// is bijective.
template <class K>
std::optional<Vec<K>> invert_entry(const Algebra<K>& A, const Vec<K>& z, int ic, int ir) {
  const auto& blk = A.block_indices(ic, ir);
  if (blk.empty()) return std::nullopt;
  Matrix<K> sys(A.dim(), blk.size());
  for (std::size_t j = 0; j < blk.size(); ++j) {
    Vec<K> prod = multiply(A, z, basis_elem(A, blk[j]));
    for (std::size_t b = 0; b < A.dim(); ++b) sys.at(b, j) = prod[b];
  }
  auto sol = solve(sys, A.idems[ir]);
  if (!sol) return std::nullopt;
  Vec<K> w = zero_vec<K>(A.dim());
  for (std::size_t j = 0; j < blk.size(); ++j) w[blk[j]] = (*sol)[j];
  if (multiply(A, w, z) != A.idems[ic]) return std::nullopt;
  return w;
}

}  // namespace detail

/// Splits off contractible two-term summands until every differential entry
/// is non-invertible (lies in the radical of the additive category), and
/// returns the minimal complex with explicit homotopy equivalences both ways.
template <class K>
MinimizeResult<K> minimize(const ProjComplex<K>& X0) {
  const Algebra<K>& A = *X0.A;
  ProjComplex<K> cur = X0;
  ChainMap<K> p_tot = identity_map(cur);
  ChainMap<K> i_tot = identity_map(cur);

  for (;;) {
    int fd = 0;
    std::size_t fr = 0, fc = 0;
    Vec<K> w;
    bool found = false;
    for (int d = cur.lo; d < cur.hi() && !found; ++d) {
      const AlgMat<K> m = cur.diff(d);
      for (std::size_t r = 0; r < m.rows && !found; ++r)
        for (std::size_t c = 0; c < m.cols && !found; ++c) {
          const Vec<K>& z = m.at(r, c);
          if (is_zero_vec(z)) continue;
          int ir = cur.term(d + 1)[r], ic = cur.term(d)[c];
          if (A.row_of_idem[ir].size() != A.row_of_idem[ic].size()) continue;
          auto inv = detail::invert_entry(A, z, ic, ir);
          if (!inv) continue;
          fd = d;
          fr = r;
          fc = c;
          w = *inv;
          found = true;
        }
    }
    if (!found) break;

    const AlgMat<K> old_d = cur.diff(fd);
    const std::vector<int> term_d = cur.term(fd);
    const std::vector<int> term_d1 = cur.term(fd + 1);

    ProjComplex<K> nc;
    nc.A = cur.A;
    nc.lo = cur.lo;
    nc.terms = cur.terms;
    nc.diffs = cur.diffs;
    auto& ntd = nc.terms[fd - nc.lo];
    ntd.erase(ntd.begin() + fc);
    auto& ntd1 = nc.terms[fd + 1 - nc.lo];
    ntd1.erase(ntd1.begin() + fr);

    auto keep = [](std::size_t n, std::size_t skip) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
      return v;
    };
    const auto rows_kept = keep(term_d1.size(), fr);
    const auto cols_kept = keep(term_d.size(), fc);

    // d' = delta - gamma w beta
    {
      AlgMat<K> nd(rows_kept.size(), cols_kept.size(), A.dim());
      for (std::size_t i = 0; i < rows_kept.size(); ++i)
        for (std::size_t j = 0; j < cols_kept.size(); ++j) {
          Vec<K> v = old_d.at(rows_kept[i], cols_kept[j]);
          Vec<K> corr = multiply(A, multiply(A, old_d.at(rows_kept[i], fc), w),
                                 old_d.at(fr, cols_kept[j]));
          nd.at(i, j) = sub_vec(v, corr);
        }
      nc.diffs[fd - nc.lo] = std::move(nd);
    }
    if (fd > nc.lo) {
      const AlgMat<K> old_in = cur.diff(fd - 1);
      AlgMat<K> nin(cols_kept.size(), old_in.cols, A.dim());
      for (std::size_t i = 0; i < cols_kept.size(); ++i)
        for (std::size_t j = 0; j < old_in.cols; ++j) nin.at(i, j) = old_in.at(cols_kept[i], j);
      nc.diffs[fd - 1 - nc.lo] = std::move(nin);
    }
    if (fd + 1 < cur.hi()) {
      const AlgMat<K> old_out = cur.diff(fd + 1);
      AlgMat<K> nout(old_out.rows, rows_kept.size(), A.dim());
      for (std::size_t i = 0; i < old_out.rows; ++i)
        for (std::size_t j = 0; j < rows_kept.size(); ++j)
          nout.at(i, j) = old_out.at(i, rows_kept[j]);
      nc.diffs[fd + 1 - nc.lo] = std::move(nout);
    }

    // the equivalence cur -> nc and its section
    std::vector<AlgMat<K>> p_comps, i_comps;
    for (int d = cur.lo; d <= cur.hi(); ++d) {
      if (d == fd) {
        AlgMat<K> pm(cols_kept.size(), term_d.size(), A.dim());
        for (std::size_t i = 0; i < cols_kept.size(); ++i)
          pm.at(i, cols_kept[i]) = A.idems[term_d[cols_kept[i]]];
        p_comps.push_back(std::move(pm));
        AlgMat<K> im(term_d.size(), cols_kept.size(), A.dim());
        for (std::size_t i = 0; i < cols_kept.size(); ++i) {
          im.at(cols_kept[i], i) = A.idems[term_d[cols_kept[i]]];
          Vec<K> corr = multiply(A, w, old_d.at(fr, cols_kept[i]));
          im.at(fc, i) = scale(corr, -K::one());
        }
        i_comps.push_back(std::move(im));
      } else if (d == fd + 1) {
        AlgMat<K> pm(rows_kept.size(), term_d1.size(), A.dim());
        for (std::size_t i = 0; i < rows_kept.size(); ++i) {
          pm.at(i, rows_kept[i]) = A.idems[term_d1[rows_kept[i]]];
          Vec<K> corr = multiply(A, old_d.at(rows_kept[i], fc), w);
          pm.at(i, fr) = scale(corr, -K::one());
        }
        p_comps.push_back(std::move(pm));
        AlgMat<K> im(term_d1.size(), rows_kept.size(), A.dim());
        for (std::size_t i = 0; i < rows_kept.size(); ++i)
          im.at(rows_kept[i], i) = A.idems[term_d1[rows_kept[i]]];
        i_comps.push_back(std::move(im));
      } else {
        p_comps.push_back(identity_algmat(A, cur.term(d)));
        i_comps.push_back(identity_algmat(A, cur.term(d)));
      }
    }
    ChainMap<K> p_step = make_chain_map(cur, nc, std::move(p_comps), false);
    ChainMap<K> i_step = make_chain_map(nc, cur, std::move(i_comps), false);
    p_tot = compose(p_step, p_tot);
    i_tot = compose(i_tot, i_step);
    cur = std::move(nc);
  }

  ProjComplex<K> min = trimmed(cur);
  ChainMap<K> shrink = detail::window_map(cur, min);
  ChainMap<K> grow = detail::window_map(min, cur);
  return {min, compose(shrink, p_tot), compose(i_tot, grow)};
}

// --- strict chain maps and endomorphisms ------------------------------------------

template <class K>
struct StrictHom {
  HomBasis<K> hb;
  std::vector<Vec<K>> basis;  // cycle coordinate vectors

  std::size_t dim() const { return basis.size(); }
  ChainMap<K> map_of(const Vec<K>& coeffs) const {
    Vec<K> v(hb.dim(), K::zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!coeffs[i].is_zero()) axpy(v, coeffs[i], basis[i]);
    return unflatten_chain_map(hb, v);
  }
};

/// Basis of the strict chain maps X -> Y[n] (no homotopy quotient).
template <class K>
StrictHom<K> strict_hom(const ProjComplex<K>& X, const ProjComplex<K>& Y, int n) {
  StrictHom<K> sh;
  sh.hb = hom_basis(X, Y, n);
  if (sh.hb.dim() == 0) return sh;
  HomBasis<K> hb1 = hom_basis(X, Y, n + 1);
  Matrix<K> ns = nullspace(hom_differential(sh.hb, hb1));
  for (std::size_t j = 0; j < ns.cols(); ++j) sh.basis.push_back(ns.col(j));
  return sh;
}

/// Strict endomorphism algebra of X, in cycle coordinates.  Chain maps whose
/// entries all lie in rad(A) form a nilpotent ideal; its basis is kept so the
/// radical can be computed on the much smaller quotient (the trace method is
/// limited to dimensions below the characteristic).
template <class K>
struct StrictEnd {
  StrictHom<K> hom;
  RawAlgebra<K> raw;
  std::vector<Vec<K>> entry_radical_ideal;  // in cycle coordinates

  ChainMap<K> map_of(const Vec<K>& coords) const { return hom.map_of(coords); }
  std::vector<Vec<K>> radical() const {
    return radical_mod_nilpotent(raw, entry_radical_ideal);
  }
};

template <class K>
StrictEnd<K> strict_end(const ProjComplex<K>& X) {
  StrictEnd<K> E;
  E.hom = strict_hom(X, X, 0);
  const std::size_t n = E.hom.dim();
  Matrix<K> B(E.hom.hb.dim(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < E.hom.hb.dim(); ++i) B.at(i, j) = E.hom.basis[j][i];
  ColumnSolver<K> solver;
  if (n > 0) solver = ColumnSolver<K>(B);
  auto coords_of_vec = [&](const Vec<K>& v) { return solver.solve(v); };
  std::vector<ChainMap<K>> maps;
  for (std::size_t j = 0; j < n; ++j)
    maps.push_back(unflatten_chain_map(E.hom.hb, E.hom.basis[j]));
  E.raw.mul.assign(n, std::vector<Vec<K>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // multiplication follows map composition: (f g)(x) = f(g(x))
      ChainMap<K> fg = compose(maps[i], maps[j]);
      E.raw.mul[i][j] = coords_of_vec(flatten_chain_map(E.hom.hb, fg));
    }
  E.raw.unit = coords_of_vec(flatten_chain_map(E.hom.hb, identity_map(X)));

  // maps supported on radical slot coordinates (the basis of a quiver-derived
  // algebra is adapted to its radical, so this is exactly the radical-entry
  // ideal)
  const Algebra<K>& A = *X.A;
  Echelon<K> radA(A.dim());
  for (const auto& r : radical_basis(A)) radA.add(r);
  std::vector<std::size_t> unit_slots;
  for (std::size_t s = 0; s < E.hom.hb.slots.size(); ++s)
    if (!radA.contains(basis_elem(A, E.hom.hb.slots[s].b))) unit_slots.push_back(s);
  Matrix<K> constraints(unit_slots.size(), n);
  for (std::size_t r = 0; r < unit_slots.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) constraints.at(r, j) = E.hom.basis[j][unit_slots[r]];
  Matrix<K> seed = nullspace(constraints);
  for (std::size_t j = 0; j < seed.cols(); ++j)
    E.entry_radical_ideal.push_back(seed.col(j));
  return E;
}

// --- splitting along an idempotent --------------------------------------------------

template <class K>
struct Summand {
  ProjComplex<K> piece;
  ChainMap<K> embed;    // piece -> X
  ChainMap<K> project;  // X -> piece
};

namespace detail {

template <class K>
struct TermModule {
  ModuleRep<K> rep;
  std::vector<std::size_t> offsets;  // per summand
  std::vector<int> term;
};

template <class K>
TermModule<K> term_module(const Algebra<K>& A, const std::vector<int>& term) {
  TermModule<K> tm;
  tm.term = term;
  tm.offsets = term_offsets(A, term);
  tm.rep.mdim = tm.offsets.back();
  tm.rep.act.assign(A.dim(), Matrix<K>(tm.rep.mdim, tm.rep.mdim));
  for (std::size_t s = 0; s < term.size(); ++s) {
    RightIdealModule<K> rm = right_ideal_module(A, term[s]);
    for (std::size_t k = 0; k < A.dim(); ++k)
      for (std::size_t i = 0; i < rm.rep.mdim; ++i)
        for (std::size_t j = 0; j < rm.rep.mdim; ++j)
          tm.rep.act[k].at(tm.offsets[s] + i, tm.offsets[s] + j) = rm.rep.act[k].at(i, j);
  }
  return tm;
}

/// Coordinates of e_i inside e_i A.
template <class K>
Vec<K> idem_row_coords(const Algebra<K>& A, int i) {
  const auto& rows = A.row_of_idem[i];
  Vec<K> c(rows.size(), K::zero());
  for (std::size_t t = 0; t < rows.size(); ++t) c[t] = A.idems[i][rows[t]];
  return c;
}

/// Global algebra element from coordinates within e_i A.
template <class K>
Vec<K> element_from_row_coords(const Algebra<K>& A, int i, const Vec<K>& coords) {
  Vec<K> out = zero_vec<K>(A.dim());
  const auto& rows = A.row_of_idem[i];
  for (std::size_t t = 0; t < rows.size(); ++t) out[rows[t]] = coords[t];
  return out;
}

}  // namespace detail

/// Degreewise image of an idempotent chain endomorphism, re-presented as a
/// direct sum of the e_iA via projective covers of the image modules.
template <class K>
Summand<K> split_summand(const ProjComplex<K>& X, const ChainMap<K>& pi) {
  const Algebra<K>& A = *X.A;
  struct DegData {
    detail::TermModule<K> tm;
    std::vector<int> piece_term;
    std::vector<Vec<K>> gens;     // generator rows in term coordinates
    Matrix<K> phi;                // piece coords -> term coords (rows)
    Matrix<K> rho;                // column-convention retraction term -> piece
  };
  std::map<int, DegData> data;
  for (int d = X.lo; d <= X.hi(); ++d) {
    if (X.summand_count(d) == 0) continue;
    DegData dd;
    dd.tm = detail::term_module(A, X.term(d));
    Matrix<K> E = expand_algmat(A, pi.comp(d), X.term(d), X.term(d));
    Matrix<K> img = image_basis(E);
    std::vector<Vec<K>> rows;
    for (std::size_t j = 0; j < img.cols(); ++j) rows.push_back(img.col(j));
    ModuleRep<K> sub = submodule(dd.tm.rep, rows);
    TopInfo<K> top = top_and_min_generators(A, sub);
    for (const auto& [i, gsub] : top.generators) {
      dd.piece_term.push_back(i);
      Vec<K> g(dd.tm.rep.mdim, K::zero());
      for (std::size_t j = 0; j < rows.size(); ++j) axpy(g, gsub[j], rows[j]);
      dd.gens.push_back(std::move(g));
    }
    // phi: basis of the piece (as a sum of e_iA) realized inside the term
    auto poff = term_offsets(A, dd.piece_term);
    dd.phi = Matrix<K>(poff.back(), dd.tm.rep.mdim);
    for (std::size_t t = 0; t < dd.piece_term.size(); ++t) {
      int i = dd.piece_term[t];
      const auto& rowbasis = A.row_of_idem[i];
      for (std::size_t u = 0; u < rowbasis.size(); ++u) {
        Vec<K> r = apply_row(dd.gens[t], dd.tm.rep.act[rowbasis[u]]);
        for (std::size_t c = 0; c < r.size(); ++c) dd.phi.at(poff[t] + u, c) = r[c];
      }
    }
    check(rank(dd.phi) == dd.phi.rows() && dd.phi.rows() == rows.size(),
          "split_summand: projective cover of the image is not an isomorphism");
    // rho: column-convention solve  phi^T rho = E
    Matrix<K> phiT = transpose(dd.phi);
    dd.rho = Matrix<K>(dd.phi.rows(), dd.tm.rep.mdim);
    for (std::size_t c = 0; c < dd.tm.rep.mdim; ++c) {
      auto sol = solve(phiT, E.col(c));
      check(sol.has_value(), "split_summand: image does not factor through the cover");
      for (std::size_t r = 0; r < dd.phi.rows(); ++r) dd.rho.at(r, c) = (*sol)[r];
    }
    data.emplace(d, std::move(dd));
  }

  ProjComplex<K> piece;
  piece.A = X.A;
  piece.lo = X.lo;
  for (int d = X.lo; d <= X.hi(); ++d) {
    auto it = data.find(d);
    piece.terms.push_back(it == data.end() ? std::vector<int>{} : it->second.piece_term);
  }

  // decompose a term-coordinate row at degree d_to into per-summand elements
  auto element_between = [&](const Vec<K>& img_term,
                             int d_to) -> std::vector<std::pair<std::size_t, Vec<K>>> {
    std::vector<std::pair<std::size_t, Vec<K>>> out;
    const auto& tm = data.at(d_to).tm;
    for (std::size_t s = 0; s < tm.term.size(); ++s) {
      Vec<K> blockv(tm.offsets[s + 1] - tm.offsets[s], K::zero());
      bool nz = false;
      for (std::size_t u = 0; u < blockv.size(); ++u) {
        blockv[u] = img_term[tm.offsets[s] + u];
        nz = nz || !blockv[u].is_zero();
      }
      if (nz) out.emplace_back(s, detail::element_from_row_coords(A, tm.term[s], blockv));
    }
    return out;
  };

  // differentials of the piece
  for (int d = X.lo; d < X.hi(); ++d) {
    auto it = data.find(d);
    auto it1 = data.find(d + 1);
    std::size_t rows_n = (it1 == data.end()) ? 0 : it1->second.piece_term.size();
    std::size_t cols_n = (it == data.end()) ? 0 : it->second.piece_term.size();
    AlgMat<K> m(rows_n, cols_n, A.dim());
    if (rows_n > 0 && cols_n > 0) {
      const DegData& dd = it->second;
      const DegData& dd1 = it1->second;
      Matrix<K> Dk = expand_diff(X, d);
      auto poff1 = term_offsets(A, dd1.piece_term);
      for (std::size_t t = 0; t < dd.piece_term.size(); ++t) {
        Vec<K> img = apply_col(Dk, dd.gens[t]);
        Vec<K> y = apply_col(dd1.rho, img);  // piece coordinates at degree d+1
        for (std::size_t u = 0; u < dd1.piece_term.size(); ++u) {
          Vec<K> blockv(poff1[u + 1] - poff1[u], K::zero());
          bool nz = false;
          for (std::size_t q = 0; q < blockv.size(); ++q) {
            blockv[q] = y[poff1[u] + q];
            nz = nz || !blockv[q].is_zero();
          }
          if (nz)
            m.at(u, t) = detail::element_from_row_coords(A, dd1.piece_term[u], blockv);
        }
      }
    }
    piece.diffs.push_back(std::move(m));
  }

  // embed: generator rows, block by block
  std::vector<AlgMat<K>> emb;
  for (int d = X.lo; d <= X.hi(); ++d) {
    auto it = data.find(d);
    std::size_t cols_n = (it == data.end()) ? 0 : it->second.piece_term.size();
    AlgMat<K> m(X.summand_count(d), cols_n, A.dim());
    if (cols_n > 0) {
      const DegData& dd = it->second;
      for (std::size_t t = 0; t < cols_n; ++t)
        for (auto& [s, elem] : element_between(dd.gens[t], d)) m.at(s, t) = elem;
    }
    emb.push_back(std::move(m));
  }

  // project: images of the summand units under rho
  std::vector<AlgMat<K>> prj;
  for (int d = X.lo; d <= X.hi(); ++d) {
    auto it = data.find(d);
    std::size_t rows_n = (it == data.end()) ? 0 : it->second.piece_term.size();
    AlgMat<K> m(rows_n, X.summand_count(d), A.dim());
    if (rows_n > 0) {
      const DegData& dd = it->second;
      auto poff = term_offsets(A, dd.piece_term);
      for (std::size_t s = 0; s < X.term(d).size(); ++s) {
        int i = X.term(d)[s];
        Vec<K> ecoords = detail::idem_row_coords(A, i);
        Vec<K> termv(dd.tm.rep.mdim, K::zero());
        for (std::size_t u = 0; u < ecoords.size(); ++u)
          termv[dd.tm.offsets[s] + u] = ecoords[u];
        Vec<K> y = apply_col(dd.rho, termv);
        for (std::size_t u = 0; u < rows_n; ++u) {
          Vec<K> blockv(poff[u + 1] - poff[u], K::zero());
          bool nz = false;
          for (std::size_t q = 0; q < blockv.size(); ++q) {
            blockv[q] = y[poff[u] + q];
            nz = nz || !blockv[q].is_zero();
          }
          if (nz) m.at(u, s) = detail::element_from_row_coords(A, dd.piece_term[u], blockv);
        }
      }
    }
    prj.push_back(std::move(m));
  }

  piece = trimmed(piece);
  validate(piece);
  ChainMap<K> embed = make_chain_map(piece, X,
                                     [&] {
                                       std::vector<AlgMat<K>> v;
                                       for (int d = piece.lo; d <= piece.hi(); ++d)
                                         v.push_back(emb[d - X.lo]);
                                       if (piece.terms.empty()) v.clear();
                                       return v;
                                     }(),
                                     true);
  ChainMap<K> project = make_chain_map(X, piece,
                                       [&] {
                                         std::vector<AlgMat<K>> v;
                                         for (int d = X.lo; d <= X.hi(); ++d) {
                                           AlgMat<K> full = prj[d - X.lo];
                                           AlgMat<K> cut(piece.summand_count(d), full.cols,
                                                         A.dim());
                                           for (std::size_t r = 0; r < cut.rows; ++r)
                                             for (std::size_t c = 0; c < cut.cols; ++c)
                                               cut.at(r, c) = full.at(r, c);
                                           v.push_back(std::move(cut));
                                         }
                                         if (X.terms.empty()) v.clear();
                                         return v;
                                       }(),
                                       true);
  // retraction sanity
  ChainMap<K> round = compose(project, embed);
  ChainMap<K> idp = identity_map(piece);
  for (std::size_t i = 0; i < round.comps.size(); ++i)
    check(round.comps[i].e == idp.comps[i].e, "split_summand: retraction is not the identity");
  return {piece, embed, project};
}

// --- Krull-Schmidt decomposition ----------------------------------------------------

template <class K>
bool iso_test(const ProjComplex<K>& X0, const ProjComplex<K>& Y0,
              const SearchPolicy& policy = {});

template <class K>
struct Decomposition {
  std::vector<Summand<K>> summands;        // one per indecomposable copy
  std::vector<std::size_t> type_of;        // summand -> type index
  std::vector<std::size_t> type_rep;       // type -> representative summand
  std::vector<std::size_t> multiplicity;   // per type

  std::size_t num_types() const { return type_rep.size(); }
};

template <class K>
bool chain_maps_equal(const ChainMap<K>& f, const ChainMap<K>& g) {
  if (f.comps.size() != g.comps.size()) return false;
  for (std::size_t i = 0; i < f.comps.size(); ++i)
    if (f.comps[i].e != g.comps[i].e) return false;
  return true;
}

/// Krull-Schmidt decomposition of a minimal complex.  Primitive idempotents
/// are found in the homotopy endomorphism algebra (small: its dimension is a
/// Hom space) and lifted to exact strict idempotent chain maps through the
/// null-homotopic ideal, which is nilpotent for a minimal complex; the lifted
/// idempotents then split the terms degreewise.
template <class K>
Decomposition<K> decompose(const ProjComplex<K>& X, const SearchPolicy& policy = {}) {
  Decomposition<K> dec;
  if (X.is_zero()) return dec;
  HomotopyHomSpace<K> H = homotopy_hom(X, X, 0);
  const std::size_t n = H.dim;
  RawAlgebra<K> B;
  B.mul.assign(n, std::vector<Vec<K>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      B.mul[i][j] = H.coords_of(compose(H.reps[i], H.reps[j]));
  B.unit = H.coords_of(identity_map(X));
  std::vector<Vec<K>> prims = primitive_idempotents_raw(B, raw_radical(B), policy);

  ChainMap<K> idX = identity_map(X);
  ChainMap<K> used = zero_map(X, X);
  std::vector<ChainMap<K>> strict_idems;
  for (const auto& p : prims) {
    ChainMap<K> f = zero_map(X, X);
    for (std::size_t i = 0; i < n; ++i)
      if (!p[i].is_zero()) f = add_maps(f, scale_map(H.reps[i], p[i]));
    ChainMap<K> u = add_maps(idX, scale_map(used, -K::one()));
    f = compose(u, compose(f, u));
    for (int it = 0;; ++it) {
      ChainMap<K> f2 = compose(f, f);
      if (chain_maps_equal(f2, f)) break;
      check(it < 64, "decompose: idempotent lift failed to converge");
      ChainMap<K> f3 = compose(f2, f);
      f = add_maps(scale_map(f2, K::from_int(3)), scale_map(f3, K::from_int(-2)));
    }
    strict_idems.push_back(f);
    used = add_maps(used, f);
  }
  check(chain_maps_equal(used, idX),
        "decompose: lifted idempotents do not sum to the identity");
  for (const auto& f : strict_idems) dec.summands.push_back(split_summand(X, f));
  dec.type_of.assign(dec.summands.size(), 0);
  for (std::size_t s = 0; s < dec.summands.size(); ++s) {
    bool matched = false;
    for (std::size_t t = 0; t < dec.type_rep.size() && !matched; ++t) {
      if (iso_test(dec.summands[s].piece, dec.summands[dec.type_rep[t]].piece, policy)) {
        dec.type_of[s] = t;
        ++dec.multiplicity[t];
        matched = true;
      }
    }
    if (!matched) {
      dec.type_of[s] = dec.type_rep.size();
      dec.type_rep.push_back(s);
      dec.multiplicity.push_back(1);
    }
  }
  return dec;
}

// --- isomorphism testing --------------------------------------------------------------

/// True iff some strict chain map X -> Y is a degreewise isomorphism.  Inputs
/// are minimized first; a generic element of the chain-map space decides, with
/// deterministic candidates, seeded random trials, and an exhaustive sweep
/// over F_p when the coefficient space is small enough.
template <class K>
bool iso_test(const ProjComplex<K>& X0, const ProjComplex<K>& Y0,
              const SearchPolicy& policy) {
  check(X0.A == Y0.A, "iso_test: complexes over different algebras");
  ProjComplex<K> X = minimize(X0).min;
  ProjComplex<K> Y = minimize(Y0).min;
  if (X.is_zero() || Y.is_zero()) return X.is_zero() && Y.is_zero();
  if (X.lo != Y.lo || X.hi() != Y.hi()) return false;
  for (int d = X.lo; d <= X.hi(); ++d)
    if (X.term_kdim(d) != Y.term_kdim(d)) return false;
  StrictHom<K> sh = strict_hom(X, Y, 0);
  if (sh.dim() == 0) return false;

  auto is_iso = [&](const Vec<K>& coeffs) {
    ChainMap<K> f = sh.map_of(coeffs);
    for (int d = X.lo; d <= X.hi(); ++d) {
      if (X.summand_count(d) == 0) continue;
      Matrix<K> E = expand_algmat(*X.A, f.comp(d), X.term(d), Y.term(d));
      if (!is_invertible(E)) return false;
    }
    return true;
  };

  const std::size_t n = sh.dim();
  for (std::size_t attempt = 0; attempt < n + 8; ++attempt)
    if (is_iso(generic_coefficients<K>(n, attempt))) return true;
  Rng rng(policy.seed ^ 0xa0761d6478bd642fULL);
  for (int t = 0; t < policy.random_trials; ++t) {
    Vec<K> c(n);
    for (auto& x : c) x = random_scalar<K>(rng);
    if (is_iso(c)) return true;
  }
  if constexpr (std::is_same_v<K, Fp>) {
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= Fp::modulus();
      if (total > (1 << 17)) break;
    }
    if (total <= (1 << 17)) {
      std::vector<std::uint32_t> idx(n, 0);
      for (;;) {
        Vec<K> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = Fp::from_int(idx[i]);
        if (is_iso(c)) return true;
        std::size_t i = 0;
        while (i < n && ++idx[i] == Fp::modulus()) idx[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return false;
}

/// Number of pairwise non-isomorphic indecomposable summands.
template <class K>
std::size_t count_indec_types(const ProjComplex<K>& X, const SearchPolicy& policy = {}) {
  ProjComplex<K> m = minimize(X).min;
  if (m.is_zero()) return 0;
  return decompose(m, policy).num_types();
}

}  // namespace tiltkit
