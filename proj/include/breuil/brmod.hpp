#ifndef BREUIL_BRMOD_HPP
#define BREUIL_BRMOD_HPP

// Concrete Breuil modules with descent data over R = E[u]/u^{ep}: one free
// R-module of rank d per index i in S, with
//   - generators of Fil^{kappa-1} M_i,
//   - the images of those generators under phi_{kappa-1}, lying in M_{i+1},
//   - the matrix of N on the basis (extended by N(s x) = delta(s) x + s N(x)),
//   - the matrix of [g0] on the basis (extended semilinearly over ghat_i).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "breuil/chain_ring.hpp"
#include "breuil/rank1.hpp"
#include "breuil/report.hpp"

namespace breuil {

struct BrComponent {
  std::vector<RVec> fil_gens;
  std::vector<RVec> phi_on_gens;
  RMat n_mat;
  RMat g_mat;

  friend bool operator==(const BrComponent&, const BrComponent&) = default;
};

struct BrModDD {
  int kappa = 2;
  int d = 0;
  std::vector<BrComponent> comp;

  friend bool operator==(const BrModDD&, const BrModDD&) = default;
};

/// A morphism is one d_target x d_source matrix per index.
using Morphism = std::vector<RMat>;

// ---- operators on elements ----

/// N on M_i.
inline RVec apply_N(const ChainRing& R, const BrModDD& M, int i, const RVec& v) {
  return R.add(R.delta(v), R.apply(M.comp[i].n_mat, v));
}

/// [g0] on M_i.
inline RVec apply_g(const ChainRing& R, const BrModDD& M, int i, const RVec& v) {
  return R.apply(M.comp[i].g_mat, R.ghat(i, v));
}

/// phi on an element of Fil M_i with known coefficients on the Fil generators.
inline RVec apply_phi_coeffs(const ChainRing& R, const BrModDD& M, int i, const RVec& coeffs) {
  RVec out = R.zero_vec(M.d);
  const auto& imgs = M.comp[i].phi_on_gens;
  for (std::size_t j = 0; j < imgs.size(); ++j) {
    if (R.is_zero(coeffs[j])) continue;
    out = R.add(out, R.mul(R.phi(coeffs[j]), imgs[j]));
  }
  return out;
}

inline SpanForm fil_form(const ChainRing& R, const BrModDD& M, int i) {
  return R.span_form(M.comp[i].fil_gens, M.d);
}

/// phi on an element of Fil M_i, or nothing when the element is outside Fil.
inline std::optional<RVec> apply_phi(const ChainRing& R, const BrModDD& M, int i, const SpanForm& fil,
                                     const RVec& v) {
  auto c = R.member(v, fil);
  if (!c) return std::nullopt;
  return apply_phi_coeffs(R, M, i, *c);
}

namespace detail {

inline std::string gen_witness(const char* what, int j) { return std::string(what) + " " + std::to_string(j); }

inline int rank_over_E(const FiniteField& F, std::vector<std::vector<FF>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int k = rank; k < rows; ++k)
      if (!a[k][c].is_zero()) {
        piv = k;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    FF inv = F.inv(a[rank][c]);
    for (auto& x : a[rank]) x = F.mul(x, inv);
    for (int k = 0; k < rows; ++k) {
      if (k == rank || a[k][c].is_zero()) continue;
      FF f = a[k][c];
      for (int j = 0; j < cols; ++j) a[k][j] = F.sub(a[k][j], F.mul(f, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

inline bool check_square(const RMat& m, int d) { return m.rows == d && m.cols == d && static_cast<int>(m.a.size()) == d * d; }

}  // namespace detail

/// Shape consistency; raises on mismatch.
inline void check_dims(const ChainRing& R, const BrModDD& M) {
  const int r = R.params().r();
  if (static_cast<int>(M.comp.size()) != r) throw Error("object must have r components");
  for (const auto& c : M.comp) {
    if (c.fil_gens.size() != c.phi_on_gens.size()) throw Error("each Fil generator needs a phi image");
    for (const auto& v : c.fil_gens)
      if (static_cast<int>(v.size()) != M.d) throw Error("Fil generator has wrong length");
    for (const auto& v : c.phi_on_gens)
      if (static_cast<int>(v.size()) != M.d) throw Error("phi image has wrong length");
    if (!detail::check_square(c.n_mat, M.d) || !detail::check_square(c.g_mat, M.d))
      throw Error("N and [g0] must be d x d");
    for (const auto& s : c.n_mat.a)
      if (static_cast<int>(s.c.size()) != R.length()) throw Error("ring element has wrong length");
  }
}

/// All axioms of the category, per index.
inline Report validate(const ChainRing& R, const BrModDD& M) {
  check_dims(R, M);
  const Params& P = R.params();
  const int r = P.r();
  const int d = M.d;
  Report rep;
  rep.add("kappa_range", M.kappa >= 2 && M.kappa <= P.p() - 1, "kappa=" + std::to_string(M.kappa));

  std::vector<SpanForm> fil;
  for (int i = 0; i < r; ++i) fil.push_back(fil_form(R, M, i));

  for (int i = 0; i < r; ++i) {
    const int i1 = P.idx(i + 1);
    const auto& C = M.comp[i];

    // Fil contains u^{e(kappa-1)} M.
    {
      bool ok = true;
      std::string w;
      for (int k = 0; k < d && ok; ++k) {
        RVec v = R.shift_up(R.basis_vec(d, k), static_cast<int>(P.e() * (M.kappa - 1)));
        if (!R.contains(fil[i], v)) {
          ok = false;
          w = detail::gen_witness("basis vector", k);
        }
      }
      rep.add("fil_contains_ue", i, ok, w);
    }

    // phi is well defined on Fil: syzygies map to zero.
    {
      bool ok = true;
      std::string w;
      for (std::size_t s = 0; s < fil[i].syzygies.size() && ok; ++s) {
        if (!R.is_zero(apply_phi_coeffs(R, M, i, fil[i].syzygies[s]))) {
          ok = false;
          w = detail::gen_witness("syzygy", static_cast<int>(s));
        }
      }
      rep.add("phi_well_defined", i, ok, w);
    }

    // The images of phi generate M_{i+1}.
    {
      SpanForm img = R.span_form(C.phi_on_gens, d);
      bool ok = static_cast<int>(img.rows.size()) == d;
      for (int v : img.pivot_val) ok = ok && v == 0;
      rep.add("phi_image_generates", i, ok, "span of images is proper");
    }

    // N(M) inside uM.
    {
      bool ok = true;
      for (const auto& s : C.n_mat.a) ok = ok && s.c[0].is_zero();
      rep.add("N_into_uM", i, ok, "N matrix has a unit-level entry");
    }

    // u^e N(Fil) inside Fil, and phi(u^e N(x)) = N(phi(x)).
    {
      bool ok_fil = true, ok_comm = true;
      std::string w_fil, w_comm;
      for (std::size_t j = 0; j < C.fil_gens.size(); ++j) {
        RVec y = R.shift_up(apply_N(R, M, i, C.fil_gens[j]), static_cast<int>(P.e()));
        auto coeffs = R.member(y, fil[i]);
        if (!coeffs) {
          if (ok_fil) w_fil = detail::gen_witness("Fil generator", static_cast<int>(j));
          ok_fil = false;
          continue;
        }
        RVec lhs = apply_phi_coeffs(R, M, i, *coeffs);
        RVec rhs = apply_N(R, M, i1, C.phi_on_gens[j]);
        if (lhs != rhs) {
          if (ok_comm) w_comm = detail::gen_witness("Fil generator", static_cast<int>(j));
          ok_comm = false;
        }
      }
      rep.add("N_fil_stable", i, ok_fil, w_fil);
      rep.add("phi_N_commute", i, ok_fil && ok_comm, ok_fil ? w_comm : "u^e N(Fil) not in Fil");
    }

    // [g0] has order dividing e.
    {
      bool ok = true;
      std::string w;
      for (int k = 0; k < d && ok; ++k) {
        RVec x = R.basis_vec(d, k);
        RVec y = x;
        for (long t = 0; t < P.e(); ++t) y = apply_g(R, M, i, y);
        if (y != x) {
          ok = false;
          w = detail::gen_witness("basis vector", k);
        }
      }
      rep.add("descent_order", i, ok, w);
    }

    // [g0] preserves Fil and commutes with phi.
    {
      bool ok_fil = true, ok_comm = true;
      std::string w_fil, w_comm;
      for (std::size_t j = 0; j < C.fil_gens.size(); ++j) {
        RVec y = apply_g(R, M, i, C.fil_gens[j]);
        auto coeffs = R.member(y, fil[i]);
        if (!coeffs) {
          if (ok_fil) w_fil = detail::gen_witness("Fil generator", static_cast<int>(j));
          ok_fil = false;
          continue;
        }
        RVec lhs = apply_phi_coeffs(R, M, i, *coeffs);
        RVec rhs = apply_g(R, M, i1, C.phi_on_gens[j]);
        if (lhs != rhs) {
          if (ok_comm) w_comm = detail::gen_witness("Fil generator", static_cast<int>(j));
          ok_comm = false;
        }
      }
      rep.add("descent_fil_stable", i, ok_fil, w_fil);
      rep.add("descent_phi_commute", i, ok_fil && ok_comm, ok_fil ? w_comm : "[g0] Fil not in Fil");
    }

    // [g0] commutes with N.
    {
      bool ok = true;
      std::string w;
      for (int k = 0; k < d && ok; ++k) {
        RVec x = R.basis_vec(d, k);
        if (apply_g(R, M, i, apply_N(R, M, i, x)) != apply_N(R, M, i, apply_g(R, M, i, x))) {
          ok = false;
          w = detail::gen_witness("basis vector", k);
        }
      }
      rep.add("descent_N_commute", i, ok, w);
    }
  }
  return rep;
}

inline Report morphism_report(const ChainRing& R, const Morphism& f, const BrModDD& A, const BrModDD& B) {
  check_dims(R, A);
  check_dims(R, B);
  const Params& P = R.params();
  const int r = P.r();
  if (static_cast<int>(f.size()) != r) throw Error("morphism must have r components");
  for (const auto& m : f)
    if (m.rows != B.d || m.cols != A.d) throw Error("morphism matrix has wrong shape");
  Report rep;
  rep.add("same_level", A.kappa == B.kappa, "levels differ");

  for (int i = 0; i < r; ++i) {
    const int i1 = P.idx(i + 1);
    SpanForm filB = fil_form(R, B, i);
    bool ok_fil = true, ok_phi = true;
    std::string w_fil, w_phi;
    for (std::size_t j = 0; j < A.comp[i].fil_gens.size(); ++j) {
      RVec fx = R.apply(f[i], A.comp[i].fil_gens[j]);
      auto phiB = apply_phi(R, B, i, filB, fx);
      if (!phiB) {
        if (ok_fil) w_fil = detail::gen_witness("Fil generator", static_cast<int>(j));
        ok_fil = false;
        continue;
      }
      if (R.apply(f[i1], A.comp[i].phi_on_gens[j]) != *phiB) {
        if (ok_phi) w_phi = detail::gen_witness("Fil generator", static_cast<int>(j));
        ok_phi = false;
      }
    }
    rep.add("morphism_fil", i, ok_fil, w_fil);
    rep.add("morphism_phi", i, ok_fil && ok_phi, ok_fil ? w_phi : "Fil not preserved");

    bool ok_N = true, ok_g = true;
    std::string w_N, w_g;
    for (int k = 0; k < A.d; ++k) {
      RVec x = R.basis_vec(A.d, k);
      RVec fx = R.apply(f[i], x);
      if (R.apply(f[i], apply_N(R, A, i, x)) != apply_N(R, B, i, fx)) {
        if (ok_N) w_N = detail::gen_witness("basis vector", k);
        ok_N = false;
      }
      if (R.apply(f[i], apply_g(R, A, i, x)) != apply_g(R, B, i, fx)) {
        if (ok_g) w_g = detail::gen_witness("basis vector", k);
        ok_g = false;
      }
    }
    rep.add("morphism_N", i, ok_N, w_N);
    rep.add("morphism_descent", i, ok_g, w_g);
  }
  return rep;
}

inline bool is_morphism(const ChainRing& R, const Morphism& f, const BrModDD& A, const BrModDD& B) {
  return morphism_report(R, f, A, B).all_pass();
}

inline Morphism compose(const ChainRing& R, const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(R.mul(g[i], f[i]));
  return out;
}

inline Morphism identity_morphism(const ChainRing& R, const BrModDD& A) {
  return Morphism(R.params().r(), R.identity(A.d));
}

/// Exactness of 0 -> A -> B -> C -> 0 on the free modules and on Fil.
inline Report exactness_report(const ChainRing& R, const Morphism& inc, const BrModDD& A, const BrModDD& B,
                               const Morphism& proj, const BrModDD& C) {
  const Params& P = R.params();
  Report rep;
  for (int i = 0; i < P.r(); ++i) {
    const auto& fi = inc[i];
    const auto& pi = proj[i];
    rep.add("exact_ranks", i, A.d + C.d == B.d, "ranks do not add up");
    bool shapes = fi.rows == B.d && fi.cols == A.d && pi.rows == C.d && pi.cols == B.d;
    if (!shapes) {
      rep.add("exact_shapes", i, false, "map shapes inconsistent");
      continue;
    }
    rep.add("exact_inc_split_injective", i, detail::rank_over_E(R.field(), R.residue(fi)) == A.d,
            "inclusion drops rank modulo u");
    rep.add("exact_proj_surjective", i, detail::rank_over_E(R.field(), R.residue(pi)) == C.d,
            "projection not surjective modulo u");
    rep.add("exact_composite_zero", i, R.is_zero(R.mul(pi, fi)), "proj o inc is nonzero");

    // Fil(B) meets ker(proj) = inc(A) exactly in inc(Fil A).
    const auto& gB = B.comp[i].fil_gens;
    std::vector<RVec> projected;
    for (const auto& g : gB) projected.push_back(R.apply(pi, g));
    SpanForm pf = R.span_form(projected, C.d);
    std::vector<RVec> meet;
    for (const auto& syz : pf.syzygies) meet.push_back(R.combine(syz, gB, B.d));
    std::vector<RVec> incA;
    for (const auto& g : A.comp[i].fil_gens) incA.push_back(R.apply(fi, g));
    rep.add("exact_fil_sub", i, R.span_form(meet, B.d).same_span(R.span_form(incA, B.d)),
            "Fil B restricted to A differs from Fil A");
    rep.add("exact_fil_quotient", i, pf.same_span(fil_form(R, C, i)), "image of Fil B differs from Fil C");
  }
  return rep;
}

inline bool is_short_exact(const ChainRing& R, const Morphism& inc, const BrModDD& A, const BrModDD& B,
                           const Morphism& proj, const BrModDD& C) {
  return exactness_report(R, inc, A, B, proj, C).all_pass();
}

/// Level raising: Fil generators times u^{e(kappa2 - kappa)}, phi images unchanged.
inline BrModDD iota_concrete(const ChainRing& R, const BrModDD& M, int kappa2) {
  const Params& P = R.params();
  if (kappa2 < M.kappa || kappa2 > P.p() - 1) throw Error("iota_concrete: bad target level");
  BrModDD out = M;
  out.kappa = kappa2;
  int shift = static_cast<int>(P.e() * (kappa2 - M.kappa));
  for (auto& c : out.comp)
    for (auto& g : c.fil_gens) g = R.shift_up(g, shift);
  return out;
}

/// Scalar a(i): a at the step r-1 -> 0, 1 elsewhere.
inline FF wrap_scalar(const Params& P, long long i, FF a) {
  return P.idx(i) == P.r() - 1 ? a : P.field().one();
}

/// Concrete object with invariants X, without checking X.
inline BrModDD realize_rank1_unchecked(const ChainRing& R, const BrRank1& X) {
  const Params& P = R.params();
  BrModDD M;
  M.kappa = X.kappa;
  M.d = 1;
  for (int i = 0; i < P.r(); ++i) {
    BrComponent c;
    c.fil_gens = {RVec{R.u_pow(X.m[i])}};
    c.phi_on_gens = {RVec{R.scalar(wrap_scalar(P, i, X.a))}};
    c.n_mat = R.zero_mat(1, 1);
    c.g_mat = R.diag({R.scalar(P.tau_zeta_pow(i, X.mu[i]))});
    M.comp.push_back(std::move(c));
  }
  return M;
}

inline BrModDD realize_rank1(const ChainRing& R, const BrRank1& X) {
  if (!validate(R.params(), X)) throw Error("realize_rank1: invalid rank-1 invariants");
  return realize_rank1_unchecked(R, X);
}

/// Invariants (m, mu, a) of a rank-1 object whose basis diagonalizes [g0].
inline BrRank1 extract_rank1(const ChainRing& R, const BrModDD& M) {
  check_dims(R, M);
  const Params& P = R.params();
  if (M.d != 1) throw Error("extract_rank1: object is not of rank 1");
  BrRank1 X;
  X.kappa = M.kappa;
  X.m.resize(P.r());
  X.mu.resize(P.r());
  FF a = P.field().one();
  for (int i = 0; i < P.r(); ++i) {
    SpanForm fil = fil_form(R, M, i);
    if (fil.rows.size() != 1) throw Error("extract_rank1: Fil is zero");
    X.m[i] = fil.pivot_val[0];

    const RElem& g = M.comp[i].g_mat.at(0, 0);
    if (!R.is_unit(g) || R.val(R.sub(g, R.scalar(g.c[0]))) < R.length())
      throw Error("extract_rank1: basis is not an eigenvector of [g0]");
    X.mu[i] = P.root_of_unity_exponent(i, g.c[0]);

    RVec canonical = fil.rows[0];
    auto img = apply_phi(R, M, i, fil, canonical);
    if (!img || !R.is_unit((*img)[0])) throw Error("extract_rank1: phi image of Fil is not a generator");
    // Rescaling e_i by units changes the product of constant terms by a telescoping factor,
    // so this product is the normalized wrap scalar.
    a = P.field().mul(a, (*img)[0].c[0]);
  }
  X.a = a;
  if (!validate(P, X)) throw Error("extract_rank1: invariants fail the recurrence");
  return X;
}

/// Two objects on the same underlying modules describe the same structure.
inline bool same_object(const ChainRing& R, const BrModDD& A, const BrModDD& B) {
  if (A.d != B.d || A.kappa != B.kappa) return false;
  Morphism id = identity_morphism(R, A);
  return is_morphism(R, id, A, B) && is_morphism(R, id, B, A);
}

namespace detail {

inline RMat sub_block(const ChainRing& R, const RMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  RMat out = R.zero_mat(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.at(static_cast<int>(a), static_cast<int>(b)) = m.at(rows[a], cols[b]);
  return out;
}

inline RVec pick(const RVec& v, const std::vector<int>& coords) {
  RVec out;
  for (int c : coords) out.push_back(v[c]);
  return out;
}

inline std::vector<int> complement_coords(int d, const std::vector<int>& coords) {
  std::vector<int> out;
  for (int k = 0; k < d; ++k)
    if (std::find(coords.begin(), coords.end(), k) == coords.end()) out.push_back(k);
  return out;
}

}  // namespace detail

/// Sub-object spanned by the basis vectors with the given coordinates
/// (the same coordinates at every index).
inline BrModDD sub_object(const ChainRing& R, const BrModDD& M, const std::vector<int>& coords) {
  check_dims(R, M);
  const Params& P = R.params();
  std::vector<int> rest = detail::complement_coords(M.d, coords);
  BrModDD out;
  out.kappa = M.kappa;
  out.d = static_cast<int>(coords.size());
  for (int i = 0; i < P.r(); ++i) {
    const auto& C = M.comp[i];
    std::vector<RVec> outside;
    for (const auto& g : C.fil_gens) outside.push_back(detail::pick(g, rest));
    SpanForm pf = R.span_form(outside, static_cast<int>(rest.size()));
    BrComponent c;
    for (const auto& syz : pf.syzygies) {
      RVec v = R.combine(syz, C.fil_gens, M.d);
      RVec img = apply_phi_coeffs(R, M, i, syz);
      if (!R.is_zero(detail::pick(img, rest))) throw Error("sub_object: phi leaves the sub-module");
      c.fil_gens.push_back(detail::pick(v, coords));
      c.phi_on_gens.push_back(detail::pick(img, coords));
    }
    for (const auto* mat : {&C.n_mat, &C.g_mat}) {
      if (!R.is_zero(detail::sub_block(R, *mat, rest, coords)))
        throw Error("sub_object: N or [g0] leaves the sub-module");
    }
    c.n_mat = detail::sub_block(R, C.n_mat, coords, coords);
    c.g_mat = detail::sub_block(R, C.g_mat, coords, coords);
    out.comp.push_back(std::move(c));
  }
  return out;
}

/// Quotient by the sub-object on the complementary coordinates; `coords` are kept.
inline BrModDD quotient_object(const ChainRing& R, const BrModDD& M, const std::vector<int>& coords) {
  check_dims(R, M);
  const Params& P = R.params();
  std::vector<int> killed = detail::complement_coords(M.d, coords);
  BrModDD out;
  out.kappa = M.kappa;
  out.d = static_cast<int>(coords.size());
  for (int i = 0; i < P.r(); ++i) {
    const auto& C = M.comp[i];
    for (const auto* mat : {&C.n_mat, &C.g_mat}) {
      if (!R.is_zero(detail::sub_block(R, *mat, coords, killed)))
        throw Error("quotient_object: kernel coordinates are not stable");
    }
    BrComponent c;
    for (std::size_t j = 0; j < C.fil_gens.size(); ++j) {
      c.fil_gens.push_back(detail::pick(C.fil_gens[j], coords));
      c.phi_on_gens.push_back(detail::pick(C.phi_on_gens[j], coords));
    }
    c.n_mat = detail::sub_block(R, C.n_mat, coords, coords);
    c.g_mat = detail::sub_block(R, C.g_mat, coords, coords);
    out.comp.push_back(std::move(c));
  }
  return out;
}

/// Direct sum with the product filtration.
inline BrModDD direct_sum(const ChainRing& R, const BrModDD& A, const BrModDD& B) {
  if (A.kappa != B.kappa) throw Error("direct_sum: levels differ");
  BrModDD out;
  out.kappa = A.kappa;
  out.d = A.d + B.d;
  auto embed = [&](const RVec& v, int offset) {
    RVec w = R.zero_vec(out.d);
    for (std::size_t k = 0; k < v.size(); ++k) w[offset + k] = v[k];
    return w;
  };
  auto block = [&](const RMat& a, const RMat& b) {
    RMat m = R.zero_mat(out.d, out.d);
    for (int x = 0; x < A.d; ++x)
      for (int y = 0; y < A.d; ++y) m.at(x, y) = a.at(x, y);
    for (int x = 0; x < B.d; ++x)
      for (int y = 0; y < B.d; ++y) m.at(A.d + x, A.d + y) = b.at(x, y);
    return m;
  };
  for (std::size_t i = 0; i < A.comp.size(); ++i) {
    BrComponent c;
    for (std::size_t j = 0; j < A.comp[i].fil_gens.size(); ++j) {
      c.fil_gens.push_back(embed(A.comp[i].fil_gens[j], 0));
      c.phi_on_gens.push_back(embed(A.comp[i].phi_on_gens[j], 0));
    }
    for (std::size_t j = 0; j < B.comp[i].fil_gens.size(); ++j) {
      c.fil_gens.push_back(embed(B.comp[i].fil_gens[j], A.d));
      c.phi_on_gens.push_back(embed(B.comp[i].phi_on_gens[j], A.d));
    }
    c.n_mat = block(A.comp[i].n_mat, B.comp[i].n_mat);
    c.g_mat = block(A.comp[i].g_mat, B.comp[i].g_mat);
    out.comp.push_back(std::move(c));
  }
  return out;
}

/// The morphism given at each index by a diagonal of monomials u^{v[i][k]}.
inline Morphism monomial_morphism(const ChainRing& R, const std::vector<std::vector<long long>>& v) {
  Morphism out;
  for (const auto& row : v) {
    RVec entries;
    for (long long k : row) entries.push_back(R.u_pow(k));
    out.push_back(R.diag(entries));
  }
  return out;
}

}  // namespace breuil

#endif  // BREUIL_BRMOD_HPP
