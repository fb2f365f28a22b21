#ifndef BREUIL_GEE331_HPP
#define BREUIL_GEE331_HPP

// The extension problem for a reducible mod p representation with
// Condition-A data (J, b) and weight a_i = 0: the derived exponents, the
// combinatorial identities they satisfy, the objects M, N, C with their
// rank-1 pieces, the maps between them, and an end-to-end verifier.
//
// Coordinates: index 0 of every rank-2 object is the sub line (e, E, script-E),
// index 1 the quotient line (f, F, script-F).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "breuil/brmod.hpp"
#include "breuil/characters.hpp"
#include "breuil/fl_rank1.hpp"
#include "breuil/rank1.hpp"
#include "breuil/report.hpp"

namespace breuil {

struct GeeParams {
  IndexSet J;
  std::vector<int> b;
  FF a{0};
  FF bscalar{0};
  /// lambda_i, zero outside J.
  std::vector<FF> lambda;
};

using IntSeq = std::vector<long long>;

struct DerivedExponents {
  IntSeq muP, muPP;
  IntSeq nn;
  IntSeq ss, rr;
  IntSeq cP, cPP;
  IntSeq gP, gPP;
  IntSeq filP, filPP, nuP, nuPP;
  /// Filtration exponents of the four rank-1 sides at level p - 2.
  IntSeq mP, mPP, nP, nPP;

  friend bool operator==(const DerivedExponents&, const DerivedExponents&) = default;
};

/// Parameter checks that every builder relies on.
inline Report check_params(const Params& P, const GeeParams& G) {
  Report rep;
  const int r = P.r();
  rep.add("p_at_least_5", P.p() >= 5, "p=" + std::to_string(P.p()));
  rep.add("J_ambient", G.J.size_of_s() == r, "J lives in the wrong index set");
  bool len = static_cast<int>(G.b.size()) == r && static_cast<int>(G.lambda.size()) == r;
  rep.add("lengths", len, "b and lambda must have length r");
  if (!len) return rep;
  for (int i = 0; i < r; ++i) {
    rep.add("b_regular", i, G.b[i] >= 2 && G.b[i] <= P.p() - 2, "b=" + std::to_string(G.b[i]));
    rep.add("lambda_support", i, G.J.contains(i) || G.lambda[i].is_zero(), "lambda nonzero outside J");
  }
  rep.add("a_nonzero", !G.a.is_zero(), "a = 0");
  rep.add("bscalar_nonzero", !G.bscalar.is_zero(), "b = 0");
  return rep;
}

namespace detail {

inline long long weighted_fil(const Params& P, const IntSeq& m, int i) {
  long long s = 0;
  for (int j = 0; j < P.r(); ++j) s += P.p_pow(P.r() - j) * m[P.idx(i + j)];
  if (s % P.e() != 0) throw Error("derive: filtration sum not divisible by e");
  return s / P.e();
}

inline long long exact_div(long long x, long long d, const char* what) {
  if (x % d != 0) throw Error(std::string("derive: ") + what + " is not integral");
  return x / d;
}

}  // namespace detail

/// All exponents attached to (J, b). Only J and b are read.
inline DerivedExponents derive(const Params& P, const GeeParams& G) {
  const int r = P.r();
  const long long p = P.p();
  const long long e = P.e();
  if (static_cast<int>(G.b.size()) != r) throw Error("derive: b must have length r");
  const IndexSet& J = G.J;
  auto b = [&](long long i) { return static_cast<long long>(G.b[P.idx(i)]); };

  DerivedExponents D;
  D.muP.resize(r);
  D.muPP.resize(r);
  for (int i = 0; i < r; ++i) {
    long long s1 = 0, s2 = 0;
    for (int j = 1; j <= r; ++j) {
      s1 += P.p_pow(r - j) * (J.ind(i + j + 1) - b(i + j) * J.ind(i + j));
      s2 += P.p_pow(r - j) * (J.cind(i + j + 1) - b(i + j) * J.cind(i + j));
    }
    D.muP[i] = P.mod_e(s1);
    D.muPP[i] = P.mod_e(s2);
  }
  D.nn.resize(r);
  for (int i = 0; i < r; ++i) D.nn[P.idx(i + 1)] = P.mod_e(D.muP[i] - D.muPP[i]);

  D.mP.resize(r);
  D.mPP.resize(r);
  D.nP.resize(r);
  D.nPP.resize(r);
  for (int i = 0; i < r; ++i) {
    D.mP[i] = e * (p - 3) + e * J.cind(i + 1);
    D.mPP[i] = e * (p - 3) + e * J.ind(i + 1);
    D.nP[i] = e * (p - 2 - b(i) * J.ind(i));
    D.nPP[i] = e * (p - 2 - b(i) * J.cind(i));
  }
  D.filP.resize(r);
  D.filPP.resize(r);
  D.nuP.resize(r);
  D.nuPP.resize(r);
  D.ss.resize(r);
  D.rr.resize(r);
  for (int i = 0; i < r; ++i) {
    D.filP[i] = detail::weighted_fil(P, D.mP, i);
    D.filPP[i] = detail::weighted_fil(P, D.mPP, i);
    D.nuP[i] = detail::weighted_fil(P, D.nP, i);
    D.nuPP[i] = detail::weighted_fil(P, D.nPP, i);
    D.ss[i] = detail::exact_div(D.filP[i] - D.nuP[i], p, "s_i");
    D.rr[i] = detail::exact_div(D.filPP[i] - D.nuPP[i], p, "r_i");
  }
  D.cP.resize(r);
  D.cPP.resize(r);
  D.gP.resize(r);
  D.gPP.resize(r);
  for (int i = 0; i < r; ++i) {
    const int i1 = P.idx(i + 1);
    D.cP[i] = -D.ss[i1] * J.ind(i + 1) + p * D.ss[i] * J.ind(i) + D.nP[i];
    D.cPP[i] = -D.rr[i1] * J.cind(i + 1) + p * D.rr[i] * J.cind(i) + D.nPP[i];
    // Descent exponents of the pushouts: nu + nu_fil - max(mu_fil, nu_fil) with nu = 0.
    D.gP[i] = P.mod_e(D.nuP[i] - std::max(D.filP[i], D.nuP[i]));
    D.gPP[i] = P.mod_e(D.nuPP[i] - std::max(D.filPP[i], D.nuPP[i]));
  }
  return D;
}

/// Values of the closed-form displays that disagree with the derived ones in
/// general: the filtration constant p(p-3) and gamma'_i = p s_i 1_J(i).
struct DisplayComparison {
  IntSeq filP_display, filPP_display;
  IntSeq gP_display, gPP_display;
  bool filP_agrees = true, filPP_agrees = true, gP_agrees = true, gPP_agrees = true;
};

inline DisplayComparison compare_displays(const Params& P, const GeeParams& G, const DerivedExponents& D) {
  const int r = P.r();
  const long long p = P.p();
  DisplayComparison out;
  for (int i = 0; i < r; ++i) {
    long long f1 = p * (p - 3), f2 = p * (p - 3);
    for (int j = 0; j < r; ++j) {
      f1 += P.p_pow(r - j) * G.J.cind(i + j + 1);
      f2 += P.p_pow(r - j) * G.J.ind(i + j + 1);
    }
    out.filP_display.push_back(f1);
    out.filPP_display.push_back(f2);
    out.gP_display.push_back(P.mod_e(p * D.ss[i] * G.J.ind(i)));
    out.gPP_display.push_back(P.mod_e(-p * D.rr[i] * G.J.cind(i)));
  }
  out.filP_agrees = out.filP_display == D.filP;
  out.filPP_agrees = out.filPP_display == D.filPP;
  out.gP_agrees = out.gP_display == D.gP;
  out.gPP_agrees = out.gPP_display == D.gPP;
  return out;
}

/// Every clause of the four combinatorial lemmas plus the congruences used in
/// their proofs, evaluated index by index. Nothing short-circuits.
inline Report check_lemmas(const Params& P, const GeeParams& G, const DerivedExponents& D) {
  const int r = P.r();
  const long long p = P.p();
  const long long e = P.e();
  const IndexSet& J = G.J;
  auto b = [&](long long i) { return static_cast<long long>(G.b[P.idx(i)]); };
  auto num = [](long long x) { return std::to_string(x); };
  Report rep;
  for (int i = 0; i < r; ++i) {
    const int i1 = P.idx(i + 1);
    bool inJ = J.contains(i);
    bool c1 = D.filP[i] > D.nuP[i];
    bool c2 = D.filPP[i] <= D.nuPP[i];
    rep.add("ineg", i, inJ == c1 && c1 == c2,
            "i in J: " + num(inJ) + ", mu'_fil > nu'_fil: " + num(c1) + ", mu''_fil <= nu''_fil: " + num(c2));

    long long lhs, rhs;
    lhs = p * D.rr[i] - D.rr[i1];
    rhs = e * (b(i) * J.cind(i) - J.cind(i + 1));
    rep.add("ident_r", i, lhs == rhs, num(lhs) + " != " + num(rhs));
    lhs = p * D.ss[i] - D.ss[i1];
    rhs = e * (b(i) * J.ind(i) - J.ind(i + 1));
    rep.add("ident_s", i, lhs == rhs, num(lhs) + " != " + num(rhs));
    rhs = D.ss[i1] * J.cind(i + 1) - p * D.ss[i] * J.cind(i) + e * (p - 3) + e * J.cind(i + 1);
    rep.add("ident_cP", i, D.cP[i] == rhs, num(D.cP[i]) + " != " + num(rhs));
    rhs = D.rr[i1] * J.ind(i + 1) - p * D.rr[i] * J.ind(i) + e * (p - 3) + e * J.ind(i + 1);
    rep.add("ident_cPP", i, D.cPP[i] == rhs, num(D.cPP[i]) + " != " + num(rhs));
    rhs = D.rr[i] - D.ss[i] + e * J.ind(i);
    rep.add("ident_n", i, D.nn[i] == rhs, num(D.nn[i]) + " != " + num(rhs));

    if (J.contains(i + 1)) {
      lhs = D.cPP[i] - D.ss[i1];
      rhs = e * (p - 3) - p * D.rr[i] * J.ind(i) + D.nn[i1];
      rep.add("ident_cPP_minus_s", i, lhs == rhs, num(lhs) + " != " + num(rhs));
      lhs = D.cPP[i] - D.ss[i1] - D.cP[i];
      rhs = p * D.ss[i] * J.cind(i) - p * D.rr[i] * J.ind(i) + D.nn[i1];
      rep.add("ident_gap", i, lhs == rhs && floor_mod(lhs - D.nn[i1], p) == 0, num(lhs) + " vs " + num(rhs));
      rep.add("ineg2_cPP_ge_s", i, D.cPP[i] >= D.ss[i1], num(D.cPP[i]) + " < " + num(D.ss[i1]));
      rep.add("ineg2_cP_plus_s", i, D.cP[i] + D.ss[i1] <= e * (p - 2),
              num(D.cP[i] + D.ss[i1]) + " > " + num(e * (p - 2)));
    }
    rep.add("inegn", i, p * D.nn[i] >= e, num(p * D.nn[i]) + " < " + num(e));

    rep.add("n_range", i, D.nn[i] >= 0 && D.nn[i] < e, num(D.nn[i]));
    rep.add("n_recurrence", i, P.mod_e(D.nn[i1] - p * D.nn[i]) == 0, num(D.nn[i1]) + " vs p*" + num(D.nn[i]));
    rep.add("n_not_divisible_by_p", i, D.nn[i] % p != 0, num(D.nn[i]));
    rep.add("s_congruence", i, P.mod_e(p * D.ss[i] + D.muP[i]) == 0, "p s_i + mu'_i = " + num(p * D.ss[i] + D.muP[i]));
    rep.add("r_congruence", i, P.mod_e(p * D.rr[i] + D.muPP[i]) == 0,
            "p r_i + mu''_i = " + num(p * D.rr[i] + D.muPP[i]));
    rep.add("muP_recurrence", i, P.mod_e(D.muP[i1] - p * (D.muP[i] + e * J.cind(i + 1))) == 0, num(D.muP[i1]));
    rep.add("muPP_recurrence", i, P.mod_e(D.muPP[i1] - p * (D.muPP[i] + e * J.ind(i + 1))) == 0, num(D.muPP[i1]));
    rep.add("sign_r_on_J", i, !inJ || D.rr[i] <= 0, num(D.rr[i]));
    rep.add("sign_s_off_J", i, inJ || D.ss[i] <= 0, num(D.ss[i]));
  }
  return rep;
}

// ---- rank-1 sides ----

struct Sides {
  BrRank1 Mp, Mpp, Np, Npp;
};

/// M', M'' (class-J objects raised to level p - 2) and N', N'' (reductions
/// of the crystalline lines), all at kappa = p - 1.
inline Sides build_sides(const Params& P, const GeeParams& G, const DerivedExponents& D) {
  const int r = P.r();
  const int top = P.p() - 1;
  Sides S;
  BrRank1 mp{2, IntSeq(r), std::vector<long>(r), G.a};
  BrRank1 mpp{2, IntSeq(r), std::vector<long>(r), G.bscalar};
  for (int i = 0; i < r; ++i) {
    mp.m[i] = P.e() * G.J.cind(i + 1);
    mpp.m[i] = P.e() * G.J.ind(i + 1);
    mp.mu[i] = static_cast<long>(D.muP[i]);
    mpp.mu[i] = static_cast<long>(D.muPP[i]);
  }
  if (!validate(P, mp) || !validate(P, mpp)) throw Error("build_sides: level-1 sides fail the recurrence");
  S.Mp = iota_raise(P, mp, top);
  S.Mpp = iota_raise(P, mpp, top);
  S.Np = BrRank1{top, D.nP, std::vector<long>(r, 0), G.a};
  S.Npp = BrRank1{top, D.nPP, std::vector<long>(r, 0), G.bscalar};
  for (const auto* X : {&S.Mp, &S.Mpp, &S.Np, &S.Npp})
    if (!validate(P, *X)) throw Error("build_sides: side fails validation");
  if (tst_char(P, S.Mp) != tst_char(P, S.Np)) throw Error("build_sides: M' and N' have different characters");
  if (tst_char(P, S.Mpp) != tst_char(P, S.Npp)) throw Error("build_sides: M'' and N'' have different characters");
  return S;
}

// ---- rank-2 objects ----

namespace detail {

inline RVec vec2(const RElem& x, const RElem& y) { return RVec{x, y}; }

/// -(b(i-1)/a(i-1)) n_i lambda_i
inline FF monodromy_coeff(const Params& P, const GeeParams& G, const DerivedExponents& D, int i) {
  const auto& F = P.field();
  int im1 = P.idx(i - 1);
  FF ratio = F.div(wrap_scalar(P, im1, G.bscalar), wrap_scalar(P, im1, G.a));
  return F.neg(F.mul(F.mul(ratio, F.from_int(D.nn[i])), G.lambda[i]));
}

}  // namespace detail

/// The extension of M' by M'' at level 1 (kappa = 2).
inline BrModDD build_M_level1(const ChainRing& R, const GeeParams& G, const DerivedExponents& D) {
  const Params& P = R.params();
  const long long e = P.e();
  BrModDD M;
  M.kappa = 2;
  M.d = 2;
  for (int i = 0; i < P.r(); ++i) {
    const int i1 = P.idx(i + 1);
    BrComponent c;
    c.fil_gens.push_back(detail::vec2(R.u_pow(e * G.J.ind(i + 1)), R.zero()));
    c.fil_gens.push_back(detail::vec2(R.monomial(G.lambda[i1], D.nn[i1]), R.u_pow(e * G.J.cind(i + 1))));
    c.phi_on_gens.push_back(detail::vec2(R.scalar(wrap_scalar(P, i, G.bscalar)), R.zero()));
    c.phi_on_gens.push_back(detail::vec2(R.zero(), R.scalar(wrap_scalar(P, i, G.a))));
    c.n_mat = R.zero_mat(2, 2);
    c.n_mat.at(0, 1) = R.monomial(detail::monodromy_coeff(P, G, D, i), P.p() * D.nn[i]);
    c.g_mat = R.diag({R.scalar(P.tau_zeta_pow(i, D.muPP[i])), R.scalar(P.tau_zeta_pow(i, D.muP[i]))});
    M.comp.push_back(std::move(c));
  }
  return M;
}

/// M at level p - 2, obtained from the level-1 object by raising the level.
inline BrModDD build_M(const ChainRing& R, const GeeParams& G, const DerivedExponents& D) {
  return iota_concrete(R, build_M_level1(R, G, D), R.params().p() - 1);
}

/// M written directly at level p - 2.
inline BrModDD build_M_display(const ChainRing& R, const GeeParams& G, const DerivedExponents& D) {
  const Params& P = R.params();
  const long long e = P.e();
  BrModDD M;
  M.kappa = P.p() - 1;
  M.d = 2;
  for (int i = 0; i < P.r(); ++i) {
    const int i1 = P.idx(i + 1);
    BrComponent c;
    c.fil_gens.push_back(detail::vec2(R.u_pow(D.mPP[i]), R.zero()));
    c.fil_gens.push_back(detail::vec2(R.monomial(G.lambda[i1], e * (P.p() - 3) + D.nn[i1]), R.u_pow(D.mP[i])));
    c.phi_on_gens.push_back(detail::vec2(R.scalar(wrap_scalar(P, i, G.bscalar)), R.zero()));
    c.phi_on_gens.push_back(detail::vec2(R.zero(), R.scalar(wrap_scalar(P, i, G.a))));
    c.n_mat = R.zero_mat(2, 2);
    c.n_mat.at(0, 1) = R.monomial(detail::monodromy_coeff(P, G, D, i), P.p() * D.nn[i]);
    c.g_mat = R.diag({R.scalar(P.tau_zeta_pow(i, D.muPP[i])), R.scalar(P.tau_zeta_pow(i, D.muP[i]))});
    M.comp.push_back(std::move(c));
  }
  return M;
}

/// Lambda-bar_i solving a(i-1) Lambda-bar_i = b(i-1) lambda_i.
inline std::vector<FF> matching_lambda_bar(const Params& P, const GeeParams& G) {
  const auto& F = P.field();
  std::vector<FF> out(P.r());
  for (int i = 0; i < P.r(); ++i) {
    int im1 = P.idx(i - 1);
    out[i] = F.div(F.mul(wrap_scalar(P, im1, G.bscalar), G.lambda[i]), wrap_scalar(P, im1, G.a));
  }
  return out;
}

/// Reduction of the crystalline lattice; `lambda_bar` defaults to the matching values.
inline BrModDD build_N(const ChainRing& R, const GeeParams& G, const DerivedExponents& D,
                       std::optional<std::vector<FF>> lambda_bar = std::nullopt) {
  const Params& P = R.params();
  const auto& F = P.field();
  std::vector<FF> L = lambda_bar ? *lambda_bar : matching_lambda_bar(P, G);
  BrModDD N;
  N.kappa = P.p() - 1;
  N.d = 2;
  for (int i = 0; i < P.r(); ++i) {
    const int i1 = P.idx(i + 1);
    BrComponent c;
    FF ai = wrap_scalar(P, i, G.a);
    c.fil_gens.push_back(detail::vec2(R.u_pow(D.nPP[i]), R.zero()));
    c.fil_gens.push_back(detail::vec2(R.zero(), R.u_pow(D.nP[i])));
    c.phi_on_gens.push_back(detail::vec2(R.scalar(wrap_scalar(P, i, G.bscalar)), R.zero()));
    c.phi_on_gens.push_back(detail::vec2(R.scalar(F.neg(F.mul(ai, L[i1]))), R.scalar(ai)));
    c.n_mat = R.zero_mat(2, 2);
    c.g_mat = R.identity(2);
    N.comp.push_back(std::move(c));
  }
  return N;
}

struct CBundle {
  Pushout pushP;   // over-object of M' and N'
  Pushout pushPP;  // over-object of M'' and N''
  BrModDD C;
};

/// The rank-2 over-object C with sub C'' and quotient C'.
inline CBundle build_C(const ChainRing& R, const GeeParams& G, const DerivedExponents& D, const Sides& S) {
  const Params& P = R.params();
  CBundle out;
  out.pushP = max_pushout(P, S.Mp, S.Np);
  out.pushPP = max_pushout(P, S.Mpp, S.Npp);
  BrModDD& C = out.C;
  C.kappa = P.p() - 1;
  C.d = 2;
  for (int i = 0; i < P.r(); ++i) {
    const int i1 = P.idx(i + 1);
    long long cross = D.cPP[i] - D.ss[i1];
    if (!G.lambda[i1].is_zero() && cross < 0) throw Error("build_C: c''_i < s_{i+1} where lambda_{i+1} != 0");
    if (D.cP[i] + D.ss[i1] > P.e() * (P.p() - 2) && G.J.contains(i + 1))
      throw Error("build_C: c'_i + s_{i+1} exceeds e(p-2)");
    BrComponent c;
    c.fil_gens.push_back(detail::vec2(R.u_pow(D.cPP[i]), R.zero()));
    c.fil_gens.push_back(detail::vec2(G.lambda[i1].is_zero() ? R.zero() : R.monomial(G.lambda[i1], cross),
                                      R.u_pow(D.cP[i])));
    c.phi_on_gens.push_back(detail::vec2(R.scalar(wrap_scalar(P, i, G.bscalar)), R.zero()));
    c.phi_on_gens.push_back(detail::vec2(R.zero(), R.scalar(wrap_scalar(P, i, G.a))));
    c.n_mat = R.zero_mat(2, 2);
    if (!G.lambda[i].is_zero()) {
      long long k = P.p() * D.nn[i] - P.p() * D.rr[i];
      if (k < 0) throw Error("build_C: negative monodromy exponent");
      c.n_mat.at(0, 1) = R.monomial(detail::monodromy_coeff(P, G, D, i), k);
    }
    c.g_mat = R.diag({R.scalar(P.tau_zeta_pow(i, D.gPP[i])), R.scalar(P.tau_zeta_pow(i, D.gP[i]))});
    C.comp.push_back(std::move(c));
  }
  return out;
}

// ---- maps ----

struct DiagramMaps {
  std::vector<std::vector<long long>> fM, fN;  // per index: exponents on (sub, quotient)
  IntSeq fppM, fppN, fpM, fpN;                 // rank-1 edges
};

/// Exponents of the six maps; all must be nonnegative.
inline DiagramMaps diagram_maps(const Params& P, const GeeParams& G, const DerivedExponents& D) {
  const int r = P.r();
  const long long p = P.p();
  DiagramMaps out;
  for (int i = 0; i < r; ++i) {
    long long eM = -p * D.rr[i] * G.J.ind(i);
    long long fM = -p * D.ss[i] * G.J.cind(i);
    long long eN = p * D.rr[i] * G.J.cind(i);
    long long fN = p * D.ss[i] * G.J.ind(i);
    for (long long x : {eM, fM, eN, fN})
      if (x < 0) throw Error("diagram_maps: negative exponent at index " + std::to_string(i));
    out.fM.push_back({eM, fM});
    out.fN.push_back({eN, fN});
    out.fppM.push_back(eM);
    out.fppN.push_back(eN);
    out.fpM.push_back(fM);
    out.fpN.push_back(fN);
  }
  return out;
}

inline Morphism inclusion_map(const ChainRing& R) {
  RMat m = R.zero_mat(2, 1);
  m.at(0, 0) = R.one();
  return Morphism(R.params().r(), m);
}

inline Morphism projection_map(const ChainRing& R) {
  RMat m = R.zero_mat(1, 2);
  m.at(0, 1) = R.one();
  return Morphism(R.params().r(), m);
}

inline Morphism rank1_map(const ChainRing& R, const IntSeq& v) {
  std::vector<std::vector<long long>> rows;
  for (long long x : v) rows.push_back({x});
  return monomial_morphism(R, rows);
}

// ---- end-to-end verification ----

/// Deliberate corruptions used as negative controls.
struct Corruption {
  bool perturb_cP = false;     // c'_0 + 1 in the rank-2 object C
  bool drop_matching = false;  // Lambda-bar := 0 in N
};

struct Gee331Objects {
  BrModDD M, Mpp, Mp, N, Npp, Np, C, Cpp, Cp;
};

struct Verify331Result {
  Report report;
  std::optional<DerivedExponents> derived;
  std::optional<DisplayComparison> display;
  std::optional<Sides> sides;
  std::optional<DiagramMaps> maps;
  std::optional<Gee331Objects> objects;
  std::optional<std::pair<BrRank1, BrRank1>> pushouts;  // C', C''
};

namespace detail {

inline std::string describe_failure(const Report& rep) {
  const Check* c = rep.first_failure();
  if (!c) return {};
  std::ostringstream os;
  os << c->name;
  if (c->index) os << "[" << *c->index << "]";
  if (!c->witness.empty()) os << ": " << c->witness;
  return os.str();
}

inline void add_summary(Report& rep, const std::string& name, const Report& sub) {
  rep.add(name, sub.all_pass(), describe_failure(sub));
}

}  // namespace detail

inline Verify331Result verify_331(const ChainRing& R, const GeeParams& G, Corruption corrupt = {}) {
  const Params& P = R.params();
  Verify331Result out;
  Report& rep = out.report;

  Report pre = check_params(P, G);
  rep.merge("params", pre);
  if (!pre.all_pass()) return out;

  try {
    DerivedExponents D = derive(P, G);
    out.derived = D;
    out.display = compare_displays(P, G, D);
    rep.merge("lemmas", check_lemmas(P, G, D));

    Sides S = build_sides(P, G, D);
    out.sides = S;
    DiagramMaps maps = diagram_maps(P, G, D);
    out.maps = maps;

    DerivedExponents Dc = D;
    if (corrupt.perturb_cP) Dc.cP[0] += 1;

    Gee331Objects O;
    O.M = build_M(R, G, D);
    O.Mpp = realize_rank1(R, S.Mpp);
    O.Mp = realize_rank1(R, S.Mp);
    O.N = corrupt.drop_matching ? build_N(R, G, D, std::vector<FF>(P.r(), FF{})) : build_N(R, G, D);
    O.Npp = realize_rank1(R, S.Npp);
    O.Np = realize_rank1(R, S.Np);
    CBundle cb = build_C(R, G, Dc, S);
    O.C = cb.C;
    O.Cpp = realize_rank1(R, cb.pushPP.C);
    O.Cp = realize_rank1(R, cb.pushP.C);
    out.pushouts = std::make_pair(cb.pushP.C, cb.pushPP.C);

    const std::pair<const char*, const BrModDD*> objs[] = {
        {"M", &O.M},   {"M''", &O.Mpp}, {"M'", &O.Mp}, {"N", &O.N},   {"N''", &O.Npp},
        {"N'", &O.Np}, {"C", &O.C},     {"C''", &O.Cpp}, {"C'", &O.Cp}};
    for (const auto& [name, obj] : objs) detail::add_summary(rep, std::string("valid.") + name, validate(R, *obj));

    // Consistency of the pieces with the rank-2 objects.
    rep.add("consistency.M_display", same_object(R, O.M, build_M_display(R, G, D)), "display differs from raised object");
    rep.add("consistency.pushout_C'", cb.pushP.C.m == D.cP && cb.pushP.C.mu == std::vector<long>(D.gP.begin(), D.gP.end()),
            "pushout invariants differ from c', gamma'");
    rep.add("consistency.pushout_C''", cb.pushPP.C.m == D.cPP && cb.pushPP.C.mu == std::vector<long>(D.gPP.begin(), D.gPP.end()),
            "pushout invariants differ from c'', gamma''");
    rep.add("consistency.edges",
            cb.pushP.vA == maps.fpM && cb.pushP.vB == maps.fpN && cb.pushPP.vA == maps.fppM && cb.pushPP.vB == maps.fppN,
            "edge valuations differ from the map exponents");
    const struct {
      const char* name;
      const BrModDD* big;
      const BrModDD* sub;
      const BrModDD* quo;
    } rows[] = {{"M", &O.M, &O.Mpp, &O.Mp}, {"N", &O.N, &O.Npp, &O.Np}, {"C", &O.C, &O.Cpp, &O.Cp}};
    for (const auto& row : rows) {
      std::string n = row.name;
      bool sub_ok = false, quo_ok = false;
      try {
        sub_ok = same_object(R, sub_object(R, *row.big, {0}), *row.sub);
      } catch (const Error&) {
      }
      try {
        quo_ok = same_object(R, quotient_object(R, *row.big, {1}), *row.quo);
      } catch (const Error&) {
      }
      rep.add("consistency.sub_" + n, sub_ok, "sub-object differs from the rank-1 side");
      rep.add("consistency.quotient_" + n, quo_ok, "quotient differs from the rank-1 side");
    }

    // Six morphisms.
    Morphism fM = monomial_morphism(R, maps.fM);
    Morphism fN = monomial_morphism(R, maps.fN);
    Morphism fppM = rank1_map(R, maps.fppM), fppN = rank1_map(R, maps.fppN);
    Morphism fpM = rank1_map(R, maps.fpM), fpN = rank1_map(R, maps.fpN);
    detail::add_summary(rep, "morphism.f_M", morphism_report(R, fM, O.M, O.C));
    detail::add_summary(rep, "morphism.f_N", morphism_report(R, fN, O.N, O.C));
    detail::add_summary(rep, "morphism.f''_M", morphism_report(R, fppM, O.Mpp, O.Cpp));
    detail::add_summary(rep, "morphism.f''_N", morphism_report(R, fppN, O.Npp, O.Cpp));
    detail::add_summary(rep, "morphism.f'_M", morphism_report(R, fpM, O.Mp, O.Cp));
    detail::add_summary(rep, "morphism.f'_N", morphism_report(R, fpN, O.Np, O.Cp));

    // Three exact rows.
    Morphism inc = inclusion_map(R), proj = projection_map(R);
    for (const auto& row : rows) {
      Report ex;
      ex.merge("inc", morphism_report(R, inc, *row.sub, *row.big));
      ex.merge("proj", morphism_report(R, proj, *row.big, *row.quo));
      ex.merge("", exactness_report(R, inc, *row.sub, *row.big, proj, *row.quo));
      detail::add_summary(rep, std::string("exact.") + row.name, ex);
    }

    // Four squares.
    auto square = [&](const char* name, const Morphism& a1, const Morphism& a2, const Morphism& b1,
                      const Morphism& b2) {
      bool ok = true;
      int bad = -1;
      for (int i = 0; i < P.r() && ok; ++i) {
        if (R.mul(a2[i], a1[i]) != R.mul(b2[i], b1[i])) {
          ok = false;
          bad = i;
        }
      }
      rep.add(std::string("square.") + name, ok, "differs at index " + std::to_string(bad));
    };
    square("N''_N_C''_C", inc, fN, fppN, inc);
    square("N_N'_C_C'", fN, proj, proj, fpN);
    square("M''_M_C''_C", inc, fM, fppM, inc);
    square("M_M'_C_C'", fM, proj, proj, fpM);

    out.objects = std::move(O);
  } catch (const Error& ex) {
    rep.add("construction", false, ex.what());
  }
  return out;
}

}  // namespace breuil

#endif  // BREUIL_GEE331_HPP
