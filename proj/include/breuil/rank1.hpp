#ifndef BREUIL_RANK1_HPP
#define BREUIL_RANK1_HPP

// Rank-1 Breuil modules with descent data, described by their numerical
// invariants (m_i, mu_i, a) at level kappa - 1.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "breuil/base_algebra.hpp"
#include "breuil/characters.hpp"

namespace breuil {

struct BrRank1 {
  int kappa = 2;
  std::vector<long long> m;
  std::vector<long> mu;
  FF a{0};

  friend bool operator==(const BrRank1&, const BrRank1&) = default;
};

/// Rank-1 Fontaine-Laffaille datum: Hodge exponents m_i and the residue of x.
struct FLRank1 {
  std::vector<int> m;
  FF xbar{0};

  friend bool operator==(const FLRank1&, const FLRank1&) = default;
};

using MuFil = std::vector<long long>;

namespace detail {

inline void check_shape(const Params& P, const BrRank1& X) {
  if (static_cast<int>(X.m.size()) != P.r() || static_cast<int>(X.mu.size()) != P.r())
    throw Error("rank-1 invariants must have length r");
}

inline void check_kappa(const Params& P, int kappa) {
  if (kappa < 2 || kappa > P.p() - 1) throw Error("kappa must lie in [2, p-1]");
}

}  // namespace detail

/// Shape and range conditions only (no recurrence).
inline bool in_range(const Params& P, const BrRank1& X) {
  if (static_cast<int>(X.m.size()) != P.r() || static_cast<int>(X.mu.size()) != P.r()) return false;
  if (X.kappa < 2 || X.kappa > P.p() - 1) return false;
  if (X.a.is_zero()) return false;
  for (int i = 0; i < P.r(); ++i) {
    if (X.m[i] < 0 || X.m[i] > P.e() * (X.kappa - 1)) return false;
    if (X.mu[i] < 0 || X.mu[i] >= P.e()) return false;
  }
  return true;
}

/// mu_{i+1} = p (mu_i + m_i) mod e at every index, the step r-1 -> 0 included.
inline bool recurrence_holds(const Params& P, const BrRank1& X) {
  for (int i = 0; i < P.r(); ++i) {
    long next = X.mu[P.idx(i + 1)];
    if (P.mod_e(next) != P.mod_e(static_cast<long long>(P.p()) * (X.mu[i] + X.m[i]))) return false;
  }
  return true;
}

inline bool validate(const Params& P, const BrRank1& X) { return in_range(P, X) && recurrence_holds(P, X); }

/// mu_fil,i = (p^r m_i + p^{r-1} m_{i+1} + ... + p m_{i+r-1}) / e.
inline MuFil mu_fil(const Params& P, const BrRank1& X) {
  detail::check_shape(P, X);
  MuFil out(P.r());
  for (int i = 0; i < P.r(); ++i) {
    long long s = 0;
    for (int j = 0; j < P.r(); ++j) s += P.p_pow(P.r() - j) * X.m[P.idx(i + j)];
    if (s % P.e() != 0) throw Error("mu_fil: weighted sum not divisible by e at index " + std::to_string(i));
    out[i] = s / P.e();
  }
  return out;
}

/// The omega_0-exponent of the tame part read off at each index i.
inline std::vector<long> tst_char_exponents(const Params& P, const BrRank1& X) {
  MuFil fil = mu_fil(P, X);
  long long base = 0;
  for (int j = 0; j < P.r(); ++j) base += P.p_pow(j);
  base *= X.kappa - 1;
  std::vector<long> out(P.r());
  for (int i = 0; i < P.r(); ++i) {
    long long ei = base - X.mu[i] - fil[i];
    out[i] = P.mod_e(P.mod_e(ei) * P.p_pow_mod_e(P.r() - i));
  }
  return out;
}

inline GKChar tst_char(const Params& P, const BrRank1& X) {
  auto ex = tst_char_exponents(P, X);
  for (int i = 1; i < P.r(); ++i)
    if (ex[i] != ex[0]) throw Error("tst_char: exponents disagree across indices");
  return GKChar{TameChar{ex[0]}, X.a};
}

inline bool is_etale(const Params& P, const BrRank1& X) {
  return std::all_of(X.m.begin(), X.m.end(), [&](long long m) { return m == P.e() * (X.kappa - 1); });
}

inline bool is_multiplicative(const BrRank1& X) {
  return std::all_of(X.m.begin(), X.m.end(), [](long long m) { return m == 0; });
}

/// Filtration exponents of a class-J object: m_i = e * 1_{S-J}(i+1).
inline std::vector<long long> class_j_m(const Params& P, const IndexSet& J) {
  std::vector<long long> m(P.r());
  for (int i = 0; i < P.r(); ++i) m[i] = P.e() * J.cind(i + 1);
  return m;
}

/// The unique class-J object at kappa = 2 with character psi.
inline BrRank1 class_j(const Params& P, const IndexSet& J, const GKChar& psi) {
  if (J.size_of_s() != P.r()) throw Error("subset J has the wrong ambient size");
  if (psi.unram.is_zero()) throw Error("unramified scalar must be nonzero");
  BrRank1 X;
  X.kappa = 2;
  X.m = class_j_m(P, J);
  X.mu.resize(P.r());
  X.a = psi.unram;
  for (int i = 0; i < P.r(); ++i) {
    long long s = -static_cast<long long>(P.p_pow_mod_e(i)) * psi.tame.t;
    for (int j = 1; j <= P.r(); ++j) s += P.p_pow(P.r() - j) * J.ind(i + j + 1);
    X.mu[i] = P.mod_e(s);
  }
  if (!validate(P, X)) throw Error("class_j: constructed object fails the recurrence");
  GKChar back = tst_char(P, X);
  if (back.tame.t != P.mod_e(psi.tame.t) || back.unram != psi.unram)
    throw Error("class_j: character round trip failed");
  return X;
}

/// Image under the level-raising functor: m_i + e(kappa2 - kappa).
inline BrRank1 iota_raise(const Params& P, const BrRank1& X, int kappa2) {
  detail::check_kappa(P, kappa2);
  if (kappa2 < X.kappa) throw Error("iota_raise: target level below source level");
  BrRank1 Y = X;
  Y.kappa = kappa2;
  for (auto& m : Y.m) m += P.e() * (kappa2 - X.kappa);
  return Y;
}

namespace detail {

inline void check_same_char(const Params& P, const BrRank1& A, const BrRank1& B) {
  if (A.kappa != B.kappa) throw Error("objects live at different levels");
  if (tst_char(P, A) != tst_char(P, B)) throw Error("objects have different characters");
}

}  // namespace detail

/// Valuations v_i with A_i -> u^{v_i} B_i a morphism, if one exists.
inline std::optional<std::vector<long long>> hom_exists(const Params& P, const BrRank1& A, const BrRank1& B) {
  detail::check_same_char(P, A, B);
  MuFil fa = mu_fil(P, A), fb = mu_fil(P, B);
  std::vector<long long> v(P.r());
  for (int i = 0; i < P.r(); ++i) {
    if (fb[i] < fa[i]) return std::nullopt;
    v[i] = fb[i] - fa[i];
  }
  return v;
}

struct Pushout {
  BrRank1 C;
  std::vector<long long> vA;
  std::vector<long long> vB;
  std::vector<long long> n;
  MuFil gamma_fil;
};

/// Smallest common over-object of A and B (same character, same level).
inline Pushout max_pushout(const Params& P, const BrRank1& A, const BrRank1& B) {
  detail::check_same_char(P, A, B);
  const int r = P.r();
  MuFil fa = mu_fil(P, A), fb = mu_fil(P, B);
  Pushout out;
  out.n.resize(r);
  for (int i = 0; i < r; ++i) {
    long long d = std::max(fb[i] - fa[i], 0LL);
    if (d % P.p() != 0) throw Error("max_pushout: filtration gap not divisible by p");
    out.n[i] = d / P.p();
  }
  BrRank1& C = out.C;
  C.kappa = A.kappa;
  C.a = A.a;
  C.m.resize(r);
  C.mu.resize(r);
  out.gamma_fil.resize(r);
  for (int i = 0; i < r; ++i) {
    C.m[i] = A.m[i] + P.p() * out.n[i] - out.n[P.idx(i + 1)];
    out.gamma_fil[i] = std::max(fa[i], fb[i]);
  }
  for (int i = 0; i < r; ++i) C.mu[i] = P.mod_e(A.mu[i] + fa[i] - out.gamma_fil[i]);

  if (!validate(P, C)) throw Error("max_pushout: result is not a valid rank-1 object");
  if (mu_fil(P, C) != out.gamma_fil) throw Error("max_pushout: filtration invariant is not the maximum");
  for (int i = 0; i < r; ++i) {
    if (C.m[i] < std::min(A.m[i], B.m[i]) || C.m[i] > std::max(A.m[i], B.m[i]))
      throw Error("max_pushout: exponent outside [min, max]");
  }
  if (tst_char(P, C) != tst_char(P, A)) throw Error("max_pushout: character changed");
  auto ha = hom_exists(P, A, C);
  auto hb = hom_exists(P, B, C);
  if (!ha || !hb) throw Error("max_pushout: edge morphism missing");
  out.vA = *ha;
  out.vB = *hb;
  return out;
}

}  // namespace breuil

#endif  // BREUIL_RANK1_HPP
