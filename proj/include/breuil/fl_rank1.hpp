#ifndef BREUIL_FL_RANK1_HPP
#define BREUIL_FL_RANK1_HPP

// Rank-1 Fontaine-Laffaille data and their reduction to Breuil modules at
// level p - 2.

#include <utility>
#include <vector>

#include "breuil/characters.hpp"
#include "breuil/rank1.hpp"

namespace breuil {

inline void check_fl(const Params& P, const FLRank1& D) {
  if (static_cast<int>(D.m.size()) != P.r()) throw Error("FL exponents must have length r");
  for (int m : D.m)
    if (m < 0 || m > P.p() - 2) throw Error("FL exponents must lie in [0, p-2]");
  if (D.xbar.is_zero()) throw Error("FL scalar must be nonzero");
}

/// Character lambda_xbar * prod_i omega_i^{m_i}.
inline GKChar fl_char(const Params& P, const FLRank1& D) {
  check_fl(P, D);
  return GKChar{omega_product(P, D.m), D.xbar};
}

/// Reduction modulo p: kappa = p - 1, m_i = e(p - 2 - m_i), mu = 0, scalar xbar.
inline BrRank1 fl_reduce(const Params& P, const FLRank1& D) {
  check_fl(P, D);
  BrRank1 X;
  X.kappa = P.p() - 1;
  X.m.resize(P.r());
  X.mu.assign(P.r(), 0);
  X.a = D.xbar;
  for (int i = 0; i < P.r(); ++i) X.m[i] = P.e() * (P.p() - 2 - D.m[i]);
  if (!validate(P, X)) throw Error("fl_reduce: reduction fails the recurrence");
  if (tst_char(P, X) != fl_char(P, D)) throw Error("fl_reduce: character mismatch after reduction");
  return X;
}

/// The two rank-1 filtered pieces with m_i = b_i 1_J(i) and b_i 1_{S-J}(i).
inline std::pair<FLRank1, FLRank1> build_D_sides(const Params& P, const IndexSet& J, const std::vector<int>& b,
                                                 FF abar, FF bbar) {
  if (static_cast<int>(b.size()) != P.r()) throw Error("b must have length r");
  FLRank1 D1{std::vector<int>(P.r()), abar};
  FLRank1 D2{std::vector<int>(P.r()), bbar};
  for (int i = 0; i < P.r(); ++i) {
    D1.m[i] = b[i] * J.ind(i);
    D2.m[i] = b[i] * J.cind(i);
  }
  check_fl(P, D1);
  check_fl(P, D2);
  return {D1, D2};
}

/// Class-J object for psi1 and class-(S-J) object for psi2, both at kappa = 2.
inline std::pair<BrRank1, BrRank1> build_Bprime_sides(const Params& P, const IndexSet& J, const GKChar& psi1,
                                                      const GKChar& psi2) {
  return {class_j(P, J, psi1), class_j(P, J.complement(), psi2)};
}

}  // namespace breuil

#endif  // BREUIL_FL_RANK1_HPP
