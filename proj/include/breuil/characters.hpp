#ifndef BREUIL_CHARACTERS_HPP
#define BREUIL_CHARACTERS_HPP

// Tame characters omega_0^t, unramified twists, Serre weights and Condition A.

#include <utility>
#include <vector>

#include "breuil/base_algebra.hpp"

namespace breuil {

/// omega_0^t on tame inertia; t is read modulo e.
struct TameChar {
  long t = 0;
  friend bool operator==(const TameChar&, const TameChar&) = default;
};

/// Tame part times the unramified character sending geometric Frobenius to `unram`.
struct GKChar {
  TameChar tame;
  FF unram{0};
  friend bool operator==(const GKChar&, const GKChar&) = default;
};

/// Weight det^{a_i} Sym^{b_i - 1} at each embedding.
struct Weight {
  std::vector<int> a;
  std::vector<int> b;
  friend bool operator==(const Weight&, const Weight&) = default;
};

inline TameChar make_tame(const Params& P, long long t) { return TameChar{P.mod_e(t)}; }

/// prod_i omega_i^{c_i} written as omega_0^t, using omega_i = omega_0^{p^{(r-i) mod r}}.
inline TameChar omega_product(const Params& P, const std::vector<long long>& c) {
  if (static_cast<int>(c.size()) != P.r()) throw Error("exponent vector must have length r");
  long long t = 0;
  for (int i = 0; i < P.r(); ++i) {
    t = floor_mod(t + floor_mod(c[i], P.e()) * P.p_pow_mod_e(P.r() - i), P.e());
  }
  return TameChar{static_cast<long>(t)};
}

inline TameChar omega_product(const Params& P, const std::vector<int>& c) {
  return omega_product(P, std::vector<long long>(c.begin(), c.end()));
}

inline bool weight_is_valid(const Params& P, const Weight& w) {
  if (static_cast<int>(w.a.size()) != P.r() || static_cast<int>(w.b.size()) != P.r()) return false;
  bool all_top = true;
  for (int i = 0; i < P.r(); ++i) {
    if (w.a[i] < 0 || w.a[i] > P.p() - 1) return false;
    if (w.b[i] < 1 || w.b[i] > P.p()) return false;
    all_top = all_top && w.a[i] == P.p() - 1;
  }
  return !all_top;
}

inline bool is_regular(const Params& P, const Weight& w) {
  if (static_cast<int>(w.b.size()) != P.r()) throw Error("weight must have length r");
  for (int b : w.b)
    if (b < 2 || b > P.p() - 2) return false;
  return true;
}

/// The pair of tame characters attached to (w, J): exponents a_i + b_i 1_J(i)
/// and a_i + b_i 1_{S-J}(i).
inline std::pair<TameChar, TameChar> condition_A_characters(const Params& P, const Weight& w,
                                                            const IndexSet& J) {
  std::vector<long long> c1(P.r()), c2(P.r());
  for (int i = 0; i < P.r(); ++i) {
    c1[i] = w.a[i] + static_cast<long long>(w.b[i]) * J.ind(i);
    c2[i] = w.a[i] + static_cast<long long>(w.b[i]) * J.cind(i);
  }
  return {omega_product(P, c1), omega_product(P, c2)};
}

inline bool condition_A_check(const Params& P, TameChar psi1, TameChar psi2, const Weight& w,
                              const IndexSet& J) {
  if (!weight_is_valid(P, w)) throw Error("invalid weight");
  auto [t1, t2] = condition_A_characters(P, w, J);
  return t1 == make_tame(P, psi1.t) && t2 == make_tame(P, psi2.t);
}

struct WeightSolution {
  Weight w;
  IndexSet J;
  friend bool operator==(const WeightSolution&, const WeightSolution&) = default;
};

/// Exhaustive search over weights and subsets; ordered by J bitmask, then a, then b
/// (lexicographic with index 0 most significant).
inline std::vector<WeightSolution> condition_A_solve(const Params& P, TameChar psi1, TameChar psi2,
                                                     bool require_a_zero, bool require_regular) {
  const int r = P.r();
  const int p = P.p();
  std::vector<WeightSolution> out;
  std::vector<std::vector<int>> a_choices;
  std::vector<std::vector<int>> b_choices;

  auto enumerate = [r](int lo, int hi) {
    std::vector<std::vector<int>> all;
    if (lo > hi) return all;
    std::vector<int> cur(r, lo);
    while (true) {
      all.push_back(cur);
      int k = r - 1;
      while (k >= 0 && cur[k] == hi) cur[k--] = lo;
      if (k < 0) break;
      ++cur[k];
    }
    return all;
  };
  a_choices = require_a_zero ? std::vector<std::vector<int>>{std::vector<int>(r, 0)} : enumerate(0, p - 1);
  b_choices = require_regular ? enumerate(2, p - 2) : enumerate(1, p);

  for (const IndexSet& J : IndexSet::all_subsets(r)) {
    for (const auto& a : a_choices) {
      for (const auto& b : b_choices) {
        Weight w{a, b};
        if (!weight_is_valid(P, w)) continue;
        if (condition_A_check(P, psi1, psi2, w, J)) out.push_back({w, J});
      }
    }
  }
  return out;
}

}  // namespace breuil

#endif  // BREUIL_CHARACTERS_HPP
