#include <gtest/gtest.h>

#include <random>

#include "breuil/rank1.hpp"

using namespace breuil;

namespace {

BrRank1 obj(int kappa, std::vector<long long> m, std::vector<long> mu, FF a = FF{0}) {
  return BrRank1{kappa, std::move(m), std::move(mu), a};
}

// All valid objects at one level with scalar 1, by brute force over (m, mu).
std::vector<BrRank1> all_valid(const Params& P, int kappa) {
  std::vector<BrRank1> out;
  const int r = P.r();
  const long long top = P.e() * (kappa - 1);
  std::vector<long long> m(r, 0);
  while (true) {
    // mu_0 free; the rest follow from the recurrence, which must close up.
    for (long mu0 = 0; mu0 < P.e(); ++mu0) {
      std::vector<long> mu(r);
      mu[0] = mu0;
      for (int i = 0; i + 1 < r; ++i) mu[i + 1] = P.mod_e(static_cast<long long>(P.p()) * (mu[i] + m[i]));
      BrRank1 X{kappa, m, mu, P.field().one()};
      if (validate(P, X)) out.push_back(X);
    }
    int k = r - 1;
    while (k >= 0 && m[k] == top) m[k--] = 0;
    if (k < 0) break;
    ++m[k];
  }
  return out;
}

}  // namespace

TEST(Rank1, ValidateExamples) {
  auto P = Params::make(5, 2);
  EXPECT_TRUE(validate(P, obj(2, {24, 0}, {22, 14})));
  EXPECT_TRUE(validate(P, obj(2, {0, 0}, {0, 0}, FF{7})));
  EXPECT_FALSE(validate(P, obj(2, {1, 0}, {0, 0})));
  EXPECT_FALSE(validate(P, obj(2, {25, 0}, {22, 14})));
  EXPECT_FALSE(validate(P, obj(2, {24, 0}, {22, 14}, FF{})));
  EXPECT_FALSE(validate(P, obj(5, {24, 0}, {22, 14})));
}

TEST(Rank1, MuFilExamples) {
  auto P = Params::make(5, 2);
  EXPECT_EQ(mu_fil(P, obj(2, {24, 0}, {22, 14})), (MuFil{25, 5}));
  EXPECT_EQ(mu_fil(P, obj(2, {0, 0}, {0, 0})), (MuFil{0, 0}));
  EXPECT_EQ(mu_fil(P, obj(2, {24, 24}, {0, 0})), (MuFil{30, 30}));
  EXPECT_THROW(mu_fil(P, obj(2, {1, 0}, {0, 0})), Error);
}

TEST(Rank1, CharacterExamples) {
  auto P = Params::make(5, 2);
  FF a = P.field().gen_pow(3);
  auto et = tst_char(P, obj(2, {24, 24}, {0, 0}, a));
  EXPECT_EQ(et.tame.t, 0);
  EXPECT_EQ(et.unram, a);
  EXPECT_EQ(tst_char(P, obj(2, {0, 0}, {0, 0})).tame.t, 6);
  EXPECT_EQ(tst_char(P, obj(2, {24, 0}, {22, 14})).tame.t, 7);
  EXPECT_TRUE(is_etale(P, obj(2, {24, 24}, {0, 0})));
  EXPECT_TRUE(is_multiplicative(obj(2, {0, 0}, {0, 0})));
  EXPECT_FALSE(is_etale(P, obj(2, {24, 0}, {22, 14})));
}

TEST(Rank1, CharacterIndexInvariance) {
  for (auto [p, r] : std::vector<std::pair<int, int>>{{5, 2}, {3, 3}}) {
    auto P = Params::make(p, r);
    for (int kappa : {2, p - 1}) {
      for (const auto& X : all_valid(P, kappa)) {
        auto ex = tst_char_exponents(P, X);
        for (long t : ex) EXPECT_EQ(t, ex[0]);
        MuFil f = mu_fil(P, X);
        for (int i = 0; i < r; ++i) {
          EXPECT_EQ(P.mod_e(static_cast<long long>(p) * (X.mu[i] + f[i])), P.mod_e(X.mu[P.idx(i + 1)] + f[P.idx(i + 1)]));
        }
      }
    }
  }
}

TEST(Rank1, ClassJExamples) {
  auto P = Params::make(5, 2);
  auto X = class_j(P, IndexSet::from_list(2, {0}), GKChar{TameChar{7}, P.field().one()});
  EXPECT_EQ(X, obj(2, {24, 0}, {22, 14}));

  auto M = class_j(P, IndexSet::all(2), GKChar{TameChar{0}, P.field().one()});
  EXPECT_TRUE(is_multiplicative(M));
  EXPECT_EQ(M.mu, (std::vector<long>{6, 6}));

  auto Q = Params::make(5, 1);
  for (long n = 0; n < 4; ++n) {
    auto Y = class_j(Q, IndexSet::none(1), GKChar{TameChar{n}, FF{2}});
    EXPECT_EQ(Y.m, std::vector<long long>{4});
    EXPECT_EQ(Y.mu, std::vector<long>{Q.mod_e(-n)});
    EXPECT_EQ(Y.a, FF{2});
  }
  EXPECT_THROW(class_j(P, IndexSet::none(2), GKChar{TameChar{0}, FF{}}), Error);
}

TEST(Rank1, IotaRaise) {
  auto P = Params::make(5, 2);
  auto X = obj(2, {24, 0}, {22, 14});
  EXPECT_EQ(iota_raise(P, X, 2), X);
  EXPECT_EQ(iota_raise(P, X, 4).m, (std::vector<long long>{72, 48}));
  EXPECT_THROW(iota_raise(P, X, 5), Error);
  EXPECT_THROW(iota_raise(P, iota_raise(P, X, 3), 2), Error);
  std::mt19937 rng(1);
  auto all = all_valid(P, 2);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& Y = all[pick(rng)];
    for (int k = 2; k <= 4; ++k) {
      auto Z = iota_raise(P, Y, k);
      EXPECT_TRUE(validate(P, Z));
      EXPECT_EQ(tst_char(P, Z), tst_char(P, Y));
    }
  }
}

TEST(Rank1, HomExamples) {
  auto P = Params::make(5, 2);
  auto X = obj(2, {24, 0}, {22, 14});
  EXPECT_EQ(hom_exists(P, X, X), (std::optional<std::vector<long long>>{{0, 0}}));

  auto Q = Params::make(5, 1);
  auto A = obj(2, {0}, {1}), B = obj(2, {4}, {0});
  EXPECT_EQ(tst_char(Q, A), tst_char(Q, B));
  EXPECT_EQ(hom_exists(Q, A, B), (std::optional<std::vector<long long>>{{5}}));
  EXPECT_FALSE(hom_exists(Q, B, A).has_value());
  EXPECT_THROW(hom_exists(Q, A, obj(2, {0}, {0})), Error);
  EXPECT_THROW(hom_exists(Q, A, obj(3, {4}, {0})), Error);
}

TEST(Rank1, MaxPushoutFixture) {
  auto P = Params::make(5, 2);
  auto A = obj(2, {18, 6}, {0, 18});
  auto B = obj(2, {6, 18}, {10, 8});
  EXPECT_EQ(mu_fil(P, A), (MuFil{20, 10}));
  EXPECT_EQ(mu_fil(P, B), (MuFil{10, 20}));
  Pushout po = max_pushout(P, A, B);
  EXPECT_EQ(po.C.m, (std::vector<long long>{16, 16}));
  EXPECT_EQ(po.C.mu, (std::vector<long>{0, 8}));
  EXPECT_EQ(po.gamma_fil, (MuFil{20, 20}));
  EXPECT_EQ(po.n, (std::vector<long long>{0, 2}));
  EXPECT_EQ(po.C.a, A.a);

  Pushout rev = max_pushout(P, B, A);
  EXPECT_EQ(rev.C.m, po.C.m);
  EXPECT_EQ(rev.C.mu, po.C.mu);
}

TEST(Rank1, MaxPushoutComparableCase) {
  auto Q = Params::make(5, 1);
  auto A = obj(2, {0}, {1}), B = obj(2, {4}, {0});
  Pushout po = max_pushout(Q, A, B);
  EXPECT_EQ(po.C, B);
  EXPECT_EQ(po.vA, std::vector<long long>{5});
  EXPECT_EQ(po.vB, std::vector<long long>{0});
}

TEST(Rank1, HomValuationsBelowRingLength) {
  auto P = Params::make(5, 2);
  for (int kappa : {2, 4}) {
    auto all = all_valid(P, kappa);
    for (std::size_t i = 0; i < all.size(); i += 7) {
      for (std::size_t j = 0; j < all.size(); j += 5) {
        if (tst_char(P, all[i]) != tst_char(P, all[j])) continue;
        auto v = hom_exists(P, all[i], all[j]);
        auto w = hom_exists(P, all[j], all[i]);
        if (v) {
          for (long long x : *v) EXPECT_LT(x, P.ep());
        }
        if (v && w) {
          EXPECT_EQ(mu_fil(P, all[i]), mu_fil(P, all[j]));
        }
      }
    }
  }
}
