#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "breuil/chain_ring.hpp"

using namespace breuil;

namespace {

RElem random_elem(const ChainRing& R, std::mt19937& rng, int min_val = 0, double density = 0.4) {
  const auto& F = R.field();
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> lg(0, F.unit_order() - 1);
  RElem s = R.zero();
  for (int j = min_val; j < R.length(); ++j)
    if (coin(rng) < density) s.c[j] = FF{lg(rng)};
  return s;
}

RVec random_vec(const ChainRing& R, std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> v(0, R.length());
  RVec out;
  for (int k = 0; k < d; ++k) out.push_back(random_elem(R, rng, std::min(v(rng), R.length())));
  return out;
}

// Row echelon over E of the E-span of {u^k g}; vectors flattened to E^{dN}.
struct ELinearSpan {
  const FiniteField& F;
  int width;
  std::vector<std::vector<FF>> basis;
  std::vector<int> pivots;

  std::vector<FF> reduce(std::vector<FF> v) const {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      int c = pivots[b];
      if (v[c].is_zero()) continue;
      FF f = v[c];
      for (int k = 0; k < width; ++k)
        if (!basis[b][k].is_zero()) v[k] = F.sub(v[k], F.mul(f, basis[b][k]));
    }
    return v;
  }
  bool insert(std::vector<FF> v) {
    v = reduce(v);
    int c = -1;
    for (int k = 0; k < width; ++k)
      if (!v[k].is_zero()) {
        c = k;
        break;
      }
    if (c < 0) return false;
    FF inv = F.inv(v[c]);
    for (auto& x : v) x = F.mul(inv, x);
    for (auto& row : basis) {
      if (row[c].is_zero()) continue;
      FF f = row[c];
      for (int k = 0; k < width; ++k) row[k] = F.sub(row[k], F.mul(f, v[k]));
    }
    basis.push_back(v);
    pivots.push_back(c);
    return true;
  }
  bool contains(const std::vector<FF>& v) const {
    auto w = reduce(v);
    for (const auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  }
};

std::vector<FF> flatten(const RVec& v) {
  std::vector<FF> out;
  for (const auto& s : v) out.insert(out.end(), s.c.begin(), s.c.end());
  return out;
}

ELinearSpan e_span(const ChainRing& R, const std::vector<RVec>& gens, int d) {
  ELinearSpan S{R.field(), d * R.length(), {}, {}};
  for (const auto& g : gens)
    for (int k = 0; k < R.length(); ++k) S.insert(flatten(R.shift_up(g, k)));
  return S;
}

}  // namespace

TEST(ChainRing, FrobeniusExamples) {
  ChainRing R(Params::make(5, 2));
  const auto& F = R.field();
  EXPECT_EQ(R.phi(R.one()), R.one());
  EXPECT_TRUE(R.is_zero(R.phi(R.u_pow(24))));
  FF c = F.gen_pow(7);
  EXPECT_EQ(R.phi(R.monomial(c, 3)), R.monomial(c, 15));
  EXPECT_EQ(R.length(), 120);
}

TEST(ChainRing, DescentOperatorExamples) {
  Params P = Params::make(5, 2);
  ChainRing R(P);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(R.ghat(i, R.one()), R.one());
    EXPECT_EQ(R.ghat(i, R.u_pow(P.e())), R.u_pow(P.e()));
  }
  EXPECT_EQ(R.ghat(0, R.u_pow(1)), R.monomial(P.tau(0, P.zeta()), 1));
  EXPECT_EQ(R.ghat(1, R.u_pow(1)), R.monomial(P.tau(1, P.zeta()), 1));
}

TEST(ChainRing, MonodromyDerivation) {
  ChainRing R(Params::make(5, 1));
  const auto& F = R.field();
  EXPECT_EQ(R.delta(R.u_pow(3)), R.monomial(F.from_int(-3), 3));
  EXPECT_TRUE(R.is_zero(R.delta(R.u_pow(5))));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    RElem a = random_elem(R, rng), b = random_elem(R, rng);
    EXPECT_EQ(R.delta(R.mul(a, b)), R.add(R.mul(R.delta(a), b), R.mul(a, R.delta(b))));
  }
}

TEST(ChainRing, RingLaws) {
  ChainRing R(Params::make(5, 2), 30);
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    RElem a = random_elem(R, rng), b = random_elem(R, rng), c = random_elem(R, rng);
    EXPECT_EQ(R.mul(a, R.mul(b, c)), R.mul(R.mul(a, b), c));
    EXPECT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
    EXPECT_EQ(R.mul(a, b), R.mul(b, a));
    EXPECT_EQ(R.add(a, R.neg(a)), R.zero());
    EXPECT_EQ(R.mul(a, R.one()), a);
    EXPECT_EQ(R.phi(R.mul(a, b)), R.mul(R.phi(a), R.phi(b)));
    EXPECT_EQ(R.phi(R.add(a, b)), R.add(R.phi(a), R.phi(b)));
    EXPECT_EQ(R.ghat(1, R.mul(a, b)), R.mul(R.ghat(1, a), R.ghat(1, b)));
    if (R.is_unit(a)) {
      EXPECT_EQ(R.mul(a, R.inv(a)), R.one());
    }
  }
  EXPECT_THROW(R.inv(R.u_pow(1)), Error);
}

TEST(ChainRing, ValuationAndShifts) {
  ChainRing R(Params::make(5, 1));
  const auto& F = R.field();
  RElem s = R.add(R.monomial(F.from_int(2), 3), R.u_pow(7));
  EXPECT_EQ(R.val(s), 3);
  EXPECT_EQ(R.val(R.zero()), R.length());
  EXPECT_EQ(R.shift_down(s, 3), R.add(R.scalar(F.from_int(2)), R.u_pow(4)));
  EXPECT_EQ(R.shift_up(R.shift_down(s, 3), 3), s);
  EXPECT_EQ(R.truncate(s, 5), R.monomial(F.from_int(2), 3));
  EXPECT_TRUE(R.is_monomial(R.u_pow(4)));
  EXPECT_FALSE(R.is_monomial(s));
  EXPECT_TRUE(R.is_zero(R.u_pow(R.length())));
}

TEST(SpanForm, Examples) {
  ChainRing R(Params::make(5, 1));
  auto empty = R.span_form({}, 2);
  EXPECT_TRUE(empty.is_zero());

  RVec x = R.basis_vec(2, 1);
  EXPECT_TRUE(R.span_form({R.mul(R.u_pow(1), x), x}, 2).same_span(R.span_form({x}, 2)));

  auto S = R.span_form({RVec{R.u_pow(3)}, RVec{R.u_pow(7)}}, 1);
  ASSERT_EQ(S.rows.size(), 1u);
  EXPECT_EQ(S.rows[0][0], R.u_pow(3));
  EXPECT_EQ(S.pivot_val[0], 3);
  bool found = false;
  for (const auto& z : S.syzygies) {
    // z_0 u^3 + z_1 u^7 = 0
    if (R.is_zero(R.add(R.mul(z[0], R.u_pow(3)), R.mul(z[1], R.u_pow(7)))) && !R.is_zero(z[1]) && R.is_unit(z[1]))
      found = true;
  }
  EXPECT_TRUE(found) << "a syzygy writes u^7 as a multiple of u^3";

  auto T = R.span_form({R.mul(R.u_pow(3), x)}, 2);
  auto zero = R.member(R.zero_vec(2), T);
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(R.is_zero(*zero));
  EXPECT_FALSE(R.member(R.mul(R.u_pow(2), x), T).has_value());
  auto c = R.member(R.mul(R.u_pow(5), x), T);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ((*c)[0], R.u_pow(2));
}

TEST(SpanForm, IdealsOfTheChainRingExhaustive) {
  // p = 3, r = 1: every principal ideal of F_3[u]/u^6 is (u^val).
  Params P = Params::make(3, 1);
  ChainRing R(P);
  const auto& F = R.field();
  const int N = R.length();
  std::uint32_t total = 1;
  for (int k = 0; k < N; ++k) total *= 3;
  for (std::uint32_t code = 0; code < total; ++code) {
    RElem s = R.zero();
    std::uint32_t c = code;
    for (int k = 0; k < N; ++k, c /= 3) s.c[k] = F.from_int(c % 3);
    auto S = R.span_form({RVec{s}}, 1);
    if (R.is_zero(s)) {
      EXPECT_TRUE(S.is_zero());
      continue;
    }
    ASSERT_EQ(S.rows.size(), 1u);
    EXPECT_EQ(S.pivot_val[0], R.val(s));
    EXPECT_EQ(S.rows[0][0], R.u_pow(R.val(s)));
    EXPECT_EQ(S.length(N), N - R.val(s));
    auto back = R.member(S.rows[0], S);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(R.mul((*back)[0], s), S.rows[0][0]);
  }
}

TEST(SpanForm, AgreesWithELinearSpanOracle) {
  ChainRing R(Params::make(5, 1), 6);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ngen(0, 4);
  for (int t = 0; t < 300; ++t) {
    const int d = 1 + t % 3;
    std::vector<RVec> gens;
    int m = ngen(rng);
    for (int j = 0; j < m; ++j) gens.push_back(random_vec(R, rng, d));
    SpanForm S = R.span_form(gens, d);
    ELinearSpan O = e_span(R, gens, d);
    EXPECT_EQ(S.length(R.length()), static_cast<long long>(O.basis.size()));
    for (std::size_t k = 0; k < S.rows.size(); ++k) {
      EXPECT_EQ(S.rows[k][S.pivot_col[k]], R.u_pow(S.pivot_val[k]));
      EXPECT_EQ(R.combine(S.transform[k], gens, d), S.rows[k]);
    }
    for (const auto& z : S.syzygies) EXPECT_TRUE(R.is_zero(R.combine(z, gens, d)));
    for (int q = 0; q < 20; ++q) {
      RVec v = random_vec(R, rng, d);
      if (q % 2 == 0 && m > 0) {
        v = R.zero_vec(d);
        for (const auto& g : gens) v = R.add(v, R.mul(random_elem(R, rng), g));
      }
      auto c = R.member(v, S);
      EXPECT_EQ(c.has_value(), O.contains(flatten(v)));
      if (c) {
        EXPECT_EQ(R.combine(*c, gens, d), v);
      }
    }
  }
}

TEST(SpanForm, CanonicalUnderChangeOfGenerators) {
  ChainRing R(Params::make(5, 2), 12);
  std::mt19937 rng(77);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 2;
    std::vector<RVec> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(random_vec(R, rng, d));
    std::vector<RVec> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    RElem unit = R.add(R.scalar(R.field().gen_pow(5)), random_elem(R, rng, 1));
    other[0] = R.mul(unit, other[0]);
    other[1] = R.add(other[1], R.mul(random_elem(R, rng), other[2]));
    other.push_back(R.add(R.mul(random_elem(R, rng), gens[0]), R.mul(random_elem(R, rng), gens[1])));
    EXPECT_TRUE(R.span_form(gens, d).same_span(R.span_form(other, d)));
    std::vector<RVec> smaller(gens.begin(), gens.begin() + 2);
    ELinearSpan big = e_span(R, gens, d), small = e_span(R, smaller, d);
    EXPECT_EQ(R.span_form(gens, d).same_span(R.span_form(smaller, d)), big.basis.size() == small.basis.size());
    EXPECT_TRUE(R.includes(R.span_form(gens, d), smaller));
  }
}

TEST(Matrices, ApplyAndMultiply) {
  ChainRing R(Params::make(5, 1), 10);
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    RMat A = R.zero_mat(2, 3), B = R.zero_mat(3, 2);
    for (auto& x : A.a) x = random_elem(R, rng);
    for (auto& x : B.a) x = random_elem(R, rng);
    RVec v = random_vec(R, rng, 2);
    EXPECT_EQ(R.apply(R.mul(A, B), v), R.apply(A, R.apply(B, v)));
    EXPECT_EQ(R.apply(R.identity(2), v), v);
    EXPECT_EQ(R.from_columns({B.column(0), B.column(1)}, 3), B);
    EXPECT_TRUE(R.is_zero(R.sub(A, A)));
  }
}
