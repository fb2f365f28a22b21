#ifndef BREUIL_CHAIN_RING_HPP
#define BREUIL_CHAIN_RING_HPP

// The truncated polynomial ring R = E[u]/u^{ep}, its twisted operators, and
// echelon forms for submodules of R^d.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "breuil/base_algebra.hpp"

namespace breuil {

/// Element of R: dense coefficient list c_0 .. c_{N-1}.
struct RElem {
  std::vector<FF> c;

  friend bool operator==(const RElem&, const RElem&) = default;
};

using RVec = std::vector<RElem>;

/// Dense matrix over R. Column j holds the image of the j-th basis vector.
struct RMat {
  int rows = 0;
  int cols = 0;
  std::vector<RElem> a;

  RElem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const RElem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  RVec column(int j) const {
    RVec out;
    out.reserve(rows);
    for (int i = 0; i < rows; ++i) out.push_back(at(i, j));
    return out;
  }

  friend bool operator==(const RMat&, const RMat&) = default;
};

/// Canonical generating family of a submodule of R^d together with the
/// relations among the generators it was computed from.
struct SpanForm {
  int dim = 0;
  int num_gens = 0;
  /// Echelon rows; row k has leading entry exactly u^{pivot_val[k]} in column pivot_col[k].
  std::vector<RVec> rows;
  std::vector<int> pivot_col;
  std::vector<int> pivot_val;
  /// rows[k] = sum_j transform[k][j] * gens[j].
  std::vector<RVec> transform;
  /// Generators of {c : sum_j c_j gens[j] = 0}.
  std::vector<RVec> syzygies;

  /// Equality of submodules (the form is canonical).
  bool same_span(const SpanForm& o) const { return dim == o.dim && rows == o.rows; }
  bool is_zero() const { return rows.empty(); }
  /// Length of the submodule as an E-vector space.
  long long length(int n) const {
    long long out = 0;
    for (int v : pivot_val) out += n - v;
    return out;
  }
};

/// Arithmetic context for R = E[u]/u^N with N = ep.
class ChainRing {
 public:
  explicit ChainRing(Params params) : P_(std::move(params)), N_(P_.ep()) {}
  ChainRing(Params params, int length) : P_(std::move(params)), N_(length) {
    if (length < 1) throw Error("ring length must be positive");
  }

  const Params& params() const { return P_; }
  const FiniteField& field() const { return P_.field(); }
  int length() const { return N_; }

  RElem zero() const { return RElem{std::vector<FF>(N_, FF{})}; }
  RElem one() const { return scalar(field().one()); }
  RElem scalar(FF x) const {
    RElem out = zero();
    out.c[0] = x;
    return out;
  }
  /// x * u^k; zero when k >= N.
  RElem monomial(FF x, long long k) const {
    if (k < 0) throw Error("negative exponent of u");
    RElem out = zero();
    if (k < N_) out.c[static_cast<std::size_t>(k)] = x;
    return out;
  }
  RElem u_pow(long long k) const { return monomial(field().one(), k); }

  bool is_zero(const RElem& s) const {
    return std::all_of(s.c.begin(), s.c.end(), [](FF x) { return x.is_zero(); });
  }
  /// u-adic valuation; N for zero.
  int val(const RElem& s) const {
    for (int j = 0; j < N_; ++j)
      if (!s.c[j].is_zero()) return j;
    return N_;
  }
  bool is_unit(const RElem& s) const { return !s.c[0].is_zero(); }
  /// The element is c * u^k for a single term (or zero).
  bool is_monomial(const RElem& s) const {
    int count = 0;
    for (FF x : s.c) count += x.is_zero() ? 0 : 1;
    return count <= 1;
  }

  RElem add(const RElem& a, const RElem& b) const {
    RElem out = a;
    for (int j = 0; j < N_; ++j) out.c[j] = field().add(a.c[j], b.c[j]);
    return out;
  }
  RElem neg(const RElem& a) const {
    RElem out = a;
    for (auto& x : out.c) x = field().neg(x);
    return out;
  }
  RElem sub(const RElem& a, const RElem& b) const { return add(a, neg(b)); }
  RElem scale(FF x, const RElem& a) const {
    RElem out = a;
    for (auto& y : out.c) y = field().mul(x, y);
    return out;
  }
  RElem mul(const RElem& a, const RElem& b) const {
    RElem out = zero();
    const auto& F = field();
    std::vector<int> nb = support(b);
    for (int i = 0; i < N_; ++i) {
      if (a.c[i].is_zero()) continue;
      for (int j : nb) {
        if (i + j >= N_) break;
        out.c[i + j] = F.add(out.c[i + j], F.mul(a.c[i], b.c[j]));
      }
    }
    return out;
  }
  /// Multiplication by u^k (k >= 0).
  RElem shift_up(const RElem& a, int k) const {
    RElem out = zero();
    for (int j = 0; j + k < N_; ++j) out.c[j + k] = a.c[j];
    return out;
  }
  /// Division by u^k discarding the terms of degree < k.
  RElem shift_down(const RElem& a, int k) const {
    RElem out = zero();
    for (int j = k; j < N_; ++j) out.c[j - k] = a.c[j];
    return out;
  }
  /// Terms of degree < k.
  RElem truncate(const RElem& a, int k) const {
    RElem out = a;
    for (int j = std::max(k, 0); j < N_; ++j) out.c[j] = FF{};
    return out;
  }

  RElem inv(const RElem& a) const {
    if (!is_unit(a)) throw Error("inverse of a non-unit in R");
    const auto& F = field();
    std::vector<int> na = support(a);
    RElem b = zero();
    FF b0 = F.inv(a.c[0]);
    b.c[0] = b0;
    for (int k = 1; k < N_; ++k) {
      FF acc{};
      for (int j : na) {
        if (j == 0) continue;
        if (j > k) break;
        if (b.c[k - j].is_zero()) continue;
        acc = F.add(acc, F.mul(a.c[j], b.c[k - j]));
      }
      b.c[k] = F.neg(F.mul(b0, acc));
    }
    return b;
  }

  /// Degrees carrying a nonzero coefficient, increasing.
  std::vector<int> support(const RElem& a) const {
    std::vector<int> out;
    for (int j = 0; j < N_; ++j)
      if (!a.c[j].is_zero()) out.push_back(j);
    return out;
  }

  /// Frobenius on R: u -> u^p, E fixed.
  RElem phi(const RElem& s) const {
    RElem out = zero();
    for (long long j = 0; j < N_; ++j) {
      long long t = j * P_.p();
      if (t >= N_) break;
      out.c[t] = s.c[j];
    }
    return out;
  }
  /// Descent operator of g0 on component i: u -> tau_i(zeta) u.
  RElem ghat(long long i, const RElem& s) const {
    RElem out = s;
    for (int j = 0; j < N_; ++j) {
      if (s.c[j].is_zero()) continue;
      out.c[j] = field().mul(s.c[j], P_.tau_zeta_pow(i, j));
    }
    return out;
  }
  /// The derivation with delta(u) = -u, so delta(u^k) = -k u^k.
  RElem delta(const RElem& s) const {
    RElem out = s;
    for (int j = 0; j < N_; ++j) out.c[j] = field().mul(field().from_int(-j), s.c[j]);
    return out;
  }

  // ---- vectors and matrices ----

  RVec zero_vec(int d) const { return RVec(d, zero()); }
  RVec basis_vec(int d, int k) const {
    RVec out = zero_vec(d);
    out[k] = one();
    return out;
  }
  bool is_zero(const RVec& v) const {
    return std::all_of(v.begin(), v.end(), [&](const RElem& s) { return is_zero(s); });
  }
  RVec add(const RVec& a, const RVec& b) const {
    check_dims(a, b);
    RVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = add(a[k], b[k]);
    return out;
  }
  RVec sub(const RVec& a, const RVec& b) const {
    check_dims(a, b);
    RVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = sub(a[k], b[k]);
    return out;
  }
  RVec mul(const RElem& s, const RVec& v) const {
    RVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = mul(s, v[k]);
    return out;
  }
  RVec shift_up(const RVec& v, int k) const {
    RVec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = shift_up(v[j], k);
    return out;
  }
  RVec phi(const RVec& v) const {
    RVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = phi(v[k]);
    return out;
  }
  RVec ghat(long long i, const RVec& v) const {
    RVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = ghat(i, v[k]);
    return out;
  }
  RVec delta(const RVec& v) const {
    RVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = delta(v[k]);
    return out;
  }
  /// sum_j coeffs[j] * vecs[j]; `d` is the length of the result.
  RVec combine(const RVec& coeffs, const std::vector<RVec>& vecs, int d) const {
    if (coeffs.size() != vecs.size()) throw Error("combination length mismatch");
    RVec out = zero_vec(d);
    for (std::size_t j = 0; j < vecs.size(); ++j) {
      if (is_zero(coeffs[j])) continue;
      out = add(out, mul(coeffs[j], vecs[j]));
    }
    return out;
  }

  RMat zero_mat(int rows, int cols) const { return RMat{rows, cols, std::vector<RElem>(static_cast<std::size_t>(rows) * cols, zero())}; }
  RMat identity(int d) const {
    RMat out = zero_mat(d, d);
    for (int k = 0; k < d; ++k) out.at(k, k) = one();
    return out;
  }
  RMat diag(const RVec& entries) const {
    int d = static_cast<int>(entries.size());
    RMat out = zero_mat(d, d);
    for (int k = 0; k < d; ++k) out.at(k, k) = entries[k];
    return out;
  }
  RMat from_columns(const std::vector<RVec>& cols, int rows) const {
    RMat out = zero_mat(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < out.cols; ++j) {
      if (static_cast<int>(cols[j].size()) != rows) throw Error("column length mismatch");
      for (int i = 0; i < rows; ++i) out.at(i, j) = cols[j][i];
    }
    return out;
  }
  RVec apply(const RMat& m, const RVec& v) const {
    if (static_cast<int>(v.size()) != m.cols) throw Error("matrix-vector dimension mismatch");
    RVec out = zero_vec(m.rows);
    for (int j = 0; j < m.cols; ++j) {
      if (is_zero(v[j])) continue;
      for (int i = 0; i < m.rows; ++i) {
        if (is_zero(m.at(i, j))) continue;
        out[i] = add(out[i], mul(m.at(i, j), v[j]));
      }
    }
    return out;
  }
  RMat mul(const RMat& a, const RMat& b) const {
    if (a.cols != b.rows) throw Error("matrix product dimension mismatch");
    std::vector<RVec> cols;
    for (int j = 0; j < b.cols; ++j) cols.push_back(apply(a, b.column(j)));
    return from_columns(cols, a.rows);
  }
  RMat sub(const RMat& a, const RMat& b) const {
    if (a.rows != b.rows || a.cols != b.cols) throw Error("matrix dimension mismatch");
    RMat out = a;
    for (std::size_t k = 0; k < a.a.size(); ++k) out.a[k] = sub(a.a[k], b.a[k]);
    return out;
  }
  bool is_zero(const RMat& m) const {
    return std::all_of(m.a.begin(), m.a.end(), [&](const RElem& s) { return is_zero(s); });
  }
  /// Entrywise reduction modulo u, as a matrix over E.
  std::vector<std::vector<FF>> residue(const RMat& m) const {
    std::vector<std::vector<FF>> out(m.rows, std::vector<FF>(m.cols));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) out[i][j] = m.at(i, j).c[0];
    return out;
  }

  // ---- echelon forms ----

  /// Howell-style echelon form of the span of `gens` inside R^d.
  SpanForm span_form(const std::vector<RVec>& gens, int d) const {
    const int m = static_cast<int>(gens.size());
    const int width = d + m;
    std::vector<RVec> rows;
    rows.reserve(m);
    for (int j = 0; j < m; ++j) {
      if (static_cast<int>(gens[j].size()) != d) throw Error("generator length mismatch");
      RVec row = gens[j];
      for (int k = 0; k < m; ++k) row.push_back(k == j ? one() : zero());
      rows.push_back(std::move(row));
    }

    std::vector<int> pcol;
    std::vector<int> pval;
    std::size_t top = 0;
    for (int col = 0; col < width; ++col) {
      std::size_t best = rows.size();
      int best_val = N_;
      for (std::size_t k = top; k < rows.size(); ++k) {
        int v = val(rows[k][col]);
        if (v < best_val) {
          best_val = v;
          best = k;
        }
      }
      if (best == rows.size()) continue;
      std::swap(rows[top], rows[best]);
      RElem unit = shift_down(rows[top][col], best_val);
      rows[top] = mul(inv(unit), rows[top]);
      for (std::size_t k = top + 1; k < rows.size(); ++k) {
        if (is_zero(rows[k][col])) continue;
        RElem q = shift_down(rows[k][col], best_val);
        rows[k] = sub(rows[k], mul(q, rows[top]));
      }
      if (best_val > 0) {
        RVec ann = shift_up(rows[top], N_ - best_val);
        if (!is_zero(ann)) rows.push_back(std::move(ann));
      }
      pcol.push_back(col);
      pval.push_back(best_val);
      ++top;
      // Discard rows that became zero so the working set stays small.
      rows.erase(std::remove_if(rows.begin() + static_cast<std::ptrdiff_t>(top), rows.end(),
                                [&](const RVec& r) { return is_zero(r); }),
                 rows.end());
    }
    rows.resize(top);

    for (std::size_t k = 0; k < top; ++k) {
      for (std::size_t j = 0; j < k; ++j) {
        const RElem& c = rows[j][pcol[k]];
        if (val(c) >= N_) continue;
        RElem q = shift_down(c, pval[k]);
        if (is_zero(q)) continue;
        rows[j] = sub(rows[j], mul(q, rows[k]));
      }
    }

    SpanForm out;
    out.dim = d;
    out.num_gens = m;
    for (std::size_t k = 0; k < top; ++k) {
      RVec head(rows[k].begin(), rows[k].begin() + d);
      RVec tail(rows[k].begin() + d, rows[k].end());
      if (pcol[k] < d) {
        out.rows.push_back(std::move(head));
        out.pivot_col.push_back(pcol[k]);
        out.pivot_val.push_back(pval[k]);
        out.transform.push_back(std::move(tail));
      } else {
        out.syzygies.push_back(std::move(tail));
      }
    }
    return out;
  }

  /// Coefficients c with v = sum_j c_j gens[j], or nothing when v is outside the span.
  std::optional<RVec> member(const RVec& v, const SpanForm& S) const {
    if (static_cast<int>(v.size()) != S.dim) throw Error("membership dimension mismatch");
    RVec x = v;
    RVec coeffs = zero_vec(S.num_gens);
    std::size_t k = 0;
    for (int col = 0; col < S.dim; ++col) {
      if (k < S.rows.size() && S.pivot_col[k] == col) {
        int need = S.pivot_val[k];
        if (val(x[col]) < need) return std::nullopt;
        RElem q = shift_down(x[col], need);
        if (!is_zero(q)) {
          x = sub(x, mul(q, S.rows[k]));
          coeffs = add(coeffs, mul(q, S.transform[k]));
        }
        ++k;
      } else if (!is_zero(x[col])) {
        return std::nullopt;
      }
    }
    return coeffs;
  }

  bool contains(const SpanForm& S, const RVec& v) const { return member(v, S).has_value(); }

  /// Every generator of `inner` lies in `outer`.
  bool includes(const SpanForm& outer, const std::vector<RVec>& inner) const {
    return std::all_of(inner.begin(), inner.end(), [&](const RVec& v) { return contains(outer, v); });
  }

 private:
  static void check_dims(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw Error("vector dimension mismatch");
  }

  Params P_;
  int N_;
};

}  // namespace breuil

#endif  // BREUIL_CHAIN_RING_HPP
