#ifndef BREUIL_BASE_ALGEBRA_HPP
#define BREUIL_BASE_ALGEBRA_HPP

// Finite fields F_p ⊂ k = F_{p^r} ⊂ E = F_{p^n}, the embeddings tau_i of k
// into E, and exponent arithmetic modulo e = p^r - 1.
//
// Field elements are stored by discrete logarithm with respect to a fixed
// multiplicative generator g of E^*; addition goes through a Zech table.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace breuil {

/// Raised for malformed parameters and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of E, encoded as its discrete log (or the zero sentinel).
struct FF {
  static constexpr std::uint32_t kZeroLog = 0xffffffffu;
  std::uint32_t log = kZeroLog;

  constexpr bool is_zero() const { return log == kZeroLog; }
  friend constexpr bool operator==(FF, FF) = default;
  friend constexpr auto operator<=>(FF, FF) = default;
};

inline long long floor_mod(long long x, long long m) {
  long long r = x % m;
  return r < 0 ? r + m : r;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long long ipow(long long base, int exp) {
  long long out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

/// F_{p^n} realized as F_p[x]/(modulus) with a distinguished primitive element.
class FiniteField {
 public:
  /// `modulus` is monic of degree n, coefficients listed from x^0 to x^n.
  /// `generator_code` is the base-p code of a polynomial of degree < n.
  FiniteField(int p, int n, std::vector<int> modulus, std::uint32_t generator_code)
      : p_(p), n_(n), modulus_(std::move(modulus)), gen_code_(generator_code) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (n < 1) throw Error("field degree must be positive");
    if (static_cast<int>(modulus_.size()) != n + 1 || modulus_.back() != 1)
      throw Error("modulus must be monic of the stated degree");
    for (int c : modulus_)
      if (c < 0 || c >= p) throw Error("modulus coefficients must lie in [0, p)");
    long long q = ipow(p, n);
    if (q > (1LL << 22)) throw Error("field too large for table arithmetic");
    q_ = static_cast<std::uint32_t>(q);
    if (gen_code_ == 0 || gen_code_ >= q_) throw Error("generator code out of range");
    build_tables();
  }

  /// Lexicographically first modulus for which x is primitive
  /// (a primitive root of p when n = 1).
  static FiniteField standard(int p, int n) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (n == 1) {
      for (int g = 1; g < p; ++g) {
        if (multiplicative_order_mod(g, p) == p - 1) {
          return FiniteField(p, 1, {(p - g) % p, 1}, static_cast<std::uint32_t>(g));
        }
      }
      throw Error("no primitive root found");
    }
    long long tail = ipow(p, n);
    for (long long code = 1; code < tail; ++code) {
      std::vector<int> mod(n + 1, 0);
      long long c = code;
      for (int k = 0; k < n; ++k) {
        mod[k] = static_cast<int>(c % p);
        c /= p;
      }
      mod[n] = 1;
      if (mod[0] == 0) continue;
      if (generates(p, n, mod, static_cast<std::uint32_t>(p))) {
        return FiniteField(p, n, mod, static_cast<std::uint32_t>(p));
      }
    }
    throw Error("no primitive polynomial found");
  }

  int characteristic() const { return p_; }
  int degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t unit_order() const { return q_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::uint32_t generator_code() const { return gen_code_; }

  FF zero() const { return FF{}; }
  FF one() const { return FF{0}; }
  FF generator() const { return FF{1 % (q_ - 1)}; }

  FF gen_pow(long long k) const {
    return FF{static_cast<std::uint32_t>(floor_mod(k, q_ - 1))};
  }

  FF add(FF a, FF b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t k = b.log >= a.log ? b.log - a.log : b.log + (q_ - 1) - a.log;
    std::uint32_t z = zech_[k];
    if (z == FF::kZeroLog) return FF{};
    return FF{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.log) + z) % (q_ - 1))};
  }
  FF neg(FF a) const {
    if (a.is_zero()) return a;
    return FF{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.log) + minus_one_log_) % (q_ - 1))};
  }
  FF sub(FF a, FF b) const { return add(a, neg(b)); }
  FF mul(FF a, FF b) const {
    if (a.is_zero() || b.is_zero()) return FF{};
    return FF{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.log) + b.log) % (q_ - 1))};
  }
  FF inv(FF a) const {
    if (a.is_zero()) throw Error("inverse of zero");
    return FF{a.log == 0 ? 0u : (q_ - 1) - a.log};
  }
  FF div(FF a, FF b) const { return mul(a, inv(b)); }
  FF pow(FF a, long long k) const {
    if (a.is_zero()) {
      if (k == 0) return one();
      if (k < 0) throw Error("negative power of zero");
      return a;
    }
    long long l = floor_mod(static_cast<long long>(a.log) * floor_mod(k, q_ - 1), q_ - 1);
    return FF{static_cast<std::uint32_t>(l)};
  }
  /// Arithmetic Frobenius x -> x^p.
  FF frob(FF a) const { return pow(a, p_); }

  /// Image of an integer in the prime field.
  FF from_int(long long k) const { return FF{prime_log_[floor_mod(k, p_)]}; }

  std::uint32_t dlog(FF a) const {
    if (a.is_zero()) throw Error("discrete log of zero");
    return a.log;
  }

  /// Base-p polynomial code <-> element.
  std::uint32_t code(FF a) const { return a.is_zero() ? 0u : exp_[a.log]; }
  FF from_code(std::uint32_t c) const {
    if (c >= q_) throw Error("polynomial code out of range");
    return FF{log_[c]};
  }

 private:
  static int multiplicative_order_mod(int g, int p) {
    int x = g % p, k = 1;
    if (x == 0) return 0;
    while (x != 1) {
      x = (x * g) % p;
      ++k;
    }
    return k;
  }

  static std::vector<int> decode(std::uint32_t c, int p, int n) {
    std::vector<int> out(n, 0);
    for (int k = 0; k < n; ++k) {
      out[k] = static_cast<int>(c % p);
      c /= p;
    }
    return out;
  }

  static std::uint32_t encode(const std::vector<int>& v, int p) {
    std::uint32_t c = 0;
    for (int k = static_cast<int>(v.size()) - 1; k >= 0; --k) c = c * p + v[k];
    return c;
  }

  static std::vector<int> mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<int>& mod, int p) {
    int n = static_cast<int>(mod.size()) - 1;
    std::vector<int> prod(2 * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * n - 1; d >= n; --d) {
      int c = prod[d];
      if (c == 0) continue;
      for (int k = 0; k <= n; ++k) prod[d - n + k] = floor_mod(prod[d - n + k] - c * mod[k], p);
    }
    prod.resize(n);
    return prod;
  }

  static bool generates(int p, int n, const std::vector<int>& mod, std::uint32_t gcode) {
    auto g = decode(gcode, p, n);
    std::vector<int> x(n, 0);
    x[0] = 1;
    std::uint32_t q = static_cast<std::uint32_t>(ipow(p, n));
    for (std::uint32_t k = 1; k < q - 1; ++k) {
      x = mulmod(x, g, mod, p);
      if (encode(x, p) == 1) return false;
    }
    x = mulmod(x, g, mod, p);
    return encode(x, p) == 1;
  }

  void build_tables() {
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, FF::kZeroLog);
    auto g = decode(gen_code_, p_, n_);
    std::vector<int> x(n_, 0);
    x[0] = 1;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      std::uint32_t c = encode(x, p_);
      if (log_[c] != FF::kZeroLog || c == 0)
        throw Error("generator is not primitive or modulus is reducible");
      exp_[k] = c;
      log_[c] = k;
      x = mulmod(x, g, modulus_, p_);
    }
    if (encode(x, p_) != 1) throw Error("generator is not primitive or modulus is reducible");
    zech_.assign(q_ - 1, FF::kZeroLog);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      std::uint32_t c = exp_[k];
      std::uint32_t d0 = c % p_;
      std::uint32_t shifted = c - d0 + (d0 + 1) % p_;
      zech_[k] = shifted == 0 ? FF::kZeroLog : log_[shifted];
    }
    prime_log_.assign(p_, FF::kZeroLog);
    for (int k = 1; k < p_; ++k) prime_log_[k] = log_[static_cast<std::uint32_t>(k)];
    minus_one_log_ = prime_log_[p_ - 1] == FF::kZeroLog ? 0 : prime_log_[p_ - 1];
  }

  int p_;
  int n_;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::uint32_t gen_code_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> prime_log_;
  std::uint32_t minus_one_log_ = 0;
};

/// Subset J of S = Z/rZ.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(int r, std::uint32_t bits) : r_(r), bits_(bits & mask(r)) {
    if (r < 1 || r > 30) throw Error("index set size out of range");
  }
  static IndexSet none(int r) { return IndexSet(r, 0); }
  static IndexSet all(int r) { return IndexSet(r, mask(r)); }
  static IndexSet from_list(int r, const std::vector<int>& items) {
    std::uint32_t bits = 0;
    for (int i : items) {
      if (i < 0 || i >= r) throw Error("index " + std::to_string(i) + " outside S");
      bits |= 1u << i;
    }
    return IndexSet(r, bits);
  }

  int size_of_s() const { return r_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(long long i) const { return (bits_ >> floor_mod(i, r_)) & 1u; }
  /// Indicator 1_J(i), i read modulo r.
  int ind(long long i) const { return contains(i) ? 1 : 0; }
  /// Indicator of the complement.
  int cind(long long i) const { return 1 - ind(i); }
  IndexSet complement() const { return IndexSet(r_, ~bits_); }
  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  std::vector<int> to_list() const {
    std::vector<int> out;
    for (int i = 0; i < r_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  /// All 2^r subsets in increasing bitmask order.
  static std::vector<IndexSet> all_subsets(int r) {
    std::vector<IndexSet> out;
    for (std::uint32_t b = 0; b <= mask(r); ++b) out.emplace_back(r, b);
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  static std::uint32_t mask(int r) { return r >= 32 ? ~0u : ((1u << r) - 1u); }
  int r_ = 1;
  std::uint32_t bits_ = 0;
};

/// The arithmetic frame (p, r, e = p^r - 1, n = [E : F_p]) together with the
/// realization of E. Cheap to copy; the field tables are shared.
class Params {
 public:
  /// Default realization: n = r unless given, standard modulus.
  static Params make(int p, int r, int n = 0) {
    if (n == 0) n = r;
    check_frame(p, r, n);
    return Params(p, r, n, cached_field(p, n, {}, 0));
  }

  static Params make(int p, int r, int n, std::vector<int> modulus, std::uint32_t generator_code) {
    check_frame(p, r, n);
    return Params(p, r, n, cached_field(p, n, std::move(modulus), generator_code));
  }

  int p() const { return p_; }
  int r() const { return r_; }
  int n() const { return n_; }
  long e() const { return e_; }
  /// Length e*p of the truncated polynomial ring E[u]/u^{ep}.
  int ep() const { return static_cast<int>(e_ * p_); }
  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }

  /// Canonical representative of i in S = Z/rZ.
  int idx(long long i) const { return static_cast<int>(floor_mod(i, r_)); }
  long mod_e(long long x) const { return static_cast<long>(floor_mod(x, e_)); }
  /// p^k mod e; well defined for k in Z/rZ since p^r = 1 mod e.
  long p_pow_mod_e(long long k) const {
    long out = 1 % e_;
    for (int j = 0; j < idx(k); ++j) out = static_cast<long>((static_cast<long long>(out) * p_) % e_);
    return out;
  }
  /// Exact p^k for 0 <= k <= r.
  long long p_pow(int k) const { return ipow(p_, k); }

  /// Distinguished generator zeta of k^*, zeta = g^{(q-1)/e}.
  FF zeta() const { return field_->gen_pow(k_step()); }
  bool in_k(FF x) const { return x.is_zero() || x.log % k_step() == 0; }

  /// tau_i = tau_0 o Frob^{-i}, with tau_0 the inclusion k ⊆ E.
  FF tau(long long i, FF x) const {
    if (!in_k(x)) throw Error("tau: argument not in the subfield k");
    return field_->pow(x, p_pow(r_ - idx(i)) % static_cast<long long>(field_->unit_order()));
  }
  /// tau_i(zeta)^k, the value omega_i^k(g0) of the fundamental character.
  FF tau_zeta_pow(long long i, long long k) const {
    long long step = static_cast<long long>(k_step()) * (p_pow_mod_e(r_ - idx(i)));
    return field_->gen_pow(step * floor_mod(k, e_));
  }
  FF frob(FF x) const { return field_->frob(x); }

  /// Exponent t with x = tau_i(zeta)^t, for x an e-th root of unity in E.
  long root_of_unity_exponent(long long i, FF x) const {
    if (x.is_zero() || !in_k(x)) throw Error("not an e-th root of unity");
    long long base = x.log / k_step();
    // tau_i(zeta) = zeta^{p^{r-i}} and p^{r-i} p^i = 1 mod e.
    return static_cast<long>(floor_mod(base * p_pow_mod_e(idx(i)), e_));
  }

  friend bool operator==(const Params& a, const Params& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.n_ == b.n_ && a.field_ == b.field_;
  }

 private:
  Params(int p, int r, int n, std::shared_ptr<const FiniteField> f)
      : p_(p), r_(r), n_(n), e_(static_cast<long>(ipow(p, r) - 1)), field_(std::move(f)) {}

  std::uint32_t k_step() const { return field_->unit_order() / static_cast<std::uint32_t>(e_); }

  static void check_frame(int p, int r, int n) {
    if (!is_prime(p) || p < 3) throw Error("p must be an odd prime");
    if (r < 1) throw Error("r must be positive");
    if (n < 1 || n % r != 0) throw Error("r must divide n");
    if (ipow(p, n) > (1LL << 22)) throw Error("E too large for table arithmetic");
  }

  static std::shared_ptr<const FiniteField> cached_field(int p, int n, std::vector<int> modulus,
                                                        std::uint32_t gen) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, std::vector<int>, std::uint32_t>,
                    std::shared_ptr<const FiniteField>>
        cache;
    auto key = std::make_tuple(p, n, modulus, gen);
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto f = modulus.empty() ? std::make_shared<const FiniteField>(FiniteField::standard(p, n))
                             : std::make_shared<const FiniteField>(p, n, modulus, gen);
    cache.emplace(key, f);
    return f;
  }

  int p_;
  int r_;
  int n_;
  long e_;
  std::shared_ptr<const FiniteField> field_;
};

}  // namespace breuil

#endif  // BREUIL_BASE_ALGEBRA_HPP
