#ifndef BREUIL_SWEEP_HPP
#define BREUIL_SWEEP_HPP

// Enumeration of parameter points for exhaustive runs, and a small parallel
// map whose output order never depends on completion order.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "breuil/gee331.hpp"

namespace breuil {

inline constexpr std::size_t kMaxSweepPoints = 1000000;

/// All vectors of length r with entries in [lo, hi], first entry varying slowest.
inline std::vector<std::vector<int>> int_vectors(int r, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (lo > hi) return out;
  std::vector<int> cur(r, lo);
  while (true) {
    out.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == hi) cur[k--] = lo;
    if (k < 0) break;
    ++cur[k];
  }
  return out;
}

/// Number of points sweep_points would produce, computed without building them.
inline std::size_t count_sweep_points(int p, int r, std::size_t scalar_count, bool with_lambda) {
  std::size_t b_count = 1;
  for (int i = 0; i < r; ++i) b_count *= static_cast<std::size_t>(std::max(p - 3, 0));
  std::size_t j_weight = 0;
  for (int mask = 0; mask < (1 << r); ++mask) j_weight += with_lambda ? (std::size_t{1} << std::popcount(static_cast<unsigned>(mask))) : 1;
  return j_weight * b_count * scalar_count * scalar_count;
}

/// Points (J, b, a, bscalar, lambda) with b regular, a and bscalar drawn from
/// `scalars`, and lambda equal to `lambda_value` on a subset T of J and 0
/// elsewhere (every T, including the empty one). Order: J, b, a, bscalar, T.
inline std::vector<GeeParams> sweep_points(const Params& P, const std::vector<FF>& scalars, FF lambda_value,
                                           bool with_lambda = true) {
  const int r = P.r();
  std::vector<GeeParams> out;
  for (const auto& J : IndexSet::all_subsets(r)) {
    for (const auto& b : int_vectors(r, 2, P.p() - 2)) {
      for (FF a : scalars) {
        for (FF bs : scalars) {
          std::vector<IndexSet> patterns;
          if (with_lambda) {
            for (const auto& T : IndexSet::all_subsets(r))
              if ((T.bits() & ~J.bits()) == 0) patterns.push_back(T);
          } else {
            patterns.push_back(IndexSet::none(r));
          }
          for (const auto& T : patterns) {
            GeeParams G{J, b, a, bs, std::vector<FF>(r, FF{})};
            for (int i : T.to_list()) G.lambda[i] = lambda_value;
            out.push_back(std::move(G));
          }
        }
      }
    }
  }
  return out;
}

/// out[k] = fn(k) for k in [0, n), evaluated on up to `threads` workers.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<T> out(n);
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < n; k = next++) out[k] = fn(k);
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next = n;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace breuil

#endif  // BREUIL_SWEEP_HPP
