#pragma once

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ffz {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Runs fn(chunk) for chunk in [0, nchunks) on up to `workers` threads.
/// Chunks are independent; callers store per-chunk results and reduce them
/// in chunk order so the outcome does not depend on scheduling.
template <class Fn>
void parallel_chunks(std::size_t nchunks, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(std::max<std::size_t>(1, nchunks))));
  if (workers == 1) {
    for (std::size_t c = 0; c < nchunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t c = next.fetch_add(1);
        if (c >= nchunks) return;
        try {
          fn(c);
        } catch (...) {
          std::lock_guard lock(err_mutex);
          if (!err) err = std::current_exception();
          next = nchunks;
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

/// Compensated summation.
template <class T>
struct KahanSum {
  T sum{};
  T comp{};
  void add(T v) {
    T y = v - comp;
    T t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  T value() const { return sum; }
};

using KahanComplex = KahanSum<std::complex<long double>>;

}  // namespace ffz
