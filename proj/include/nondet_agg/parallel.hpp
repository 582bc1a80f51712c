#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace nda {

/// Number of worker threads: NONDET_AGG_THREADS when set (must be a
/// positive integer, else UsageError), otherwise the hardware concurrency.
std::size_t worker_count();

/// Smallest i in [0, n) with fails(i) == true, or nullopt. Indices are
/// striped across workers; each worker scans upward and stops once it
/// passes the best index found so far, so the answer does not depend on
/// scheduling. An exception thrown by fails(i) counts as an event at i; if
/// the earliest event is an exception, it is rethrown.
std::optional<std::size_t> find_first(std::size_t n, const std::function<bool(std::size_t)>& fails);

/// fn(i) for every i in [0, n), in index order. The exception of the
/// lowest failing index is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace nda
