#include "nondet_agg/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "nondet_agg/error.hpp"

namespace nda {

std::size_t worker_count() {
  if (const char* env = std::getenv("NONDET_AGG_THREADS"); env && *env) {
    std::string_view s(env);
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || ptr != s.data() + s.size() || n == 0) {
      throw UsageError("NONDET_AGG_THREADS must be a positive integer, got '" + std::string(s) + "'");
    }
    return std::min<std::size_t>(n, 256);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<std::size_t> find_first(std::size_t n, const std::function<bool(std::size_t)>& fails) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> best{kNone};

  struct Event {
    std::size_t index = kNone;
    std::exception_ptr error;
  };
  std::vector<Event> firsts(workers);

  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      if (i > best.load(std::memory_order_relaxed)) return;
      bool hit = false;
      try {
        hit = fails(i);
      } catch (...) {
        firsts[w] = Event{i, std::current_exception()};
        hit = true;
      }
      if (hit) {
        if (firsts[w].index != i) firsts[w] = Event{i, nullptr};
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
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

  Event first;
  for (const auto& e : firsts) {
    if (e.index < first.index) first = e;
  }
  if (first.index == kNone) return std::nullopt;
  if (first.error) std::rethrow_exception(first.error);
  return first.index;
}

}  // namespace nda
