#include "lober/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lober::parallel {
namespace {

unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<unsigned>& workers_setting() {
  static std::atomic<unsigned> w{default_workers()};
  return w;
}

}  // namespace

unsigned worker_count() { return workers_setting().load(); }

void set_worker_count(unsigned workers) { workers_setting().store(std::max(1u, workers)); }

void for_each_chunk(std::size_t n_chunks, const std::function<void(std::size_t)>& fn) {
  const std::size_t n_threads = std::min<std::size_t>(worker_count(), n_chunks);
  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(n_threads - 1);
  for (std::size_t i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace lober::parallel
