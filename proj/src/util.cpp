//! \file util.cpp
//! \brief Worker pool implementation.

#include "fv3/util.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace fv3 {

namespace {
int g_workers = 1;
}

int worker_count() { return g_workers; }

void set_worker_count(int n) { g_workers = std::max(1, n); }

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  const int workers = std::min(g_workers, count);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  const int chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi]() {
      try {
        for (int i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true)) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(first_error);
}

}  // namespace fv3
