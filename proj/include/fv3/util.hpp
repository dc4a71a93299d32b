//! \file util.hpp
//! \brief Minimal worker-thread pool helper for the embarrassingly parallel
//!        sweep loops. Results are independent of the worker count: ranges
//!        are disjoint and every write target is owned by exactly one index.

#ifndef FV3_UTIL_HPP_
#define FV3_UTIL_HPP_

#include <functional>

namespace fv3 {

//! Number of worker threads used by parallel_for (default 1 = serial).
int worker_count();

//! Caps the number of workers; values < 1 are treated as 1.
void set_worker_count(int n);

//! Invokes fn(i) for i in [begin, end), split across worker_count() threads.
//! Exceptions from workers are rethrown (first one wins).
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace fv3

#endif  // FV3_UTIL_HPP_
