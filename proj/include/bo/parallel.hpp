// OpenMP execution policy. BO_THREADS caps the thread count; BO_THREADS=1
// forces every parallel kernel through its serial path.
#pragma once

#include <exception>
#include <utility>

namespace bo::parallel {

// Thread budget: min(BO_THREADS, omp_get_max_threads()), at least 1.
int thread_budget();

// True when parallel kernel variants should run (budget > 1).
bool enabled();

// Override the BO_THREADS environment variable for this process (used by the
// CLI and the benchmark driver). count <= 0 restores the environment value.
void set_thread_override(int count);

// Static-schedule parallel loop over [0, n). Each index must write only its
// own slots, which keeps results identical to the serial path. Exceptions
// are captured inside the region and rethrown once.
template <class F>
void for_range(int n, F&& body) {
  const int threads = thread_budget();
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err = nullptr;
#pragma omp parallel for num_threads(threads) schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(bo_for_range_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace bo::parallel
