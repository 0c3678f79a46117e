#include "bo/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bo::parallel {

namespace {
int g_override = 0;
}

void set_thread_override(int count) { g_override = count; }

int thread_budget() {
  int hw = 1;
#ifdef _OPENMP
  hw = omp_get_max_threads();
#endif
  int cap = hw;
  if (g_override > 0) {
    cap = g_override;
  } else if (const char* env = std::getenv("BO_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) cap = v;
  }
  return cap < 1 ? 1 : (cap < hw ? cap : hw);
}

bool enabled() { return thread_budget() > 1; }

}  // namespace bo::parallel
