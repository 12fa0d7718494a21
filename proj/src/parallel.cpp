#include "brplan/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace brplan {

namespace {

int read_worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("BRPLAN_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1 && cap < n) n = static_cast<int>(cap);
  }
  return n < 1 ? 1 : n;
}

}  // namespace

int worker_count() {
  static const int n = read_worker_count();
  return n;
}

}  // namespace brplan
