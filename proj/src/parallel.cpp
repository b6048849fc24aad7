#include "tricirc/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include <omp.h>

namespace tricirc {

int worker_count() {
  if (const char* env = std::getenv("TRICIRC_THREADS")) {
    int n = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, n);
    if (ec == std::errc{} && ptr == end && n > 0) return n;
  }
  return omp_get_max_threads();
}

void configure_threads() { omp_set_num_threads(worker_count()); }

}  // namespace tricirc
