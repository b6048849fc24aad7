#pragma once

namespace tricirc {

/// Worker count: TRICIRC_THREADS if set to a positive integer, otherwise the
/// OpenMP default.
int worker_count();

/// Applies worker_count() to the OpenMP runtime.
void configure_threads();

}  // namespace tricirc
