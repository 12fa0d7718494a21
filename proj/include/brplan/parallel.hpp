#ifndef BRPLAN_PARALLEL_HPP
#define BRPLAN_PARALLEL_HPP

namespace brplan {

/// Worker count for parallel regions: min(BRPLAN_THREADS, hardware threads),
/// at least 1. BRPLAN_THREADS is read once per process.
int worker_count();

}  // namespace brplan

#endif  // BRPLAN_PARALLEL_HPP
