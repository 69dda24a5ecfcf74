#pragma once

#include <algorithm>
#include <cstdint>

namespace equistream {

// Instrumentation for the op-count and allocation-accounting checks.
// Thread-local so data-parallel runs do not race; each worker accumulates
// into its own counter set and callers merge if they care.
struct OpCounters {
  std::uint64_t madds = 0;            // coefficient applications (mul+add)
  std::uint64_t alloc_elems_cur = 0;  // live auxiliary elements
  std::uint64_t alloc_elems_peak = 0;

  void reset() { *this = OpCounters{}; }

  void add_madds(std::uint64_t n) { madds += n; }

  void track_alloc(std::uint64_t elems) {
    alloc_elems_cur += elems;
    alloc_elems_peak = std::max(alloc_elems_peak, alloc_elems_cur);
  }
  void track_free(std::uint64_t elems) {
    alloc_elems_cur = (elems > alloc_elems_cur) ? 0 : alloc_elems_cur - elems;
  }
};

inline OpCounters& counters() {
  thread_local OpCounters c;
  return c;
}

}  // namespace equistream
