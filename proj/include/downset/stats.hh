#pragma once

#include <cstdint>

namespace downset {
  // Per-call instrumentation.  Operations add to a caller-owned instance, so
  // concurrent queries never share a counter.
  struct op_stats {
      std::uint64_t comparisons = 0;  // scalar comparisons between components
      std::uint64_t node_visits = 0;  // recursive calls / DAG nodes entered
      std::uint64_t meets = 0;        // meets computed by intersections

      op_stats& operator+= (const op_stats& o) {
        comparisons += o.comparisons;
        node_visits += o.node_visits;
        meets += o.meets;
        return *this;
      }

      friend bool operator== (const op_stats&, const op_stats&) = default;
  };

  inline void accumulate (op_stats* into, const op_stats& local) {
    if (into)
      *into += local;
  }
}
