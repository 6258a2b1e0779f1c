#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <downset/backend.hh>

// Random benchmarks: antichains of size t, membership queries half of which
// hit, and set operations between antichains overlapping on half their
// elements.
namespace downset::bench {
  enum class operation { membership, union_, intersection };
  enum class metric { comparisons, node_visits, wall_time };

  std::string_view name (operation o);
  std::string_view name (metric m);
  operation parse_operation (std::string_view s);
  metric parse_metric (std::string_view s);

  struct spec {
      operation op = operation::membership;
      std::vector<std::size_t> sizes;
      std::size_t k = 512;
      std::optional<value_type> maxval;  // defaults to 2t
      std::uint64_t seed = 1;
      std::vector<backend> backends {backend::list, backend::kdtree};
      metric measure = metric::comparisons;
  };

  struct row {
      std::size_t t;
      backend b;
      operation op;
      std::string metric;  // counter name; wall time is flagged non-deterministic
      std::uint64_t value;
      std::size_t out_size;
      std::uint64_t seed;
  };

  // Inputs generated for one t; identical for every backend.
  struct membership_case {
      antichain set;
      std::vector<vector> members, non_members;
  };
  membership_case make_membership_case (std::size_t t, std::size_t k, value_type maxval, std::uint64_t seed);

  struct setop_case {
      antichain a, b;
  };
  setop_case make_setop_case (std::size_t t, std::size_t k, value_type maxval, std::uint64_t seed);

  // Throws if a backend disagrees with the list backend or if a size cannot
  // be reached for the given dimension and maximal value.
  std::vector<row> run_membership_bench (const spec& s);
  std::vector<row> run_setop_bench (const spec& s);
  std::vector<row> run (const spec& s);

  void write_csv (std::ostream& os, const std::vector<row>& rows);
  void emit_csv (const std::vector<row>& rows, const std::string& path);
}
