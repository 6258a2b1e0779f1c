#pragma once

#include <cstddef>
#include <optional>

#include <downset/antichain.hh>
#include <downset/stats.hh>

// Switches between lists and k-d trees depending on the size of the
// operands relative to the dimension.
namespace downset::adaptive {
  enum class choice { list, kdtree };

  struct decision {
      choice backend;
      std::size_t k, m, n;
  };

  // k-d trees iff k*ceil(log2 k) <= floor(log2 m) and n <= 2^m, with m <= n
  // the operand sizes.  Computed with integers only.
  decision choose_backend (std::size_t k, std::size_t m, std::size_t n);

  bool member (const antichain& a, const vector& u, op_stats* stats = nullptr,
               std::optional<choice> force = std::nullopt);
  antichain unite (const antichain& a, const antichain& b, op_stats* stats = nullptr,
                   std::optional<choice> force = std::nullopt);
  antichain intersect (const antichain& a, const antichain& b, op_stats* stats = nullptr,
                       std::optional<choice> force = std::nullopt);
}
