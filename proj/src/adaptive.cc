#include <downset/adaptive.hh>

#include <algorithm>
#include <bit>

#include <downset/error.hh>
#include <downset/kdtree.hh>
#include <downset/list.hh>

namespace downset::adaptive {
  namespace {
    std::uint64_t ceil_log2 (std::uint64_t x) {
      return x <= 1 ? 0 : std::bit_width (x - 1);
    }

    std::uint64_t floor_log2 (std::uint64_t x) {
      return std::bit_width (x) - 1;
    }

    choice pick (std::size_t k, std::size_t m, std::size_t n, std::optional<choice> force) {
      if (force)
        return *force;
      if (m > n)
        std::swap (m, n);
      return choose_backend (k, m, n).backend;
    }
  }

  decision choose_backend (std::size_t k, std::size_t m, std::size_t n) {
    if (m > n)
      throw error ("choose_backend expects m <= n");
    decision d {choice::list, k, m, n};
    if (k == 0 || m == 0 || n == 0)
      return d;
    const bool dense = std::uint64_t {k} * ceil_log2 (k) <= floor_log2 (m);
    const bool bounded = m >= 64 || n <= (std::uint64_t {1} << m);
    if (dense && bounded)
      d.backend = choice::kdtree;
    return d;
  }

  bool member (const antichain& a, const vector& u, op_stats* stats, std::optional<choice> force) {
    // Treated as one of m queries against the same set, the regime in which
    // building the tree pays off.
    if (pick (a.dim (), a.size (), a.size (), force) == choice::kdtree) {
      check_same_dim (a, u);
      return kd::tree (a).member (u, stats);
    }
    return list::member (a, u, stats);
  }

  antichain unite (const antichain& a, const antichain& b, op_stats* stats, std::optional<choice> force) {
    if (pick (a.dim (), a.size (), b.size (), force) == choice::kdtree)
      return kd::unite (a, b, stats);
    return list::unite (a, b, stats);
  }

  antichain intersect (const antichain& a, const antichain& b, op_stats* stats,
                       std::optional<choice> force) {
    if (pick (a.dim (), a.size (), b.size (), force) == choice::kdtree)
      return kd::intersect (a, b, stats);
    return list::intersect (a, b, stats);
  }
}
