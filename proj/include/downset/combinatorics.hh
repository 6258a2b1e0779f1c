#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <downset/antichain.hh>

// Antichains of the grid [l]^d = {0,...,l-1}^d.
namespace downset::comb {
  using big = boost::multiprecision::cpp_int;

  // Exhaustive routines refuse grids with more than this many points.
  inline constexpr std::uint64_t max_grid_points = std::uint64_t {1} << 20;
  // Width computation builds the comparability graph explicitly.
  inline constexpr std::uint64_t max_width_points = std::uint64_t {1} << 12;

  big binomial (std::uint64_t n, std::uint64_t r);

  // Number of antichains of [l]^2 with n elements, C(l,n)^2, or of any size
  // (the empty one included), C(2l,l).
  big count_2d (std::uint64_t ell, std::optional<std::uint64_t> n = std::nullopt);

  // Points of [l]^d in lexicographic order; throws beyond max_grid_points.
  std::vector<vector> grid_points (std::size_t d, std::uint64_t ell);

  // Visits every antichain of [l]^d exactly once, the empty one first, and
  // returns how many there are.  Stops early once `limit` antichains were
  // produced.
  using antichain_visitor = std::function<void (std::span<const vector>)>;
  std::uint64_t enumerate_antichains (std::size_t d, std::uint64_t ell, const antichain_visitor& visit = {},
                                      std::uint64_t limit = UINT64_MAX);

  // Largest antichain of [l]^d, as the size of a minimum chain cover
  // (Dilworth) computed by bipartite matching.
  std::uint64_t width (std::size_t d, std::uint64_t ell);

  // Points whose components sum to s.
  std::uint64_t layer_size (std::size_t d, std::uint64_t ell, std::uint64_t s);
  std::vector<vector> layer (std::size_t d, std::uint64_t ell, std::uint64_t s);

  struct conjecture_report {
      std::uint64_t width;
      std::uint64_t max_layer_size;
      std::vector<std::uint64_t> argmax;  // every s reaching the maximum
      std::uint64_t stated_index;         // floor(l*d/2)
      std::uint64_t stated_index_size;
      std::uint64_t midpoint;             // floor((l-1)*d/2)
      std::uint64_t midpoint_size;
      bool equal;                         // width == max_layer_size
  };
  conjecture_report check_middle_layer_conjecture (std::size_t d, std::uint64_t ell);

  struct random_result {
      antichain set;
      bool short_of_target;  // draw budget ran out first
  };
  // Draws uniform vectors of [0..W]^k, keeping the maximal ones, until
  // `target` elements are reached or 100*target draws were made.
  random_result random_antichain (std::size_t k, std::size_t target, value_type maxval, std::uint64_t seed);

  // Pairs two uniform n-subsets of [l], one ascending and one descending.
  antichain random_good_antichain_2d (std::uint64_t ell, std::uint64_t n, std::uint64_t seed);
}
