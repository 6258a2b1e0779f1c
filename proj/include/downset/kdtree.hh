#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <downset/antichain.hh>
#include <downset/stats.hh>

namespace downset::kd {
  // The order on indexed values: smaller value first, ties broken by index.
  constexpr bool precedes (value_type a, std::size_t ia, value_type b, std::size_t ib) noexcept {
    return a < b || (a == b && ia < ib);
  }

  // Index of the ceil(p/2)-th largest element under `precedes`.  Linear time,
  // deterministic (median of medians).
  std::size_t prec_median (std::span<const value_type> values);

  // Balanced k-d tree over a collection of vectors.  Built from an antichain
  // for membership, or from an arbitrary collection (duplicates included)
  // when filtering meets during intersection.  An empty collection gives the
  // empty tree, on which every query is false.
  class tree {
    public:
      static constexpr std::uint32_t none = UINT32_MAX;

      struct node {
          value_type split = 0;         // median value on the node's dimension
          bool left_has_equal = false;  // left subtree holds a vector equal to split
          std::uint32_t left = none, right = none;
          std::uint32_t point = none;   // leaf payload, index into points()

          bool is_leaf () const noexcept { return point != none; }
      };

      explicit tree (const antichain& a);
      tree (std::size_t dim, std::vector<vector> collection);

      std::size_t dim () const noexcept { return k; }
      bool empty () const noexcept { return nodes_.empty (); }
      std::size_t size () const noexcept { return pts.size (); }
      // Nodes on the longest root-to-leaf path (a single leaf has height 1).
      std::size_t height () const noexcept { return height_; }
      const std::vector<node>& nodes () const noexcept { return nodes_; }
      const std::vector<vector>& points () const noexcept { return pts; }
      std::uint32_t root () const noexcept { return empty () ? none : 0; }
      // Leaf vectors from left to right.
      std::vector<vector> leaves () const;

      // Is u below some stored vector?
      bool member (const vector& u, op_stats* stats = nullptr) const;
      // Is u strictly below some stored vector?
      bool strict_member (const vector& u, op_stats* stats = nullptr) const;

      // Called on every node the membership search enters, with the lower
      // bounds of the node's region and the number of dimensions where that
      // bound is still below u.
      using observer = std::function<void (std::uint32_t node, std::size_t depth,
                                           std::span<const value_type> lower_bounds,
                                           std::size_t below)>;
      bool member_observed (const vector& u, const observer& obs, op_stats* stats = nullptr) const;

    private:
      std::uint32_t build (std::span<std::uint32_t> idx, std::size_t depth);

      std::size_t k;
      std::vector<vector> pts;
      std::vector<node> nodes_;
      std::size_t height_ = 0;
  };

  antichain unite (const antichain& a, const antichain& b, op_stats* stats = nullptr);
  antichain intersect (const antichain& a, const antichain& b, op_stats* stats = nullptr);
}
