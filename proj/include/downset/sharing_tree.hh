#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <downset/antichain.hh>
#include <downset/stats.hh>

namespace downset::st {
  // Per-dimension rank encoding: each component is replaced by its position
  // among the distinct values occurring in that dimension.
  struct compression_table {
      std::vector<std::vector<value_type>> sorted;  // sorted[i][rank] = original value

      value_type decode (std::size_t dim, value_type rank) const { return sorted[dim][rank]; }
  };

  std::pair<antichain, compression_table> compress (const antichain& a);
  antichain decompress (const antichain& compressed, const compression_table& table);

  // Sharing tree: the minimal layered acyclic automaton whose root-to-leaf
  // value strings are exactly the stored vectors.  Layer 0 holds the root,
  // layer i (1..k) holds the nodes labelled with i-th components.
  class tree {
    public:
      static constexpr value_type top = std::numeric_limits<value_type>::max ();

      struct node {
          value_type value;                 // rank when the tree is compressed
          std::vector<std::uint32_t> succ;  // indices into the next layer, values decreasing
      };

      // Compresses automatically when the max norm exceeds the set size.
      explicit tree (const antichain& a);
      // Any finite set of vectors; duplicates are merged by minimization.
      tree (std::size_t dim, std::vector<vector> vectors, bool allow_compression = true);

      std::size_t dim () const noexcept { return k; }
      bool empty () const noexcept { return empty_; }
      bool compressed () const noexcept { return table.has_value (); }
      const std::vector<std::vector<node>>& layers () const noexcept { return layers_; }
      std::size_t node_count () const noexcept;
      std::size_t edge_count () const noexcept;

      // Original value of a node in layer `layer` (1..k).
      value_type value_of (std::size_t layer, std::uint32_t idx) const {
        const auto v = layers_[layer][idx].value;
        return table ? table->decode (layer - 1, v) : v;
      }

      bool member (const vector& u, op_stats* stats = nullptr) const;
      bool strict_member (const vector& u, op_stats* stats = nullptr) const;

      // Every encoded vector (original values), ascending lexicographic order.
      std::vector<vector> language () const;

      // Nodes labelled `layer:value`.
      void write_dot (std::ostream& os) const;

    private:
      struct dfs;

      std::size_t k;
      bool empty_ = true;
      std::vector<std::vector<node>> layers_;
      std::vector<std::size_t> offsets;  // flat index of each layer's first node
      std::optional<compression_table> table;
  };

  antichain unite (const antichain& a, const antichain& b, op_stats* stats = nullptr);
  antichain intersect (const antichain& a, const antichain& b, op_stats* stats = nullptr);
}
