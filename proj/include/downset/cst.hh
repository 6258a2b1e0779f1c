#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <downset/antichain.hh>
#include <downset/stats.hh>

// Covering sharing trees: layered DAGs kept simulation-minimal ("no child of
// a node simulates a sibling").  They may encode dominated vectors, but the
// downward closure of the encoded language is always exact.
namespace downset::cst {
  class tree;

  struct node {
      std::uint32_t layer;
      value_type value;
      std::vector<std::uint32_t> succ;  // node ids, values strictly decreasing
  };

  // Hash-consed node pool in which builds, unions and intersections run.
  // Nodes never change once created, which keeps the simulation memo valid
  // for the store's lifetime.
  class store {
    public:
      explicit store (std::size_t dim);

      std::size_t dim () const noexcept { return k; }
      const node& at (std::uint32_t id) const { return nodes[id]; }
      std::size_t size () const noexcept { return nodes.size (); }

      std::uint32_t intern (std::uint32_t layer, value_type value, std::vector<std::uint32_t> succ);

      // Forward simulation: val(a) <= val(b) and every successor of a is
      // simulated by some successor of b.
      bool simulates (std::uint32_t a, std::uint32_t b);

      // Appends c (smaller than every current entry) unless an existing
      // successor simulates it.
      bool add_if_not_simulated (std::vector<std::uint32_t>& succ, std::uint32_t c);
      // Insertion in arbitrary value order: checks both directions, merges a
      // same-valued sibling by union, evicts siblings that c simulates.
      void add_bidirectional (std::vector<std::uint32_t>& succ, std::uint32_t c);

      std::uint32_t unite (std::uint32_t a, std::uint32_t b);
      std::optional<std::uint32_t> intersect (std::uint32_t a, std::uint32_t b);

      std::uint32_t import (const tree& t, std::uint32_t id);

      std::uint32_t build (std::vector<vector> vectors);

    private:
      std::size_t k;
      std::vector<node> nodes;
      std::vector<std::map<std::pair<value_type, std::vector<std::uint32_t>>, std::uint32_t>> cache;
      std::unordered_map<std::uint64_t, bool> sim_memo;
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> union_memo;
      std::map<std::pair<std::uint32_t, std::uint32_t>, std::optional<std::uint32_t>> inter_memo;
      std::map<std::pair<const tree*, std::uint32_t>, std::uint32_t> import_memo;
  };

  class tree {
    public:
      static constexpr value_type top = UINT32_MAX;

      // Empty tree of the given dimension.
      explicit tree (std::size_t dim);
      // Compacted copy of everything reachable from `root` in `s`.
      tree (const store& s, std::optional<std::uint32_t> root);

      static tree build (std::size_t dim, std::vector<vector> vectors);
      static tree build (const antichain& a) { return build (a.dim (), a.elements ()); }

      std::size_t dim () const noexcept { return k; }
      bool empty () const noexcept { return empty_; }
      std::uint32_t root () const noexcept { return 0; }
      const std::vector<node>& nodes () const noexcept { return nodes_; }
      std::size_t node_count () const noexcept { return nodes_.size (); }

      bool member (const vector& u, op_stats* stats = nullptr) const;

      // Both nodes must lie in the same layer.
      bool simulates (std::uint32_t a, std::uint32_t b) const;
      bool is_simulation_minimal () const;

      // Encoded vectors, ascending lexicographic order.
      std::vector<vector> language () const;
      // Maximal elements of the language, i.e. the antichain of the downset.
      antichain to_antichain () const;

      void write_dot (std::ostream& os) const;

    private:
      std::size_t k;
      bool empty_ = true;
      std::vector<node> nodes_;
  };

  tree unite (const tree& s, const tree& t);
  tree intersect (const tree& s, const tree& t);
}
