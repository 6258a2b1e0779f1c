#pragma once

#include <cstddef>
#include <vector>

#include <downset/stats.hh>
#include <downset/vector.hh>

namespace downset {
  // Canonical antichain of maximal elements representing a downset.  Elements
  // are pairwise incomparable, deduplicated, and kept in lexicographically
  // ascending order, so two antichains are equal iff their downsets are.
  class antichain {
    public:
      explicit antichain (std::size_t dim);
      // Canonicalizes an arbitrary multiset through maxac.
      antichain (std::size_t dim, std::vector<vector> vectors);
      antichain (std::size_t dim, std::initializer_list<vector> vectors);

      // Adopts vectors already known to be pairwise incomparable (duplicates
      // allowed); only sorts and deduplicates them.
      static antichain from_incomparable (std::size_t dim, std::vector<vector> vectors);

      std::size_t dim () const noexcept { return k; }
      std::size_t size () const noexcept { return elems.size (); }
      bool empty () const noexcept { return elems.empty (); }
      const std::vector<vector>& elements () const noexcept { return elems; }
      auto begin () const noexcept { return elems.begin (); }
      auto end () const noexcept { return elems.end (); }
      const vector& operator[] (std::size_t i) const noexcept { return elems[i]; }

      // Largest component over all elements (0 when empty).
      value_type max_norm () const noexcept;

      // Full invariant check, quadratic.
      bool is_valid () const;

      friend bool operator== (const antichain&, const antichain&) = default;

    private:
      struct adopt_tag {};
      antichain (adopt_tag, std::size_t dim, std::vector<vector> vectors);

      std::size_t k;
      std::vector<vector> elems;

      friend antichain maxac (std::size_t, std::vector<vector>, op_stats*);
  };

  // Maximal elements of a finite multiset.  Empty input gives the empty
  // antichain.
  antichain maxac (std::size_t dim, std::vector<vector> vectors, op_stats* stats = nullptr);

  void check_same_dim (const antichain& a, const antichain& b);
  void check_same_dim (const antichain& a, const vector& u);
}
