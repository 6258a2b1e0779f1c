#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <downset/error.hh>

namespace downset {
  using value_type = std::uint32_t;

  // A fixed-length vector of naturals.  The length is set at construction and
  // is never zero.
  class vector {
    public:
      using value_type = downset::value_type;

      explicit vector (std::size_t k);
      vector (std::initializer_list<value_type> values);
      explicit vector (std::vector<value_type> values);
      explicit vector (std::span<const value_type> values);

      std::size_t size () const noexcept { return comps.size (); }
      value_type operator[] (std::size_t i) const noexcept { return comps[i]; }
      value_type& operator[] (std::size_t i) noexcept { return comps[i]; }

      auto begin () const noexcept { return comps.begin (); }
      auto end () const noexcept { return comps.end (); }
      std::span<const value_type> span () const noexcept { return comps; }

      friend bool operator== (const vector&, const vector&) = default;
      // Lexicographic order, used only for canonical sorting.
      friend std::strong_ordering operator<=> (const vector& a, const vector& b) {
        return a.comps <=> b.comps;
      }

    private:
      std::vector<value_type> comps;
  };

  // Outcome of comparing two vectors under the product order.
  enum class ordering { less, greater, equal, incomparable };

  void check_same_dim (const vector& u, const vector& v);

  ordering compare (const vector& u, const vector& v);

  // Same verdict as compare() using at most k+1 scalar comparisons: scan for
  // the first differing index, then only test the one remaining direction.
  // Adds the number of scalar comparisons performed to `comparisons`.
  ordering compare_oneway (const vector& u, const vector& v, std::uint64_t& comparisons);

  bool leq (const vector& u, const vector& v);
  bool lt (const vector& u, const vector& v);

  // u <= v with early exit; counts scalar comparisons.  No dimension check.
  inline bool leq_counted (std::span<const value_type> u, std::span<const value_type> v,
                           std::uint64_t& comparisons) noexcept {
    for (std::size_t i = 0; i < u.size (); ++i) {
      ++comparisons;
      if (u[i] > v[i])
        return false;
    }
    return true;
  }

  vector meet (const vector& u, const vector& v);

  std::string to_string (const vector& v);
  std::string to_string (ordering o);
  std::ostream& operator<< (std::ostream& os, const vector& v);
}
