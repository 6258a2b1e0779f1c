#include <downset/antichain.hh>

#include <algorithm>
#include <functional>

namespace downset {
  namespace {
    void check_dims (std::size_t dim, const std::vector<vector>& vs) {
      if (dim == 0)
        throw error ("antichains must have a strictly positive dimension");
      for (const auto& v : vs)
        if (v.size () != dim)
          throw dimension_mismatch (dim, v.size ());
    }
  }

  antichain::antichain (std::size_t dim) : k {dim} {
    if (dim == 0)
      throw error ("antichains must have a strictly positive dimension");
  }

  antichain::antichain (std::size_t dim, std::vector<vector> vectors)
    : antichain (maxac (dim, std::move (vectors))) {}

  antichain::antichain (std::size_t dim, std::initializer_list<vector> vectors)
    : antichain (dim, std::vector<vector> (vectors)) {}

  antichain::antichain (adopt_tag, std::size_t dim, std::vector<vector> vectors)
    : k {dim}, elems (std::move (vectors)) {}

  antichain antichain::from_incomparable (std::size_t dim, std::vector<vector> vectors) {
    check_dims (dim, vectors);
    std::sort (vectors.begin (), vectors.end ());
    vectors.erase (std::unique (vectors.begin (), vectors.end ()), vectors.end ());
    return antichain (adopt_tag {}, dim, std::move (vectors));
  }

  value_type antichain::max_norm () const noexcept {
    value_type w = 0;
    for (const auto& v : elems)
      for (auto x : v)
        w = std::max (w, x);
    return w;
  }

  bool antichain::is_valid () const {
    if (k == 0 || !std::is_sorted (elems.begin (), elems.end ()))
      return false;
    for (std::size_t i = 0; i < elems.size (); ++i) {
      if (elems[i].size () != k)
        return false;
      for (std::size_t j = 0; j < elems.size (); ++j)
        if (i != j && leq (elems[i], elems[j]))
          return false;
    }
    return true;
  }

  antichain maxac (std::size_t dim, std::vector<vector> vectors, op_stats* stats) {
    check_dims (dim, vectors);
    // A vector can only be dominated by lexicographically larger ones, so a
    // descending scan only ever compares against already-kept maximal
    // elements.
    std::sort (vectors.begin (), vectors.end (), std::greater<> {});
    vectors.erase (std::unique (vectors.begin (), vectors.end ()), vectors.end ());

    op_stats local;
    std::vector<vector> kept;
    for (auto& v : vectors) {
      bool dominated = false;
      for (const auto& w : kept)
        if (leq_counted (v.span (), w.span (), local.comparisons)) {
          dominated = true;
          break;
        }
      if (!dominated)
        kept.push_back (std::move (v));
    }
    std::reverse (kept.begin (), kept.end ());
    accumulate (stats, local);
    return antichain (antichain::adopt_tag {}, dim, std::move (kept));
  }

  void check_same_dim (const antichain& a, const antichain& b) {
    if (a.dim () != b.dim ())
      throw dimension_mismatch (a.dim (), b.dim ());
  }

  void check_same_dim (const antichain& a, const vector& u) {
    if (a.dim () != u.size ())
      throw dimension_mismatch (a.dim (), u.size ());
  }
}
