#include <downset/kdtree.hh>

#include <algorithm>
#include <numeric>

namespace downset::kd {
  namespace {
    // Deterministic selection (median of medians).  Rearranges `a` so that
    // a[nth] holds the nth smallest element under `less` and everything
    // before it is smaller.  Keys must be pairwise distinct.
    template <typename Less>
    void select (std::span<std::uint32_t> a, std::size_t nth, const Less& less);

    template <typename Less>
    void insertion_sort (std::span<std::uint32_t> a, const Less& less) {
      for (std::size_t i = 1; i < a.size (); ++i)
        for (std::size_t j = i; j > 0 && less (a[j], a[j - 1]); --j)
          std::swap (a[j], a[j - 1]);
    }

    template <typename Less>
    std::uint32_t median_of_medians (std::span<std::uint32_t> a, const Less& less) {
      std::vector<std::uint32_t> medians;
      medians.reserve (a.size () / 5 + 1);
      for (std::size_t g = 0; g < a.size (); g += 5) {
        auto group = a.subspan (g, std::min<std::size_t> (5, a.size () - g));
        insertion_sort (group, less);
        medians.push_back (group[(group.size () - 1) / 2]);
      }
      select (std::span (medians), (medians.size () - 1) / 2, less);
      return medians[(medians.size () - 1) / 2];
    }

    template <typename Less>
    void select (std::span<std::uint32_t> a, std::size_t nth, const Less& less) {
      while (a.size () > 10) {
        const auto pivot = median_of_medians (a, less);
        auto mid = std::partition (a.begin (), a.end (),
                                   [&] (std::uint32_t x) { return less (x, pivot); });
        auto p = static_cast<std::size_t> (mid - a.begin ());
        auto where = std::find (mid, a.end (), pivot);
        std::iter_swap (mid, where);
        if (nth == p)
          return;
        if (nth < p)
          a = a.first (p);
        else {
          a = a.subspan (p + 1);
          nth -= p + 1;
        }
      }
      insertion_sort (a, less);
    }

    struct search {
        std::span<const value_type> u;
        std::size_t k;
        bool strict;
        std::vector<value_type> lower;
        std::size_t below = 0;   // dims with lower bound < u_i
        std::size_t above = 0;   // dims with lower bound > u_i (strict mode)
        op_stats local {};
        const tree::observer* obs = nullptr;

        bool leaf_test (std::span<const value_type> v) {
          bool strictly = false;
          for (std::size_t i = 0; i < k; ++i) {
            ++local.comparisons;
            if (u[i] > v[i])
              return false;
            strictly = strictly || u[i] < v[i];
          }
          return !strict || strictly;
        }

        bool included () const { return below == 0 && (!strict || above > 0); }

        bool run (const tree& t, std::uint32_t id, std::size_t depth) {
          ++local.node_visits;
          if (obs)
            (*obs) (id, depth, lower, below);
          const auto& n = t.nodes ()[id];
          if (n.is_leaf ())
            return leaf_test (t.points ()[n.point].span ());

          const std::size_t i = depth % k;
          const value_type old = lower[i];
          const value_type raised = std::max (old, n.split);
          local.comparisons += 1;
          const bool crosses_below = old < u[i] && raised >= u[i];
          const bool crosses_above = old <= u[i] && raised > u[i];
          below -= crosses_below;
          above += crosses_above;
          if (included ()) {
            below += crosses_below;
            above -= crosses_above;
            return true;
          }
          lower[i] = raised;
          const bool right = run (t, n.right, depth + 1);
          lower[i] = old;
          below += crosses_below;
          above -= crosses_above;
          if (right)
            return true;

          // The left region reaches at most split (split - 1 when no vector
          // equal to it went left).
          local.comparisons += 1;
          if (u[i] < n.split || (n.left_has_equal && u[i] == n.split))
            return run (t, n.left, depth + 1);
          return false;
        }
    };

    bool run_search (const tree& t, const vector& u, bool strict, const tree::observer* obs,
                     op_stats* stats) {
      if (u.size () != t.dim ())
        throw dimension_mismatch (t.dim (), u.size ());
      if (t.empty ())
        return false;
      search s {.u = u.span (), .k = t.dim (), .strict = strict, .lower = std::vector<value_type> (t.dim (), 0)};
      s.obs = obs;
      for (auto x : u) {
        ++s.local.comparisons;
        s.below += x > 0;
      }
      const bool r = s.run (t, t.root (), 0);
      accumulate (stats, s.local);
      return r;
    }
  }

  std::size_t prec_median (std::span<const value_type> values) {
    if (values.empty ())
      throw error ("median of an empty sequence");
    std::vector<std::uint32_t> idx (values.size ());
    std::iota (idx.begin (), idx.end (), 0u);
    auto less = [&] (std::uint32_t a, std::uint32_t b) {
      return precedes (values[a], a, values[b], b);
    };
    const std::size_t rank = values.size () / 2;  // ascending rank of the ceil(p/2)-th largest
    select (std::span (idx), rank, less);
    return idx[rank];
  }

  tree::tree (const antichain& a) : tree (a.dim (), a.elements ()) {}

  tree::tree (std::size_t dim, std::vector<vector> collection) : k {dim}, pts (std::move (collection)) {
    if (dim == 0)
      throw error ("k-d trees need a strictly positive dimension");
    for (const auto& v : pts)
      if (v.size () != dim)
        throw dimension_mismatch (dim, v.size ());
    if (pts.empty ())
      return;
    std::vector<std::uint32_t> idx (pts.size ());
    std::iota (idx.begin (), idx.end (), 0u);
    nodes_.reserve (2 * pts.size ());
    build (idx, 0);
  }

  std::uint32_t tree::build (std::span<std::uint32_t> idx, std::size_t depth) {
    const auto id = static_cast<std::uint32_t> (nodes_.size ());
    nodes_.emplace_back ();
    height_ = std::max (height_, depth + 1);
    if (idx.size () == 1) {
      nodes_[id].point = idx[0];
      return id;
    }

    const std::size_t i = depth % k;
    auto less = [&] (std::uint32_t a, std::uint32_t b) {
      return precedes (pts[a][i], a, pts[b][i], b);
    };
    const std::size_t rank = idx.size () / 2;
    select (idx, rank, less);
    const value_type mu = pts[idx[rank]][i];
    auto left = idx.first (rank), right = idx.subspan (rank);
    bool equal = std::any_of (left.begin (), left.end (),
                              [&] (std::uint32_t x) { return pts[x][i] == mu; });

    const auto l = build (left, depth + 1);
    const auto r = build (right, depth + 1);
    auto& n = nodes_[id];
    n.split = mu;
    n.left_has_equal = equal;
    n.left = l;
    n.right = r;
    return id;
  }

  std::vector<vector> tree::leaves () const {
    std::vector<vector> out;
    if (empty ())
      return out;
    std::vector<std::uint32_t> stack {root ()};
    while (!stack.empty ()) {
      auto id = stack.back ();
      stack.pop_back ();
      const auto& n = nodes_[id];
      if (n.is_leaf ())
        out.push_back (pts[n.point]);
      else {
        stack.push_back (n.right);
        stack.push_back (n.left);
      }
    }
    return out;
  }

  bool tree::member (const vector& u, op_stats* stats) const {
    return run_search (*this, u, false, nullptr, stats);
  }

  bool tree::strict_member (const vector& u, op_stats* stats) const {
    return run_search (*this, u, true, nullptr, stats);
  }

  bool tree::member_observed (const vector& u, const observer& obs, op_stats* stats) const {
    return run_search (*this, u, false, &obs, stats);
  }

  antichain unite (const antichain& a, const antichain& b, op_stats* stats) {
    check_same_dim (a, b);
    if (a.empty ())
      return b;
    if (b.empty ())
      return a;
    const tree ta (a), tb (b);
    std::vector<vector> out;
    for (const auto& v : a)
      if (!tb.strict_member (v, stats))
        out.push_back (v);
    for (const auto& v : b)
      if (!ta.strict_member (v, stats))
        out.push_back (v);
    return antichain::from_incomparable (a.dim (), std::move (out));
  }

  antichain intersect (const antichain& a, const antichain& b, op_stats* stats) {
    check_same_dim (a, b);
    std::vector<vector> meets;
    meets.reserve (a.size () * b.size ());
    for (const auto& v : a)
      for (const auto& w : b)
        meets.push_back (meet (v, w));
    if (stats)
      stats->meets += meets.size ();

    const tree t (a.dim (), meets);
    std::vector<vector> survivors;
    for (const auto& v : t.points ())
      if (!t.strict_member (v, stats))
        survivors.push_back (v);
    // from_incomparable sorts lexicographically and drops consecutive copies.
    return antichain::from_incomparable (a.dim (), std::move (survivors));
  }
}
