#include <downset/list.hh>

#include <vector>

namespace downset::list {
  bool member (const antichain& a, const vector& u, op_stats* stats) {
    check_same_dim (a, u);
    op_stats local;
    bool found = false;
    for (const auto& v : a)
      if (leq_counted (u.span (), v.span (), local.comparisons)) {
        found = true;
        break;
      }
    accumulate (stats, local);
    return found;
  }

  bool strict_member (const antichain& a, const vector& u, op_stats* stats) {
    check_same_dim (a, u);
    op_stats local;
    bool found = false;
    for (const auto& v : a)
      if (compare_oneway (u, v, local.comparisons) == ordering::less) {
        found = true;
        break;
      }
    accumulate (stats, local);
    return found;
  }

  antichain unite (const antichain& a, const antichain& b, op_stats* stats) {
    check_same_dim (a, b);
    op_stats local;
    std::vector<char> drop_a (a.size (), 0), drop_b (b.size (), 0);
    // One k+1 comparison pass per pair decides both directions at once.
    // A dropped element can never witness the drop of another one (that
    // would contradict incomparability within its own antichain).
    for (std::size_t i = 0; i < a.size (); ++i)
      for (std::size_t j = 0; j < b.size () && !drop_a[i]; ++j) {
        if (drop_b[j])
          continue;
        switch (compare_oneway (a[i], b[j], local.comparisons)) {
          case ordering::less: drop_a[i] = 1; break;
          case ordering::greater: drop_b[j] = 1; break;
          case ordering::equal: drop_b[j] = 1; break;
          case ordering::incomparable: break;
        }
      }

    std::vector<vector> out;
    out.reserve (a.size () + b.size ());
    for (std::size_t i = 0; i < a.size (); ++i)
      if (!drop_a[i])
        out.push_back (a[i]);
    for (std::size_t j = 0; j < b.size (); ++j)
      if (!drop_b[j])
        out.push_back (b[j]);
    accumulate (stats, local);
    return antichain::from_incomparable (a.dim (), std::move (out));
  }

  antichain intersect (const antichain& a, const antichain& b, op_stats* stats,
                       bool exclude_contained) {
    check_same_dim (a, b);
    op_stats local;
    std::vector<vector> candidates;
    std::vector<char> skip_a (a.size (), 0), skip_b (b.size (), 0);

    if (exclude_contained) {
      for (std::size_t i = 0; i < a.size (); ++i)
        if (member (b, a[i], &local)) {
          skip_a[i] = 1;
          candidates.push_back (a[i]);
        }
      for (std::size_t j = 0; j < b.size (); ++j)
        if (member (a, b[j], &local)) {
          skip_b[j] = 1;
          candidates.push_back (b[j]);
        }
    }

    for (std::size_t i = 0; i < a.size (); ++i) {
      if (skip_a[i])
        continue;
      for (std::size_t j = 0; j < b.size (); ++j) {
        if (skip_b[j])
          continue;
        ++local.meets;
        candidates.push_back (meet (a[i], b[j]));
      }
    }
    auto result = maxac (a.dim (), std::move (candidates), &local);
    accumulate (stats, local);
    return result;
  }
}
