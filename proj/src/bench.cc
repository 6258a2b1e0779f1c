#include <downset/bench.hh>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>
#include <variant>

#include <downset/adaptive.hh>
#include <downset/combinatorics.hh>
#include <downset/cst.hh>
#include <downset/error.hh>
#include <downset/kdtree.hh>
#include <downset/list.hh>
#include <downset/random.hh>
#include <downset/sharing_tree.hh>

namespace downset::bench {
  std::string_view name (operation o) {
    switch (o) {
      case operation::membership: return "membership";
      case operation::union_: return "union";
      case operation::intersection: return "intersection";
    }
    return "?";
  }

  std::string_view name (metric m) {
    switch (m) {
      case metric::comparisons: return "comparisons";
      case metric::node_visits: return "node_visits";
      case metric::wall_time: return "wall_time";
    }
    return "?";
  }

  operation parse_operation (std::string_view s) {
    for (auto o : {operation::membership, operation::union_, operation::intersection})
      if (name (o) == s)
        return o;
    if (s == "member")
      return operation::membership;
    if (s == "intersect")
      return operation::intersection;
    throw error ("unknown benchmark operation '" + std::string (s) + "'");
  }

  metric parse_metric (std::string_view s) {
    for (auto m : {metric::comparisons, metric::node_visits, metric::wall_time})
      if (name (m) == s)
        return m;
    throw error ("unknown metric '" + std::string (s) + "'");
  }

  namespace {
    antichain random_set (std::size_t t, std::size_t k, value_type maxval, std::uint64_t seed) {
      auto r = comb::random_antichain (k, t, maxval, seed);
      if (r.short_of_target)
        throw error ("cannot draw an antichain of size " + std::to_string (t) + " in [0.."
                     + std::to_string (maxval) + "]^" + std::to_string (k));
      return std::move (r.set);
    }

    std::string metric_label (metric m) {
      return m == metric::wall_time ? "wall_time_ns_nondeterministic" : std::string (name (m));
    }

    std::uint64_t pick (metric m, const op_stats& st, std::chrono::nanoseconds elapsed) {
      switch (m) {
        case metric::comparisons: return st.comparisons;
        case metric::node_visits: return st.node_visits;
        case metric::wall_time: return static_cast<std::uint64_t> (elapsed.count ());
      }
      return 0;
    }

    // A membership structure built once and queried many times.
    class index {
      public:
        index (backend b, const antichain& a) : set {a} {
          if (b == backend::adaptive)
            b = adaptive::choose_backend (a.dim (), a.size (), a.size ()).backend == adaptive::choice::kdtree
                  ? backend::kdtree : backend::list;
          switch (b) {
            case backend::kdtree: impl = std::make_unique<kd::tree> (a); break;
            case backend::sharingtree: impl = std::make_unique<st::tree> (a); break;
            case backend::cst: impl = std::make_unique<cst::tree> (cst::tree::build (a)); break;
            default: break;
          }
        }

        bool member (const vector& u, op_stats* stats) const {
          return std::visit (
            [&] (const auto& p) -> bool {
              using P = std::decay_t<decltype (p)>;
              if constexpr (std::is_same_v<P, std::monostate>)
                return list::member (set, u, stats);
              else
                return p->member (u, stats);
            },
            impl);
        }

      private:
        const antichain& set;
        std::variant<std::monostate, std::unique_ptr<kd::tree>, std::unique_ptr<st::tree>,
                     std::unique_ptr<cst::tree>> impl;
    };

    void sort_rows (std::vector<row>& rows) {
      std::stable_sort (rows.begin (), rows.end (), [] (const row& x, const row& y) {
        if (x.t != y.t)
          return x.t < y.t;
        return static_cast<int> (x.b) < static_cast<int> (y.b);
      });
    }

    value_type maxval_for (const spec& s, std::size_t t) {
      return s.maxval ? *s.maxval : static_cast<value_type> (2 * t);
    }
  }

  membership_case make_membership_case (std::size_t t, std::size_t k, value_type maxval, std::uint64_t seed) {
    membership_case c {random_set (t, k, maxval, derive_seed (seed, 0)), {}, {}};
    rng r (derive_seed (seed, 1));
    for (std::size_t i = 0; i < t; ++i) {
      vector v = c.set[r.below (c.set.size ())];
      std::vector<std::size_t> positive;
      for (std::size_t j = 0; j < k; ++j)
        if (v[j] > 0)
          positive.push_back (j);
      if (!positive.empty () && r.below (2))
        --v[positive[r.below (positive.size ())]];
      c.members.push_back (std::move (v));
    }
    const std::uint64_t budget = std::uint64_t {1000} * t;
    for (std::uint64_t draw = 0; c.non_members.size () < t; ++draw) {
      if (draw == budget)
        throw error ("cannot sample " + std::to_string (t) + " non-members");
      vector v (k);
      for (std::size_t j = 0; j < k; ++j)
        v[j] = static_cast<value_type> (r.below (std::uint64_t {maxval} + 1));
      if (!list::member (c.set, v))
        c.non_members.push_back (std::move (v));
    }
    return c;
  }

  setop_case make_setop_case (std::size_t t, std::size_t k, value_type maxval, std::uint64_t seed) {
    antichain a = random_set (t, k, maxval, derive_seed (seed, 0));
    rng r (derive_seed (seed, 1));
    std::vector<std::size_t> order (a.size ());
    std::iota (order.begin (), order.end (), std::size_t {0});
    const std::size_t shared = t / 2;
    for (std::size_t i = 0; i < shared; ++i)
      std::swap (order[i], order[i + r.below (order.size () - i)]);
    std::vector<vector> kept;
    for (std::size_t i = 0; i < shared; ++i)
      kept.push_back (a[order[i]]);
    // Fresh vectors must leave the shared half intact, so only draws
    // incomparable with everything kept so far are accepted.
    const std::uint64_t budget = std::uint64_t {100} * t;
    for (std::uint64_t draw = 0; kept.size () < t; ++draw) {
      if (draw == budget)
        throw error ("cannot complete the second antichain to size " + std::to_string (t));
      vector v (k);
      for (std::size_t j = 0; j < k; ++j)
        v[j] = static_cast<value_type> (r.below (std::uint64_t {maxval} + 1));
      const bool clash = std::any_of (kept.begin (), kept.end (), [&] (const vector& e) {
        return compare (v, e) != ordering::incomparable;
      });
      if (!clash && !std::binary_search (a.begin (), a.end (), v))
        kept.push_back (std::move (v));
    }
    return {std::move (a), antichain::from_incomparable (k, std::move (kept))};
  }

  std::vector<row> run_membership_bench (const spec& s) {
    std::vector<row> rows;
    for (auto t : s.sizes) {
      const auto seed = derive_seed (s.seed, t);
      const auto c = make_membership_case (t, s.k, maxval_for (s, t), seed);
      for (auto b : s.backends) {
        const index idx (b, c.set);
        op_stats st;
        std::size_t hits = 0;
        const auto start = std::chrono::steady_clock::now ();
        for (const auto& u : c.members)
          hits += idx.member (u, &st) ? 1 : 0;
        std::size_t false_hits = 0;
        for (const auto& u : c.non_members)
          false_hits += idx.member (u, &st) ? 1 : 0;
        const auto elapsed = std::chrono::steady_clock::now () - start;
        if (hits != c.members.size () || false_hits != 0)
          throw error ("backend " + std::string (name (b)) + " answered membership wrongly at t="
                       + std::to_string (t));
        rows.push_back ({t, b, s.op, metric_label (s.measure),
                         pick (s.measure, st, std::chrono::duration_cast<std::chrono::nanoseconds> (elapsed)),
                         hits, seed});
      }
    }
    sort_rows (rows);
    return rows;
  }

  std::vector<row> run_setop_bench (const spec& s) {
    std::vector<row> rows;
    for (auto t : s.sizes) {
      const auto seed = derive_seed (s.seed, t);
      const auto c = make_setop_case (t, s.k, maxval_for (s, t), seed);
      const bool is_union = s.op == operation::union_;
      const antichain expected = is_union ? list::unite (c.a, c.b) : list::intersect (c.a, c.b);
      for (auto b : s.backends) {
        op_stats st;
        const auto start = std::chrono::steady_clock::now ();
        const antichain out = is_union ? unite (b, c.a, c.b, &st) : intersect (b, c.a, c.b, &st);
        const auto elapsed = std::chrono::steady_clock::now () - start;
        if (out != expected)
          throw error ("backend " + std::string (name (b)) + " disagrees with the list backend at t="
                       + std::to_string (t));
        rows.push_back ({t, b, s.op, metric_label (s.measure),
                         pick (s.measure, st, std::chrono::duration_cast<std::chrono::nanoseconds> (elapsed)),
                         out.size (), seed});
        if (!is_union)
          rows.push_back ({t, b, s.op, "meets", st.meets, out.size (), seed});
      }
    }
    sort_rows (rows);
    return rows;
  }

  std::vector<row> run (const spec& s) {
    return s.op == operation::membership ? run_membership_bench (s) : run_setop_bench (s);
  }

  void write_csv (std::ostream& os, const std::vector<row>& rows) {
    os << "t,backend,op,metric,value,out_size,seed\n";
    for (const auto& r : rows)
      os << r.t << ',' << name (r.b) << ',' << name (r.op) << ',' << r.metric << ',' << r.value << ','
         << r.out_size << ',' << r.seed << '\n';
  }

  void emit_csv (const std::vector<row>& rows, const std::string& path) {
    std::ofstream out (path, std::ios::binary);
    if (!out)
      throw error ("cannot write " + path);
    write_csv (out, rows);
    if (!out)
      throw error ("error while writing " + path);
  }
}
