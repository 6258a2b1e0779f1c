#include <downset/combinatorics.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include <downset/error.hh>
#include <downset/random.hh>

namespace downset::comb {
  namespace {
    // l^d, or nullopt once it exceeds `cap`.
    std::optional<std::uint64_t> grid_size (std::size_t d, std::uint64_t ell, std::uint64_t cap) {
      std::uint64_t n = 1;
      for (std::size_t i = 0; i < d; ++i) {
        if (n > cap / ell)
          return std::nullopt;
        n *= ell;
      }
      return n <= cap ? std::optional {n} : std::nullopt;
    }

    void check_params (std::size_t d, std::uint64_t ell) {
      if (d == 0)
        throw error ("the grid dimension must be at least 1");
      if (ell == 0)
        throw error ("the grid side must be at least 1");
      if (ell - 1 > std::numeric_limits<value_type>::max ())
        throw error ("grid side too large");
    }

    void guard (std::size_t d, std::uint64_t ell, std::uint64_t cap) {
      check_params (d, ell);
      if (!grid_size (d, ell, cap))
        throw error ("grid [" + std::to_string (ell) + "]^" + std::to_string (d) + " exceeds the limit of "
                     + std::to_string (cap) + " points");
    }

    // Hopcroft-Karp on a bipartite graph with both sides indexed 0..n-1.
    class matcher {
      public:
        explicit matcher (std::vector<std::vector<std::uint32_t>> adjacency) :
          adj {std::move (adjacency)}, n {adj.size ()},
          match_l (n, free), match_r (n, free), dist (n) {}

        std::size_t run () {
          std::size_t size = 0;
          while (bfs ())
            for (std::uint32_t u = 0; u < n; ++u)
              if (match_l[u] == free && dfs (u))
                ++size;
          return size;
        }

      private:
        static constexpr std::uint32_t free = UINT32_MAX;
        static constexpr std::uint32_t inf = UINT32_MAX;

        bool bfs () {
          std::deque<std::uint32_t> q;
          for (std::uint32_t u = 0; u < n; ++u)
            if (match_l[u] == free) {
              dist[u] = 0;
              q.push_back (u);
            }
            else
              dist[u] = inf;
          bool found = false;
          while (!q.empty ()) {
            const auto u = q.front ();
            q.pop_front ();
            for (auto v : adj[u]) {
              const auto w = match_r[v];
              if (w == free)
                found = true;
              else if (dist[w] == inf) {
                dist[w] = dist[u] + 1;
                q.push_back (w);
              }
            }
          }
          return found;
        }

        bool dfs (std::uint32_t u) {
          for (auto v : adj[u]) {
            const auto w = match_r[v];
            if (w == free || (dist[w] == dist[u] + 1 && dfs (w))) {
              match_l[u] = v;
              match_r[v] = u;
              return true;
            }
          }
          dist[u] = inf;
          return false;
        }

        std::vector<std::vector<std::uint32_t>> adj;
        std::size_t n;
        std::vector<std::uint32_t> match_l, match_r, dist;
    };
  }

  big binomial (std::uint64_t n, std::uint64_t r) {
    if (r > n)
      return 0;
    r = std::min (r, n - r);
    big acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
      acc *= n - r + i;
      acc /= i;
    }
    return acc;
  }

  big count_2d (std::uint64_t ell, std::optional<std::uint64_t> n) {
    if (!n)
      return binomial (2 * ell, ell);
    if (*n > ell)
      throw error ("antichain size " + std::to_string (*n) + " exceeds the grid side " + std::to_string (ell));
    const big c = binomial (ell, *n);
    return c * c;
  }

  std::vector<vector> grid_points (std::size_t d, std::uint64_t ell) {
    guard (d, ell, max_grid_points);
    std::vector<vector> pts;
    pts.reserve (*grid_size (d, ell, max_grid_points));
    vector cur (d);
    while (true) {
      pts.push_back (cur);
      std::size_t i = d;
      while (i > 0 && cur[i - 1] + 1 == ell)
        cur[--i] = 0;
      if (i == 0)
        break;
      ++cur[i - 1];
    }
    return pts;
  }

  std::uint64_t enumerate_antichains (std::size_t d, std::uint64_t ell, const antichain_visitor& visit,
                                      std::uint64_t limit) {
    const auto pts = grid_points (d, ell);
    std::vector<vector> chosen;
    std::uint64_t count = 0;

    // Candidates come in lexicographic order, so a later point can only lie
    // above an earlier one, never below.
    std::function<void (std::size_t)> grow = [&] (std::size_t from) {
      if (count >= limit)
        return;
      ++count;
      if (visit)
        visit (chosen);
      for (std::size_t q = from; q < pts.size () && count < limit; ++q) {
        bool free = std::none_of (chosen.begin (), chosen.end (),
                                  [&] (const vector& p) { return leq (p, pts[q]); });
        if (!free)
          continue;
        chosen.push_back (pts[q]);
        grow (q + 1);
        chosen.pop_back ();
      }
    };
    grow (0);
    return count;
  }

  std::uint64_t width (std::size_t d, std::uint64_t ell) {
    guard (d, ell, max_width_points);
    const auto pts = grid_points (d, ell);
    std::vector<std::vector<std::uint32_t>> adj (pts.size ());
    for (std::uint32_t u = 0; u < pts.size (); ++u)
      for (std::uint32_t v = u + 1; v < pts.size (); ++v)
        if (leq (pts[u], pts[v]))
          adj[u].push_back (v);
    return pts.size () - matcher (std::move (adj)).run ();
  }

  std::uint64_t layer_size (std::size_t d, std::uint64_t ell, std::uint64_t s) {
    check_params (d, ell);
    const std::uint64_t top = (ell - 1) * d;
    if (s > top)
      return 0;
    std::vector<big> dp (s + 1, 0), next (s + 1);
    dp[0] = 1;
    for (std::size_t i = 0; i < d; ++i) {
      std::fill (next.begin (), next.end (), 0);
      for (std::uint64_t t = 0; t <= s; ++t)
        if (dp[t] != 0)
          for (std::uint64_t x = 0; x < ell && t + x <= s; ++x)
            next[t + x] += dp[t];
      std::swap (dp, next);
    }
    if (dp[s] > std::numeric_limits<std::uint64_t>::max ())
      throw error ("layer size does not fit in 64 bits");
    return static_cast<std::uint64_t> (dp[s]);
  }

  std::vector<vector> layer (std::size_t d, std::uint64_t ell, std::uint64_t s) {
    auto pts = grid_points (d, ell);
    std::erase_if (pts, [&] (const vector& p) {
      return std::accumulate (p.begin (), p.end (), std::uint64_t {0}) != s;
    });
    return pts;
  }

  conjecture_report check_middle_layer_conjecture (std::size_t d, std::uint64_t ell) {
    conjecture_report r {};
    r.width = width (d, ell);
    const std::uint64_t top = (ell - 1) * d;
    for (std::uint64_t s = 0; s <= top; ++s) {
      const auto n = layer_size (d, ell, s);
      if (n > r.max_layer_size) {
        r.max_layer_size = n;
        r.argmax.clear ();
      }
      if (n == r.max_layer_size)
        r.argmax.push_back (s);
    }
    r.stated_index = ell * d / 2;
    r.stated_index_size = layer_size (d, ell, r.stated_index);
    r.midpoint = (ell - 1) * d / 2;
    r.midpoint_size = layer_size (d, ell, r.midpoint);
    r.equal = r.width == r.max_layer_size;
    return r;
  }

  random_result random_antichain (std::size_t k, std::size_t target, value_type maxval, std::uint64_t seed) {
    if (k == 0)
      throw error ("random antichains need a strictly positive dimension");
    if (target == 0)
      throw error ("the target size must be at least 1");
    rng gen (seed);
    std::vector<vector> kept;
    const std::uint64_t budget = std::uint64_t {100} * target;
    for (std::uint64_t draw = 0; draw < budget && kept.size () < target; ++draw) {
      vector v (k);
      for (std::size_t i = 0; i < k; ++i)
        v[i] = static_cast<value_type> (gen.below (std::uint64_t {maxval} + 1));
      if (std::any_of (kept.begin (), kept.end (), [&] (const vector& e) { return leq (v, e); }))
        continue;
      std::erase_if (kept, [&] (const vector& e) { return leq (e, v); });
      kept.push_back (std::move (v));
    }
    const bool short_of_target = kept.size () < target;
    return {antichain::from_incomparable (k, std::move (kept)), short_of_target};
  }

  antichain random_good_antichain_2d (std::uint64_t ell, std::uint64_t n, std::uint64_t seed) {
    check_params (2, ell);
    if (n > ell)
      throw error ("antichain size " + std::to_string (n) + " exceeds the grid side " + std::to_string (ell));
    rng gen (seed);
    auto subset = [&] {
      std::vector<value_type> pool (ell);
      std::iota (pool.begin (), pool.end (), value_type {0});
      for (std::uint64_t i = 0; i < n; ++i)
        std::swap (pool[i], pool[i + gen.below (ell - i)]);
      pool.resize (n);
      std::sort (pool.begin (), pool.end ());
      return pool;
    };
    const auto p = subset ();
    auto q = subset ();
    std::reverse (q.begin (), q.end ());
    std::vector<vector> pts;
    for (std::uint64_t i = 0; i < n; ++i)
      pts.push_back (vector {p[i], q[i]});
    return antichain::from_incomparable (2, std::move (pts));
  }
}
