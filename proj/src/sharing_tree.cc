#include <downset/sharing_tree.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

namespace downset::st {
  std::pair<antichain, compression_table> compress (const antichain& a) {
    if (a.empty ())
      throw error ("cannot compress an empty antichain");
    const std::size_t k = a.dim ();
    compression_table table;
    table.sorted.resize (k);
    for (std::size_t i = 0; i < k; ++i) {
      auto& col = table.sorted[i];
      for (const auto& v : a)
        col.push_back (v[i]);
      std::sort (col.begin (), col.end ());
      col.erase (std::unique (col.begin (), col.end ()), col.end ());
    }
    std::vector<vector> ranks;
    ranks.reserve (a.size ());
    for (const auto& v : a) {
      vector r (k);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& col = table.sorted[i];
        r[i] = static_cast<value_type> (std::lower_bound (col.begin (), col.end (), v[i]) - col.begin ());
      }
      ranks.push_back (std::move (r));
    }
    // Rank encoding is order-isomorphic per dimension, so incomparability is kept.
    return {antichain::from_incomparable (k, std::move (ranks)), std::move (table)};
  }

  antichain decompress (const antichain& compressed, const compression_table& table) {
    std::vector<vector> out;
    for (const auto& r : compressed) {
      vector v (r.size ());
      for (std::size_t i = 0; i < r.size (); ++i)
        v[i] = table.decode (i, r[i]);
      out.push_back (std::move (v));
    }
    return antichain::from_incomparable (compressed.dim (), std::move (out));
  }

  tree::tree (const antichain& a) : tree (a.dim (), a.elements (), true) {}

  tree::tree (std::size_t dim, std::vector<vector> vectors, bool allow_compression) : k {dim} {
    if (dim == 0)
      throw error ("sharing trees need a strictly positive dimension");
    for (const auto& v : vectors)
      if (v.size () != dim)
        throw dimension_mismatch (dim, v.size ());

    layers_.resize (k + 1);
    std::sort (vectors.begin (), vectors.end (), std::greater<> {});
    vectors.erase (std::unique (vectors.begin (), vectors.end ()), vectors.end ());
    empty_ = vectors.empty ();

    value_type w = 0;
    for (const auto& v : vectors)
      for (auto x : v)
        w = std::max (w, x);
    if (allow_compression && !empty_ && w > vectors.size ()) {
      compression_table t;
      t.sorted.resize (k);
      for (std::size_t i = 0; i < k; ++i) {
        auto& col = t.sorted[i];
        for (const auto& v : vectors)
          col.push_back (v[i]);
        std::sort (col.begin (), col.end ());
        col.erase (std::unique (col.begin (), col.end ()), col.end ());
      }
      for (auto& v : vectors)
        for (std::size_t i = 0; i < k; ++i) {
          const auto& col = t.sorted[i];
          v[i] = static_cast<value_type> (std::lower_bound (col.begin (), col.end (), v[i]) - col.begin ());
        }
      table = std::move (t);
      // Ranks preserve the lexicographic order, so the rows stay sorted.
    }

    // Bottom-up identification of equal subtrees, keyed by (value, successors).
    std::vector<std::map<std::pair<value_type, std::vector<std::uint32_t>>, std::uint32_t>> cache (k + 1);
    auto intern = [&] (std::size_t layer, value_type value, std::vector<std::uint32_t> succ) {
      auto key = std::make_pair (value, succ);
      auto it = cache[layer].find (key);
      if (it != cache[layer].end ())
        return it->second;
      const auto id = static_cast<std::uint32_t> (layers_[layer].size ());
      layers_[layer].push_back ({value, std::move (succ)});
      cache[layer].emplace (std::move (key), id);
      return id;
    };

    // Rows in [first, last) share their first `layer` components.
    std::function<std::uint32_t (std::size_t, std::size_t, std::size_t)> build =
      [&] (std::size_t first, std::size_t last, std::size_t layer) -> std::uint32_t {
        const value_type value = layer == 0 ? top : vectors[first][layer - 1];
        if (layer == k)
          return intern (layer, value, {});
        std::vector<std::uint32_t> succ;
        for (std::size_t b = first; b < last;) {
          std::size_t e = b + 1;
          while (e < last && vectors[e][layer] == vectors[b][layer])
            ++e;
          succ.push_back (build (b, e, layer + 1));
          b = e;
        }
        return intern (layer, value, std::move (succ));
      };

    if (empty_)
      layers_[0].push_back ({top, {}});
    else
      build (0, vectors.size (), 0);

    offsets.resize (k + 2, 0);
    for (std::size_t l = 0; l <= k; ++l)
      offsets[l + 1] = offsets[l] + layers_[l].size ();
  }

  std::size_t tree::node_count () const noexcept {
    return offsets.back ();
  }

  std::size_t tree::edge_count () const noexcept {
    std::size_t e = 0;
    for (const auto& layer : layers_)
      for (const auto& n : layer)
        e += n.succ.size ();
    return e;
  }

  // Depth-first search for a dominating path.  Failed (node, strictness)
  // states are remembered so shared subtrees are explored once per query.
  struct tree::dfs {
      const tree& t;
      std::span<const value_type> u;
      bool strict;
      std::vector<std::uint8_t> failed;
      op_stats local {};

      bool run (std::size_t layer, std::uint32_t idx, bool strictly) {
        ++local.node_visits;
        if (layer == t.k)
          return !strict || strictly;
        const std::uint8_t bit = strictly ? 2 : 1;
        auto& mark = failed[t.offsets[layer] + idx];
        if (mark & bit)
          return false;

        const auto& succ = t.layers_[layer][idx].succ;
        const value_type want = u[layer];
        if (layer + 1 == t.k) {
          // Successors are decreasing: the first one decides.
          ++local.comparisons;
          const value_type best = t.value_of (layer + 1, succ.front ());
          const bool ok = (strict && !strictly) ? best > want : best >= want;
          if (!ok)
            mark |= bit;
          return ok;
        }
        for (auto s : succ) {
          ++local.comparisons;
          const value_type v = t.value_of (layer + 1, s);
          if (v < want)
            break;  // the remaining successors are smaller still
          if (run (layer + 1, s, strictly || v > want))
            return true;
        }
        mark |= bit;
        return false;
      }
  };

  bool tree::member (const vector& u, op_stats* stats) const {
    if (u.size () != k)
      throw dimension_mismatch (k, u.size ());
    if (empty_)
      return false;
    dfs d {.t = *this, .u = u.span (), .strict = false, .failed = std::vector<std::uint8_t> (node_count (), 0)};
    const bool r = d.run (0, 0, false);
    accumulate (stats, d.local);
    return r;
  }

  bool tree::strict_member (const vector& u, op_stats* stats) const {
    if (u.size () != k)
      throw dimension_mismatch (k, u.size ());
    if (empty_)
      return false;
    dfs d {.t = *this, .u = u.span (), .strict = true, .failed = std::vector<std::uint8_t> (node_count (), 0)};
    const bool r = d.run (0, 0, false);
    accumulate (stats, d.local);
    return r;
  }

  std::vector<vector> tree::language () const {
    std::vector<vector> out;
    if (empty_)
      return out;
    vector cur (k);
    std::function<void (std::size_t, std::uint32_t)> walk = [&] (std::size_t layer, std::uint32_t idx) {
      if (layer > 0)
        cur[layer - 1] = value_of (layer, idx);
      if (layer == k) {
        out.push_back (cur);
        return;
      }
      for (auto s : layers_[layer][idx].succ)
        walk (layer + 1, s);
    };
    walk (0, 0);
    std::sort (out.begin (), out.end ());
    return out;
  }

  void tree::write_dot (std::ostream& os) const {
    os << "digraph sharing_tree {\n";
    for (std::size_t l = 0; l <= k; ++l)
      for (std::uint32_t i = 0; i < layers_[l].size (); ++i) {
        os << "  n" << l << '_' << i << " [label=\"" << l << ':';
        if (l == 0)
          os << "T";
        else
          os << value_of (l, i);
        os << "\"];\n";
        for (auto s : layers_[l][i].succ)
          os << "  n" << l << '_' << i << " -> n" << l + 1 << '_' << s << ";\n";
      }
    os << "}\n";
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
    // Minimization already removes duplicate meets.
    const tree t (a.dim (), std::move (meets));
    std::vector<vector> survivors;
    for (auto& v : t.language ())
      if (!t.strict_member (v, stats))
        survivors.push_back (std::move (v));
    return antichain::from_incomparable (a.dim (), std::move (survivors));
  }
}
