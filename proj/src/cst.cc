#include <downset/cst.hh>

#include <algorithm>
#include <functional>
#include <ostream>

namespace downset::cst {
  store::store (std::size_t dim) : k {dim}, cache (dim + 1) {
    if (dim == 0)
      throw error ("covering sharing trees need a strictly positive dimension");
  }

  std::uint32_t store::intern (std::uint32_t layer, value_type value, std::vector<std::uint32_t> succ) {
    auto key = std::make_pair (value, succ);
    auto it = cache[layer].find (key);
    if (it != cache[layer].end ())
      return it->second;
    const auto id = static_cast<std::uint32_t> (nodes.size ());
    nodes.push_back ({layer, value, std::move (succ)});
    cache[layer].emplace (std::move (key), id);
    return id;
  }

  bool store::simulates (std::uint32_t a, std::uint32_t b) {
    if (a == b)
      return true;
    const auto& na = nodes[a];
    const auto& nb = nodes[b];
    if (na.layer != nb.layer)
      throw error ("simulation is only defined between nodes of the same layer");
    if (na.value > nb.value)
      return false;
    const auto key = (std::uint64_t {a} << 32) | b;
    if (auto it = sim_memo.find (key); it != sim_memo.end ())
      return it->second;

    bool ok = true;
    for (auto s : na.succ) {
      bool covered = false;
      const value_type vs = nodes[s].value;
      for (auto t : nodes[b].succ) {
        if (nodes[t].value < vs)
          break;
        if (simulates (s, t)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        ok = false;
        break;
      }
    }
    sim_memo[key] = ok;
    return ok;
  }

  bool store::add_if_not_simulated (std::vector<std::uint32_t>& succ, std::uint32_t c) {
    for (auto e : succ)
      if (simulates (c, e))
        return false;
    succ.push_back (c);
    return true;
  }

  void store::add_bidirectional (std::vector<std::uint32_t>& succ, std::uint32_t c) {
    for (auto e : succ)
      if (simulates (c, e))
        return;
    const value_type v = nodes[c].value;
    auto same = std::find_if (succ.begin (), succ.end (),
                              [&] (std::uint32_t e) { return nodes[e].value == v; });
    if (same != succ.end ()) {
      c = unite (*same, c);
      succ.erase (same);
      for (auto e : succ)
        if (simulates (c, e))
          return;
    }
    std::erase_if (succ, [&] (std::uint32_t e) { return simulates (e, c); });
    auto pos = std::find_if (succ.begin (), succ.end (),
                             [&] (std::uint32_t e) { return nodes[e].value < v; });
    succ.insert (pos, c);
  }

  std::uint32_t store::unite (std::uint32_t a, std::uint32_t b) {
    if (a == b)
      return a;
    if (auto it = union_memo.find ({a, b}); it != union_memo.end ())
      return it->second;
    const auto layer = nodes[a].layer;
    const auto value = nodes[a].value;
    std::vector<std::uint32_t> out;
    if (layer < k) {
      const auto sa = nodes[a].succ;
      const auto sb = nodes[b].succ;
      std::size_t i = 0, j = 0;
      while (i < sa.size () || j < sb.size ()) {
        std::uint32_t cand;
        if (i == sa.size () || (j < sb.size () && nodes[sa[i]].value < nodes[sb[j]].value))
          cand = sb[j++];
        else if (j == sb.size () || nodes[sa[i]].value > nodes[sb[j]].value)
          cand = sa[i++];
        else
          cand = unite (sa[i++], sb[j++]);
        add_if_not_simulated (out, cand);
      }
    }
    const auto r = intern (layer, value, std::move (out));
    union_memo[{a, b}] = r;
    return r;
  }

  std::optional<std::uint32_t> store::intersect (std::uint32_t a, std::uint32_t b) {
    if (auto it = inter_memo.find ({a, b}); it != inter_memo.end ())
      return it->second;
    const auto layer = nodes[a].layer;
    const auto value = std::min (nodes[a].value, nodes[b].value);
    std::optional<std::uint32_t> r;
    if (layer == k)
      r = intern (layer, value, {});
    else {
      std::vector<std::uint32_t> out;
      const auto sa = nodes[a].succ;
      const auto sb = nodes[b].succ;
      for (auto x : sa)
        for (auto y : sb)
          if (auto c = intersect (x, y))
            add_bidirectional (out, *c);
      // A node below the last layer without successors encodes nothing.
      if (!out.empty ())
        r = intern (layer, value, std::move (out));
    }
    inter_memo[{a, b}] = r;
    return r;
  }

  std::uint32_t store::import (const tree& t, std::uint32_t id) {
    if (auto it = import_memo.find ({&t, id}); it != import_memo.end ())
      return it->second;
    const auto& n = t.nodes ()[id];
    std::vector<std::uint32_t> succ;
    succ.reserve (n.succ.size ());
    for (auto s : n.succ)
      succ.push_back (import (t, s));
    const auto r = intern (n.layer, n.value, std::move (succ));
    import_memo[{&t, id}] = r;
    return r;
  }

  std::uint32_t store::build (std::vector<vector> vectors) {
    for (const auto& v : vectors)
      if (v.size () != k)
        throw dimension_mismatch (k, v.size ());
    std::sort (vectors.begin (), vectors.end (), std::greater<> {});
    vectors.erase (std::unique (vectors.begin (), vectors.end ()), vectors.end ());

    std::function<std::uint32_t (std::size_t, std::size_t, std::uint32_t)> rec =
      [&] (std::size_t first, std::size_t last, std::uint32_t layer) -> std::uint32_t {
        const value_type value = layer == 0 ? tree::top : vectors[first][layer - 1];
        std::vector<std::uint32_t> succ;
        if (layer < k)
          for (std::size_t b = first; b < last;) {
            std::size_t e = b + 1;
            while (e < last && vectors[e][layer] == vectors[b][layer])
              ++e;
            // Children arrive in decreasing value order, so only an existing
            // sibling can simulate the newcomer.
            add_if_not_simulated (succ, rec (b, e, layer + 1));
            b = e;
          }
        return intern (layer, value, std::move (succ));
      };
    return rec (0, vectors.size (), 0);
  }

  tree::tree (std::size_t dim) : k {dim} {
    if (dim == 0)
      throw error ("covering sharing trees need a strictly positive dimension");
    nodes_.push_back ({0, top, {}});
  }

  tree::tree (const store& s, std::optional<std::uint32_t> root) : tree (s.dim ()) {
    if (!root || s.at (*root).succ.empty ())
      return;
    nodes_.clear ();
    empty_ = false;
    std::unordered_map<std::uint32_t, std::uint32_t> renum;
    // Preorder numbering: the root gets 0 and ids are deterministic.
    std::function<std::uint32_t (std::uint32_t)> copy = [&] (std::uint32_t id) -> std::uint32_t {
      if (auto it = renum.find (id); it != renum.end ())
        return it->second;
      const auto me = static_cast<std::uint32_t> (nodes_.size ());
      renum[id] = me;
      const auto& n = s.at (id);
      nodes_.push_back ({n.layer, n.value, {}});
      std::vector<std::uint32_t> succ;
      for (auto c : n.succ)
        succ.push_back (copy (c));
      nodes_[me].succ = std::move (succ);
      return me;
    };
    copy (*root);
  }

  tree tree::build (std::size_t dim, std::vector<vector> vectors) {
    store s (dim);
    if (vectors.empty ())
      return tree (dim);
    const auto r = s.build (std::move (vectors));
    return tree (s, r);
  }

  bool tree::member (const vector& u, op_stats* stats) const {
    if (u.size () != k)
      throw dimension_mismatch (k, u.size ());
    if (empty_)
      return false;
    op_stats local;
    std::vector<char> failed (nodes_.size (), 0);
    std::function<bool (std::uint32_t)> dfs = [&] (std::uint32_t id) -> bool {
      ++local.node_visits;
      const auto& n = nodes_[id];
      if (n.layer == k)
        return true;
      if (failed[id])
        return false;
      const value_type want = u[n.layer];
      for (auto s : n.succ) {
        ++local.comparisons;
        if (nodes_[s].value < want)
          break;
        if (dfs (s))
          return true;
      }
      failed[id] = 1;
      return false;
    };
    const bool r = dfs (root ());
    accumulate (stats, local);
    return r;
  }

  bool tree::simulates (std::uint32_t a, std::uint32_t b) const {
    if (nodes_.at (a).layer != nodes_.at (b).layer)
      throw error ("simulation is only defined between nodes of the same layer");
    std::map<std::pair<std::uint32_t, std::uint32_t>, bool> memo;
    std::function<bool (std::uint32_t, std::uint32_t)> sim = [&] (std::uint32_t x, std::uint32_t y) {
      if (x == y)
        return true;
      if (nodes_[x].value > nodes_[y].value)
        return false;
      if (auto it = memo.find ({x, y}); it != memo.end ())
        return it->second;
      bool ok = std::all_of (nodes_[x].succ.begin (), nodes_[x].succ.end (), [&] (std::uint32_t s) {
        return std::any_of (nodes_[y].succ.begin (), nodes_[y].succ.end (),
                            [&] (std::uint32_t t) { return sim (s, t); });
      });
      memo[{x, y}] = ok;
      return ok;
    };
    return sim (a, b);
  }

  bool tree::is_simulation_minimal () const {
    for (const auto& n : nodes_) {
      for (std::size_t i = 0; i + 1 < n.succ.size (); ++i)
        if (nodes_[n.succ[i]].value <= nodes_[n.succ[i + 1]].value)
          return false;
      for (auto a : n.succ)
        for (auto b : n.succ)
          if (a != b && simulates (a, b))
            return false;
      if (n.layer < k && n.succ.empty () && !empty_)
        return false;
    }
    return true;
  }

  std::vector<vector> tree::language () const {
    std::vector<vector> out;
    if (empty_)
      return out;
    vector cur (k);
    std::function<void (std::uint32_t)> walk = [&] (std::uint32_t id) {
      const auto& n = nodes_[id];
      if (n.layer > 0)
        cur[n.layer - 1] = n.value;
      if (n.layer == k) {
        out.push_back (cur);
        return;
      }
      for (auto s : n.succ)
        walk (s);
    };
    walk (root ());
    std::sort (out.begin (), out.end ());
    return out;
  }

  antichain tree::to_antichain () const {
    return maxac (k, language ());
  }

  void tree::write_dot (std::ostream& os) const {
    os << "digraph covering_sharing_tree {\n";
    for (std::uint32_t i = 0; i < nodes_.size (); ++i) {
      const auto& n = nodes_[i];
      os << "  n" << i << " [label=\"" << n.layer << ':';
      if (n.layer == 0)
        os << "T";
      else
        os << n.value;
      os << "\"];\n";
      for (auto s : n.succ)
        os << "  n" << i << " -> n" << s << ";\n";
    }
    os << "}\n";
  }

  tree unite (const tree& s, const tree& t) {
    if (s.dim () != t.dim ())
      throw dimension_mismatch (s.dim (), t.dim ());
    if (s.empty ())
      return t;
    if (t.empty ())
      return s;
    store st (s.dim ());
    const auto a = st.import (s, s.root ());
    const auto b = st.import (t, t.root ());
    return tree (st, st.unite (a, b));
  }

  tree intersect (const tree& s, const tree& t) {
    if (s.dim () != t.dim ())
      throw dimension_mismatch (s.dim (), t.dim ());
    if (s.empty () || t.empty ())
      return tree (s.dim ());
    store st (s.dim ());
    const auto a = st.import (s, s.root ());
    const auto b = st.import (t, t.root ());
    return tree (st, st.intersect (a, b));
  }
}
