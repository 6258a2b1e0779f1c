#include <downset/parity.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <downset/error.hh>

namespace downset::parity {
  std::string_view name (player p) {
    return p == player::even ? "even" : "odd";
  }

  game::game (std::vector<vertex> vertices) : vs {std::move (vertices)}, preds (vs.size ()) {
    for (std::uint32_t v = 0; v < vs.size (); ++v) {
      if (vs[v].succ.empty ())
        throw error ("vertex " + std::to_string (v) + " has no successors");
      for (auto w : vs[v].succ) {
        if (w >= vs.size ())
          throw error ("vertex " + std::to_string (v) + " has a dangling successor " + std::to_string (w));
        if (preds[w].empty () || preds[w].back () != v)
          preds[w].push_back (v);
      }
      max_prio = std::max (max_prio, vs[v].priority);
    }
  }

  namespace {
    std::string_view trim (std::string_view s) {
      const auto b = s.find_first_not_of (" \t\r\n");
      if (b == std::string_view::npos)
        return {};
      const auto e = s.find_last_not_of (" \t\r\n");
      return s.substr (b, e - b + 1);
    }

    std::vector<std::string_view> split_ws (std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t i = 0;
      while (i < s.size ()) {
        while (i < s.size () && std::isspace (static_cast<unsigned char> (s[i])))
          ++i;
        std::size_t j = i;
        while (j < s.size () && !std::isspace (static_cast<unsigned char> (s[j])))
          ++j;
        if (j > i)
          out.push_back (s.substr (i, j - i));
        i = j;
      }
      return out;
    }

    std::uint32_t number (std::string_view tok, std::size_t line, const char* what) {
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars (tok.data (), tok.data () + tok.size (), v);
      if (ec != std::errc {} || p != tok.data () + tok.size ())
        throw parse_error (line, std::string ("invalid ") + what + " '" + std::string (tok) + "'");
      return v;
    }
  }

  game parse_pgsolver (std::string_view text) {
    std::map<std::uint32_t, std::pair<vertex, std::size_t>> found;
    std::size_t line = 1, pos = 0;
    bool first = true;
    while (pos < text.size ()) {
      auto end = text.find (';', pos);
      const bool terminated = end != std::string_view::npos;
      if (!terminated)
        end = text.size ();
      std::string_view raw = text.substr (pos, end - pos);
      // Line of the record's first character.
      const auto lead = raw.find_first_not_of (" \t\r\n");
      std::size_t rec_line = line + std::count (raw.begin (), raw.begin () + (lead == std::string_view::npos ? raw.size () : lead), '\n');
      line += std::count (raw.begin (), raw.end (), '\n');
      pos = end + 1;
      std::string_view rec = trim (raw);
      if (rec.empty ())
        continue;
      if (!terminated)
        throw parse_error (rec_line, "record not terminated by ';'");

      std::string label;
      if (auto q = rec.find ('"'); q != std::string_view::npos) {
        const auto q2 = rec.rfind ('"');
        if (q2 == q)
          throw parse_error (rec_line, "unterminated vertex name");
        label = std::string (rec.substr (q + 1, q2 - q - 1));
        if (!trim (rec.substr (q2 + 1)).empty ())
          throw parse_error (rec_line, "unexpected text after vertex name");
        rec = trim (rec.substr (0, q));
      }
      auto toks = split_ws (rec);
      if (first && !toks.empty () && (toks[0] == "parity" || toks[0] == "start")) {
        if (toks.size () != 2)
          throw parse_error (rec_line, "malformed header");
        number (toks[1], rec_line, "header value");
        continue;
      }
      first = false;
      if (toks.size () < 3)
        throw parse_error (rec_line, "expected 'id priority owner successors'");
      vertex v;
      const auto id = number (toks[0], rec_line, "vertex id");
      v.priority = number (toks[1], rec_line, "priority");
      const auto owner = number (toks[2], rec_line, "owner");
      if (owner > 1)
        throw parse_error (rec_line, "owner must be 0 or 1");
      v.owner = owner == 0 ? player::even : player::odd;

      // Successors may carry spaces around commas; anything after the list
      // that is not attached by a comma is an unquoted name.
      std::string succ;
      std::size_t t = 3;
      for (; t < toks.size (); ++t) {
        if (!succ.empty () && succ.back () != ',' && toks[t].front () != ',')
          break;
        succ += toks[t];
      }
      if (t + 1 == toks.size () && label.empty ())
        label = std::string (toks[t]);
      else if (t < toks.size ())
        throw parse_error (rec_line, "unexpected token '" + std::string (toks[t]) + "'");
      if (succ.empty ())
        throw parse_error (rec_line, "vertex " + std::to_string (id) + " has no successors");
      std::string_view rest = succ;
      while (true) {
        const auto c = rest.find (',');
        v.succ.push_back (number (rest.substr (0, c), rec_line, "successor"));
        if (c == std::string_view::npos)
          break;
        rest.remove_prefix (c + 1);
      }
      v.label = std::move (label);
      if (found.contains (id))
        throw parse_error (rec_line, "vertex " + std::to_string (id) + " defined twice");
      found.emplace (id, std::make_pair (std::move (v), rec_line));
    }

    std::vector<vertex> vs;
    vs.reserve (found.size ());
    for (auto& [id, entry] : found) {
      if (id != vs.size ())
        throw parse_error (entry.second, "vertex ids must be 0.." + std::to_string (found.size () - 1));
      vs.push_back (std::move (entry.first));
    }
    for (const auto& [id, entry] : found)
      for (auto w : vs[id].succ)
        if (w >= vs.size ())
          throw parse_error (entry.second, "vertex " + std::to_string (id) + " has a dangling successor "
                                             + std::to_string (w));
    if (vs.empty ())
      throw error ("the game has no vertices");
    return game (std::move (vs));
  }

  game load_pgsolver (const std::string& path) {
    std::ifstream in (path);
    if (!in)
      throw error ("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf ();
    try {
      return parse_pgsolver (ss.str ());
    }
    catch (const error& e) {
      throw error (path + ": " + e.what ());
    }
  }

  std::string format_pgsolver (const game& g) {
    std::ostringstream os;
    os << "parity " << (g.size () == 0 ? 0 : g.size () - 1) << ";\n";
    for (std::size_t v = 0; v < g.size (); ++v) {
      const auto& x = g[v];
      os << v << ' ' << x.priority << ' ' << (x.owner == player::even ? 0 : 1) << ' ';
      for (std::size_t i = 0; i < x.succ.size (); ++i)
        os << (i ? "," : "") << x.succ[i];
      if (!x.label.empty ())
        os << " \"" << x.label << '"';
      os << ";\n";
    }
    return os.str ();
  }

  counter_space::counter_space (const game& g) {
    d = std::max<std::size_t> (1, (g.max_priority () + 1) / 2);
    caps.assign (d, 0);
    for (const auto& v : g.vertices ())
      if (v.priority % 2 == 1)
        ++caps[(v.priority + 1) / 2 - 1];
  }

  vector bwd (const vector& stored, std::uint32_t priority, const counter_space& cs) {
    if (stored.size () != cs.d)
      throw dimension_mismatch (cs.d, stored.size ());
    vector c = stored;
    if (priority % 2 == 1) {
      auto& x = c[(priority + 1) / 2 - 1];
      if (x > 0)
        --x;
    }
    else {
      // A counter that already reached -1 stays there: refilling happens only
      // for plays that have not been lost yet.
      const std::size_t i = std::min<std::size_t> (priority / 2, cs.d);
      for (std::size_t j = 0; j < i; ++j)
        if (c[j] > 0)
          c[j] = cs.caps[j] + 1;
    }
    return c;
  }

  counter_map initial_map (const game& g) {
    const counter_space cs (g);
    vector top (cs.d);
    for (std::size_t i = 0; i < cs.d; ++i)
      top[i] = cs.caps[i] + 1;
    return counter_map (g.size (), antichain (cs.d, {top}));
  }

  namespace {
    antichain update (std::uint32_t u, const counter_map& mu, const game& g, const counter_space& cs, backend b) {
      const auto& x = g[u];
      std::optional<antichain> acc;
      for (auto v : x.succ) {
        std::vector<vector> pre;
        pre.reserve (mu[v].size ());
        for (const auto& c : mu[v])
          pre.push_back (bwd (c, x.priority, cs));
        antichain dv = maxac (cs.d, std::move (pre));
        if (!acc)
          acc = std::move (dv);
        else if (x.owner == player::even)
          acc = unite (b, *acc, dv);
        else
          acc = intersect (b, *acc, dv);
      }
      return intersect (b, mu[u], *acc);
    }
  }

  step_result cpre_step (const counter_map& mu, const game& g, backend b) {
    const counter_space cs (g);
    step_result r {counter_map {}, {}};
    r.nu.reserve (g.size ());
    for (std::uint32_t u = 0; u < g.size (); ++u) {
      r.nu.push_back (update (u, mu, g, cs, b));
      if (r.nu.back () != mu[u])
        r.changed.push_back (u);
    }
    return r;
  }

  bool has_nonnegative (const antichain& a) {
    return std::any_of (a.begin (), a.end (), [] (const vector& c) {
      return std::all_of (c.begin (), c.end (), [] (value_type x) { return x >= 1; });
    });
  }

  solution solve (const game& g, backend b, order o) {
    const counter_space cs (g);
    solution s;
    s.fixpoint = initial_map (g);
    std::deque<std::uint32_t> work;
    std::vector<char> queued (g.size (), 1);
    for (std::uint32_t i = 0; i < g.size (); ++i)
      work.push_back (o == order::forward ? i : static_cast<std::uint32_t> (g.size () - 1 - i));
    while (!work.empty ()) {
      const auto u = work.front ();
      work.pop_front ();
      queued[u] = 0;
      ++s.iterations;
      auto nu = update (u, s.fixpoint, g, cs, b);
      if (nu == s.fixpoint[u])
        continue;
      s.fixpoint[u] = std::move (nu);
      for (auto p : g.predecessors (u))
        if (!queued[p]) {
          queued[p] = 1;
          work.push_back (p);
        }
    }
    s.winner.resize (g.size ());
    for (std::size_t v = 0; v < g.size (); ++v)
      s.winner[v] = has_nonnegative (s.fixpoint[v]) ? player::even : player::odd;
    return s;
  }

  std::uint32_t strategy_at (const game& g, const solution& s, std::uint32_t u) {
    if (u >= g.size ())
      throw error ("no vertex " + std::to_string (u));
    if (g[u].owner != player::even)
      throw error ("vertex " + std::to_string (u) + " is owned by odd");
    if (s.winner[u] != player::even)
      throw error ("vertex " + std::to_string (u) + " is not won by even");

    // Dimensions below the priority of u are irrelevant to the choice.
    const std::size_t p = g[u].priority;
    std::size_t from = 0;
    while (2 * (from + 1) < p)
      ++from;
    // Co-lexicographic comparison on dimensions from..d-1: the last one is
    // the most significant.
    auto colex_less = [from] (const vector& a, const vector& b) {
      for (std::size_t i = a.size (); i-- > from;)
        if (a[i] != b[i])
          return a[i] < b[i];
      return false;
    };

    std::optional<std::uint32_t> choice;
    std::optional<vector> best;
    for (auto v : g[u].succ)
      for (const auto& c : s.fixpoint[v]) {
        if (!std::all_of (c.begin (), c.end (), [] (value_type x) { return x >= 1; }))
          continue;
        if (!best || colex_less (*best, c)) {
          best = c;
          choice = v;
        }
      }
    if (!choice)
      throw error ("vertex " + std::to_string (u) + " has no winning successor");
    return *choice;
  }

  std::vector<std::optional<std::uint32_t>> synthesize_even_strategy (const game& g, const solution& s) {
    std::vector<std::optional<std::uint32_t>> out (g.size ());
    for (std::uint32_t u = 0; u < g.size (); ++u)
      if (g[u].owner == player::even && s.winner[u] == player::even)
        out[u] = strategy_at (g, s, u);
    return out;
  }

  namespace {
    using mask = std::vector<char>;

    mask attractor (const game& g, const mask& in, const mask& target, player who) {
      mask attr (g.size (), 0);
      std::vector<std::size_t> out_deg (g.size (), 0);
      std::deque<std::uint32_t> q;
      for (std::uint32_t v = 0; v < g.size (); ++v) {
        if (!in[v])
          continue;
        for (auto w : g[v].succ)
          out_deg[v] += in[w] ? 1 : 0;
        if (target[v]) {
          attr[v] = 1;
          q.push_back (v);
        }
      }
      while (!q.empty ()) {
        const auto x = q.front ();
        q.pop_front ();
        for (auto p : g.predecessors (x)) {
          if (!in[p] || attr[p])
            continue;
          if (g[p].owner == who || --out_deg[p] == 0) {
            attr[p] = 1;
            q.push_back (p);
          }
        }
      }
      return attr;
    }

    // Winning regions (even, odd) of the subgame induced by `in`.
    std::pair<mask, mask> zielonka_rec (const game& g, const mask& in) {
      const auto n = g.size ();
      mask none (n, 0);
      std::optional<std::uint32_t> top;
      for (std::uint32_t v = 0; v < n; ++v)
        if (in[v] && (!top || g[v].priority > *top))
          top = g[v].priority;
      if (!top)
        return {none, none};

      const player me = *top % 2 == 0 ? player::even : player::odd;
      mask at_top (n, 0);
      for (std::uint32_t v = 0; v < n; ++v)
        at_top[v] = in[v] && g[v].priority == *top;
      const mask a = attractor (g, in, at_top, me);
      mask rest (n, 0);
      for (std::uint32_t v = 0; v < n; ++v)
        rest[v] = in[v] && !a[v];

      auto [w_even, w_odd] = zielonka_rec (g, rest);
      mask& w_opp = me == player::even ? w_odd : w_even;
      if (std::none_of (w_opp.begin (), w_opp.end (), [] (char c) { return c; })) {
        mask all = in;
        return me == player::even ? std::pair {all, none} : std::pair {none, all};
      }
      const mask b = attractor (g, in, w_opp, me == player::even ? player::odd : player::even);
      mask rest2 (n, 0);
      for (std::uint32_t v = 0; v < n; ++v)
        rest2[v] = in[v] && !b[v];
      auto [w2_even, w2_odd] = zielonka_rec (g, rest2);
      mask& opp2 = me == player::even ? w2_odd : w2_even;
      for (std::uint32_t v = 0; v < n; ++v)
        opp2[v] = opp2[v] || b[v];
      return {w2_even, w2_odd};
    }
  }

  std::vector<player> zielonka (const game& g) {
    const auto [w_even, w_odd] = zielonka_rec (g, mask (g.size (), 1));
    std::vector<player> out (g.size ());
    for (std::size_t v = 0; v < g.size (); ++v)
      out[v] = w_even[v] ? player::even : player::odd;
    return out;
  }

  bool check_even_strategy (const game& g, const std::vector<player>& winner,
                            const std::vector<std::optional<std::uint32_t>>& strategy) {
    const auto n = g.size ();
    if (winner.size () != n || strategy.size () != n)
      return false;
    std::vector<std::vector<std::uint32_t>> edges (n);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (winner[v] != player::even)
        continue;
      if (g[v].owner == player::even) {
        const auto& s = strategy[v];
        if (!s || std::find (g[v].succ.begin (), g[v].succ.end (), *s) == g[v].succ.end ()
            || winner[*s] != player::even)
          return false;
        edges[v].push_back (*s);
      }
      else {
        for (auto w : g[v].succ)
          if (winner[w] != player::even)
            return false;
        edges[v] = g[v].succ;
      }
    }

    // For each odd priority q: no cycle through a q-vertex among the
    // vertices of priority <= q, found as a nontrivial strongly connected
    // component (Tarjan).
    for (std::uint32_t q = 1; q <= g.max_priority (); q += 2) {
      std::vector<char> in (n, 0);
      bool any = false;
      for (std::uint32_t v = 0; v < n; ++v) {
        in[v] = winner[v] == player::even && g[v].priority <= q;
        any = any || (in[v] && g[v].priority == q);
      }
      if (!any)
        continue;
      std::vector<std::int64_t> index (n, -1), low (n, 0);
      std::vector<char> on_stack (n, 0);
      std::vector<std::uint32_t> stack;
      std::int64_t counter = 0;
      bool bad = false;
      std::function<void (std::uint32_t)> connect = [&] (std::uint32_t v) {
        index[v] = low[v] = counter++;
        stack.push_back (v);
        on_stack[v] = 1;
        for (auto w : edges[v]) {
          if (!in[w])
            continue;
          if (index[w] < 0) {
            connect (w);
            low[v] = std::min (low[v], low[w]);
          }
          else if (on_stack[w])
            low[v] = std::min (low[v], index[w]);
        }
        if (low[v] != index[v])
          return;
        std::vector<std::uint32_t> comp;
        std::uint32_t w;
        do {
          w = stack.back ();
          stack.pop_back ();
          on_stack[w] = 0;
          comp.push_back (w);
        } while (w != v);
        const bool cyclic = comp.size () > 1
          || std::find (edges[v].begin (), edges[v].end (), v) != edges[v].end ();
        if (cyclic && std::any_of (comp.begin (), comp.end (), [&] (std::uint32_t x) { return g[x].priority == q; }))
          bad = true;
      };
      for (std::uint32_t v = 0; v < n && !bad; ++v)
        if (in[v] && index[v] < 0)
          connect (v);
      if (bad)
        return false;
    }
    return true;
  }
}
