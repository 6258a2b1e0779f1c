#include "cli.hh"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <downset/adaptive.hh>
#include <downset/backend.hh>
#include <downset/bench.hh>
#include <downset/combinatorics.hh>
#include <downset/cst.hh>
#include <downset/error.hh>
#include <downset/io.hh>
#include <downset/parity.hh>
#include <downset/sharing_tree.hh>

namespace downset::cli {
  namespace {
    struct options {
        std::string backend_name = "list";
        bool stats = false;
        bool check = false;
        std::string dot;

        std::string set_path, vec, a_path, b_path, out_path;
        std::string game_path, strategy_path;
        std::size_t dim = 0, k = 0, m = 0;
        std::uint64_t ell = 0, seed = 0;
        std::optional<std::uint64_t> n;
        std::optional<value_type> maxval;
        std::string op = "membership", metric = "comparisons", csv, backends = "list,kdtree";
        std::vector<std::size_t> sizes;
    };

    void print_stats (std::ostream& os, const op_stats& st) {
      os << "comparisons " << st.comparisons << '\n'
         << "node_visits " << st.node_visits << '\n'
         << "meets " << st.meets << '\n';
    }

    void dump_dot (const options& o, const antichain& a) {
      std::ofstream f (o.dot);
      if (!f)
        throw error ("cannot write " + o.dot);
      const auto b = parse_backend (o.backend_name);
      if (b == backend::sharingtree)
        st::tree (a).write_dot (f);
      else if (b == backend::cst)
        cst::tree::build (a).write_dot (f);
      else
        throw error ("--dump-dot needs --backend sharingtree or cst");
    }

    void write_output (const options& o, const antichain& a, std::ostream& out) {
      if (o.out_path.empty ())
        write_vector_set (out, a);
      else
        save_vector_set (o.out_path, a);
    }

    int cmd_member (const options& o, std::ostream& out) {
      const auto b = parse_backend (o.backend_name);
      const auto a = load_vector_set (o.set_path);
      const auto u = parse_vector_literal (o.vec);
      op_stats st;
      const bool r = member (b, a, u, &st);
      out << (r ? "true" : "false") << '\n';
      if (o.stats)
        print_stats (out, st);
      if (o.check)
        for (auto other : all_backends)
          if (member (other, a, u) != r)
            throw error ("backend " + std::string (name (other)) + " disagrees");
      if (!o.dot.empty ())
        dump_dot (o, a);
      return 0;
    }

    int cmd_setop (const options& o, bool is_union, std::ostream& out, std::ostream& err) {
      const auto b = parse_backend (o.backend_name);
      const auto a = load_vector_set (o.a_path);
      const auto c = load_vector_set (o.b_path);
      op_stats st;
      const auto r = is_union ? unite (b, a, c, &st) : intersect (b, a, c, &st);
      if (o.check)
        for (auto other : all_backends)
          if ((is_union ? unite (other, a, c) : intersect (other, a, c)) != r)
            throw error ("backend " + std::string (name (other)) + " disagrees");
      write_output (o, r, out);
      if (o.stats) {
        err << "size_a " << a.size () << '\n' << "size_b " << c.size () << '\n' << "size_out " << r.size () << '\n';
        print_stats (err, st);
      }
      if (!o.dot.empty ())
        dump_dot (o, r);
      return 0;
    }

    int cmd_parity (const options& o, std::ostream& out, std::ostream& err) {
      using namespace parity;
      const auto b = parse_backend (o.backend_name);
      const auto g = load_pgsolver (o.game_path);
      const auto s = solve (g, b);
      const auto strat = synthesize_even_strategy (g, s);
      for (std::size_t v = 0; v < g.size (); ++v)
        out << v << ' ' << name (s.winner[v]) << '\n';
      if (!o.strategy_path.empty ()) {
        std::ofstream f (o.strategy_path);
        if (!f)
          throw error ("cannot write " + o.strategy_path);
        for (std::size_t v = 0; v < g.size (); ++v) {
          f << v << ' ' << name (s.winner[v]);
          if (strat[v])
            f << ' ' << *strat[v];
          f << '\n';
        }
      }
      if (o.stats)
        err << "iterations " << s.iterations << '\n';
      if (o.check) {
        if (zielonka (g) != s.winner) {
          err << "error: winners differ from the recursive oracle\n";
          return 1;
        }
        if (!check_even_strategy (g, s.winner, strat)) {
          err << "error: the synthesized strategy is not winning\n";
          return 1;
        }
      }
      return 0;
    }

    int cmd_count (const options& o, std::ostream& out) {
      if (o.dim == 2) {
        out << comb::count_2d (o.ell, o.n) << '\n';
        return 0;
      }
      std::uint64_t hits = 0;
      const auto total = comb::enumerate_antichains (o.dim, o.ell, [&] (std::span<const vector> a) {
        if (o.n && a.size () == *o.n)
          ++hits;
      });
      out << (o.n ? hits : total) << '\n';
      return 0;
    }

    int cmd_conjecture (const options& o, std::ostream& out) {
      const auto r = comb::check_middle_layer_conjecture (o.dim, o.ell);
      out << "width " << r.width << '\n' << "max_layer_size " << r.max_layer_size << '\n' << "argmax";
      for (auto s : r.argmax)
        out << ' ' << s;
      out << '\n'
          << "stated_index " << r.stated_index << ' ' << r.stated_index_size << '\n'
          << "midpoint " << r.midpoint << ' ' << r.midpoint_size << '\n'
          << "equal " << (r.equal ? "true" : "false") << '\n';
      return 0;
    }

    int cmd_gen (const options& o, std::ostream& out, std::ostream& err) {
      const auto r = comb::random_antichain (o.k, o.m, o.maxval.value_or (0), o.seed);
      if (r.short_of_target)
        err << "warning: reached only " << r.set.size () << " of " << o.m << " elements\n";
      write_output (o, r.set, out);
      return 0;
    }

    int cmd_bench (const options& o, std::ostream& out) {
      bench::spec s;
      s.op = bench::parse_operation (o.op);
      s.sizes = o.sizes;
      s.k = o.k;
      s.maxval = o.maxval;
      s.seed = o.seed;
      s.measure = bench::parse_metric (o.metric);
      s.backends.clear ();
      std::stringstream names (o.backends);
      for (std::string part; std::getline (names, part, ',');)
        s.backends.push_back (parse_backend (part));
      const auto rows = bench::run (s);
      if (o.csv.empty ())
        bench::write_csv (out, rows);
      else
        bench::emit_csv (rows, o.csv);
      return 0;
    }
  }

  int run (int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app {"Downward-closed sets of natural vectors"};
    app.require_subcommand (1);
    app.fallthrough ();
    options o;
    app.add_option ("--backend", o.backend_name, "list, kdtree, sharingtree, cst or adaptive")
      ->check (CLI::IsMember ({"list", "kdtree", "sharingtree", "cst", "adaptive"}));
    app.add_flag ("--stats", o.stats, "Print operation counters");
    app.add_flag ("--check", o.check, "Cross-check against the other backends or oracles");
    app.add_option ("--dump-dot", o.dot, "Write the sharing tree of the result as DOT");

    auto* member = app.add_subcommand ("member", "Membership of a vector in a downset");
    member->add_option ("set", o.set_path)->required ();
    member->add_option ("vector", o.vec, "e.g. \"1 0 2\"")->required ();

    CLI::App* setops[2];
    for (int i = 0; i < 2; ++i) {
      setops[i] = app.add_subcommand (i == 0 ? "union" : "intersect", i == 0 ? "Union of two downsets"
                                                                             : "Intersection of two downsets");
      setops[i]->add_option ("a", o.a_path)->required ();
      setops[i]->add_option ("b", o.b_path)->required ();
      setops[i]->add_option ("-o,--output", o.out_path);
    }

    auto* solve = app.add_subcommand ("solve-parity", "Solve a parity game in pgsolver format");
    solve->add_option ("game", o.game_path)->required ();
    solve->add_option ("--strategy", o.strategy_path, "Write winners and even's strategy");

    auto* count = app.add_subcommand ("count", "Count antichains of [l]^d");
    auto* width = app.add_subcommand ("width", "Width of [l]^d");
    auto* conj = app.add_subcommand ("conjecture", "Compare the width with the largest layer");
    for (auto* c : {count, width, conj}) {
      c->add_option ("--dim", o.dim)->required ()->check (CLI::PositiveNumber);
      c->add_option ("--ell", o.ell)->required ()->check (CLI::PositiveNumber);
    }
    count->add_option ("--n", o.n, "Only antichains of this size");

    auto* gen = app.add_subcommand ("gen", "Random antichain");
    gen->add_option ("--k", o.k)->required ()->check (CLI::PositiveNumber);
    gen->add_option ("--m", o.m)->required ()->check (CLI::PositiveNumber);
    gen->add_option ("--maxval", o.maxval)->required ();
    gen->add_option ("--seed", o.seed)->required ();
    gen->add_option ("-o,--output", o.out_path);

    auto* bench = app.add_subcommand ("bench", "Random benchmarks as CSV");
    bench->add_option ("--op", o.op, "membership, union or intersection")->required ();
    bench->add_option ("--sizes", o.sizes)->required ()->delimiter (',');
    bench->add_option ("--k", o.k)->default_val (512)->check (CLI::PositiveNumber);
    bench->add_option ("--maxval", o.maxval, "Defaults to 2t");
    bench->add_option ("--seed", o.seed)->required ();
    bench->add_option ("--metric", o.metric)->default_val ("comparisons");
    bench->add_option ("--csv", o.csv);
    bench->add_option ("--backends", o.backends)->default_val ("list,kdtree");

    try {
      app.parse (argc, argv);
    }
    catch (const CLI::ParseError& e) {
      const int code = app.exit (e, out, err);
      return code == 0 ? 0 : 2;
    }
    if (!o.dot.empty () && o.backend_name != "sharingtree" && o.backend_name != "cst") {
      err << "error: --dump-dot needs --backend sharingtree or cst\n";
      return 2;
    }

    try {
      if (member->parsed ())
        return cmd_member (o, out);
      if (setops[0]->parsed ())
        return cmd_setop (o, true, out, err);
      if (setops[1]->parsed ())
        return cmd_setop (o, false, out, err);
      if (solve->parsed ())
        return cmd_parity (o, out, err);
      if (count->parsed ())
        return cmd_count (o, out);
      if (width->parsed ()) {
        out << comb::width (o.dim, o.ell) << '\n';
        return 0;
      }
      if (conj->parsed ())
        return cmd_conjecture (o, out);
      if (gen->parsed ())
        return cmd_gen (o, out, err);
      if (bench->parsed ())
        return cmd_bench (o, out);
    }
    catch (const std::exception& e) {
      err << "error: " << e.what () << '\n';
      return 1;
    }
    return 2;
  }
}
