#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <downset/error.hh>
#include <downset/parity.hh>

#include "oracles.hh"

using namespace downset;
using namespace downset::parity;

namespace {
  game odd_self_loop () { return parse_pgsolver ("parity 0; 0 1 1 0;"); }
  game even_self_loop () { return parse_pgsolver ("parity 1; 0 2 0 0;"); }
  // v0 even-owned priority 1 with edges to v0 and v1; v1 priority 2 self-loop.
  game escape () { return parse_pgsolver ("0 1 0 0,1; 1 2 0 1;"); }

  bool closure_within (const antichain& inner, const antichain& outer) {
    return std::all_of (inner.begin (), inner.end (),
                        [&] (const vector& c) { return oracle::below_some (outer.elements (), c); });
  }
}

TEST_CASE ("pgsolver parsing") {
  auto g = parse_pgsolver ("parity 1; 0 2 0 0;");
  CHECK (g.size () == 1);
  CHECK (g[0].priority == 2);
  CHECK (g[0].owner == player::even);
  CHECK (g[0].succ == std::vector<std::uint32_t> {0});

  auto h = parse_pgsolver ("0 1 1 1; 1 2 0 0,1;");
  CHECK (h.size () == 2);
  CHECK (h[0].owner == player::odd);
  CHECK (h[1].succ == std::vector<std::uint32_t> {0, 1});
  CHECK (h.predecessors (1) == std::vector<std::uint32_t> {0, 1});

  auto named = parse_pgsolver ("parity 1;\n0 3 1 1 \"start here\";\n1 0 0 1, 0 \"b\";\n");
  CHECK (named[0].label == "start here");
  CHECK (named[1].succ == std::vector<std::uint32_t> {1, 0});

  CHECK (parse_pgsolver (format_pgsolver (named)).vertices ().size () == 2);
  CHECK (format_pgsolver (parse_pgsolver (format_pgsolver (named))) == format_pgsolver (named));
}

TEST_CASE ("pgsolver errors carry line numbers") {
  CHECK_THROWS_WITH_AS (parse_pgsolver ("0 1 0 ;"), doctest::Contains ("no successors"), error);
  CHECK_THROWS_WITH_AS (parse_pgsolver ("0 1 0 0;\n1 1 0 7;"), doctest::Contains ("line 2"), error);
  CHECK_THROWS_WITH_AS (parse_pgsolver ("0 1 0 0;\n\n0 x 0 0;"), doctest::Contains ("line 3"), error);
  CHECK_THROWS_AS (parse_pgsolver ("0 1 2 0;"), error);
  CHECK_THROWS_AS (parse_pgsolver ("1 1 0 1;"), error);
  CHECK_THROWS_AS (parse_pgsolver ("0 1 0 0"), error);
  CHECK_THROWS_AS (parse_pgsolver (""), error);
}

TEST_CASE ("counter space") {
  auto g = parse_pgsolver ("0 1 0 1; 1 3 1 2; 2 3 0 0; 3 4 0 0;");
  counter_space cs (g);
  CHECK (cs.d == 2);
  CHECK (cs.caps == std::vector<value_type> {1, 2});
  CHECK (initial_map (g)[0] == antichain (2, {{2, 3}}));

  counter_space even_only (parse_pgsolver ("0 0 0 0;"));
  CHECK (even_only.d == 1);
  CHECK (even_only.caps == std::vector<value_type> {0});
}

TEST_CASE ("bwd") {
  // d = 1, n_1 = 1; stored value 2 is the logical counter 1.
  auto g = parse_pgsolver ("0 1 0 1; 1 2 0 0;");
  counter_space cs (g);
  vector c {2};
  c = bwd (c, 1, cs);
  CHECK (c == vector {1});
  c = bwd (c, 1, cs);
  CHECK (c == vector {0});
  c = bwd (c, 1, cs);
  CHECK (c == vector {0});

  auto h = parse_pgsolver ("0 1 0 1; 1 3 0 2; 2 3 0 3; 3 4 0 0;");
  counter_space ch (h);
  REQUIRE (ch.caps == std::vector<value_type> {1, 2});
  CHECK (bwd (vector {1, 1}, 4, ch) == vector {2, 3});
  CHECK (bwd (vector {1, 1}, 2, ch) == vector {2, 1});
  CHECK (bwd (vector {1, 2}, 0, ch) == vector {1, 2});
  CHECK (bwd (vector {2, 3}, 3, ch) == vector {2, 2});
  // An exhausted counter is not refilled.
  CHECK (bwd (vector {0, 1}, 4, ch) == vector {0, 3});
}

TEST_CASE ("cpre step") {
  auto g = odd_self_loop ();
  auto mu = initial_map (g);
  CHECK (mu[0] == antichain (1, {{2}}));
  auto r = cpre_step (mu, g);
  CHECK (r.nu[0] == antichain (1, {{1}}));
  CHECK (r.changed == std::vector<std::uint32_t> {0});

  auto e = even_self_loop ();
  auto re = cpre_step (initial_map (e), e);
  CHECK (re.changed.empty ());
}

TEST_CASE ("hand-written games") {
  for (auto b : all_backends) {
    CAPTURE (name (b));
    CHECK (solve (odd_self_loop (), b).winner == std::vector {player::odd});
    CHECK (solve (even_self_loop (), b).winner == std::vector {player::even});
    auto s = solve (escape (), b);
    CHECK (s.winner == std::vector {player::even, player::even});
    CHECK (strategy_at (escape (), s, 0) == 1);
  }
  CHECK (zielonka (odd_self_loop ()) == std::vector {player::odd});
  CHECK (zielonka (even_self_loop ()) == std::vector {player::even});
  CHECK (zielonka (escape ()) == std::vector {player::even, player::even});

  // Odd can trap the play in its own odd cycle.
  auto trap = parse_pgsolver ("0 2 1 0,1; 1 3 1 1;");
  CHECK (solve (trap).winner == std::vector {player::odd, player::odd});
  CHECK (zielonka (trap) == std::vector {player::odd, player::odd});

  // A small odd priority dominated by a large even one: even wins.
  auto dominated = parse_pgsolver ("0 1 1 1; 1 4 1 0;");
  CHECK (solve (dominated).winner == std::vector {player::even, player::even});
  CHECK (zielonka (dominated) == std::vector {player::even, player::even});
}

TEST_CASE ("strategy errors") {
  auto g = parse_pgsolver ("0 1 1 0; 1 2 0 1; 2 1 0 2;");
  auto s = solve (g);
  CHECK_THROWS_AS (strategy_at (g, s, 0), error);
  CHECK_THROWS_AS (strategy_at (g, s, 2), error);
  CHECK (strategy_at (g, s, 1) == 1);
}

TEST_CASE ("zielonka agrees with the counter fixpoint on random games") {
  rng r (11);
  for (int i = 0; i < 300; ++i) {
    auto g = oracle::random_game (r, 8, 5, 3);
    CAPTURE (format_pgsolver (g));
    auto s = solve (g);
    REQUIRE (s.winner == zielonka (g));
    CHECK (check_even_strategy (g, s.winner, synthesize_even_strategy (g, s)));
    // Order independence of the fixpoint.
    CHECK (solve (g, backend::list, order::reverse).fixpoint == s.fixpoint);
  }
}

TEST_CASE ("monotone descent") {
  rng r (5);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_game (r, 6, 4, 3);
    auto mu = initial_map (g);
    for (int step = 0; step < 50; ++step) {
      auto st = cpre_step (mu, g);
      for (std::size_t v = 0; v < g.size (); ++v)
        REQUIRE (closure_within (st.nu[v], mu[v]));
      if (st.changed.empty ())
        break;
      mu = std::move (st.nu);
    }
    // Simultaneous iteration reaches the worklist fixpoint.
    CHECK (mu == solve (g).fixpoint);
  }
}

TEST_CASE ("backend invariance") {
  rng r (23);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_game (r, 7, 5, 3);
    auto ref = solve (g);
    for (auto b : all_backends) {
      CAPTURE (name (b));
      auto s = solve (g, b);
      CHECK (s.winner == ref.winner);
      CHECK (s.fixpoint == ref.fixpoint);
    }
  }
}

TEST_CASE ("strategy checker rejects bad strategies") {
  auto g = escape ();
  std::vector<player> w {player::even, player::even};
  CHECK (check_even_strategy (g, w, {1u, 1u}));
  // Looping on the odd vertex forever.
  CHECK_FALSE (check_even_strategy (g, w, {0u, 1u}));
  CHECK_FALSE (check_even_strategy (g, w, {std::nullopt, 1u}));
}
