#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <downset/error.hh>
#include <downset/io.hh>
#include <downset/list.hh>

#include "oracles.hh"

using namespace downset;

TEST_CASE ("compare") {
  CHECK (compare ({1, 2}, {1, 3}) == ordering::less);
  CHECK (compare ({1, 3}, {1, 2}) == ordering::greater);
  CHECK (compare ({2, 1}, {1, 2}) == ordering::incomparable);
  CHECK (compare ({0, 0}, {0, 0}) == ordering::equal);
  CHECK_THROWS_AS (compare ({1, 2}, {1, 2, 3}), dimension_mismatch);
  CHECK_THROWS_AS (vector (std::vector<value_type> {}), error);
}

TEST_CASE ("one-way comparison uses at most k+1 scalar comparisons") {
  std::uint64_t n = 0;
  CHECK (compare_oneway ({3, 0, 0}, {1, 5, 5}, n) == ordering::incomparable);
  CHECK (n <= 4);
  n = 0;
  CHECK (compare_oneway ({2, 2}, {2, 2}, n) == ordering::equal);
  CHECK (compare_oneway ({1, 1, 1}, {2, 2, 2}, n) == ordering::less);

  oracle::rng r (3);
  for (int i = 0; i < 5000; ++i) {
    const std::size_t k = 1 + r.below (6);
    auto u = oracle::random_vector (r, k, 3);
    auto v = oracle::random_vector (r, k, 3);
    std::uint64_t c = 0;
    REQUIRE (compare_oneway (u, v, c) == compare (u, v));
    REQUIRE (c <= k + 1);
  }
}

TEST_CASE ("meet") {
  CHECK (meet ({3, 1}, {2, 4}) == vector {2, 1});
  CHECK (meet ({4, 7}, {4, 7}) == vector {4, 7});
  CHECK (meet ({0, 5}, {5, 0}) == vector {0, 0});
}

TEST_CASE ("maxac") {
  CHECK (maxac (2, {{1, 1}, {0, 1}, {1, 0}}).elements () == std::vector<vector> {{1, 1}});
  auto all = maxac (2, {{2, 0}, {0, 2}, {1, 1}});
  CHECK (all.elements () == std::vector<vector> {{0, 2}, {1, 1}, {2, 0}});
  CHECK (maxac (2, {}).empty ());
  CHECK (maxac (2, {{1, 1}, {1, 1}}).size () == 1);
  CHECK_THROWS_AS (maxac (2, {{1, 1}, {1, 1, 1}}), dimension_mismatch);
  CHECK_THROWS_AS (antichain (0), error);

  oracle::rng r (1);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + r.below (4);
    const value_type w = static_cast<value_type> (r.below (7));
    auto vs = oracle::random_vectors (r, k, r.below (20), w);
    auto a = maxac (k, vs);
    REQUIRE (a.is_valid ());
    auto expected = oracle::maximal (vs);
    REQUIRE (std::set<vector> (a.begin (), a.end ()) == expected);
    for (const auto& u : oracle::box (k, w))
      REQUIRE (oracle::below_some (a.elements (), u) == oracle::below_some (vs, u));
  }
}

TEST_CASE ("list membership") {
  antichain a (2, {{2, 0}, {0, 2}});
  CHECK (list::member (a, {1, 0}));
  CHECK_FALSE (list::member (a, {1, 1}));
  CHECK_FALSE (list::member (antichain (2), {0, 0}));
  CHECK_THROWS_AS (list::member (a, {1, 2, 3}), dimension_mismatch);

  op_stats st;
  list::member (a, {1, 1}, &st);
  CHECK (st.comparisons <= 2 * a.size () + a.size ());

  antichain s (2, {{1, 1}});
  CHECK_FALSE (list::strict_member (s, {1, 1}));
  CHECK (list::strict_member (antichain (2, {{2, 1}}), {1, 1}));
}

TEST_CASE ("list union") {
  antichain a (2, {{2, 0}, {0, 2}});
  antichain b (2, {{1, 1}});
  CHECK (list::unite (a, b) == antichain (2, {{2, 0}, {0, 2}, {1, 1}}));
  CHECK (list::unite (antichain (2, {{1, 1}}), antichain (2, {{2, 2}})) == antichain (2, {{2, 2}}));
  CHECK (list::unite (a, a) == a);
  CHECK (list::unite (a, antichain (2)) == a);
  CHECK_THROWS_AS (list::unite (a, antichain (3)), dimension_mismatch);
}

TEST_CASE ("list intersection") {
  antichain a (2, {{2, 0}, {0, 2}});
  antichain b (2, {{1, 1}});
  CHECK (list::intersect (a, b) == antichain (2, {{1, 0}, {0, 1}}));
  CHECK (list::intersect (antichain (2, {{3, 3}}), antichain (2, {{1, 2}})) == antichain (2, {{1, 2}}));
  CHECK (list::intersect (a, a) == a);
  CHECK (list::intersect (a, antichain (2)).empty ());

  op_stats with, without;
  antichain c (2, {{3, 3}});
  antichain d (2, {{1, 2}, {2, 1}});
  CHECK (list::intersect (c, d, &with) == list::intersect (c, d, &without, false));
  CHECK (with.meets < without.meets);
}

TEST_CASE ("list operations against the box oracle") {
  oracle::rng r (7);
  for (int i = 0; i < 400; ++i) {
    const std::size_t k = 1 + r.below (4);
    const value_type w = static_cast<value_type> (1 + r.below (5));
    auto a = oracle::random_set (r, k, 8, w);
    auto b = oracle::random_set (r, k, 8, w);
    auto c = oracle::random_set (r, k, 8, w);
    auto u = list::unite (a, b);
    auto n = list::intersect (a, b);
    REQUIRE (u.is_valid ());
    REQUIRE (n.is_valid ());
    for (const auto& x : oracle::box (k, w)) {
      const bool in_a = oracle::below_some (a.elements (), x);
      const bool in_b = oracle::below_some (b.elements (), x);
      REQUIRE (list::member (u, x) == (in_a || in_b));
      REQUIRE (list::member (n, x) == (in_a && in_b));
      REQUIRE (list::member (a, x) == in_a);
    }
    CHECK (list::unite (b, a) == u);
    CHECK (list::intersect (b, a) == n);
    CHECK (list::unite (list::unite (a, b), c) == list::unite (a, list::unite (b, c)));
    CHECK (list::intersect (list::intersect (a, b), c) == list::intersect (a, list::intersect (b, c)));
    CHECK (list::intersect (a, b, nullptr, false) == n);
    CHECK (u.size () <= a.size () + b.size ());
  }
}

TEST_CASE ("vector-set files") {
  auto a = parse_vector_set ("# two vectors\ndim 2\n0 2\n\n2 0\n1 0\n# dominated above\n");
  CHECK (a == antichain (2, {{2, 0}, {0, 2}}));
  CHECK (format_vector_set (a) == "dim 2\n0 2\n2 0\n");
  CHECK (parse_vector_set (format_vector_set (a)) == a);
  CHECK (parse_vector_set ("dim 3\n").empty ());
  CHECK (parse_vector_literal ("1 0 3") == vector {1, 0, 3});

  CHECK_THROWS_WITH_AS (parse_vector_set ("dim 2\n1 2\n1 2 3\n"), doctest::Contains ("line 3"), parse_error);
  CHECK_THROWS_WITH_AS (parse_vector_set ("# hi\n1 2\n"), doctest::Contains ("line 2"), parse_error);
  CHECK_THROWS_AS (parse_vector_set ("dim 2\n1 -2\n"), parse_error);
  CHECK_THROWS_AS (parse_vector_set ("dim 0\n"), parse_error);
  CHECK_THROWS_AS (parse_vector_set (""), parse_error);
  CHECK_THROWS_AS (parse_vector_literal ("1 x"), error);
  CHECK_THROWS_AS (load_vector_set ("/nonexistent/file"), error);
}
