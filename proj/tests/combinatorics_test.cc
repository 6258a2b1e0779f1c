#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include <downset/combinatorics.hh>
#include <downset/error.hh>

#include "oracles.hh"

using namespace downset;
using namespace downset::comb;

namespace {
  // Width by trying every subset of the grid (tiny grids only).
  std::uint64_t brute_width (std::size_t d, std::uint64_t ell) {
    const auto pts = grid_points (d, ell);
    std::uint64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t {1} << pts.size ()); ++mask) {
      std::vector<vector> s;
      for (std::size_t i = 0; i < pts.size (); ++i)
        if ((mask >> i) & 1)
          s.push_back (pts[i]);
      bool anti = true;
      for (std::size_t i = 0; i < s.size () && anti; ++i)
        for (std::size_t j = i + 1; j < s.size () && anti; ++j)
          anti = compare (s[i], s[j]) == ordering::incomparable;
      if (anti)
        best = std::max<std::uint64_t> (best, s.size ());
    }
    return best;
  }
}

TEST_CASE ("binomials and 2-dimensional counts") {
  CHECK (binomial (6, 3) == 20);
  CHECK (binomial (3, 5) == 0);
  CHECK (count_2d (2) == 6);
  CHECK (count_2d (2, 1) == 4);
  CHECK (count_2d (3) == 20);
  CHECK_THROWS_AS (count_2d (3, 4), error);
  CHECK (count_2d (100) == binomial (200, 100));
  CHECK (count_2d (100).str () == "90548514656103281165404177077484163874504589675413336841320");

  for (std::uint64_t ell = 0; ell <= 30; ++ell) {
    big sum = 0;
    for (std::uint64_t n = 0; n <= ell; ++n)
      sum += count_2d (ell, n);
    REQUIRE (sum == count_2d (ell));
  }
}

TEST_CASE ("enumeration") {
  CHECK (enumerate_antichains (2, 2) == 6);
  CHECK (enumerate_antichains (3, 2) == 20);
  for (std::uint64_t ell = 1; ell <= 6; ++ell)
    CHECK (enumerate_antichains (1, ell) == ell + 1);
  for (std::uint64_t ell = 1; ell <= 6; ++ell)
    CHECK (big (enumerate_antichains (2, ell)) == count_2d (ell));

  // Every emitted set is an antichain, and no set is emitted twice.
  std::set<std::vector<vector>> seen;
  std::vector<std::uint64_t> by_size (10, 0);
  enumerate_antichains (2, 4, [&] (std::span<const vector> a) {
    std::vector<vector> v (a.begin (), a.end ());
    REQUIRE (antichain (2, v).size () == v.size ());
    REQUIRE (seen.insert (v).second);
    ++by_size[v.size ()];
  });
  CHECK (seen.size () == 70);
  for (std::uint64_t n = 0; n <= 4; ++n)
    CHECK (big (by_size[n]) == count_2d (4, n));

  CHECK (enumerate_antichains (4, 2) == 168);
  CHECK (enumerate_antichains (2, 6, {}, 100) == 100);
  CHECK_THROWS_AS (enumerate_antichains (21, 2), error);
  CHECK_THROWS_AS (enumerate_antichains (0, 2), error);
}

TEST_CASE ("width") {
  CHECK (width (2, 4) == 4);
  CHECK (width (3, 2) == 3);
  for (std::uint64_t ell = 1; ell <= 6; ++ell) {
    CHECK (width (1, ell) == 1);
    CHECK (width (2, ell) == ell);
  }
  for (auto [d, ell] : std::vector<std::pair<std::size_t, std::uint64_t>> {{2, 3}, {2, 4}, {3, 2}, {4, 2}, {2, 2}})
    CHECK (width (d, ell) == brute_width (d, ell));
  CHECK_THROWS_AS (width (13, 2), error);

  // The width is at most log2 of the number of antichains.
  for (auto [d, ell] : std::vector<std::pair<std::size_t, std::uint64_t>> {{2, 3}, {2, 5}, {3, 2}, {3, 3}, {4, 2}})
    CHECK (double (width (d, ell)) <= std::log2 (double (enumerate_antichains (d, ell))));
}

TEST_CASE ("layers") {
  CHECK (layer_size (2, 2, 1) == 2);
  CHECK (layer_size (3, 2, 1) == 3);
  CHECK (layer_size (2, 3, 2) == 3);
  CHECK (layer_size (2, 3, 5) == 0);
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::uint64_t ell = 1; ell <= 4; ++ell) {
      std::uint64_t total = 0;
      for (std::uint64_t s = 0; s <= (ell - 1) * d; ++s) {
        const auto pts = layer (d, ell, s);
        REQUIRE (pts.size () == layer_size (d, ell, s));
        REQUIRE (antichain (d, pts).size () == pts.size ());
        total += pts.size ();
      }
      REQUIRE (total == grid_points (d, ell).size ());
    }
}

TEST_CASE ("middle layer conjecture") {
  auto r = check_middle_layer_conjecture (2, 3);
  CHECK (r.width == 3);
  CHECK (r.max_layer_size == 3);
  CHECK (r.argmax == std::vector<std::uint64_t> {2});
  CHECK (r.equal);

  auto c = check_middle_layer_conjecture (3, 2);
  CHECK (c.width == 3);
  CHECK (c.max_layer_size == 3);
  CHECK (c.argmax == std::vector<std::uint64_t> {1, 2});
  CHECK (c.equal);
  CHECK (c.stated_index == 3);
  CHECK (c.stated_index_size == 1);
  CHECK (c.midpoint == 1);
  CHECK (c.midpoint_size == 3);

  auto one = check_middle_layer_conjecture (1, 5);
  CHECK (one.width == 1);
  CHECK (one.max_layer_size == 1);
  CHECK (one.equal);
}

TEST_CASE ("random antichains") {
  auto a = random_antichain (2, 3, 10, 7);
  auto b = random_antichain (2, 3, 10, 7);
  CHECK (a.set == b.set);
  CHECK (a.set.is_valid ());
  CHECK (a.set.size () >= 3);
  CHECK_FALSE (a.short_of_target);

  auto chain = random_antichain (1, 2, 5, 3);
  CHECK (chain.set.size () == 1);
  CHECK (chain.short_of_target);

  oracle::rng r (47);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 2 + r.below (6);
    auto x = random_antichain (k, 1 + r.below (50), static_cast<value_type> (1 + r.below (20)), r.next ());
    REQUIRE (x.set.is_valid ());
    REQUIRE (x.set.max_norm () <= 20);
  }
  CHECK_THROWS_AS (random_antichain (2, 0, 5, 1), error);
}

TEST_CASE ("good antichains") {
  CHECK (random_good_antichain_2d (3, 3, 5) == antichain (2, {{0, 2}, {1, 1}, {2, 0}}));
  CHECK (random_good_antichain_2d (10, 1, 5).size () == 1);
  CHECK_THROWS_AS (random_good_antichain_2d (3, 4, 1), error);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto a = random_good_antichain_2d (20, 1 + seed % 20, seed);
    REQUIRE (a.size () == 1 + seed % 20);
    std::set<value_type> xs, ys;
    for (const auto& v : a) {
      xs.insert (v[0]);
      ys.insert (v[1]);
      REQUIRE (v[0] < 20);
      REQUIRE (v[1] < 20);
    }
    REQUIRE (xs.size () == a.size ());
    REQUIRE (ys.size () == a.size ());
  }
}
