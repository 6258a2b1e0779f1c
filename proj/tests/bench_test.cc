#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <downset/bench.hh>
#include <downset/error.hh>
#include <downset/list.hh>

using namespace downset;
using namespace downset::bench;

namespace {
  std::string csv (const std::vector<row>& rows) {
    std::ostringstream os;
    write_csv (os, rows);
    return os.str ();
  }

  spec small (operation op) {
    spec s;
    s.op = op;
    s.sizes = {10, 40};
    s.k = 16;
    s.seed = 3;
    s.backends = {all_backends.begin (), all_backends.end ()};
    return s;
  }
}

TEST_CASE ("membership cases") {
  auto c = make_membership_case (10, 8, 20, 5);
  CHECK (c.set.size () >= 10);
  CHECK (c.members.size () == 10);
  CHECK (c.non_members.size () == 10);
  for (const auto& u : c.members)
    CHECK (list::member (c.set, u));
  for (const auto& u : c.non_members)
    CHECK_FALSE (list::member (c.set, u));
  CHECK_THROWS_AS (make_membership_case (10, 1, 5, 1), error);
}

TEST_CASE ("set operation cases overlap on half") {
  auto c = make_setop_case (20, 8, 40, 9);
  CHECK (c.a.size () >= 20);
  CHECK (c.b.size () == 20);
  std::size_t shared = 0;
  for (const auto& v : c.b)
    shared += std::binary_search (c.a.begin (), c.a.end (), v);
  CHECK (shared == 10);
  CHECK (list::unite (c.a, c.b).size () <= c.a.size () + c.b.size ());
}

TEST_CASE ("rows") {
  for (auto op : {operation::membership, operation::union_, operation::intersection}) {
    CAPTURE (name (op));
    auto s = small (op);
    auto rows = run (s);
    CHECK (csv (rows) == csv (run (s)));
    for (std::size_t i = 1; i < rows.size (); ++i)
      CHECK ((rows[i - 1].t < rows[i].t
              || (rows[i - 1].t == rows[i].t && int (rows[i - 1].b) <= int (rows[i].b))));
    const std::size_t per_pair = op == operation::intersection ? 2 : 1;
    CHECK (rows.size () == s.sizes.size () * s.backends.size () * per_pair);
    // Output sizes are backend independent.
    for (const auto& r : rows)
      for (const auto& q : rows)
        if (r.t == q.t)
          CHECK (r.out_size == q.out_size);
  }
  auto m = run (small (operation::membership));
  for (const auto& r : m)
    CHECK (r.out_size == r.t);
  auto n = run (small (operation::intersection));
  CHECK (n[1].metric == "meets");

  auto u = run (small (operation::union_));
  for (const auto& r : u)
    CHECK (r.out_size <= 2 * r.t + r.t);
}

TEST_CASE ("csv") {
  CHECK (csv ({}) == "t,backend,op,metric,value,out_size,seed\n");
  spec s = small (operation::membership);
  s.backends = {backend::list};
  s.sizes = {5};
  s.measure = metric::wall_time;
  auto rows = run (s);
  CHECK (rows[0].metric == "wall_time_ns_nondeterministic");

  s.measure = metric::node_visits;
  s.backends = {backend::kdtree};
  auto text = csv (run (s));
  std::istringstream in (text);
  std::string header, line;
  std::getline (in, header);
  std::getline (in, line);
  CHECK (line.rfind ("5,kdtree,membership,node_visits,", 0) == 0);

  CHECK (parse_operation ("union") == operation::union_);
  CHECK (parse_metric ("node_visits") == metric::node_visits);
  CHECK_THROWS_AS (parse_operation ("xor"), error);
  CHECK_THROWS_AS (parse_metric ("cycles"), error);
}

TEST_CASE ("the list to k-d tree comparison ratio grows with t") {
  spec s;
  s.op = operation::membership;
  s.sizes = {10, 2000};
  s.k = 512;
  s.seed = 1;
  s.backends = {backend::list, backend::kdtree};
  auto rows = run (s);
  REQUIRE (rows.size () == 4);
  const double small_ratio = double (rows[0].value) / double (rows[1].value);
  const double large_ratio = double (rows[2].value) / double (rows[3].value);
  CHECK (large_ratio > small_ratio);
}
