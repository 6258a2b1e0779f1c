#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <downset/adaptive.hh>
#include <downset/backend.hh>
#include <downset/bench.hh>
#include <downset/combinatorics.hh>
#include <downset/error.hh>
#include <downset/io.hh>
#include <downset/parity.hh>

namespace py = pybind11;
using namespace downset;

namespace {
  vector to_vector (const std::vector<value_type>& v) { return vector (v); }

  std::vector<std::vector<value_type>> to_lists (const antichain& a) {
    std::vector<std::vector<value_type>> out;
    for (const auto& v : a)
      out.emplace_back (v.begin (), v.end ());
    return out;
  }

  antichain make (std::size_t dim, const std::vector<std::vector<value_type>>& vs) {
    std::vector<vector> in;
    for (const auto& v : vs)
      in.emplace_back (v);
    return antichain (dim, std::move (in));
  }

  py::dict solution_dict (const parity::game& g, const parity::solution& s) {
    const auto strat = parity::synthesize_even_strategy (g, s);
    py::list winners, strategy;
    for (std::size_t v = 0; v < g.size (); ++v) {
      winners.append (std::string (parity::name (s.winner[v])));
      strategy.append (strat[v] ? py::cast (*strat[v]) : py::none ());
    }
    py::dict d;
    d["winners"] = winners;
    d["strategy"] = strategy;
    d["iterations"] = s.iterations;
    d["strategy_ok"] = parity::check_even_strategy (g, s.winner, strat);
    return d;
  }
}

PYBIND11_MODULE (_core, m) {
  m.doc () = "Downward-closed sets of natural vectors";

  py::register_exception<error> (m, "Error", PyExc_ValueError);

  py::class_<op_stats> (m, "OpStats")
    .def (py::init<> ())
    .def_readonly ("comparisons", &op_stats::comparisons)
    .def_readonly ("node_visits", &op_stats::node_visits)
    .def_readonly ("meets", &op_stats::meets)
    .def ("__repr__", [] (const op_stats& s) {
      return "OpStats(comparisons=" + std::to_string (s.comparisons) + ", node_visits="
             + std::to_string (s.node_visits) + ", meets=" + std::to_string (s.meets) + ")";
    });

  py::class_<antichain> (m, "Antichain")
    .def (py::init (&make), py::arg ("dim"), py::arg ("vectors") = std::vector<std::vector<value_type>> {})
    .def_property_readonly ("dim", &antichain::dim)
    .def_property_readonly ("elements", &to_lists)
    .def ("__len__", &antichain::size)
    .def ("__eq__", [] (const antichain& a, const antichain& b) { return a == b; })
    .def ("__contains__", [] (const antichain& a, const std::vector<value_type>& u) {
      return member (backend::list, a, to_vector (u));
    })
    .def ("__repr__", [] (const antichain& a) {
      std::ostringstream os;
      os << "Antichain(" << a.dim () << ", [";
      for (std::size_t i = 0; i < a.size (); ++i)
        os << (i ? ", " : "") << a[i];
      os << "])";
      return os.str ();
    })
    .def ("to_text", &format_vector_set)
    .def_static ("from_text", &parse_vector_set, py::arg ("text"));

  m.def ("compare", [] (const std::vector<value_type>& u, const std::vector<value_type>& v) {
    return to_string (compare (to_vector (u), to_vector (v)));
  });
  m.def ("meet", [] (const std::vector<value_type>& u, const std::vector<value_type>& v) {
    const auto r = meet (to_vector (u), to_vector (v));
    return std::vector<value_type> (r.begin (), r.end ());
  });

  m.def ("member", [] (const antichain& a, const std::vector<value_type>& u, const std::string& b, op_stats* st) {
    return member (parse_backend (b), a, to_vector (u), st);
  }, py::arg ("a"), py::arg ("u"), py::arg ("backend") = "list", py::arg ("stats") = nullptr);
  m.def ("union", [] (const antichain& a, const antichain& c, const std::string& b, op_stats* st) {
    return unite (parse_backend (b), a, c, st);
  }, py::arg ("a"), py::arg ("b"), py::arg ("backend") = "list", py::arg ("stats") = nullptr);
  m.def ("intersect", [] (const antichain& a, const antichain& c, const std::string& b, op_stats* st) {
    return intersect (parse_backend (b), a, c, st);
  }, py::arg ("a"), py::arg ("b"), py::arg ("backend") = "list", py::arg ("stats") = nullptr);
  m.def ("backends", [] {
    std::vector<std::string> out;
    for (auto b : all_backends)
      out.emplace_back (name (b));
    return out;
  });
  m.def ("choose_backend", [] (std::size_t k, std::size_t mm, std::size_t n) {
    return adaptive::choose_backend (k, mm, n).backend == adaptive::choice::kdtree ? "kdtree" : "list";
  }, py::arg ("k"), py::arg ("m"), py::arg ("n"));

  m.def ("count_2d", [] (std::uint64_t ell, std::optional<std::uint64_t> n) {
    return py::int_ (py::str (comb::count_2d (ell, n).str ()));
  }, py::arg ("ell"), py::arg ("n") = py::none ());
  m.def ("count_antichains", [] (std::size_t d, std::uint64_t ell) { return comb::enumerate_antichains (d, ell); },
         py::arg ("dim"), py::arg ("ell"));
  m.def ("width", &comb::width, py::arg ("dim"), py::arg ("ell"));
  m.def ("layer_size", &comb::layer_size, py::arg ("dim"), py::arg ("ell"), py::arg ("s"));
  m.def ("conjecture", [] (std::size_t d, std::uint64_t ell) {
    const auto r = comb::check_middle_layer_conjecture (d, ell);
    py::dict out;
    out["width"] = r.width;
    out["max_layer_size"] = r.max_layer_size;
    out["argmax"] = r.argmax;
    out["equal"] = r.equal;
    return out;
  }, py::arg ("dim"), py::arg ("ell"));
  m.def ("random_antichain", [] (std::size_t k, std::size_t target, value_type maxval, std::uint64_t seed) {
    auto r = comb::random_antichain (k, target, maxval, seed);
    return py::make_tuple (r.set, r.short_of_target);
  }, py::arg ("k"), py::arg ("m"), py::arg ("maxval"), py::arg ("seed"));

  m.def ("solve_parity", [] (const std::string& text, const std::string& b) {
    const auto g = parity::parse_pgsolver (text);
    return solution_dict (g, parity::solve (g, parse_backend (b)));
  }, py::arg ("text"), py::arg ("backend") = "list");
  m.def ("zielonka", [] (const std::string& text) {
    const auto g = parity::parse_pgsolver (text);
    std::vector<std::string> out;
    for (auto p : parity::zielonka (g))
      out.emplace_back (parity::name (p));
    return out;
  }, py::arg ("text"));

  m.def ("bench_csv", [] (const std::string& op, const std::vector<std::size_t>& sizes, std::size_t k,
                          std::optional<value_type> maxval, std::uint64_t seed,
                          const std::vector<std::string>& backends, const std::string& metric) {
    bench::spec s;
    s.op = bench::parse_operation (op);
    s.sizes = sizes;
    s.k = k;
    s.maxval = maxval;
    s.seed = seed;
    s.measure = bench::parse_metric (metric);
    s.backends.clear ();
    for (const auto& b : backends)
      s.backends.push_back (parse_backend (b));
    std::ostringstream os;
    bench::write_csv (os, bench::run (s));
    return os.str ();
  }, py::arg ("op"), py::arg ("sizes"), py::arg ("k") = 512, py::arg ("maxval") = py::none (), py::arg ("seed") = 1,
     py::arg ("backends") = std::vector<std::string> {"list", "kdtree"}, py::arg ("metric") = "comparisons");
}
