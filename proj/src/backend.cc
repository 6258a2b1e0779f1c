#include <downset/backend.hh>

#include <string>

#include <downset/adaptive.hh>
#include <downset/cst.hh>
#include <downset/error.hh>
#include <downset/kdtree.hh>
#include <downset/list.hh>
#include <downset/sharing_tree.hh>

namespace downset {
  std::string_view name (backend b) {
    switch (b) {
      case backend::list: return "list";
      case backend::kdtree: return "kdtree";
      case backend::sharingtree: return "sharingtree";
      case backend::cst: return "cst";
      case backend::adaptive: return "adaptive";
    }
    return "?";
  }

  backend parse_backend (std::string_view s) {
    for (auto b : all_backends)
      if (name (b) == s)
        return b;
    throw error ("unknown backend '" + std::string (s) + "'");
  }

  bool member (backend b, const antichain& a, const vector& u, op_stats* stats) {
    check_same_dim (a, u);
    switch (b) {
      case backend::list: return list::member (a, u, stats);
      case backend::kdtree: return kd::tree (a).member (u, stats);
      case backend::sharingtree: return st::tree (a).member (u, stats);
      case backend::cst: return cst::tree::build (a).member (u, stats);
      case backend::adaptive: return adaptive::member (a, u, stats);
    }
    return false;
  }

  antichain unite (backend b, const antichain& a, const antichain& c, op_stats* stats) {
    switch (b) {
      case backend::list: return list::unite (a, c, stats);
      case backend::kdtree: return kd::unite (a, c, stats);
      case backend::sharingtree: return st::unite (a, c, stats);
      case backend::cst: {
        check_same_dim (a, c);
        return cst::unite (cst::tree::build (a), cst::tree::build (c)).to_antichain ();
      }
      case backend::adaptive: return adaptive::unite (a, c, stats);
    }
    return antichain (a.dim ());
  }

  antichain intersect (backend b, const antichain& a, const antichain& c, op_stats* stats) {
    switch (b) {
      case backend::list: return list::intersect (a, c, stats);
      case backend::kdtree: return kd::intersect (a, c, stats);
      case backend::sharingtree: return st::intersect (a, c, stats);
      case backend::cst: {
        check_same_dim (a, c);
        return cst::intersect (cst::tree::build (a), cst::tree::build (c)).to_antichain ();
      }
      case backend::adaptive: return adaptive::intersect (a, c, stats);
    }
    return antichain (a.dim ());
  }
}
