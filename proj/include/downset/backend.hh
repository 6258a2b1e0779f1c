#pragma once

#include <array>
#include <string_view>

#include <downset/antichain.hh>
#include <downset/stats.hh>

namespace downset {
  enum class backend { list, kdtree, sharingtree, cst, adaptive };

  inline constexpr std::array all_backends {backend::list, backend::kdtree, backend::sharingtree,
                                            backend::cst, backend::adaptive};

  std::string_view name (backend b);
  // Throws on unknown names.
  backend parse_backend (std::string_view s);

  // Uniform entry points.  Every backend returns the canonical antichain, so
  // results can be compared with ==; the covering sharing tree result is the
  // set of maximal elements of its language.
  bool member (backend b, const antichain& a, const vector& u, op_stats* stats = nullptr);
  antichain unite (backend b, const antichain& a, const antichain& c, op_stats* stats = nullptr);
  antichain intersect (backend b, const antichain& a, const antichain& c, op_stats* stats = nullptr);
}
