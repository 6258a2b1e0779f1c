#pragma once

#include <downset/antichain.hh>
#include <downset/stats.hh>

// List backend: the reference implementation the other backends are checked
// against.
namespace downset::list {
  // u in the downward closure of a?  At most k|a| scalar comparisons.
  bool member (const antichain& a, const vector& u, op_stats* stats = nullptr);

  // Is some element of a strictly larger than u?
  bool strict_member (const antichain& a, const vector& u, op_stats* stats = nullptr);

  antichain unite (const antichain& a, const antichain& b, op_stats* stats = nullptr);

  // With `exclude_contained`, an element of one side already in the closure
  // of the other contributes only itself instead of all its meets.
  antichain intersect (const antichain& a, const antichain& b, op_stats* stats = nullptr,
                       bool exclude_contained = true);
}
