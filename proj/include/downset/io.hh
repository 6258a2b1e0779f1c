#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <downset/antichain.hh>

namespace downset {
  // Vector-set text format:
  //   # comment
  //   dim <k>
  //   <k naturals separated by spaces>   (one vector per line)
  // Dominated and duplicate vectors are accepted and canonicalized away.
  antichain read_vector_set (std::istream& is);
  antichain parse_vector_set (std::string_view text);
  antichain load_vector_set (const std::string& path);

  // `dim <k>` then the elements in ascending lexicographic order.
  void write_vector_set (std::ostream& os, const antichain& a);
  std::string format_vector_set (const antichain& a);
  void save_vector_set (const std::string& path, const antichain& a);

  // Whitespace-separated naturals, e.g. "1 0 3".
  vector parse_vector_literal (std::string_view text);
}
