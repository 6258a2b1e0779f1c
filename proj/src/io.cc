#include <downset/io.hh>

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace downset {
  namespace {
    std::vector<value_type> parse_naturals (std::string_view text, std::size_t line) {
      std::vector<value_type> out;
      std::size_t i = 0;
      while (i < text.size ()) {
        while (i < text.size () && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r'))
          ++i;
        if (i == text.size ())
          break;
        std::size_t j = i;
        while (j < text.size () && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
          ++j;
        auto token = text.substr (i, j - i);
        value_type x {};
        auto [ptr, ec] = std::from_chars (token.data (), token.data () + token.size (), x);
        if (ec != std::errc {} || ptr != token.data () + token.size ())
          throw parse_error (line, "not a natural number: '" + std::string (token) + "'");
        out.push_back (x);
        i = j;
      }
      return out;
    }

    bool blank (std::string_view s) {
      return s.find_first_not_of (" \t\r") == std::string_view::npos;
    }
  }

  antichain read_vector_set (std::istream& is) {
    std::string line;
    std::size_t lineno = 0, dim = 0;
    std::vector<vector> vs;
    while (std::getline (is, line)) {
      ++lineno;
      std::string_view sv = line;
      auto first = sv.find_first_not_of (" \t");
      if (first == std::string_view::npos || blank (sv) || sv[first] == '#')
        continue;
      sv.remove_prefix (first);
      if (dim == 0) {
        if (sv.substr (0, 4) != "dim " && sv.substr (0, 4) != "dim\t")
          throw parse_error (lineno, "expected 'dim <k>' header");
        auto nums = parse_naturals (sv.substr (4), lineno);
        if (nums.size () != 1 || nums[0] == 0)
          throw parse_error (lineno, "'dim' takes one strictly positive natural");
        dim = nums[0];
        continue;
      }
      auto nums = parse_naturals (sv, lineno);
      if (nums.size () != dim)
        throw parse_error (lineno, "expected " + std::to_string (dim) + " components, got " +
                           std::to_string (nums.size ()));
      vs.emplace_back (std::move (nums));
    }
    if (dim == 0)
      throw parse_error (lineno, "missing 'dim <k>' header");
    return antichain (dim, std::move (vs));
  }

  antichain parse_vector_set (std::string_view text) {
    std::istringstream is {std::string (text)};
    return read_vector_set (is);
  }

  antichain load_vector_set (const std::string& path) {
    std::ifstream in (path);
    if (!in)
      throw error ("cannot open '" + path + "'");
    try {
      return read_vector_set (in);
    } catch (const parse_error& e) {
      throw error (path + ": " + e.what ());
    }
  }

  void write_vector_set (std::ostream& os, const antichain& a) {
    os << "dim " << a.dim () << '\n';
    for (const auto& v : a) {
      for (std::size_t i = 0; i < v.size (); ++i)
        os << (i ? " " : "") << v[i];
      os << '\n';
    }
  }

  std::string format_vector_set (const antichain& a) {
    std::ostringstream os;
    write_vector_set (os, a);
    return os.str ();
  }

  void save_vector_set (const std::string& path, const antichain& a) {
    std::ofstream out (path, std::ios::binary);
    if (!out)
      throw error ("cannot write '" + path + "'");
    write_vector_set (out, a);
  }

  vector parse_vector_literal (std::string_view text) {
    auto nums = parse_naturals (text, 1);
    if (nums.empty ())
      throw error ("empty vector literal");
    return vector (std::move (nums));
  }
}
