#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace downset {
  // Base of every domain error raised by the library.
  class error : public std::runtime_error {
    public:
      using std::runtime_error::runtime_error;
  };

  class dimension_mismatch : public error {
    public:
      dimension_mismatch (std::size_t expected, std::size_t got)
        : error ("incompatible dimensions: expected " + std::to_string (expected) +
                 ", got " + std::to_string (got)),
          expected {expected}, got {got} {}

      std::size_t expected, got;
  };

  class parse_error : public error {
    public:
      parse_error (std::size_t line, const std::string& what)
        : error ("line " + std::to_string (line) + ": " + what), line {line} {}

      std::size_t line;
  };
}
