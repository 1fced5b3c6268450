#pragma once

#include <stdexcept>
#include <string>

namespace rigpack {

/// Error categories. Callers (the CLI in particular) switch on these to map
/// failures onto exit codes.
enum class Errc {
  parse,
  loop_edge,
  vertex_out_of_range,
  edge_out_of_range,
  empty_set,
  overlapping_sets,
  sets_cover_all,
  too_few_vertices,
  not_simple,
  invalid_cover,
  invalid_argument,
  odd_degree,
  disconnected,
  too_large,
  precondition,
  packing_failed,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rigpack
