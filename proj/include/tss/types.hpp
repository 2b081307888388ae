#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tss {

using Vertex = std::uint32_t;
using Threshold = std::int64_t;
using VertexSet = std::vector<Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text that does not follow the edge-list / threshold grammar.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tss
