#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace setminer {

// Vertex IDs are dense in [0, n) for the owning graph.
using VertexId = std::uint32_t;

// Canonical undirected edge: first < second after normalization.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// Raised by file loaders on malformed input; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when a collecting sink exceeds its configured capacity.
class SinkOverflowError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace setminer
