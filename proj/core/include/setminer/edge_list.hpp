#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "setminer/types.hpp"

namespace setminer {

// Raw edge pairs as parsed or generated, before symmetrization. Vertex ids
// are dense: every id is < n, and n covers ids that appear only in
// self-loops or duplicates (such vertices survive graph construction as
// isolated vertices).
struct EdgeList {
  std::vector<Edge> pairs;
  VertexId n = 0;
};

struct LoadOptions {
  // Subtract 1 from every id (for files that number vertices from 1).
  bool one_based = false;
};

// Reads a whitespace-separated edge list: two decimal ids per line, lines
// starting with '#' or '%' ignored, blank lines skipped. Ids already dense
// in [0, max] are kept verbatim; sparse id spaces are compacted to [0, n)
// in order of first appearance. Throws ParseError on malformed lines and
// negative ids.
EdgeList load_edge_list(const std::filesystem::path& path,
                        const LoadOptions& options = {});

// Same parser over an in-memory buffer (used by tests and network-free
// ingestion paths). `name` only labels errors.
EdgeList parse_edge_list(const std::string& text, const LoadOptions& options = {},
                         const std::string& name = "<memory>");

// Writes "u v" lines, one edge per line, trailing newline.
void save_edge_list(const EdgeList& edges, const std::filesystem::path& path);

}  // namespace setminer
