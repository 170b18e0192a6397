#include "setminer/edge_list.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace setminer {
namespace {

bool parse_id(const char*& p, const char* end, std::int64_t& out) {
  while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  if (p == end) return false;
  auto [next, ec] = std::from_chars(p, end, out);
  if (ec != std::errc{}) return false;
  p = next;
  return true;
}

}  // namespace

EdgeList parse_edge_list(const std::string& text, const LoadOptions& options,
                         const std::string& name) {
  EdgeList edges;
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::int64_t max_id = -1;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    const char* p = text.data() + pos;
    const char* end = text.data() + eol;
    pos = eol + 1;

    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end || *p == '#' || *p == '%') continue;

    std::int64_t u, v;
    if (!parse_id(p, end, u) || !parse_id(p, end, v))
      throw ParseError(name, line_no, "expected two integer tokens");
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p != end) throw ParseError(name, line_no, "trailing tokens after edge");

    if (options.one_based) {
      --u;
      --v;
    }
    if (u < 0 || v < 0)
      throw ParseError(name, line_no,
                       options.one_based ? "vertex id below 1 in 1-based file"
                                         : "negative vertex id");
    raw.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }

  if (raw.empty()) return edges;

  // Dense id spaces are kept verbatim; sparse ones are compacted by first
  // appearance so the vertex universe is exactly [0, n).
  std::unordered_map<std::int64_t, bool> seen;
  seen.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    seen[u] = true;
    seen[v] = true;
  }
  const bool dense = static_cast<std::int64_t>(seen.size()) == max_id + 1;

  edges.pairs.reserve(raw.size());
  if (dense) {
    for (const auto& [u, v] : raw)
      edges.pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    edges.n = static_cast<VertexId>(max_id + 1);
  } else {
    std::unordered_map<std::int64_t, VertexId> remap;
    remap.reserve(seen.size() * 2);
    auto id_of = [&](std::int64_t raw_id) {
      auto [it, inserted] = remap.try_emplace(raw_id, static_cast<VertexId>(remap.size()));
      return it->second;
    };
    for (const auto& [u, v] : raw) {
      const VertexId cu = id_of(u);
      const VertexId cv = id_of(v);
      edges.pairs.emplace_back(cu, cv);
    }
    edges.n = static_cast<VertexId>(remap.size());
  }
  return edges;
}

EdgeList load_edge_list(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str(), options, path.string());
}

void save_edge_list(const EdgeList& edges, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  for (const auto& [u, v] : edges.pairs) out << u << ' ' << v << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace setminer
