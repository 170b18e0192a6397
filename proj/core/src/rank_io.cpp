#include "setminer/rank_io.hpp"

#include <istream>
#include <ostream>

namespace setminer {

void write_rank(std::ostream& out, const Rank& rank) {
  for (VertexId v = 0; v < rank.rank_of.size(); ++v)
    out << v << ' ' << rank.rank_of[v] << '\n';
}

Rank read_rank(std::istream& in) {
  Rank rank;
  VertexId v;
  std::uint32_t r;
  while (in >> v >> r) {
    if (rank.rank_of.size() <= v) rank.rank_of.resize(v + 1, 0);
    rank.rank_of[v] = r;
  }
  rank.batch_count = 1;
  rank.batch_offsets = {0, static_cast<std::uint32_t>(rank.rank_of.size())};
  return rank;
}

}  // namespace setminer
