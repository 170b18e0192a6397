#pragma once

#include <iosfwd>

#include "setminer/ordering.hpp"

namespace setminer {

// Text export of a rank, one "vertex rank" line per vertex, vertex order.
void write_rank(std::ostream& out, const Rank& rank);

// Inverse of write_rank; batch structure is not part of the format, so the
// result carries the trivial single batch.
Rank read_rank(std::istream& in);

}  // namespace setminer
