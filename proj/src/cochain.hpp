#ifndef INCALG_SRC_COCHAIN_HPP
#define INCALG_SRC_COCHAIN_HPP

#include <array>
#include <vector>

#include "incalg/fia.hpp"

namespace incalg::detail {

// Strict pairs x < y, a spanning forest of the comparability graph built from
// them, and the triples x < y < z whose relations (x,y)+(y,z)-(x,z) define
// the cocycle condition.
struct PairComplex {
  std::vector<std::size_t> pairs;  // interval indices with x < y
  std::vector<char> in_tree;       // indexed by interval
  std::vector<std::size_t> nontree;
  std::vector<std::array<std::size_t, 3>> triples;  // (xy, yz, xz)
  // Tree edges in BFS order from the least element of each component:
  // (interval, parent side is x).
  std::vector<std::pair<std::size_t, bool>> tree_order;
  std::vector<Element> roots;
};

PairComplex pair_complex(const FiaContext& ctx);

}  // namespace incalg::detail

#endif
