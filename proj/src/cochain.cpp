#include "cochain.hpp"

#include <deque>

namespace incalg::detail {

PairComplex pair_complex(const FiaContext& ctx) {
  const Poset& p = ctx.poset;
  const std::size_t n = p.size();
  PairComplex pc;
  pc.in_tree.assign(ctx.dim(), 0);

  std::vector<std::vector<std::pair<Element, std::size_t>>> adj(n);
  for (std::size_t k = 0; k < ctx.dim(); ++k) {
    auto [x, y] = ctx.intervals[k];
    if (x == y) continue;
    pc.pairs.push_back(k);
    adj[x].emplace_back(y, k);
    adj[y].emplace_back(x, k);
  }

  std::vector<char> seen(n, 0);
  for (Element r = 0; r < n; ++r) {
    if (seen[r]) continue;
    pc.roots.push_back(r);
    seen[r] = 1;
    std::deque<Element> queue{r};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (auto [y, k] : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        pc.in_tree[k] = 1;
        pc.tree_order.emplace_back(k, ctx.intervals[k].first == x);
        queue.push_back(y);
      }
    }
  }
  for (auto k : pc.pairs)
    if (!pc.in_tree[k]) pc.nontree.push_back(k);

  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (p.less(y, z)) pc.triples.push_back({ctx.idx(x, y), ctx.idx(y, z), ctx.idx(x, z)});
    }
  return pc;
}

}  // namespace incalg::detail
