#include "gct/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gct/errors.hpp"

namespace gct {

BlockSystem BlockSystem::from_assignment(unsigned degree,
                                         const std::vector<unsigned>& raw) {
  if (raw.size() != degree)
    throw std::invalid_argument("assignment length != degree");
  BlockSystem bs;
  bs.degree = degree;
  bs.assignment.assign(degree, 0);
  std::vector<int> relabel;
  std::vector<unsigned> raw_max(raw.begin(), raw.end());
  unsigned max_raw = *std::max_element(raw_max.begin(), raw_max.end());
  relabel.assign(max_raw + 1, -1);
  unsigned next = 0;
  for (unsigned x = 0; x < degree; ++x) {
    if (relabel[raw[x]] < 0) relabel[raw[x]] = static_cast<int>(next++);
    bs.assignment[x] = static_cast<unsigned>(relabel[raw[x]]);
  }
  bs.block_count = next;
  std::vector<unsigned> sizes(next, 0);
  for (unsigned x = 0; x < degree; ++x) ++sizes[bs.assignment[x]];
  for (unsigned s : sizes)
    if (s != sizes[0]) throw std::invalid_argument("blocks of unequal size");
  bs.block_size = sizes[0];
  if (bs.block_size <= 1 || bs.block_size >= degree)
    throw std::invalid_argument("trivial block system");
  return bs;
}

std::vector<std::vector<unsigned>> BlockSystem::blocks() const {
  std::vector<std::vector<unsigned>> out(block_count);
  for (unsigned x = 0; x < degree; ++x) out[assignment[x]].push_back(x);
  return out;
}

bool is_invariant(const PermGroup& G, const BlockSystem& sigma) {
  if (sigma.degree != G.degree()) return false;
  for (const Perm& g : G.generators()) {
    // image of each block must be a single block
    std::vector<int> image(sigma.block_count, -1);
    for (unsigned x = 0; x < sigma.degree; ++x) {
      unsigned b = sigma.assignment[x];
      unsigned ib = sigma.assignment[g[x]];
      if (image[b] < 0)
        image[b] = static_cast<int>(ib);
      else if (image[b] != static_cast<int>(ib))
        return false;
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<unsigned> parent;
  explicit UnionFind(unsigned n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  unsigned find(unsigned x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns true if the classes were distinct.
  bool unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Congruence closure of {alpha, beta}: the finest G-invariant partition
// merging the pair.
std::vector<unsigned> congruence_closure(const PermGroup& G, unsigned alpha,
                                         unsigned beta) {
  UnionFind uf(G.degree());
  std::vector<std::pair<unsigned, unsigned>> queue = {{alpha, beta}};
  uf.unite(alpha, beta);
  while (!queue.empty()) {
    auto [u, v] = queue.back();
    queue.pop_back();
    for (const Perm& g : G.generators()) {
      unsigned gu = g[u], gv = g[v];
      if (uf.unite(gu, gv)) queue.emplace_back(gu, gv);
    }
  }
  std::vector<unsigned> assign(G.degree());
  for (unsigned x = 0; x < G.degree(); ++x) assign[x] = uf.find(x);
  return assign;
}

// Every block of `fine` lies inside a block of `coarse`, and they differ.
bool strictly_refines(const BlockSystem& fine, const BlockSystem& coarse) {
  if (fine == coarse) return false;
  std::vector<int> image(fine.block_count, -1);
  for (unsigned x = 0; x < fine.degree; ++x) {
    unsigned fb = fine.assignment[x];
    unsigned cb = coarse.assignment[x];
    if (image[fb] < 0)
      image[fb] = static_cast<int>(cb);
    else if (image[fb] != static_cast<int>(cb))
      return false;
  }
  return true;
}

}  // namespace

std::vector<BlockSystem> minimal_block_systems(const PermGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("minimal_block_systems: group not transitive");
  std::vector<BlockSystem> found;
  for (unsigned beta = 1; beta < G.degree(); ++beta) {
    std::vector<unsigned> assign = congruence_closure(G, 0, beta);
    // discard the trivial coarse partition
    bool all_same = std::all_of(assign.begin(), assign.end(),
                                [&](unsigned b) { return b == assign[0]; });
    if (all_same) continue;
    BlockSystem bs = BlockSystem::from_assignment(G.degree(), assign);
    if (std::find(found.begin(), found.end(), bs) == found.end())
      found.push_back(std::move(bs));
  }
  // keep only the minimal ones in the refinement order
  std::vector<BlockSystem> minimal;
  for (const BlockSystem& p : found) {
    bool has_finer = std::any_of(
        found.begin(), found.end(),
        [&](const BlockSystem& q) { return strictly_refines(q, p); });
    if (!has_finer) minimal.push_back(p);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const BlockSystem& a, const BlockSystem& b) {
              return a.assignment < b.assignment;
            });
  return minimal;
}

bool is_primitive(const PermGroup& G) {
  return G.is_transitive() && minimal_block_systems(G).empty();
}

PermGroup block_action_image(const PermGroup& G, const BlockSystem& sigma) {
  if (!is_invariant(G, sigma))
    throw std::invalid_argument("block_action_image: partition not invariant");
  std::vector<Perm> gens;
  for (const Perm& g : G.generators()) {
    std::vector<std::uint16_t> img(sigma.block_count);
    for (unsigned x = 0; x < sigma.degree; ++x)
      img[sigma.assignment[x]] =
          static_cast<std::uint16_t>(sigma.assignment[g[x]]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(sigma.block_count, std::move(gens));
}

PermGroup block_action_kernel(const PermGroup& G, const BlockSystem& sigma) {
  if (!is_invariant(G, sigma))
    throw std::invalid_argument("block_action_kernel: partition not invariant");
  const unsigned n = G.degree();
  const unsigned b = sigma.block_count;
  std::vector<Perm> aug_gens;
  for (const Perm& g : G.generators()) {
    std::vector<std::uint16_t> img(n + b);
    for (unsigned x = 0; x < n; ++x) img[x] = static_cast<std::uint16_t>(g[x]);
    for (unsigned x = 0; x < n; ++x)
      img[n + sigma.assignment[x]] =
          static_cast<std::uint16_t>(n + sigma.assignment[g[x]]);
    aug_gens.emplace_back(std::move(img));
  }
  std::vector<unsigned> block_points(b);
  for (unsigned i = 0; i < b; ++i) block_points[i] = n + i;
  StabChain chain(n + b, aug_gens, block_points);
  std::vector<Perm> kernel_gens;
  for (const Perm& g : chain.strong_generators_from(b)) {
    std::vector<std::uint16_t> img(g.images().begin(),
                                   g.images().begin() + n);
    kernel_gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(kernel_gens));
}

BlockSystem consecutive_blocks(unsigned degree, unsigned block_size) {
  std::vector<unsigned> assign(degree);
  for (unsigned x = 0; x < degree; ++x) assign[x] = x / block_size;
  return BlockSystem::from_assignment(degree, assign);
}

}  // namespace gct
