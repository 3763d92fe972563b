#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "gct/bignat.hpp"
#include "gct/perm.hpp"

namespace gct {

// One level of a stabilizer chain: a base point, the strong generators
// first moved at this level, and the transversal of the base point's orbit
// under the stabilizer of all earlier base points.
struct ChainLevel {
  unsigned base = 0;
  std::vector<Perm> gens;
  std::vector<unsigned> orbit;       // BFS order, orbit[0] == base
  std::vector<int> orbit_index;      // point -> position in orbit, -1 if absent
  std::vector<Perm> transversal;     // transversal[i] maps base to orbit[i]
};

// Deterministic (non-randomized) Schreier-Sims chain. Built once at
// construction; read-only afterwards, safe for concurrent queries.
class StabChain {
 public:
  // base_seed prescribes the initial base points, in order; used to extract
  // pointwise stabilizers. Identity generators are ignored.
  StabChain(unsigned degree, std::span<const Perm> generators,
            std::span<const unsigned> base_seed = {});

  unsigned degree() const { return degree_; }

  const BigNat& order() const { return order_; }

  bool contains(const Perm& g) const;

  // Sifts g through levels [from, end); returns the residue and the level
  // at which it dropped out (== num_levels() when it sifted all the way).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;

  std::size_t num_levels() const { return levels_.size(); }
  const ChainLevel& level(std::size_t i) const { return levels_[i]; }

  // All strong generators stored at levels >= lev; generates the stabilizer
  // of the first `lev` base points.
  std::vector<Perm> strong_generators_from(std::size_t lev) const;

  // Uniformly random element via the transversal decomposition.
  Perm random_element(std::mt19937_64& rng) const;

 private:
  void rebuild_orbit(std::size_t lev);
  bool insert(const Perm& g, std::size_t from);
  void close();

  unsigned degree_;
  std::vector<ChainLevel> levels_;
  BigNat order_ = 1;
};

}  // namespace gct
