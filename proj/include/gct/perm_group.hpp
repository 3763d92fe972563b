#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gct/bignat.hpp"
#include "gct/perm.hpp"
#include "gct/stab_chain.hpp"

namespace gct {

class PermGroup;

enum class Family {
  Untagged,
  Symmetric,
  Alternating,
  Cyclic,
  Dihedral,
  WreathSym,
};

// Certified family label, set only by the constructions module. The class
// count dispatcher trusts it; untagged groups always enumerate.
struct GroupTag {
  Family family = Family::Untagged;
  // Family parameter: n for S(n)/A(n)/C(n), group order for D(2n),
  // top degree for WreathSym.
  unsigned n = 0;
  // WreathSym only: the base group T of T wr S_n.
  std::shared_ptr<const PermGroup> wreath_base;
};

// A permutation group given by generators, with its stabilizer chain built
// eagerly at construction. Immutable afterwards; all queries are safe for
// concurrent read-only use.
class PermGroup {
 public:
  // An empty generator list yields the trivial group of the given degree.
  PermGroup(unsigned degree, std::vector<Perm> generators, GroupTag tag = {});

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const GroupTag& tag() const { return tag_; }
  const StabChain& chain() const { return *chain_; }
  const BigNat& order() const { return chain_->order(); }

  bool contains(const Perm& p) const;

  std::vector<unsigned> orbit(unsigned point) const;
  bool is_transitive() const;

  // Stabilizer of a point, extracted from a chain rebased at that point.
  PermGroup point_stabilizer(unsigned point) const;

  // Pointwise stabilizer of a set of points (chain rebased along them).
  PermGroup pointwise_stabilizer(const std::vector<unsigned>& points) const;

  // All elements via BFS closure over the generators. Throws
  // LimitExceededError when the chain order exceeds `limit`.
  std::vector<Perm> elements(std::uint64_t limit) const;

  Perm random_element(std::mt19937_64& rng) const;

  // Every generator of H sifts into this group.
  bool has_subgroup(const PermGroup& H) const;

  // H <= this and conjugates of H's generators by this group's generators
  // sift back into H.
  bool has_normal_subgroup(const PermGroup& H) const;

 private:
  unsigned degree_;
  std::vector<Perm> gens_;
  GroupTag tag_;
  std::shared_ptr<const StabChain> chain_;
};

}  // namespace gct
