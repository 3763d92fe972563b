#pragma once

#include <vector>

#include "gct/perm_group.hpp"

namespace gct {

// A G-invariant partition of the point set into block_count blocks of
// equal size block_size, with 1 < block_size < degree.
struct BlockSystem {
  unsigned degree = 0;
  unsigned block_size = 0;
  unsigned block_count = 0;
  std::vector<unsigned> assignment;  // point -> block index, canonical
  // numbering: blocks ordered by their smallest point

  // Canonicalizes block numbering; throws std::invalid_argument if the
  // blocks are not of equal size or the partition is trivial.
  static BlockSystem from_assignment(unsigned degree,
                                     const std::vector<unsigned>& raw);

  std::vector<std::vector<unsigned>> blocks() const;

  bool operator==(const BlockSystem&) const = default;
};

bool is_invariant(const PermGroup& G, const BlockSystem& sigma);

// All minimal nontrivial block systems of a transitive group, found by
// congruence closure of the seed pairs {0, beta} (Atkinson). Empty iff G is
// primitive. Throws std::invalid_argument for intransitive input.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& G);

bool is_primitive(const PermGroup& G);

// Induced action on block indices; degree = block_count.
PermGroup block_action_image(const PermGroup& G, const BlockSystem& sigma);

// Elements fixing every block setwise, as a group of the original degree.
// Computed as the pointwise stabilizer of the appended block points in the
// augmented action on points + blocks.
PermGroup block_action_kernel(const PermGroup& G, const BlockSystem& sigma);

// The partition into consecutive runs of `block_size` points (the base-copy
// blocks of an imprimitive wreath product).
BlockSystem consecutive_blocks(unsigned degree, unsigned block_size);

}  // namespace gct
