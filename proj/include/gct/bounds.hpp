#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gct/bignat.hpp"
#include "gct/blocks.hpp"
#include "gct/class_count.hpp"
#include "gct/perm_group.hpp"

namespace gct {

enum class Relation { Le, Lt };

// One verified inequality instance, in exact integer arithmetic.
struct BoundVerdict {
  std::string claim_id;
  BigNat lhs;
  BigNat rhs;
  Relation relation = Relation::Le;
  bool holds = false;
  std::string context;
};

BoundVerdict make_verdict(std::string claim_id, BigNat lhs, BigNat rhs,
                          Relation rel, std::string context);

// Index sequence (a_1, ..., a_t) of a subgroup chain, every a_i >= 2.
struct ChainIndices {
  std::vector<unsigned> indices;

  explicit ChainIndices(std::vector<unsigned> idx);
  unsigned n() const;  // product of the indices
};

// Main theorem comparator: holds iff k^3 <= 5^{n-1} (equivalent to
// k <= 5^{(n-1)/3}, cubed into integers). Requires n >= 4.
BoundVerdict main_bound_check(const BigNat& k, unsigned n);

// Subgroup/normal-subgroup inequalities on a concrete pair H <= G:
//   (1)  k(H) <= k(G)*|G:H|  and  k(G) <= k(H)*|G:H|
//   (2)  k(H)^2 <= |G|*k(G)
//   (3)  k(G) <= k(H)*k(G/H)  when H is normal and the orbit partition of H
//        is a block system whose action kernel is exactly H; otherwise (3)
//        is reported as skipped.
// Throws std::invalid_argument if H is not a subgroup, or normality is
// claimed but false.
std::vector<BoundVerdict> lemma_ineq_check(
    const PermGroup& G, const PermGroup& H, bool H_normal,
    std::uint64_t limit = kDefaultEnumerationLimit);

// The exact integer  prod_i p(a_i)^{n/(a_1...a_i)}; every exponent is an
// integer, so no roots or floats are involved.
BigNat chain_bound(const ChainIndices& c);

// Greedy index sequence: block size of the lexicographically first minimal
// block system at each step, then the degree of the final primitive image.
// The resulting chain refines a genuine subgroup chain, so the chain bound
// applies to it.
ChainIndices greedy_chain_indices(const PermGroup& G);

// Asserts k(G) <= chain_bound(greedy_chain_indices(G)).
BoundVerdict verify_chain_bound(const PermGroup& G,
                                std::uint64_t limit = kDefaultEnumerationLimit);

// Same verdict with a precomputed class count (sweep path).
BoundVerdict verify_chain_bound_with_count(const PermGroup& G,
                                           const BigNat& k);

// Filtration of the block-action kernel B: B_i = elements of B fixing
// blocks 0..i-1 pointwise; factor i is the restriction image of B_i on
// block i. Asserts k(B) <= prod_i k(factor_i) and each k(factor_i) <=
// p(block_size). Sigma should be a minimal block system for the per-factor
// bound to be guaranteed.
std::vector<BoundVerdict> filtration_check(
    const PermGroup& G, const BlockSystem& sigma,
    std::uint64_t limit = kDefaultEnumerationLimit);

// Sampled verification of k(H) <= p(n) for subgroups H of a primitive group
// G that is not tagged symmetric or alternating: `samples` seeded random
// 1-3 generator subgroups plus G itself.
std::vector<BoundVerdict> subprim_sample_check(
    const PermGroup& G, std::uint64_t seed, unsigned samples,
    std::uint64_t limit = kDefaultEnumerationLimit);

// Wreath dominance on W = T wr S(m): the equality case k(W) =
// class_count_wreath_sym(k(T), m), and for seeded random subgroups G
// containing the base with transitive block image S, the bound
// k(G) <= k(T wr S) with T wr S enumerated as <base, top copy of S>.
std::vector<BoundVerdict> wreath_dominance_check(
    const PermGroup& T, unsigned m, std::uint64_t seed, unsigned samples,
    std::uint64_t limit = kDefaultEnumerationLimit);

// k(G)^4 <= 5^n over the transitive catalog of degree 4..max_degree
// (max_degree <= 23) plus seeded direct products of countable entries.
// Uncountable entries are reported as skipped, never failed. `known` maps
// spec strings to class counts already computed by the caller, so a
// surrounding sweep does not enumerate the same group twice.
std::vector<BoundVerdict> lemma_l3_sweep(
    unsigned max_degree, std::uint64_t seed,
    std::uint64_t limit = kDefaultEnumerationLimit,
    const std::map<std::string, BigNat>* known = nullptr);

}  // namespace gct
