#pragma once

#include <cstdint>

#include "gct/bignat.hpp"
#include "gct/perm_group.hpp"

namespace gct {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

enum class CountMethod {
  Enumeration,
  SymmetricFormula,
  AlternatingFormula,
  WreathSymFormula,
};

struct ClassCountResult {
  BigNat count;
  CountMethod method = CountMethod::Enumeration;
  std::uint64_t elements_visited = 0;  // Enumeration only
};

// Ground-truth oracle: enumerates all elements, then counts orbits of the
// conjugation action of the generators via union-find. Throws
// LimitExceededError when |G| > limit.
ClassCountResult class_count_enumerate(const PermGroup& G, std::uint64_t limit);

// k(A_n): partitions of n with an even count of even parts (classes of S_n
// lying in A_n) plus partitions into distinct odd parts (the classes that
// split).
BigNat class_count_alternating(unsigned n);

// k(T wr S_n) for a base group with k_base classes: the number of
// k_base-tuples of partitions with total size n.
BigNat class_count_wreath_sym(const BigNat& k_base, unsigned n);

// Dispatcher: certified family tag when available, else enumeration under
// the limit. Throws UncountableError when neither applies. Never infers a
// tag from the generators.
ClassCountResult class_count(const PermGroup& G,
                             std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace gct
