#include "gct/class_count.hpp"

#include <numeric>
#include <unordered_map>
#include <vector>

#include "gct/errors.hpp"
#include "gct/partitions.hpp"

namespace gct {

namespace {

// Greedy generating subset reaching the full order; trims the redundant
// per-copy generators of product and wreath constructions before the
// element sweep.
std::vector<Perm> reduced_generators(const PermGroup& G) {
  std::vector<Perm> kept;
  for (const Perm& g : G.generators()) {
    if (g.is_identity()) continue;
    if (!kept.empty()) {
      StabChain partial(G.degree(), kept);
      if (partial.order() == G.order()) break;
      if (partial.contains(g)) continue;
    }
    kept.push_back(g);
  }
  if (kept.empty()) kept.push_back(Perm::identity(G.degree()));
  return kept;
}

}  // namespace

ClassCountResult class_count_enumerate(const PermGroup& G,
                                       std::uint64_t limit) {
  if (G.order() > limit) throw LimitExceededError(G.order().str(), limit);
  std::vector<Perm> gens = reduced_generators(G);

  // single-storage enumeration: map nodes own the permutations
  std::unordered_map<Perm, std::uint32_t, PermHash> index;
  std::vector<const Perm*> elems;
  index.reserve(G.order().convert_to<std::size_t>() * 2);
  auto insert = [&](Perm p) {
    auto [it, fresh] = index.emplace(std::move(p),
                                     static_cast<std::uint32_t>(elems.size()));
    if (fresh) elems.push_back(&it->first);
  };
  insert(Perm::identity(G.degree()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : gens) insert(compose(*elems[i], g));

  // union-find with path compression over element indices
  std::vector<std::uint32_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  // closing under conjugation by generators suffices: they generate the
  // full conjugation action. (g^-1 x g)(p) = g(x(g^-1(p))), built directly
  // to avoid two intermediate products per pair.
  std::vector<Perm> gen_invs;
  for (const Perm& g : gens) gen_invs.push_back(g.inverse());
  const unsigned deg = G.degree();
  std::vector<std::uint16_t> conj_img(deg);
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    const Perm& x = *elems[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Perm& g = gens[j];
      const Perm& gi = gen_invs[j];
      for (unsigned p = 0; p < deg; ++p)
        conj_img[p] = static_cast<std::uint16_t>(g[x[gi[p]]]);
      Perm conj = Perm::unchecked(conj_img);
      std::uint32_t a = find(i), b = find(index.at(conj));
      if (a != b) parent[a] = b;
    }
  }

  BigNat count = 0;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    if (find(i) == i) ++count;
  return {count, CountMethod::Enumeration, elems.size()};
}

BigNat class_count_alternating(unsigned n) {
  if (n < 2) throw std::invalid_argument("class_count_alternating: n >= 2");
  BigNat even_types = 0, split_types = 0;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    // cycle type parity: n - (number of parts) mod 2
    if ((n - parts.size()) % 2 == 0) ++even_types;
    bool distinct_odd = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] % 2 == 0 || (i > 0 && parts[i] == parts[i - 1])) {
        distinct_odd = false;
        break;
      }
    }
    if (distinct_odd) ++split_types;
  });
  return even_types + split_types;
}

BigNat class_count_wreath_sym(const BigNat& k_base, unsigned n) {
  if (k_base < 1)
    throw std::invalid_argument("class_count_wreath_sym: k_base >= 1");
  if (k_base > 1000000)
    throw std::invalid_argument("class_count_wreath_sym: k_base too large");
  return tuple_partition_count(k_base.convert_to<unsigned>(), n);
}

ClassCountResult class_count(const PermGroup& G, std::uint64_t limit) {
  const GroupTag& tag = G.tag();
  switch (tag.family) {
    case Family::Symmetric:
      return {partition_number(tag.n), CountMethod::SymmetricFormula, 0};
    case Family::Alternating:
      if (tag.n >= 2)
        return {class_count_alternating(tag.n), CountMethod::AlternatingFormula,
                0};
      break;  // A(1): trivial, enumerate
    case Family::WreathSym: {
      ClassCountResult base = class_count(*tag.wreath_base, limit);
      return {class_count_wreath_sym(base.count, tag.n),
              CountMethod::WreathSymFormula, 0};
    }
    default:
      break;
  }
  if (G.order() > limit) throw UncountableError(G.order().str());
  return class_count_enumerate(G, limit);
}

}  // namespace gct
