#include "gct/bounds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "gct/constructions.hpp"
#include "gct/errors.hpp"
#include "gct/partitions.hpp"

namespace gct {

BoundVerdict make_verdict(std::string claim_id, BigNat lhs, BigNat rhs,
                          Relation rel, std::string context) {
  BoundVerdict v;
  v.holds = rel == Relation::Le ? lhs <= rhs : lhs < rhs;
  v.claim_id = std::move(claim_id);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.relation = rel;
  v.context = std::move(context);
  return v;
}

ChainIndices::ChainIndices(std::vector<unsigned> idx)
    : indices(std::move(idx)) {
  if (indices.empty())
    throw std::invalid_argument("ChainIndices: at least one index");
  for (unsigned a : indices)
    if (a < 2) throw std::invalid_argument("ChainIndices: every index >= 2");
}

unsigned ChainIndices::n() const {
  std::uint64_t prod = 1;
  for (unsigned a : indices) {
    prod *= a;
    if (prod > (1u << 16))
      throw std::invalid_argument("ChainIndices: degree overflow");
  }
  return static_cast<unsigned>(prod);
}

BoundVerdict main_bound_check(const BigNat& k, unsigned n) {
  if (n < 4) throw std::invalid_argument("main_bound_check: n >= 4 required");
  return make_verdict("thm-main", k * k * k, bignat_pow(5, n - 1),
                      Relation::Le, "k^3 vs 5^(n-1), k=" + k.str() +
                                        ", n=" + std::to_string(n));
}

namespace {

// Orbit partition of H as a block system, when the orbits are a nontrivial
// equal-size G-invariant partition; nullopt-style via bool.
bool orbit_block_system(const PermGroup& G, const PermGroup& H,
                        BlockSystem& out) {
  std::vector<int> assign(H.degree(), -1);
  unsigned next = 0;
  for (unsigned x = 0; x < H.degree(); ++x) {
    if (assign[x] >= 0) continue;
    for (unsigned y : H.orbit(x)) assign[y] = static_cast<int>(next);
    ++next;
  }
  std::vector<unsigned> raw(assign.begin(), assign.end());
  try {
    out = BlockSystem::from_assignment(H.degree(), raw);
  } catch (const std::invalid_argument&) {
    return false;  // trivial or unequal sizes
  }
  return is_invariant(G, out);
}

}  // namespace

std::vector<BoundVerdict> lemma_ineq_check(const PermGroup& G,
                                           const PermGroup& H, bool H_normal,
                                           std::uint64_t limit) {
  if (!G.has_subgroup(H))
    throw std::invalid_argument("lemma_ineq_check: H is not a subgroup of G");
  if (H_normal && !G.has_normal_subgroup(H))
    throw std::invalid_argument("lemma_ineq_check: H is not normal in G");

  BigNat kG = class_count(G, limit).count;
  BigNat kH = class_count(H, limit).count;
  BigNat index = G.order() / H.order();
  std::string ctx = "|G|=" + G.order().str() + ", |H|=" + H.order().str() +
                    ", index=" + index.str();

  std::vector<BoundVerdict> out;
  out.push_back(make_verdict("lemma-ineq-1-lower", kH, kG * index,
                             Relation::Le, ctx));
  out.push_back(make_verdict("lemma-ineq-1-upper", kG, kH * index,
                             Relation::Le, ctx));
  out.push_back(
      make_verdict("lemma-ineq-2", kH * kH, G.order() * kG, Relation::Le, ctx));

  if (H_normal) {
    BlockSystem sigma;
    bool have_quotient = false;
    BigNat kQ;
    if (orbit_block_system(G, H, sigma)) {
      PermGroup image = block_action_image(G, sigma);
      if (image.order() * H.order() == G.order()) {
        kQ = class_count(image, limit).count;
        have_quotient = true;
      }
    }
    if (have_quotient) {
      out.push_back(make_verdict("lemma-ineq-3", kG, kH * kQ, Relation::Le,
                                 ctx + ", k(G/N)=" + kQ.str()));
    } else {
      BoundVerdict v;
      v.claim_id = "lemma-ineq-3";
      v.holds = true;
      v.relation = Relation::Le;
      v.context = ctx + ", skipped: orbit partition of N is not a faithful "
                        "quotient block system";
      out.push_back(std::move(v));
    }
  }
  return out;
}

BigNat chain_bound(const ChainIndices& c) {
  unsigned n = c.n();
  BigNat bound = 1;
  std::uint64_t prefix = 1;
  for (unsigned a : c.indices) {
    prefix *= a;
    unsigned exponent = static_cast<unsigned>(n / prefix);
    bound *= bignat_pow(partition_number(a), exponent);
  }
  return bound;
}

ChainIndices greedy_chain_indices(const PermGroup& G) {
  if (!G.is_transitive())
    throw std::invalid_argument("greedy_chain_indices: group not transitive");
  if (G.degree() < 2)
    throw std::invalid_argument("greedy_chain_indices: degree >= 2 required");

  std::vector<unsigned> indices;
  PermGroup cur = G;
  while (cur.degree() > 1) {
    auto systems = minimal_block_systems(cur);
    if (systems.empty()) {
      indices.push_back(cur.degree());
      break;
    }
    indices.push_back(systems.front().block_size);
    cur = block_action_image(cur, systems.front());
  }
  return ChainIndices(std::move(indices));
}

BoundVerdict verify_chain_bound_with_count(const PermGroup& G,
                                           const BigNat& k) {
  ChainIndices chain = greedy_chain_indices(G);
  BigNat bound = chain_bound(chain);
  std::string ctx = "indices=(";
  for (std::size_t i = 0; i < chain.indices.size(); ++i)
    ctx += (i ? "," : "") + std::to_string(chain.indices[i]);
  ctx += "), k=" + k.str();
  return make_verdict("thm-chain-bound", k, std::move(bound), Relation::Le,
                      std::move(ctx));
}

BoundVerdict verify_chain_bound(const PermGroup& G, std::uint64_t limit) {
  return verify_chain_bound_with_count(G, class_count(G, limit).count);
}

std::vector<BoundVerdict> filtration_check(const PermGroup& G,
                                           const BlockSystem& sigma,
                                           std::uint64_t limit) {
  PermGroup kernel = block_action_kernel(G, sigma);
  std::vector<Perm> elems = kernel.elements(limit);
  auto blocks = sigma.blocks();
  const unsigned a = sigma.block_size;
  BigNat pa = partition_number(a);

  std::vector<BoundVerdict> out;
  BigNat product = 1;
  std::vector<Perm> current = std::move(elems);  // B_i, as element list
  for (unsigned i = 0; i < sigma.block_count; ++i) {
    const auto& block = blocks[i];
    // restriction image of B_i on block i
    std::vector<Perm> restricted;
    std::vector<Perm> next;  // B_{i+1}: kernel of the restriction
    for (const Perm& g : current) {
      std::vector<std::uint16_t> img(a);
      bool fixes = true;
      for (unsigned j = 0; j < a; ++j) {
        unsigned y = g[block[j]];
        unsigned pos =
            static_cast<unsigned>(std::lower_bound(block.begin(), block.end(), y) -
                                  block.begin());
        img[j] = static_cast<std::uint16_t>(pos);
        if (y != block[j]) fixes = false;
      }
      Perm r{std::vector<std::uint16_t>(img)};
      if (std::find(restricted.begin(), restricted.end(), r) ==
          restricted.end())
        restricted.push_back(std::move(r));
      if (fixes) next.push_back(g);
    }
    PermGroup factor(a, restricted);
    BigNat kf = class_count_enumerate(factor, limit).count;
    out.push_back(make_verdict(
        "thm-filtration-factor-" + std::to_string(i), kf, pa, Relation::Le,
        "factor order " + factor.order().str() + ", block size " +
            std::to_string(a)));
    product *= kf;
    current = std::move(next);
  }

  BigNat kB = class_count_enumerate(kernel, limit).count;
  out.insert(out.begin(),
             make_verdict("thm-filtration-product", kB, product, Relation::Le,
                          "kernel order " + kernel.order().str()));
  return out;
}

std::vector<BoundVerdict> subprim_sample_check(const PermGroup& G,
                                               std::uint64_t seed,
                                               unsigned samples,
                                               std::uint64_t limit) {
  if (G.tag().family == Family::Symmetric ||
      G.tag().family == Family::Alternating)
    throw std::invalid_argument(
        "subprim_sample_check: symmetric/alternating groups are excluded");
  if (!is_primitive(G))
    throw std::invalid_argument("subprim_sample_check: group not primitive");

  BigNat pn = partition_number(G.degree());
  std::vector<BoundVerdict> out;
  out.push_back(make_verdict("thm-subprim-whole", class_count(G, limit).count,
                             pn, Relation::Le, "H = G"));

  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    std::uniform_int_distribution<unsigned> ngens_dist(1, 3);
    unsigned ngens = ngens_dist(rng);
    std::vector<Perm> gens;
    std::string ctx = "gens:";
    for (unsigned j = 0; j < ngens; ++j) {
      gens.push_back(G.random_element(rng));
      ctx += " " + gens.back().cycle_string();
    }
    PermGroup H(G.degree(), std::move(gens));
    out.push_back(make_verdict("thm-subprim-sample-" + std::to_string(s),
                               class_count(H, limit).count, pn, Relation::Le,
                               ctx));
  }
  return out;
}

std::vector<BoundVerdict> wreath_dominance_check(const PermGroup& T,
                                                 unsigned m,
                                                 std::uint64_t seed,
                                                 unsigned samples,
                                                 std::uint64_t limit) {
  PermGroup W = wreath_imprimitive(T, symmetric_group(m));
  if (W.order() > limit) throw LimitExceededError(W.order().str(), limit);

  const unsigned d = T.degree();
  BlockSystem sigma = consecutive_blocks(W.degree(), d);
  std::vector<Perm> base_gens;
  for (unsigned copy = 0; copy < m; ++copy)
    for (const Perm& t : T.generators()) {
      std::vector<std::uint16_t> img(W.degree());
      for (unsigned x = 0; x < W.degree(); ++x)
        img[x] = static_cast<std::uint16_t>(x);
      for (unsigned x = 0; x < d; ++x)
        img[copy * d + x] = static_cast<std::uint16_t>(copy * d + t[x]);
      base_gens.emplace_back(std::move(img));
    }

  BigNat kT = class_count(T, limit).count;
  BigNat formula = class_count_wreath_sym(kT, m);
  BigNat kW = class_count_enumerate(W, limit).count;
  std::vector<BoundVerdict> out;
  out.push_back(make_verdict("lemma-wreath-equality-le", kW, formula,
                             Relation::Le, "k(T wr S_m) vs tuple formula"));
  out.push_back(make_verdict("lemma-wreath-equality-ge", formula, kW,
                             Relation::Le, "tuple formula vs k(T wr S_m)"));

  std::mt19937_64 rng(seed);
  for (unsigned s = 0; s < samples; ++s) {
    std::uniform_int_distribution<unsigned> extra_dist(1, 2);
    std::vector<Perm> gens = base_gens;
    std::string ctx = "extra gens:";
    unsigned extra = extra_dist(rng);
    for (unsigned j = 0; j < extra; ++j) {
      gens.push_back(W.random_element(rng));
      ctx += " " + gens.back().cycle_string();
    }
    PermGroup Gs(W.degree(), std::move(gens));
    PermGroup S = block_action_image(Gs, sigma);
    if (!S.is_transitive()) {
      BoundVerdict v;
      v.claim_id = "lemma-wreath-sample-" + std::to_string(s);
      v.holds = true;
      v.context = ctx + ", skipped: block image not transitive";
      out.push_back(std::move(v));
      continue;
    }
    // T wr S as <base, top copy of S> inside W
    std::vector<Perm> ts_gens = base_gens;
    for (const Perm& p : S.generators()) {
      std::vector<std::uint16_t> img(W.degree());
      for (unsigned copy = 0; copy < m; ++copy)
        for (unsigned x = 0; x < d; ++x)
          img[copy * d + x] = static_cast<std::uint16_t>(p[copy] * d + x);
      ts_gens.emplace_back(std::move(img));
    }
    PermGroup TS(W.degree(), std::move(ts_gens));
    out.push_back(make_verdict(
        "lemma-wreath-sample-" + std::to_string(s),
        class_count_enumerate(Gs, limit).count,
        class_count_enumerate(TS, limit).count, Relation::Le,
        ctx + ", |G|=" + Gs.order().str() + ", |TwrS|=" + TS.order().str()));
  }
  return out;
}

std::vector<BoundVerdict> lemma_l3_sweep(
    unsigned max_degree, std::uint64_t seed, std::uint64_t limit,
    const std::map<std::string, BigNat>* known) {
  if (max_degree > 23)
    throw std::invalid_argument("lemma_l3_sweep: max_degree <= 23");

  struct Countable {
    std::string spec;
    unsigned degree;
    BigNat k;
  };
  std::vector<Countable> countable;
  std::vector<BoundVerdict> out;

  // atom class counts, cached; nullopt-style via a map of computed values
  std::map<std::string, BigNat> atom_k;
  std::set<std::string> atom_uncountable;
  auto atom_count = [&](const std::string& spec_text) -> const BigNat* {
    if (known) {
      auto kit = known->find(spec_text);
      if (kit != known->end()) return &kit->second;
    }
    if (atom_uncountable.count(spec_text)) return nullptr;
    auto it = atom_k.find(spec_text);
    if (it != atom_k.end()) return &it->second;
    try {
      BigNat k = class_count(parse_group_spec(spec_text), limit).count;
      return &atom_k.emplace(spec_text, std::move(k)).first->second;
    } catch (const UncountableError&) {
      atom_uncountable.insert(spec_text);
      return nullptr;
    }
  };

  auto emit = [&](const std::string& id, const BigNat& k, unsigned n) {
    BigNat lhs = k * k * k * k;
    BigNat rhs = bignat_pow(5, n);
    std::string ctx = "k=" + k.str() + ", n=" + std::to_string(n);
    if (lhs == rhs) ctx += ", equality";
    out.push_back(make_verdict(id, std::move(lhs), std::move(rhs),
                               Relation::Le, std::move(ctx)));
  };

  for (const CatalogEntry& entry : catalog_specs(max_degree)) {
    if (entry.degree < 4 || entry.degree > max_degree) continue;
    GroupSpec spec = GroupSpec::parse(entry.spec);
    if (spec.kind == GroupSpec::Kind::Prod) {
      // classes multiply across disjoint factors
      const BigNat* kx = atom_count(spec.children[0].str());
      const BigNat* ky = atom_count(spec.children[1].str());
      if (kx && ky) emit("lemma-l3:" + entry.spec, *kx * *ky, entry.degree);
      continue;
    }
    if (known) {
      auto kit = known->find(entry.spec);
      if (kit != known->end()) {
        emit("lemma-l3:" + entry.spec, kit->second, entry.degree);
        countable.push_back({entry.spec, entry.degree, kit->second});
        continue;
      }
    }
    PermGroup G = spec.build();
    if (!G.is_transitive()) continue;
    BigNat k;
    try {
      k = class_count(G, limit).count;
    } catch (const UncountableError& e) {
      BoundVerdict v;
      v.claim_id = "lemma-l3:" + entry.spec;
      v.holds = true;
      v.context = "skipped: uncountable, order " + e.order;
      out.push_back(std::move(v));
      continue;
    }
    emit("lemma-l3:" + entry.spec, k, entry.degree);
    countable.push_back({entry.spec, entry.degree, std::move(k)});
  }

  // seeded direct products of transitive entries: further intransitive
  // instances, degrees up to 2*max_degree
  std::mt19937_64 rng(seed);
  if (countable.size() >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, countable.size() - 1);
    for (unsigned s = 0; s < 40; ++s) {
      const Countable& x = countable[pick(rng)];
      const Countable& y = countable[pick(rng)];
      emit("lemma-l3:prod(" + x.spec + "," + y.spec + ")", x.k * y.k,
           x.degree + y.degree);
    }
  }
  return out;
}

}  // namespace gct
