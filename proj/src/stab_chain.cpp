#include "gct/stab_chain.hpp"

#include <algorithm>

#include "gct/errors.hpp"

namespace gct {

namespace {

ChainLevel make_level(unsigned degree, unsigned base) {
  ChainLevel lev;
  lev.base = base;
  lev.orbit = {base};
  lev.orbit_index.assign(degree, -1);
  lev.orbit_index[base] = 0;
  lev.transversal = {Perm::identity(degree)};
  return lev;
}

}  // namespace

StabChain::StabChain(unsigned degree, std::span<const Perm> generators,
                     std::span<const unsigned> base_seed)
    : degree_(degree) {
  for (unsigned b : base_seed) {
    if (b >= degree) throw PointOutOfRangeError("base point out of range");
    levels_.push_back(make_level(degree_, b));
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw DegreeMismatchError("generator degree mismatch");
    if (!g.is_identity()) insert(g, 0);
  }
  close();
  order_ = 1;
  for (const auto& lev : levels_) order_ *= BigNat(lev.orbit.size());
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const ChainLevel& lev = levels_[i];
    unsigned image = g[lev.base];
    int pos = lev.orbit_index[image];
    if (pos < 0) return {std::move(g), i};
    g = compose(g, lev.transversal[static_cast<std::size_t>(pos)].inverse());
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_)
    throw DegreeMismatchError("contains: degree mismatch");
  auto [res, lev] = sift(g);
  return lev == levels_.size() && res.is_identity();
}

std::vector<Perm> StabChain::strong_generators_from(std::size_t lev) const {
  std::vector<Perm> out;
  for (std::size_t i = lev; i < levels_.size(); ++i)
    out.insert(out.end(), levels_[i].gens.begin(), levels_[i].gens.end());
  return out;
}

Perm StabChain::random_element(std::mt19937_64& rng) const {
  Perm e = Perm::identity(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto& tv = levels_[i].transversal;
    std::uniform_int_distribution<std::size_t> dist(0, tv.size() - 1);
    e = compose(e, tv[dist(rng)]);
  }
  return e;
}

void StabChain::rebuild_orbit(std::size_t lev) {
  ChainLevel& L = levels_[lev];
  std::vector<Perm> gens = strong_generators_from(lev);
  L.orbit = {L.base};
  L.orbit_index.assign(degree_, -1);
  L.orbit_index[L.base] = 0;
  L.transversal = {Perm::identity(degree_)};
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    unsigned pt = L.orbit[i];
    for (const Perm& s : gens) {
      unsigned img = s[pt];
      if (L.orbit_index[img] < 0) {
        L.orbit_index[img] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(img);
        L.transversal.push_back(compose(L.transversal[i], s));
      }
    }
  }
}

bool StabChain::insert(const Perm& g, std::size_t from) {
  auto [res, lev] = sift(g, from);
  if (res.is_identity()) return false;
  if (lev == levels_.size())
    levels_.push_back(make_level(degree_, res.first_moved()));
  auto& gens = levels_[lev].gens;
  if (std::find(gens.begin(), gens.end(), res) != gens.end()) return false;
  gens.push_back(std::move(res));
  for (std::size_t i = 0; i <= lev; ++i) rebuild_orbit(i);
  return true;
}

// Runs Schreier-generator closure to a fixed point. At the fixed point every
// Schreier generator at every level sifts to the identity, so by Schreier's
// lemma each level's stabilizer is generated by the next level's strong
// generators and the chain is a BSGS.
void StabChain::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < levels_.size() && !changed; ++i) {
      rebuild_orbit(i);
      const ChainLevel& L = levels_[i];
      std::vector<Perm> gens = strong_generators_from(i);
      for (std::size_t idx = 0; idx < L.orbit.size() && !changed; ++idx) {
        for (const Perm& s : gens) {
          unsigned img = s[L.orbit[idx]];
          int pos = L.orbit_index[img];
          Perm h = compose(compose(L.transversal[idx], s),
                           L.transversal[static_cast<std::size_t>(pos)].inverse());
          if (insert(h, i + 1)) {
            changed = true;
            break;
          }
        }
      }
    }
  }
}

}  // namespace gct
