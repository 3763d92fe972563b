#include "gct/perm_group.hpp"

#include <unordered_set>

#include "gct/errors.hpp"

namespace gct {

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     GroupTag tag)
    : degree_(degree), gens_(std::move(generators)), tag_(std::move(tag)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw DegreeMismatchError("generator degree mismatch");
  if (gens_.empty()) gens_.push_back(Perm::identity(degree_));
  chain_ = std::make_shared<StabChain>(degree_, gens_);
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatchError("contains: degree mismatch");
  return chain_->contains(p);
}

std::vector<unsigned> PermGroup::orbit(unsigned point) const {
  if (point >= degree_) throw PointOutOfRangeError("orbit: point out of range");
  std::vector<unsigned> orb = {point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Perm& g : gens_) {
      unsigned img = g[orb[i]];
      if (!seen[img]) {
        seen[img] = true;
        orb.push_back(img);
      }
    }
  }
  return orb;
}

bool PermGroup::is_transitive() const {
  return degree_ > 0 && orbit(0).size() == degree_;
}

PermGroup PermGroup::point_stabilizer(unsigned point) const {
  if (point >= degree_)
    throw PointOutOfRangeError("point_stabilizer: point out of range");
  return pointwise_stabilizer({point});
}

PermGroup PermGroup::pointwise_stabilizer(
    const std::vector<unsigned>& points) const {
  StabChain rebased(degree_, gens_, points);
  return PermGroup(degree_, rebased.strong_generators_from(points.size()));
}

std::vector<Perm> PermGroup::elements(std::uint64_t limit) const {
  if (order() > limit) throw LimitExceededError(order().str(), limit);
  std::vector<Perm> elems = {Perm::identity(degree_)};
  std::unordered_set<Perm, PermHash> seen(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens_) {
      Perm next = compose(elems[i], g);
      if (seen.insert(next).second) elems.push_back(std::move(next));
    }
  }
  return elems;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  return chain_->random_element(rng);
}

bool PermGroup::has_subgroup(const PermGroup& H) const {
  if (H.degree() != degree_) return false;
  for (const Perm& h : H.generators())
    if (!chain_->contains(h)) return false;
  return true;
}

bool PermGroup::has_normal_subgroup(const PermGroup& H) const {
  if (!has_subgroup(H)) return false;
  for (const Perm& g : gens_)
    for (const Perm& h : H.generators())
      if (!H.contains(conjugate(h, g))) return false;
  return true;
}

}  // namespace gct
