#include "gct/partitions.hpp"

#include <boost/math/constants/constants.hpp>

#include <stdexcept>

namespace gct {

BigNat PartitionTable::p(unsigned n) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (n >= values_.size()) extend_to(n);
  return values_[n];
}

PartitionTable& PartitionTable::shared() {
  static PartitionTable table;
  return table;
}

void PartitionTable::extend_to(unsigned n) {
  std::size_t target = n + 1;
  if (values_.capacity() < target)
    values_.reserve(std::max(target, values_.capacity() * 2));
  for (std::size_t m = values_.size(); m < target; ++m) {
    // p(m) = sum_{k>=1} (-1)^{k-1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]
    BigNat acc = 0;
    for (std::size_t k = 1;; ++k) {
      std::size_t g1 = k * (3 * k - 1) / 2;
      std::size_t g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      BigNat term = values_[m - g1];
      if (g2 <= m) term += values_[m - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    values_.push_back(std::move(acc));
  }
}

BigNat partition_number(unsigned n) { return PartitionTable::shared().p(n); }

BigNat tuple_partition_count(unsigned k, unsigned n) {
  if (k < 1) throw std::invalid_argument("tuple_partition_count: k >= 1");
  std::vector<BigNat> pvals(n + 1);
  for (unsigned i = 0; i <= n; ++i) pvals[i] = partition_number(i);
  std::vector<BigNat> cur = pvals;  // k = 1
  for (unsigned j = 2; j <= k; ++j) {
    std::vector<BigNat> next(n + 1);
    for (unsigned m = 0; m <= n; ++m)
      for (unsigned i = 0; i <= m; ++i) next[m] += cur[i] * pvals[m - i];
    cur = std::move(next);
  }
  return cur[n];
}

namespace {

template <typename Real>
std::pair<Real, Real> sandwich_margins(unsigned n, const BigNat& pn) {
  using std::log;
  using std::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  Real log_p = log(Real(pn));
  Real rn(n);
  Real lower = Real(2.5) * sqrt(rn) - log(Real(13) * rn);
  Real upper = pi * sqrt(Real(2) * rn / Real(3));
  return {log_p - lower, upper - log_p};
}

}  // namespace

BoundSandwichReport bound_sandwich(unsigned n) {
  if (n < 1) throw std::invalid_argument("bound_sandwich: n >= 1");
  BoundSandwichReport rep;
  rep.n = n;
  rep.p_n = partition_number(n);

  auto [lo, hi] = sandwich_margins<Real50>(n, rep.p_n);
  if (lo < Real50("1e-9") || hi < Real50("1e-9")) {
    auto [lo2, hi2] = sandwich_margins<Real100>(n, rep.p_n);
    if (lo2 < Real100("1e-9") || hi2 < Real100("1e-9"))
      throw std::runtime_error(
          "bound_sandwich: margin below 1e-9 at maximum precision (n=" +
          std::to_string(n) + ")");
    lo = Real50(lo2);
    hi = Real50(hi2);
  }
  rep.lower_ok = lo > 0;
  rep.upper_ok = hi > 0;
  rep.lower_log_margin = static_cast<double>(lo);
  rep.upper_log_margin = static_cast<double>(hi);
  return rep;
}

Real50 hr_asymptotic(unsigned n) {
  if (n < 1) throw std::invalid_argument("hr_asymptotic: n >= 1");
  using std::exp;
  using std::sqrt;
  const Real50 pi = boost::math::constants::pi<Real50>();
  Real50 rn(n);
  return exp(pi * sqrt(Real50(2) * rn / Real50(3))) /
         (Real50(4) * rn * sqrt(Real50(3)));
}

Real50 hr_ratio(unsigned n) {
  return Real50(partition_number(n)) / hr_asymptotic(n);
}

}  // namespace gct
