#pragma once

#include <mutex>
#include <vector>

#include "gct/bignat.hpp"

namespace gct {

// Memoized table of partition numbers p(n), extended on demand via Euler's
// pentagonal-number recurrence. Extension is serialized by a mutex; lookups
// return by value so concurrent readers never see a reallocation.
class PartitionTable {
 public:
  BigNat p(unsigned n);

  static PartitionTable& shared();

 private:
  void extend_to(unsigned n);

  std::vector<BigNat> values_ = {BigNat(1)};  // p(0) = 1
  std::mutex mutex_;
};

// p(n) via the shared table.
BigNat partition_number(unsigned n);

// Number of k-tuples of partitions with total size n (the class count of
// T wr S_n when T has k classes).
BigNat tuple_partition_count(unsigned k, unsigned n);

// Verdict of the analytic sandwich  e^{2.5 sqrt n}/(13n) < p(n) < e^{pi
// sqrt(2n/3)}, decided on logarithms at 50 decimal digits, escalated to 100
// if a margin falls below 1e-9. Both flags true for every n >= 1; a false
// flag signals an implementation bug.
struct BoundSandwichReport {
  unsigned n = 0;
  BigNat p_n;
  bool lower_ok = false;
  bool upper_ok = false;
  double lower_log_margin = 0;  // ln p(n) - (2.5 sqrt n - ln 13n)
  double upper_log_margin = 0;  // pi sqrt(2n/3) - ln p(n)
};

BoundSandwichReport bound_sandwich(unsigned n);

// Hardy-Ramanujan main term e^{pi sqrt(2n/3)} / (4 n sqrt 3). Reporting
// only; never used in a pass/fail verdict.
Real50 hr_asymptotic(unsigned n);

// p(n) / HR(n).
Real50 hr_ratio(unsigned n);

// Invokes fn(lambda) for every partition lambda of n, parts weakly
// decreasing. Intended for small n (class formulas, test oracles).
template <typename Fn>
void for_each_partition(unsigned n, Fn&& fn) {
  std::vector<unsigned> parts;
  auto rec = [&](auto&& self, unsigned rest, unsigned maxp) -> void {
    if (rest == 0) {
      fn(const_cast<const std::vector<unsigned>&>(parts));
      return;
    }
    for (unsigned p = std::min(rest, maxp); p >= 1; --p) {
      parts.push_back(p);
      self(self, rest - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
}

}  // namespace gct
