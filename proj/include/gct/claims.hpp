#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gct/bounds.hpp"

namespace gct {

inline constexpr const char* kToolVersion = "gct 1.0.0";

// One reference-value claim from a manifest. Manifest format is
// line-oriented: `kind | name | input | expected | comment`, with `#`
// starting a comment line. Kinds:
//   ClassCount     input: group spec            expected: decimal k(G)
//   PartitionValue input: n                     expected: decimal p(n)
//   WreathValue    input: k=<int> n=<int>       expected: decimal count
//   BoundHolds     input: main-equal k=<k> n=<n> |
//                         l3-equal <spec> |
//                         pyber <spec> blocksize=<a>
//                                               expected: holds
struct ClaimRecord {
  std::string kind;
  std::string name;
  std::string input;
  std::string expected;
  std::string comment;
  // filled at run time
  std::string computed;
  std::string status;  // "Pass", "Fail", "Skipped(<reason>)"
  double seconds = 0;
};

struct RunReport {
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
  std::vector<ClaimRecord> claims;
  std::vector<BoundVerdict> verdicts;

  bool overall_pass() const;
  bool any_skipped() const;
};

// The built-in manifest of reproduced reference values (14 records).
std::string builtin_manifest();

// Throws ParseError on malformed records.
std::vector<ClaimRecord> parse_manifest(std::string_view text);

RunReport run_claims(std::vector<ClaimRecord> claims, std::uint64_t seed,
                     std::uint64_t limit);

// Catalog-wide verification: the main-theorem comparator over every
// countable transitive catalog group of degree 4..max_degree, the degree
// <= 23 sweep of the k^4 <= 5^n bound, and chain/filtration checks on
// imprimitive entries of degree <= 16.
RunReport catalog_sweep(unsigned max_degree, std::uint64_t seed,
                        std::uint64_t limit);

// Line-delimited key=value records; timings included only when
// with_timings.
std::string report_to_text(const RunReport& report, bool with_timings);

// Canonical single-document JSON: records sorted by name, no timings.
std::string report_to_json(const RunReport& report);

}  // namespace gct
