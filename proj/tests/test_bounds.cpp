#include <random>

#include "doctest.h"

#include "gct/bounds.hpp"
#include "gct/constructions.hpp"
#include "gct/partitions.hpp"

using namespace gct;

TEST_CASE("chain bound values") {
  CHECK(chain_bound(ChainIndices({2, 12})) == 315392);  // 2^12 * 77
  CHECK(chain_bound(ChainIndices({4, 2})) == 50);       // 25^2 * 2
  CHECK(chain_bound(ChainIndices({6})) == partition_number(6));
  CHECK(chain_bound(ChainIndices({2, 2, 2})) == 128);   // 2^4 * 2^2 * 2
  CHECK_THROWS_AS(ChainIndices({1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ChainIndices(std::vector<unsigned>{}),
                  std::invalid_argument);
}

TEST_CASE("main bound comparator") {
  BoundVerdict eq = main_bound_check(5, 4);
  CHECK(eq.holds);
  CHECK(eq.lhs == eq.rhs);
  CHECK(!main_bound_check(6, 4).holds);
  CHECK(main_bound_check(77, 12).holds);  // p(12)^3 <= 5^11
  CHECK(main_bound_check(BigNat("1000000007"), 40).holds);
  CHECK_THROWS_AS(main_bound_check(2, 3), std::invalid_argument);
}

TEST_CASE("subgroup inequalities on S4/A4") {
  PermGroup S4 = symmetric_group(4);
  PermGroup A4 = alternating_group(4);
  auto verdicts = lemma_ineq_check(S4, A4, true);
  REQUIRE(verdicts.size() == 4);
  for (const BoundVerdict& v : verdicts) CHECK(v.holds);
  // k(A4)=4 <= k(S4)*2 = 10 ; k(S4)=5 <= k(A4)*2 = 8 ; 16 <= 120
  CHECK(verdicts[0].lhs == 4);
  CHECK(verdicts[0].rhs == 10);
  CHECK(verdicts[1].lhs == 5);
  CHECK(verdicts[1].rhs == 8);
  CHECK(verdicts[2].lhs == 16);
  CHECK(verdicts[2].rhs == 120);
}

TEST_CASE("quotient inequality through a block kernel") {
  PermGroup G = parse_group_spec("wr(S(2),S(2))");  // D8 as a wreath
  // the base S2 x S2 is normal with orbit blocks {1,2},{3,4}
  PermGroup H(4, {Perm::parse_cycles("(1,2)", 4), Perm::parse_cycles("(3,4)", 4)});
  auto verdicts = lemma_ineq_check(G, H, true);
  REQUIRE(verdicts.size() == 4);
  CHECK(verdicts[3].claim_id == "lemma-ineq-3");
  CHECK(verdicts[3].holds);
  CHECK(verdicts[3].lhs == 5);  // k(D8)
  CHECK(verdicts[3].rhs == 8);  // k(S2^2) * k(S2) = 4 * 2
  CHECK(verdicts[3].context.find("skipped") == std::string::npos);
}

TEST_CASE("lemma_ineq_check validates its inputs") {
  PermGroup S4 = symmetric_group(4);
  PermGroup C4 = cyclic_group(4);
  CHECK_THROWS_AS(lemma_ineq_check(C4, S4, false), std::invalid_argument);
  CHECK_THROWS_AS(lemma_ineq_check(S4, C4, true), std::invalid_argument);
}

TEST_CASE("greedy chain verification") {
  BoundVerdict v = verify_chain_bound(parse_group_spec("wr(S(2),S(4))"));
  CHECK(v.holds);
  CHECK(v.lhs == 20);  // tuple count (2,4)
  CHECK(v.rhs == 80);  // p(2)^4 * p(4)

  BoundVerdict s5 = verify_chain_bound(symmetric_group(5));
  CHECK(s5.holds);
  CHECK(s5.lhs == 7);
  CHECK(s5.rhs == 7);  // primitive: single index 5, bound p(5)

  ChainIndices idx = greedy_chain_indices(parse_group_spec("wr(D(8),C(2))"));
  CHECK(idx.indices == std::vector<unsigned>{2, 2, 2});
  BoundVerdict w = verify_chain_bound(parse_group_spec("wr(D(8),C(2))"));
  CHECK(w.holds);
  CHECK(w.lhs == 20);
  CHECK(w.rhs == 128);

  CHECK_THROWS_AS(greedy_chain_indices(parse_group_spec("prod(S(2),S(2))")),
                  std::invalid_argument);
}

TEST_CASE("filtration of block kernels") {
  for (const char* spec : {"wr(S(2),C(3))", "wr(S(3),C(2))", "wr(D(8),C(2))",
                           "wr(S(2),S(4))"}) {
    PermGroup G = parse_group_spec(spec);
    CAPTURE(spec);
    auto systems = minimal_block_systems(G);
    REQUIRE(!systems.empty());
    for (const BlockSystem& sigma : systems) {
      auto verdicts = filtration_check(G, sigma);
      REQUIRE(verdicts.size() == 1 + sigma.block_count);
      for (const BoundVerdict& v : verdicts) {
        CAPTURE(v.claim_id);
        CHECK(v.holds);
      }
    }
  }
}

TEST_CASE("sampled subgroup bound in primitive groups") {
  auto verdicts = subprim_sample_check(affine_group_1d(5), 123, 5);
  REQUIRE(verdicts.size() == 6);
  for (const BoundVerdict& v : verdicts) CHECK(v.holds);
  CHECK(verdicts[0].lhs == 5);                     // k(AGL1(5))
  CHECK(verdicts[0].rhs == partition_number(5));   // p(5) = 7

  CHECK_THROWS_AS(subprim_sample_check(symmetric_group(5), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(subprim_sample_check(alternating_group(5), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(subprim_sample_check(dihedral_group(8), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("wreath dominance sampling") {
  for (const char* base : {"S(2)", "C(3)", "D(8)"}) {
    PermGroup T = parse_group_spec(base);
    CAPTURE(base);
    auto verdicts = wreath_dominance_check(T, 3, 99, 6);
    REQUIRE(verdicts.size() >= 2);
    for (const BoundVerdict& v : verdicts) {
      CAPTURE(v.claim_id);
      CHECK(v.holds);
    }
    // the first two verdicts pin the equality k(T wr S_m) = tuple formula
    CHECK(verdicts[0].lhs == verdicts[0].rhs);
  }
}

TEST_CASE("fourth-power sweep at small degree") {
  auto verdicts = lemma_l3_sweep(10, 5);
  CHECK(verdicts.size() > 50);
  bool saw_equality = false;
  for (const BoundVerdict& v : verdicts) {
    CAPTURE(v.claim_id);
    CHECK(v.holds);
    if (v.context.find("equality") != std::string::npos) saw_equality = true;
  }
  CHECK(saw_equality);  // prod(S(4),S(4)) realizes 25^4 = 5^8
  CHECK_THROWS_AS(lemma_l3_sweep(24, 5), std::invalid_argument);
}

TEST_CASE("two sweeps with one seed agree") {
  auto a = lemma_l3_sweep(8, 77);
  auto b = lemma_l3_sweep(8, 77);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim_id == b[i].claim_id);
    CHECK(a[i].lhs == b[i].lhs);
    CHECK(a[i].rhs == b[i].rhs);
    CHECK(a[i].context == b[i].context);
  }
}
