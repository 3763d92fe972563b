#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "gct/blocks.hpp"
#include "gct/constructions.hpp"

using namespace gct;

TEST_CASE("minimal block systems match the brute-force oracle") {
  for (const char* spec :
       {"D(8)", "C(4)", "C(6)", "C(8)", "wr(S(2),S(2))", "wr(S(2),C(3))",
        "wr(C(3),S(2))", "wr(S(2),C(4))", "S(4)", "S(5)", "AGL1(5)", "A(4)",
        "D(12)", "D(16)"}) {
    PermGroup G = parse_group_spec(spec);
    CAPTURE(spec);
    REQUIRE(G.degree() <= 8);
    auto expected = oracle::minimal_of(oracle::all_block_systems(G));
    auto got = minimal_block_systems(G);
    std::vector<std::vector<unsigned>> got_assign;
    for (const BlockSystem& s : got) {
      CHECK(is_invariant(G, s));
      got_assign.push_back(s.assignment);
    }
    std::sort(got_assign.begin(), got_assign.end());
    CHECK(got_assign == expected);
  }
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(symmetric_group(5)));
  CHECK(is_primitive(alternating_group(4)));
  CHECK(is_primitive(affine_group_1d(7)));
  CHECK(is_primitive(mathieu(11)));
  CHECK(!is_primitive(dihedral_group(8)));
  CHECK(!is_primitive(cyclic_group(6)));
  CHECK(!is_primitive(parse_group_spec("wr(S(3),S(4))")));
}

TEST_CASE("kernel and image multiply to the group order") {
  for (const char* spec :
       {"wr(D(8),C(2))", "wr(S(2),S(4))", "wr(C(3),S(3))", "wr(S(3),C(2))"}) {
    PermGroup G = parse_group_spec(spec);
    CAPTURE(spec);
    auto systems = minimal_block_systems(G);
    REQUIRE(!systems.empty());
    for (const BlockSystem& sigma : systems) {
      PermGroup K = block_action_kernel(G, sigma);
      PermGroup Q = block_action_image(G, sigma);
      CHECK(K.order() * Q.order() == G.order());
      CHECK(G.has_normal_subgroup(K));
      for (const Perm& g : K.generators())
        for (unsigned x = 0; x < G.degree(); ++x)
          CHECK(sigma.assignment[g[x]] == sigma.assignment[x]);
    }
  }
}

TEST_CASE("consecutive blocks of a wreath product") {
  PermGroup G = parse_group_spec("wr(S(3),S(4))");
  BlockSystem sigma = consecutive_blocks(12, 3);
  CHECK(sigma.block_count == 4);
  CHECK(is_invariant(G, sigma));
  PermGroup K = block_action_kernel(G, sigma);
  CHECK(K.order() == BigNat(6 * 6 * 6 * 6));
  PermGroup Q = block_action_image(G, sigma);
  CHECK(Q.order() == 24);
  CHECK(Q.is_transitive());
}

TEST_CASE("from_assignment rejects bad partitions") {
  CHECK_THROWS_AS(BlockSystem::from_assignment(4, {0, 0, 0, 1}),
                  std::invalid_argument);  // unequal sizes
  CHECK_THROWS_AS(BlockSystem::from_assignment(4, {0, 0, 0, 0}),
                  std::invalid_argument);  // trivial
  CHECK_THROWS_AS(BlockSystem::from_assignment(4, {0, 1, 2, 3}),
                  std::invalid_argument);  // trivial
  BlockSystem s = BlockSystem::from_assignment(4, {1, 0, 1, 0});
  CHECK(s.assignment == std::vector<unsigned>{0, 1, 0, 1});  // canonical
  CHECK(s.block_size == 2);
}
