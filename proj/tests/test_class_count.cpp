#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "gct/class_count.hpp"
#include "gct/constructions.hpp"
#include "gct/errors.hpp"
#include "gct/partitions.hpp"

using namespace gct;

TEST_CASE("small reference counts by enumeration") {
  CHECK(class_count_enumerate(symmetric_group(4), 1000).count == 5);
  CHECK(class_count_enumerate(dihedral_group(8), 1000).count == 5);
  CHECK(class_count_enumerate(trivial_group(3), 10).count == 1);
  CHECK(class_count_enumerate(cyclic_group(7), 10).count == 7);  // abelian
  CHECK(class_count_enumerate(alternating_group(5), 100).count == 5);
  CHECK(class_count_enumerate(affine_group_1d(5), 100).count == 5);
}

TEST_CASE("enumeration agrees with the conjugation-orbit oracle") {
  for (const char* spec : {"S(4)", "D(8)", "A(5)", "AGL1(7)", "wr(S(2),C(3))",
                           "M11", "wr(D(8),C(2))", "prod(A(4),C(2))"}) {
    PermGroup G = parse_group_spec(spec);
    CAPTURE(spec);
    std::vector<Perm> elems = G.elements(10000);
    CHECK(class_count_enumerate(G, 10000).count ==
          oracle::class_count_by_orbits(elems));
  }
}

TEST_CASE("k(S_n) = p(n)") {
  for (unsigned n = 1; n <= 8; ++n) {
    PermGroup S = symmetric_group(n);
    CHECK(class_count(S, 100000).count == partition_number(n));
    CHECK(class_count_enumerate(S, 100000).count == partition_number(n));
  }
}

TEST_CASE("alternating formula vs enumeration") {
  for (unsigned n = 3; n <= 8; ++n) {
    PermGroup A = alternating_group(n);
    CAPTURE(n);
    CHECK(class_count(A, 100000).count ==
          class_count_enumerate(A, 100000).count);
    CHECK(class_count(A, 100000).method == CountMethod::AlternatingFormula);
  }
  CHECK(class_count_alternating(12) == 43);
  CHECK(class_count_alternating(13) == 55);
  CHECK(class_count_alternating(14) == 72);
  CHECK(class_count_alternating(15) == 94);
}

TEST_CASE("wreath formula vs enumeration") {
  struct Case {
    const char* base;
    unsigned m;
  };
  for (Case c : {Case{"S(2)", 2}, Case{"S(2)", 3}, Case{"S(2)", 4},
                 Case{"S(3)", 2}, Case{"S(3)", 3}, Case{"C(3)", 2},
                 Case{"D(8)", 2}, Case{"A(4)", 2}}) {
    PermGroup T = parse_group_spec(c.base);
    PermGroup W = wreath_imprimitive(T, symmetric_group(c.m));
    CAPTURE(c.base);
    CAPTURE(c.m);
    REQUIRE(W.tag().family == Family::WreathSym);
    BigNat formula = class_count(W, 2000000).count;
    CHECK(class_count(W, 2000000).method == CountMethod::WreathSymFormula);
    CHECK(formula == class_count_enumerate(W, 2000000).count);
  }
  // non-symmetric top: dispatcher must fall back to enumeration
  PermGroup Wc = parse_group_spec("wr(S(2),C(4))");
  CHECK(class_count(Wc, 1000).method == CountMethod::Enumeration);
  CHECK(class_count(Wc, 1000).count == 13);
  CHECK(class_count(parse_group_spec("wr(S(2),C(3))"), 1000).count == 8);
  CHECK(class_count(parse_group_spec("wr(D(8),C(2))"), 1000).count == 20);
}

TEST_CASE("class counts multiply over direct products") {
  const char* pool[] = {"S(3)", "S(4)", "C(5)", "D(8)", "A(4)",
                        "AGL1(5)", "C(2)", "D(12)", "S(2)"};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  for (int t = 0; t < 30; ++t) {
    std::string x = pool[pick(rng)], y = pool[pick(rng)];
    PermGroup G = parse_group_spec(x), H = parse_group_spec(y);
    PermGroup P = direct_product(G, H);
    CAPTURE(x + " x " + y);
    CHECK(class_count_enumerate(P, 100000).count ==
          class_count_enumerate(G, 1000).count *
              class_count_enumerate(H, 1000).count);
  }
}

TEST_CASE("mathieu class counts") {
  CHECK(class_count(mathieu(11), 100000).count == 10);
  CHECK(class_count(mathieu(12), 100000).count == 15);
}

TEST_CASE("limits and uncountables") {
  CHECK_THROWS_AS(class_count_enumerate(symmetric_group(10), 1000),
                  LimitExceededError);
  CHECK_THROWS_AS(class_count(parse_group_spec("gens{degree=10;(1,2);(1,2,3,4,5,6,7,8,9,10)}"),
                              1000),
                  UncountableError);
  // tagged groups stay countable far beyond the element limit
  CHECK(class_count(symmetric_group(40), 1000).count == partition_number(40));
  CHECK(class_count(parse_group_spec("wr(S(2),S(15))"), 1000).count == 3956);
}
