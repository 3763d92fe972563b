#include "doctest.h"

#include "gct/constructions.hpp"
#include "gct/errors.hpp"

using namespace gct;

TEST_CASE("order formulas") {
  BigNat fact = 1;
  for (unsigned n = 1; n <= 12; ++n) {
    fact *= n;
    CHECK(symmetric_group(n).order() == fact);
    if (n >= 3) CHECK(alternating_group(n).order() == fact / 2);
    CHECK(cyclic_group(n).order() == n);
    if (n >= 3) CHECK(dihedral_group(2 * n).order() == 2 * n);
  }
  for (unsigned p : {5u, 7u, 11u, 13u, 97u})
    CHECK(affine_group_1d(p).order() == BigNat(p) * (p - 1));
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(dihedral_group(5), std::invalid_argument);   // odd
  CHECK_THROWS_AS(dihedral_group(4), std::invalid_argument);   // n < 3
  CHECK_THROWS_AS(affine_group_1d(6), std::invalid_argument);  // composite
  CHECK_THROWS_AS(affine_group_1d(101), std::invalid_argument);
  CHECK_THROWS_AS(mathieu(10), std::invalid_argument);
}

TEST_CASE("products and wreaths") {
  PermGroup P = direct_product(symmetric_group(3), cyclic_group(4));
  CHECK(P.degree() == 7);
  CHECK(P.order() == 24);
  CHECK(!P.is_transitive());

  PermGroup W = wreath_imprimitive(symmetric_group(3), symmetric_group(4));
  CHECK(W.degree() == 12);
  CHECK(W.order() == BigNat(6 * 6 * 6 * 6) * 24);
  CHECK(W.is_transitive());
  CHECK(W.tag().family == Family::WreathSym);
  REQUIRE(W.tag().wreath_base != nullptr);
  CHECK(W.tag().wreath_base->order() == 6);
  CHECK(W.tag().n == 4);

  PermGroup Wp = wreath_imprimitive(symmetric_group(3), cyclic_group(4));
  CHECK(Wp.tag().family == Family::Untagged);
  CHECK(Wp.order() == BigNat(6 * 6 * 6 * 6) * 4);

  PermGroup PA = wreath_product_action(symmetric_group(3), symmetric_group(2));
  CHECK(PA.degree() == 9);
  CHECK(PA.order() == 72);
  CHECK(PA.is_transitive());
}

TEST_CASE("spec parser round-trips the catalog") {
  for (const CatalogEntry& entry : catalog_specs(16)) {
    CAPTURE(entry.spec);
    GroupSpec spec = GroupSpec::parse(entry.spec);
    CHECK(spec.str() == entry.spec);
    PermGroup G = spec.build();
    CHECK(G.degree() == entry.degree);
  }
}

TEST_CASE("spec parse errors") {
  for (const char* bad : {"S(4", "S()", "Q(3)", "prod(S(3))", "wr(S(3),)",
                          "S(4))", "gens{degree=3}", "gens{degree=3;(1,4)}",
                          ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GroupSpec::parse(bad), ParseError);
  }
}

TEST_CASE("gens atom and generator files") {
  PermGroup G = parse_group_spec("gens{degree=5;(1,2);(1,2,3,4,5)}");
  CHECK(G.order() == 120);
  CHECK(G.tag().family == Family::Untagged);

  PermGroup F = group_from_generator_file(
      "degree=4\n(1,2)(3,4)\n(1,3)(2,4)\n");
  CHECK(F.order() == 4);
  CHECK_THROWS_AS(group_from_generator_file("(1,2)\n"), ParseError);
}

TEST_CASE("catalog is sorted and degree-capped") {
  auto entries = catalog_specs(12);
  CHECK(!entries.empty());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i].degree <= 12);
    if (i > 0) {
      bool ordered =
          entries[i - 1].degree < entries[i].degree ||
          (entries[i - 1].degree == entries[i].degree &&
           entries[i - 1].spec < entries[i].spec);
      CHECK(ordered);
    }
  }
  // spot members
  auto has = [&](const char* s) {
    for (const auto& e : entries)
      if (e.spec == s) return true;
    return false;
  };
  CHECK(has("S(12)"));
  CHECK(has("M11"));
  CHECK(has("M12"));
  CHECK(has("AGL1(11)"));
  CHECK(has("wr(S(2),S(6))"));
  CHECK(has("prod(S(3),S(4))"));
  CHECK(has("wrprod(S(3),S(2))"));
  CHECK(!has("S(13)"));
}
