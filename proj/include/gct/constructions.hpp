#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gct/perm_group.hpp"

namespace gct {

// Standard generators, fixed for byte-reproducible output:
//   S(n) = <(1,2), (1,...,n)>
//   A(n) = <(1,2,3), (1,...,n)> for n odd, <(1,2,3), (2,...,n)> for n even
//   C(n) = <(1,...,n)>
//   D(2n) on n points = <(1,...,n), reflection i -> n+1-i>
//   AGL1(p) on p points = <x -> x+1, x -> g*x> with g the least primitive root
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned order);  // order = 2n, acts on n >= 3 points
PermGroup affine_group_1d(unsigned p);     // p prime, p <= 97
PermGroup trivial_group(unsigned degree = 1);

// M11 on 11 points (order 7920) or M12 on 12 points (order 95040), from
// embedded generators. Throws std::runtime_error if the chain order does not
// certify the expected value.
PermGroup mathieu(unsigned which);

// G on the first deg(G) points, H on the rest.
PermGroup direct_product(const PermGroup& G, const PermGroup& H);

// T wr P in the imprimitive action on deg(T)*deg(P) points: one copy of T
// per block plus P permuting the blocks. Tagged WreathSym when P carries a
// Symmetric tag.
PermGroup wreath_imprimitive(const PermGroup& T, const PermGroup& P);

// T wr P in the product action on deg(T)^deg(P) tuple-points (the k=1
// case). Throws std::invalid_argument on degree overflow (> 2^16).
PermGroup wreath_product_action(const PermGroup& T, const PermGroup& P);

// Expression tree of the group-spec mini-language:
//   atom := "S(" n ")" | "A(" n ")" | "C(" n ")" | "D(" 2n ")" | "M11" |
//           "M12" | "AGL1(" p ")" | "gens{degree=" n ";" perm (";" perm)* "}"
//   expr := atom | "prod(" expr "," expr ")" | "wr(" expr "," expr ")" |
//           "wrprod(" expr "," expr ")"
struct GroupSpec {
  enum class Kind {
    Sym, Alt, Cyc, Dih, M11, M12, Agl1, Gens, Prod, Wr, WrProd
  };
  Kind kind = Kind::Sym;
  unsigned param = 0;                     // atom parameter
  std::vector<GroupSpec> children;        // combinator arguments
  unsigned gens_degree = 0;               // Gens atom
  std::vector<std::string> gens_cycles;   // Gens atom, canonical spellings

  static GroupSpec parse(std::string_view text);  // throws ParseError
  std::string str() const;                        // canonical spelling
  PermGroup build() const;
};

PermGroup parse_group_spec(std::string_view text);

// Reads the generator-file format: first line "degree=<n>", then one
// permutation per line in cycle notation.
PermGroup group_from_generator_file(std::string_view contents);

// Deterministic catalog of spec expressions: all atoms of degree <= cap plus
// one combinator level, sorted by (degree, spec string).
struct CatalogEntry {
  std::string spec;
  unsigned degree;
};
std::vector<CatalogEntry> catalog_specs(unsigned max_degree);

}  // namespace gct
