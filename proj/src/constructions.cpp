#include "gct/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gct/errors.hpp"

namespace gct {

namespace {

Perm cycle_perm(unsigned degree, const std::vector<unsigned>& cycle) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned x = 0; x < degree; ++x) img[x] = static_cast<std::uint16_t>(x);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    img[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
  return Perm(std::move(img));
}

Perm full_cycle(unsigned degree, unsigned from, unsigned to) {
  std::vector<unsigned> c;
  for (unsigned x = from; x <= to; ++x) c.push_back(x);
  return cycle_perm(degree, c);
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned least_primitive_root(unsigned p) {
  for (unsigned g = 2; g < p; ++g) {
    unsigned x = 1;
    bool early = false;
    for (unsigned e = 1; e < p - 1; ++e) {
      x = static_cast<unsigned>((static_cast<std::uint64_t>(x) * g) % p);
      if (x == 1) {
        early = true;
        break;
      }
    }
    if (!early) return g;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

PermGroup symmetric_group(unsigned n) {
  if (n < 1 || n > (1u << 16))
    throw std::invalid_argument("S(n): parameter out of range");
  GroupTag tag{Family::Symmetric, n, nullptr};
  if (n == 1) return PermGroup(1, {}, tag);
  std::vector<Perm> gens = {cycle_perm(n, {0, 1})};
  if (n > 2) gens.push_back(full_cycle(n, 0, n - 1));
  return PermGroup(n, std::move(gens), tag);
}

PermGroup alternating_group(unsigned n) {
  if (n < 1 || n > (1u << 16))
    throw std::invalid_argument("A(n): parameter out of range");
  GroupTag tag{Family::Alternating, n, nullptr};
  if (n <= 2) return PermGroup(n, {}, tag);
  std::vector<Perm> gens = {cycle_perm(n, {0, 1, 2})};
  if (n > 3) {
    if (n % 2 == 1)
      gens.push_back(full_cycle(n, 0, n - 1));
    else
      gens.push_back(full_cycle(n, 1, n - 1));
  }
  return PermGroup(n, std::move(gens), tag);
}

PermGroup cyclic_group(unsigned n) {
  if (n < 1 || n > (1u << 16))
    throw std::invalid_argument("C(n): parameter out of range");
  GroupTag tag{Family::Cyclic, n, nullptr};
  if (n == 1) return PermGroup(1, {}, tag);
  return PermGroup(n, {full_cycle(n, 0, n - 1)}, tag);
}

PermGroup dihedral_group(unsigned order) {
  // order = 2n; n >= 3 so that the n-point action is faithful of order 2n
  if (order < 6 || order % 2 != 0 || order / 2 > (1u << 16))
    throw std::invalid_argument("D(2n): parameter out of range");
  unsigned n = order / 2;
  std::vector<std::uint16_t> refl(n);
  for (unsigned x = 0; x < n; ++x) refl[x] = static_cast<std::uint16_t>(n - 1 - x);
  GroupTag tag{Family::Dihedral, order, nullptr};
  return PermGroup(n, {full_cycle(n, 0, n - 1), Perm(std::move(refl))}, tag);
}

PermGroup affine_group_1d(unsigned p) {
  if (!is_prime(p) || p > 97)
    throw std::invalid_argument("AGL1(p): parameter must be prime, <= 97");
  std::vector<std::uint16_t> shift(p), scale(p);
  unsigned g = p > 2 ? least_primitive_root(p) : 1;
  for (unsigned x = 0; x < p; ++x) {
    shift[x] = static_cast<std::uint16_t>((x + 1) % p);
    scale[x] = static_cast<std::uint16_t>(
        (static_cast<std::uint64_t>(g) * x) % p);
  }
  std::vector<Perm> gens = {Perm(std::move(shift))};
  if (p > 2) gens.push_back(Perm(std::move(scale)));
  return PermGroup(p, std::move(gens));
}

PermGroup trivial_group(unsigned degree) { return PermGroup(degree, {}); }

PermGroup mathieu(unsigned which) {
  if (which != 11 && which != 12)
    throw std::invalid_argument("mathieu: which must be 11 or 12");
  unsigned degree = which;
  std::vector<unsigned> eleven;
  for (unsigned x = 0; x < 11; ++x) eleven.push_back(x);
  std::vector<Perm> gens = {cycle_perm(degree, eleven)};
  {
    std::vector<std::uint16_t> img(degree);
    for (unsigned x = 0; x < degree; ++x) img[x] = static_cast<std::uint16_t>(x);
    // (3,7,11,8)(4,10,5,6) in 1-based points
    auto set = [&](unsigned a, unsigned b) { img[a - 1] = static_cast<std::uint16_t>(b - 1); };
    set(3, 7); set(7, 11); set(11, 8); set(8, 3);
    set(4, 10); set(10, 5); set(5, 6); set(6, 4);
    gens.emplace_back(std::move(img));
  }
  if (which == 12) {
    std::vector<std::uint16_t> img(12);
    auto swap12 = [&](unsigned a, unsigned b) {
      img[a - 1] = static_cast<std::uint16_t>(b - 1);
      img[b - 1] = static_cast<std::uint16_t>(a - 1);
    };
    swap12(1, 12); swap12(2, 11); swap12(3, 6); swap12(4, 8); swap12(5, 9);
    swap12(7, 10);
    gens.emplace_back(std::move(img));
  }
  PermGroup G(degree, std::move(gens));
  const BigNat expected = which == 11 ? 7920 : 95040;
  if (G.order() != expected)
    throw std::runtime_error("mathieu(" + std::to_string(which) +
                             "): order certification failed, got " +
                             G.order().str());
  return G;
}

PermGroup direct_product(const PermGroup& G, const PermGroup& H) {
  unsigned n = G.degree() + H.degree();
  std::vector<Perm> gens;
  for (const Perm& g : G.generators()) {
    std::vector<std::uint16_t> img(n);
    for (unsigned x = 0; x < G.degree(); ++x) img[x] = static_cast<std::uint16_t>(g[x]);
    for (unsigned x = G.degree(); x < n; ++x) img[x] = static_cast<std::uint16_t>(x);
    gens.emplace_back(std::move(img));
  }
  for (const Perm& h : H.generators()) {
    std::vector<std::uint16_t> img(n);
    for (unsigned x = 0; x < G.degree(); ++x) img[x] = static_cast<std::uint16_t>(x);
    for (unsigned x = 0; x < H.degree(); ++x)
      img[G.degree() + x] = static_cast<std::uint16_t>(G.degree() + h[x]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_imprimitive(const PermGroup& T, const PermGroup& P) {
  unsigned d = T.degree(), m = P.degree();
  if (m < 1) throw std::invalid_argument("wr: top degree must be >= 1");
  unsigned n = d * m;
  std::vector<Perm> gens;
  for (unsigned copy = 0; copy < m; ++copy) {
    for (const Perm& t : T.generators()) {
      std::vector<std::uint16_t> img(n);
      for (unsigned x = 0; x < n; ++x) img[x] = static_cast<std::uint16_t>(x);
      for (unsigned x = 0; x < d; ++x)
        img[copy * d + x] = static_cast<std::uint16_t>(copy * d + t[x]);
      gens.emplace_back(std::move(img));
    }
  }
  for (const Perm& p : P.generators()) {
    std::vector<std::uint16_t> img(n);
    for (unsigned copy = 0; copy < m; ++copy)
      for (unsigned x = 0; x < d; ++x)
        img[copy * d + x] = static_cast<std::uint16_t>(p[copy] * d + x);
    gens.emplace_back(std::move(img));
  }
  GroupTag tag;
  if (P.tag().family == Family::Symmetric) {
    tag.family = Family::WreathSym;
    tag.n = m;
    tag.wreath_base = std::make_shared<PermGroup>(T);
  }
  return PermGroup(n, std::move(gens), tag);
}

PermGroup wreath_product_action(const PermGroup& T, const PermGroup& P) {
  unsigned m = T.degree(), r = P.degree();
  if (m < 2) throw std::invalid_argument("wrprod: base degree must be >= 2");
  if (r < 1) throw std::invalid_argument("wrprod: top degree must be >= 1");
  std::uint64_t deg64 = 1;
  for (unsigned j = 0; j < r; ++j) {
    deg64 *= m;
    if (deg64 > (1u << 16))
      throw std::invalid_argument("wrprod: degree overflow (> 2^16 points)");
  }
  unsigned n = static_cast<unsigned>(deg64);
  std::vector<std::uint64_t> pow(r + 1, 1);
  for (unsigned j = 1; j <= r; ++j) pow[j] = pow[j - 1] * m;

  std::vector<Perm> gens;
  for (unsigned coord = 0; coord < r; ++coord) {
    for (const Perm& t : T.generators()) {
      std::vector<std::uint16_t> img(n);
      for (unsigned x = 0; x < n; ++x) {
        unsigned digit = static_cast<unsigned>((x / pow[coord]) % m);
        std::uint64_t y = x + (t[digit] - static_cast<std::uint64_t>(digit)) *
                                  pow[coord];
        img[x] = static_cast<std::uint16_t>(y);
      }
      gens.emplace_back(std::move(img));
    }
  }
  for (const Perm& p : P.generators()) {
    std::vector<std::uint16_t> img(n);
    for (unsigned x = 0; x < n; ++x) {
      std::uint64_t y = 0;
      for (unsigned j = 0; j < r; ++j) {
        unsigned digit = static_cast<unsigned>((x / pow[j]) % m);
        y += digit * pow[p[j]];
      }
      img[x] = static_cast<std::uint16_t>(y);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------
// Group-spec mini-language
// ---------------------------------------------------------------------------

namespace {

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool try_literal(std::string_view lit) {
    skip_ws();
    if (text.substr(pos, lit.size()) == lit) {
      pos += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  unsigned number() {
    skip_ws();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected number", pos);
    std::uint64_t v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v > (1u << 20)) throw ParseError("number too large", pos);
      ++pos;
    }
    return static_cast<unsigned>(v);
  }

  GroupSpec paren_atom(GroupSpec::Kind kind) {
    GroupSpec s;
    s.kind = kind;
    expect('(');
    s.param = number();
    expect(')');
    return s;
  }

  GroupSpec combinator(GroupSpec::Kind kind) {
    GroupSpec s;
    s.kind = kind;
    expect('(');
    s.children.push_back(expr());
    expect(',');
    s.children.push_back(expr());
    expect(')');
    return s;
  }

  GroupSpec gens_literal() {
    GroupSpec s;
    s.kind = GroupSpec::Kind::Gens;
    expect('{');
    if (!try_literal("degree=")) throw ParseError("expected 'degree='", pos);
    s.gens_degree = number();
    if (s.gens_degree < 1 || s.gens_degree > (1u << 16))
      throw ParseError("degree out of range", pos);
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        skip_ws();
        std::size_t start = pos;
        int depth = 0;
        while (pos < text.size()) {
          char c = text[pos];
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if ((c == ';' || c == '}') && depth == 0) break;
          ++pos;
        }
        std::string_view cycles = text.substr(start, pos - start);
        Perm p = Perm::parse_cycles(cycles, s.gens_degree);  // validates
        s.gens_cycles.push_back(p.cycle_string());
        continue;
      }
      break;
    }
    expect('}');
    if (s.gens_cycles.empty())
      throw ParseError("gens literal needs at least one permutation", pos);
    return s;
  }

  GroupSpec expr() {
    skip_ws();
    if (try_literal("prod")) return combinator(GroupSpec::Kind::Prod);
    if (try_literal("wrprod")) return combinator(GroupSpec::Kind::WrProd);
    if (try_literal("wr")) return combinator(GroupSpec::Kind::Wr);
    if (try_literal("M11")) return GroupSpec{GroupSpec::Kind::M11};
    if (try_literal("M12")) return GroupSpec{GroupSpec::Kind::M12};
    if (try_literal("AGL1")) return paren_atom(GroupSpec::Kind::Agl1);
    if (try_literal("S")) return paren_atom(GroupSpec::Kind::Sym);
    if (try_literal("A")) return paren_atom(GroupSpec::Kind::Alt);
    if (try_literal("C")) return paren_atom(GroupSpec::Kind::Cyc);
    if (try_literal("D")) return paren_atom(GroupSpec::Kind::Dih);
    if (try_literal("gens")) return gens_literal();
    throw ParseError("expected group expression", pos);
  }
};

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  SpecParser p{text};
  GroupSpec s = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return s;
}

std::string GroupSpec::str() const {
  switch (kind) {
    case Kind::Sym: return "S(" + std::to_string(param) + ")";
    case Kind::Alt: return "A(" + std::to_string(param) + ")";
    case Kind::Cyc: return "C(" + std::to_string(param) + ")";
    case Kind::Dih: return "D(" + std::to_string(param) + ")";
    case Kind::M11: return "M11";
    case Kind::M12: return "M12";
    case Kind::Agl1: return "AGL1(" + std::to_string(param) + ")";
    case Kind::Gens: {
      std::string out = "gens{degree=" + std::to_string(gens_degree);
      for (const auto& c : gens_cycles) out += ";" + c;
      return out + "}";
    }
    case Kind::Prod:
      return "prod(" + children[0].str() + "," + children[1].str() + ")";
    case Kind::Wr:
      return "wr(" + children[0].str() + "," + children[1].str() + ")";
    case Kind::WrProd:
      return "wrprod(" + children[0].str() + "," + children[1].str() + ")";
  }
  throw std::logic_error("unreachable");
}

PermGroup GroupSpec::build() const {
  switch (kind) {
    case Kind::Sym: return symmetric_group(param);
    case Kind::Alt: return alternating_group(param);
    case Kind::Cyc: return cyclic_group(param);
    case Kind::Dih: return dihedral_group(param);
    case Kind::M11: return mathieu(11);
    case Kind::M12: return mathieu(12);
    case Kind::Agl1: return affine_group_1d(param);
    case Kind::Gens: {
      std::vector<Perm> gens;
      for (const auto& c : gens_cycles)
        gens.push_back(Perm::parse_cycles(c, gens_degree));
      return PermGroup(gens_degree, std::move(gens));
    }
    case Kind::Prod:
      return direct_product(children[0].build(), children[1].build());
    case Kind::Wr:
      return wreath_imprimitive(children[0].build(), children[1].build());
    case Kind::WrProd:
      return wreath_product_action(children[0].build(), children[1].build());
  }
  throw std::logic_error("unreachable");
}

PermGroup parse_group_spec(std::string_view text) {
  return GroupSpec::parse(text).build();
}

PermGroup group_from_generator_file(std::string_view contents) {
  std::istringstream in{std::string(contents)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("degree=", 0) != 0)
    throw ParseError("first line must be 'degree=<n>'", 0);
  unsigned degree = static_cast<unsigned>(std::stoul(line.substr(7)));
  if (degree < 1 || degree > (1u << 16))
    throw ParseError("degree out of range", 7);
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    gens.push_back(Perm::parse_cycles(trimmed, degree));
  }
  return PermGroup(degree, std::move(gens));
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

unsigned spec_degree(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::Sym:
    case GroupSpec::Kind::Alt:
    case GroupSpec::Kind::Cyc:
      return s.param;
    case GroupSpec::Kind::Dih:
      return s.param / 2;
    case GroupSpec::Kind::M11:
      return 11;
    case GroupSpec::Kind::M12:
      return 12;
    case GroupSpec::Kind::Agl1:
      return s.param;
    case GroupSpec::Kind::Gens:
      return s.gens_degree;
    case GroupSpec::Kind::Prod:
      return spec_degree(s.children[0]) + spec_degree(s.children[1]);
    case GroupSpec::Kind::Wr:
      return spec_degree(s.children[0]) * spec_degree(s.children[1]);
    case GroupSpec::Kind::WrProd: {
      unsigned d = 1;
      for (unsigned j = 0; j < spec_degree(s.children[1]); ++j)
        d *= spec_degree(s.children[0]);
      return d;
    }
  }
  return 0;
}

}  // namespace

std::vector<CatalogEntry> catalog_specs(unsigned max_degree) {
  std::vector<std::string> atoms;
  for (unsigned n = 1; n <= max_degree; ++n) atoms.push_back("S(" + std::to_string(n) + ")");
  for (unsigned n = 3; n <= max_degree; ++n) atoms.push_back("A(" + std::to_string(n) + ")");
  for (unsigned n = 1; n <= max_degree; ++n) atoms.push_back("C(" + std::to_string(n) + ")");
  for (unsigned n = 3; n <= max_degree; ++n) atoms.push_back("D(" + std::to_string(2 * n) + ")");
  for (unsigned p = 5; p <= max_degree && p <= 97; ++p)
    if (is_prime(p)) atoms.push_back("AGL1(" + std::to_string(p) + ")");
  if (max_degree >= 11) atoms.push_back("M11");
  if (max_degree >= 12) atoms.push_back("M12");

  struct Atom {
    std::string spec;
    unsigned degree;
  };
  std::vector<Atom> parsed;
  for (const auto& a : atoms)
    parsed.push_back({a, spec_degree(GroupSpec::parse(a))});

  std::vector<CatalogEntry> out;
  for (const auto& a : parsed) out.push_back({a.spec, a.degree});

  for (const auto& x : parsed) {
    if (x.degree < 2) continue;
    for (const auto& y : parsed) {
      if (y.degree < 2) continue;
      if (x.degree + y.degree <= max_degree &&
          std::make_pair(x.degree, x.spec) <= std::make_pair(y.degree, y.spec))
        out.push_back({"prod(" + x.spec + "," + y.spec + ")", x.degree + y.degree});
      if (static_cast<std::uint64_t>(x.degree) * y.degree <= max_degree)
        out.push_back({"wr(" + x.spec + "," + y.spec + ")", x.degree * y.degree});
      std::uint64_t pd = 1;
      bool fits = true;
      for (unsigned j = 0; j < y.degree && fits; ++j) {
        pd *= x.degree;
        if (pd > max_degree) fits = false;
      }
      if (fits)
        out.push_back({"wrprod(" + x.spec + "," + y.spec + ")",
                       static_cast<unsigned>(pd)});
    }
  }

  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.degree, a.spec) < std::tie(b.degree, b.spec);
  });
  return out;
}

}  // namespace gct
