#include "gct/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gct/errors.hpp"

namespace gct {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  if (images_.size() > (1u << 16))
    throw std::invalid_argument("permutation degree exceeds 2^16");
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned x = 0; x < degree; ++x) img[x] = static_cast<std::uint16_t>(x);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

unsigned Perm::first_moved() const {
  for (unsigned x = 0; x < degree(); ++x)
    if (images_[x] != x) return x;
  return degree();
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(degree());
  for (unsigned x = 0; x < degree(); ++x)
    img[images_[x]] = static_cast<std::uint16_t>(x);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm compose(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree())
    throw DegreeMismatchError("compose: degree mismatch");
  std::vector<std::uint16_t> img(lhs.degree());
  for (unsigned x = 0; x < lhs.degree(); ++x)
    img[x] = static_cast<std::uint16_t>(rhs[lhs[x]]);
  return Perm(Perm::Unchecked{}, std::move(img));
}

Perm conjugate(const Perm& lhs, const Perm& rhs) {
  return compose(compose(rhs.inverse(), lhs), rhs);
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (unsigned x = 0; x < degree(); ++x) {
    if (done[x] || images_[x] == x) continue;
    out += '(';
    unsigned y = x;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(y + 1);
      done[y] = true;
      y = images_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

unsigned parse_uint(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw ParseError("expected number", i);
  unsigned v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + static_cast<unsigned>(s[i] - '0');
    if (v > (1u << 20)) throw ParseError("number too large", i);
    ++i;
  }
  return v;
}

}  // namespace

Perm Perm::parse_cycles(std::string_view text, unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  for (unsigned x = 0; x < degree; ++x) img[x] = static_cast<std::uint16_t>(x);

  std::size_t i = 0;
  skip_ws(text, i);
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    skip_ws(text, i);
    std::vector<unsigned> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" = identity factor
    } else {
      while (true) {
        unsigned pt = parse_uint(text, i);
        if (pt == 0 || pt > degree)
          throw ParseError("point out of range 1.." + std::to_string(degree),
                           i);
        cycle.push_back(pt - 1);
        skip_ws(text, i);
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or ')'", i);
      }
      for (std::size_t j = 0; j + 1 < cycle.size(); ++j) {
        for (std::size_t k = j + 1; k < cycle.size(); ++k)
          if (cycle[j] == cycle[k])
            throw ParseError("repeated point in cycle", i);
      }
      for (std::size_t j = 0; j < cycle.size(); ++j) {
        unsigned from = cycle[j];
        unsigned to = cycle[(j + 1) % cycle.size()];
        if (img[from] != from)
          throw ParseError("point appears in two cycles", i);
        img[from] = static_cast<std::uint16_t>(to);
      }
    }
    any = true;
    skip_ws(text, i);
  }
  if (!any) throw ParseError("empty permutation literal", 0);
  return Perm(std::move(img));
}

}  // namespace gct
