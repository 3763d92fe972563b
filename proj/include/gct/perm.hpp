#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gct {

// A permutation of {0, ..., degree-1} stored as its image table.
// Composition is left-to-right throughout the project: points act on the
// right, x^(compose(p, q)) = (x^p)^q.
class Perm {
 public:
  Perm() = default;

  // Takes ownership of an image table; throws std::invalid_argument if it
  // is not a bijection. Degree is capped at 2^16 points.
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }

  unsigned operator[](unsigned x) const { return images_[x]; }

  bool is_identity() const;

  // Smallest point moved; degree() if the permutation is the identity.
  unsigned first_moved() const;

  Perm inverse() const;

  const std::vector<std::uint16_t>& images() const { return images_; }

  bool operator==(const Perm&) const = default;

  // Cycle notation with 1-based points, identity spelled "()".
  std::string cycle_string() const;

  // Parses 1-based cycle notation, e.g. "(1,2)(3,4)"; whitespace allowed
  // between tokens. Throws ParseError with the failing offset.
  static Perm parse_cycles(std::string_view text, unsigned degree);

  // Wraps a table already known to be a bijection; skips validation. For
  // hot paths that build images point by point.
  static Perm unchecked(std::vector<std::uint16_t> images) {
    return Perm(Unchecked{}, std::move(images));
  }

 private:
  struct Unchecked {};
  Perm(Unchecked, std::vector<std::uint16_t> images)
      : images_(std::move(images)) {}

  friend Perm compose(const Perm&, const Perm&);

  std::vector<std::uint16_t> images_;
};

// Applies lhs then rhs.
Perm compose(const Perm& lhs, const Perm& rhs);

// rhs^-1 * lhs * rhs.
Perm conjugate(const Perm& lhs, const Perm& rhs);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    const auto& v = p.images();
    return std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(v.data()), v.size() * sizeof(v[0])));
  }
};

}  // namespace gct
