#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kohler {

// Error hierarchy shared by the whole library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group description (factor < 2, unparseable spec string).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// Operation refused because the group order exceeds the configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Argument that violates an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Group order outside the residues an operation supports.
class InvalidOrder : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultCapacity = 10000;

// Process-wide upper bound on the group order accepted by the quadratic (or
// worse) algorithms. Defaults to kDefaultCapacity.
std::size_t capacity_limit();
void set_capacity_limit(std::size_t limit);

// Throws CapacityError when `order` exceeds capacity_limit().
void check_capacity(std::size_t order);

// A group element, stored as its mixed-radix index. With the first invariant
// factor as the most significant digit, numeric order on indices coincides
// with lexicographic order on coordinate tuples.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

// Finite abelian group Z_{d1} x ... x Z_{dk} in invariant-factor form
// (d1 | d2 | ... | dk, each di >= 2). The trivial group has no factors.
class Group {
 public:
  // Normalizes `factors` to invariant-factor form: factors are split into
  // prime powers (CRT) and regrouped so that each divides the next.
  // Factor 1 or less is rejected.
  static Group make(std::span<const std::int64_t> factors);
  static Group make(std::initializer_list<std::int64_t> factors) {
    return make(std::span<const std::int64_t>(factors.begin(), factors.size()));
  }

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  Element zero() const { return Element{0}; }
  bool contains(Element x) const { return x.index < order_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element neg(Element x) const;
  // n * x for any integer n (negative allowed).
  Element mul(std::int64_t n, Element x) const;

  std::vector<std::int64_t> coords(Element x) const;
  // Reduces each coordinate modulo its factor; the length must equal rank().
  Element from_coords(std::span<const std::int64_t> coords) const;
  Element from_coords(std::initializer_list<std::int64_t> coords) const {
    return from_coords(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }
  // Like from_coords but rejects coordinates outside [0, di).
  Element from_reduced_coords(std::span<const std::int64_t> coords) const;

  // Unit vector of the i-th cyclic factor.
  Element generator(std::size_t i) const;

  std::int64_t element_order(Element x) const;
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_sylow2_cyclic() const;

  bool operator==(const Group& other) const { return factors_ == other.factors_; }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::uint32_t> strides_;
  std::size_t order_ = 1;
};

// All elements in lexicographic (= index) order. Subject to capacity_limit().
std::vector<Element> enumerate_elements(const Group& g);

// Omega_1 = {x : 2x = 0} and Omega_2 = {x : 4x = 0}, both in index order.
std::vector<Element> omega1(const Group& g);
std::vector<Element> omega2(const Group& g);

// Subgroup generated by `gens`, in index order. An empty list gives {0}.
std::vector<Element> subgroup_generated(const Group& g, std::span<const Element> gens);

// Parses a group spec such as "2,2,5", "Z4xZ4" or "z10".
Group parse_group_spec(std::string_view spec);

// Isomorphism from a direct product of cyclic groups, listed in arbitrary
// order, onto its invariant-factor normal form. Lets callers address elements
// in the coordinates of the product they wrote down.
class Presentation {
 public:
  explicit Presentation(std::vector<std::int64_t> factors);

  const Group& group() const { return group_; }
  const std::vector<std::int64_t>& factors() const { return input_factors_; }

  // Maps coordinates w.r.t. the input factors into the normalized group.
  Element element(std::span<const std::int64_t> coords) const;
  Element element(std::initializer_list<std::int64_t> coords) const {
    return element(std::span<const std::int64_t>(coords.begin(), coords.size()));
  }

 private:
  std::vector<std::int64_t> input_factors_;
  Group group_;
  std::vector<Element> images_;
};

// Up to four distinct elements kept in strictly increasing order. Every
// subset in this library is a triple or a quadruple.
class Subset {
 public:
  static constexpr std::size_t kMaxSize = 4;

  Subset() = default;
  // Sorts the elements; throws InvalidInput on duplicates or size > 4.
  explicit Subset(std::span<const Element> elements);
  Subset(std::initializer_list<Element> elements)
      : Subset(std::span<const Element>(elements.begin(), elements.size())) {}

  std::size_t size() const { return size_; }
  Element operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Element> elements() const { return {elements_.data(), size_}; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.begin() + size_; }
  bool contains(Element x) const;

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.size_ == b.size_ && std::equal(a.begin(), a.end(), b.begin());
  }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

 private:
  std::array<Element, kMaxSize> elements_{};
  std::size_t size_ = 0;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept;
};

// X + x and -X + x.
Subset translate(const Group& g, const Subset& s, Element x);
Subset negate_translate(const Group& g, const Subset& s, Element x);

}  // namespace kohler
