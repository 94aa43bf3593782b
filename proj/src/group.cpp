#include "kohler_sqs/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace kohler {

namespace {

std::atomic<std::size_t> g_capacity{kDefaultCapacity};

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Prime-power factorization by trial division.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Inverse of a modulo m, for gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return mod(old_s, m);
}

std::int64_t ipow(std::int64_t p, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

// One prime-power cyclic piece of an input factor.
struct PrimeSlot {
  std::size_t input;
  std::int64_t prime;
  int exponent;
};

struct Normalized {
  std::vector<std::int64_t> invariant;
  // slot -> index into `invariant`
  std::vector<PrimeSlot> slots;
  std::vector<std::size_t> slot_target;
};

Normalized normalize(std::span<const std::int64_t> factors) {
  Normalized out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) {
      throw InvalidSpec("group factor must be at least 2, got " + std::to_string(factors[i]));
    }
    for (auto [p, e] : factorize(factors[i])) out.slots.push_back({i, p, e});
  }

  std::map<std::int64_t, std::vector<std::size_t>> by_prime;
  for (std::size_t s = 0; s < out.slots.size(); ++s) by_prime[out.slots[s].prime].push_back(s);

  std::size_t k = 0;
  for (auto& [p, list] : by_prime) {
    // Larger prime powers go to later invariant factors; ties keep the later
    // input factor later so that a normalized input maps to itself.
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      if (out.slots[a].exponent != out.slots[b].exponent) return out.slots[a].exponent > out.slots[b].exponent;
      return out.slots[a].input > out.slots[b].input;
    });
    k = std::max(k, list.size());
  }

  out.invariant.assign(k, 1);
  out.slot_target.assign(out.slots.size(), 0);
  for (auto& [p, list] : by_prime) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::size_t target = k - 1 - j;
      out.invariant[target] *= ipow(p, out.slots[list[j]].exponent);
      out.slot_target[list[j]] = target;
    }
  }
  return out;
}

}  // namespace

std::size_t capacity_limit() { return g_capacity.load(); }

void set_capacity_limit(std::size_t limit) { g_capacity.store(limit); }

void check_capacity(std::size_t order) {
  if (order > capacity_limit()) {
    throw CapacityError("group order " + std::to_string(order) + " exceeds capacity limit " +
                        std::to_string(capacity_limit()));
  }
}

Group Group::make(std::span<const std::int64_t> factors) {
  Group g;
  g.factors_ = normalize(factors).invariant;

  std::uint64_t order = 1;
  for (std::int64_t d : g.factors_) {
    order *= static_cast<std::uint64_t>(d);
    if (order > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidSpec("group order too large to index");
    }
  }
  g.order_ = static_cast<std::size_t>(order);

  g.strides_.assign(g.factors_.size(), 1);
  for (std::size_t i = g.factors_.size(); i-- > 1;) {
    g.strides_[i - 1] = g.strides_[i] * static_cast<std::uint32_t>(g.factors_[i]);
  }
  return g;
}

Element Group::add(Element x, Element y) const {
  std::uint32_t a = x.index, b = y.index, out = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::uint32_t>(factors_[i]);
    std::uint32_t s = a % d + b % d;
    if (s >= d) s -= d;
    out += s * strides_[i];
    a /= d;
    b /= d;
  }
  return Element{out};
}

Element Group::neg(Element x) const {
  std::uint32_t a = x.index, out = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::uint32_t>(factors_[i]);
    const std::uint32_t c = a % d;
    out += (c == 0 ? 0 : d - c) * strides_[i];
    a /= d;
  }
  return Element{out};
}

Element Group::sub(Element x, Element y) const { return add(x, neg(y)); }

Element Group::mul(std::int64_t n, Element x) const {
  std::uint32_t a = x.index, out = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::int64_t d = factors_[i];
    const std::int64_t c = a % static_cast<std::uint32_t>(d);
    out += static_cast<std::uint32_t>(mod(mod(n, d) * c, d)) * strides_[i];
    a /= static_cast<std::uint32_t>(d);
  }
  return Element{out};
}

std::vector<std::int64_t> Group::coords(Element x) const {
  std::vector<std::int64_t> out(factors_.size());
  std::uint32_t a = x.index;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto d = static_cast<std::uint32_t>(factors_[i]);
    out[i] = a % d;
    a /= d;
  }
  return out;
}

Element Group::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() != factors_.size()) {
    throw InvalidInput("element has " + std::to_string(coords.size()) + " coordinates, group " +
                       to_string() + " needs " + std::to_string(factors_.size()));
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out += static_cast<std::uint32_t>(mod(coords[i], factors_[i])) * strides_[i];
  }
  return Element{out};
}

Element Group::from_reduced_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() == factors_.size()) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] < 0 || coords[i] >= factors_[i]) {
        throw InvalidInput("coordinate " + std::to_string(coords[i]) + " out of range for Z" +
                           std::to_string(factors_[i]));
      }
    }
  }
  return from_coords(coords);
}

Element Group::generator(std::size_t i) const {
  if (i >= factors_.size()) throw InvalidInput("generator index out of range");
  return Element{strides_[i]};
}

std::int64_t Group::element_order(Element x) const {
  const auto c = coords(x);
  std::int64_t n = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    n = std::lcm(n, factors_[i] / std::gcd(factors_[i], c[i]));
  }
  return n;
}

bool Group::is_sylow2_cyclic() const {
  return std::count_if(factors_.begin(), factors_.end(), [](std::int64_t d) { return d % 2 == 0; }) <= 1;
}

std::string Group::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(factors_[i]);
  }
  return out;
}

std::vector<Element> enumerate_elements(const Group& g) {
  check_capacity(g.order());
  std::vector<Element> out(g.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

namespace {

std::vector<Element> killed_by(const Group& g, std::int64_t n) {
  std::vector<Element> out;
  for (Element x : enumerate_elements(g)) {
    if (g.mul(n, x) == g.zero()) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Element> omega1(const Group& g) { return killed_by(g, 2); }
std::vector<Element> omega2(const Group& g) { return killed_by(g, 4); }

std::vector<Element> subgroup_generated(const Group& g, std::span<const Element> gens) {
  check_capacity(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> members{g.zero()};
  seen[0] = 1;
  // Closing under addition of generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.add(members[i], s);
      if (!seen[y.index]) {
        seen[y.index] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Group parse_group_spec(std::string_view spec) {
  std::vector<std::int64_t> factors;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    token.clear();
    if (!t.empty() && t.front() == 'z') t.erase(0, 1);
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InvalidSpec("cannot parse group spec '" + std::string(spec) + "'");
    }
    if (t.size() > 12) throw InvalidSpec("group factor too large in '" + std::string(spec) + "'");
    factors.push_back(std::stoll(t));
  };
  for (char raw : spec) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
    if (c == ',' || c == 'x') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return Group::make(factors);
}

Presentation::Presentation(std::vector<std::int64_t> factors)
    : input_factors_(std::move(factors)), group_(Group::make(input_factors_)) {
  const Normalized n = normalize(input_factors_);
  images_.assign(input_factors_.size(), group_.zero());
  for (std::size_t s = 0; s < n.slots.size(); ++s) {
    const PrimeSlot& slot = n.slots[s];
    const std::size_t target = n.slot_target[s];
    const std::int64_t piece = ipow(slot.prime, slot.exponent);
    const std::int64_t d = n.invariant[target];
    // CRT idempotent of Z_d for the p-part: 1 mod piece, 0 mod d / piece.
    const std::int64_t cofactor = d / piece;
    const std::int64_t idempotent = mod(cofactor * mod_inverse(cofactor, piece), d);
    const Element part = group_.mul(idempotent, group_.generator(target));
    images_[slot.input] = group_.add(images_[slot.input], part);
  }
}

Element Presentation::element(std::span<const std::int64_t> coords) const {
  if (coords.size() != input_factors_.size()) {
    throw InvalidInput("element has wrong number of coordinates for the presentation");
  }
  Element out = group_.zero();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out = group_.add(out, group_.mul(mod(coords[i], input_factors_[i]), images_[i]));
  }
  return out;
}

Subset::Subset(std::span<const Element> elements) {
  if (elements.size() > kMaxSize) throw InvalidInput("subset larger than 4 elements");
  size_ = elements.size();
  std::copy(elements.begin(), elements.end(), elements_.begin());
  std::sort(elements_.begin(), elements_.begin() + size_);
  if (std::adjacent_find(elements_.begin(), elements_.begin() + size_) != elements_.begin() + size_) {
    throw InvalidInput("subset has repeated elements");
  }
}

bool Subset::contains(Element x) const { return std::binary_search(begin(), end(), x); }

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t SubsetHash::operator()(const Subset& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
  for (Element x : s) {
    h ^= x.index + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Subset translate(const Group& g, const Subset& s, Element x) {
  std::array<Element, Subset::kMaxSize> buf{};
  for (std::size_t i = 0; i < s.size(); ++i) buf[i] = g.add(s[i], x);
  return Subset(std::span<const Element>(buf.data(), s.size()));
}

Subset negate_translate(const Group& g, const Subset& s, Element x) {
  std::array<Element, Subset::kMaxSize> buf{};
  for (std::size_t i = 0; i < s.size(); ++i) buf[i] = g.sub(x, s[i]);
  return Subset(std::span<const Element>(buf.data(), s.size()));
}

}  // namespace kohler
