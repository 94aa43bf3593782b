#include "kohler_sqs/orbit.hpp"

#include <algorithm>
#include <array>

namespace kohler {

namespace {

void require_orbit_size(const Subset& s) {
  if (s.size() != 3 && s.size() != 4) {
    throw InvalidInput("orbit subsets must have 3 or 4 elements, got " + std::to_string(s.size()));
  }
}

bool is_involution_or_zero(const Group& g, Element x) { return g.add(x, x) == g.zero(); }

// The nonzero elements of a member that contains 0.
std::array<Element, 3> nonzero_part(const Subset& m) {
  std::array<Element, 3> out{};
  std::size_t k = 0;
  for (Element x : m) {
    if (x.index != 0) out[k++] = x;
  }
  return out;
}

// Labelings (x, y, x + y) of a 3-element set, each unordered pair once.
template <typename F>
bool any_sum_labeling(const Group& g, const std::array<Element, 3>& t, F&& pred) {
  static constexpr std::array<std::array<int, 3>, 3> kPick{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& p : kPick) {
    const Element x = t[p[0]], y = t[p[1]], z = t[p[2]];
    if (g.add(x, y) == z && pred(x, y)) return true;
  }
  return false;
}

}  // namespace

std::vector<Subset> through_zero_members(const Group& g, const Subset& s) {
  require_orbit_size(s);
  std::vector<Subset> out;
  out.reserve(2 * s.size());
  for (Element x : s) {
    out.push_back(translate(g, s, g.neg(x)));
    out.push_back(negate_translate(g, s, x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitRep canonicalize(const Group& g, const Subset& s) {
  require_orbit_size(s);
  Subset best = translate(g, s, g.neg(s[0]));
  for (Element x : s) {
    best = std::min({best, translate(g, s, g.neg(x)), negate_translate(g, s, x)});
  }
  return OrbitRep{best};
}

std::vector<Subset> expand_orbit(const Group& g, const OrbitRep& r) {
  check_capacity(g.order());
  std::vector<Subset> out;
  out.reserve(2 * g.order());
  for (Element a : enumerate_elements(g)) {
    out.push_back(translate(g, r.base, a));
    out.push_back(negate_translate(g, r.base, a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t orbit_size(const Group& g, const OrbitRep& r) {
  return g.order() * through_zero_members(g, r.base).size() / r.base.size();
}

bool in_T(const Group& g, Element a, Element b) {
  if (a == g.zero() || b == g.zero() || a == b) {
    throw InvalidInput("in_T needs distinct nonzero elements");
  }
  const Element a2 = g.add(a, a), b2 = g.add(b, b);
  if (a == g.neg(b)) return false;
  if (a2 == g.zero() || a2 == b || a2 == b2) return false;
  if (b2 == g.zero() || b2 == a) return false;
  return true;
}

bool in_E(const Group& g, Element a, Element b) {
  const Element s = g.add(a, b);
  const Element z = g.zero();
  if (a == z || b == z || a == b || s == z || s == a || s == b) {
    throw InvalidInput("in_E needs {0,a,b,a+b} to have four distinct elements");
  }
  const Element a2 = g.add(a, a), b2 = g.add(b, b);
  if (a2 == z || b2 == z) return false;
  const std::array<Element, 4> lhs{a, g.neg(a), a2, g.neg(a2)};
  const std::array<Element, 4> rhs{b, g.neg(b), b2, g.neg(b2)};
  for (Element x : lhs) {
    if (std::find(rhs.begin(), rhs.end(), x) != rhs.end()) return false;
  }
  return true;
}

TripleClass classify_triple(const Group& g, const OrbitRep& r) {
  if (r.kind() != OrbitKind::Triple) throw InvalidInput("classify_triple needs a triple orbit");
  const Element a = r.base[1], b = r.base[2];
  const Element a2 = g.add(a, a), b2 = g.add(b, b);
  if (b == g.neg(a) || a == b2 || b == a2) return TripleClass::T1;
  if (a2 == g.zero() || b2 == g.zero() || a2 == b2) return TripleClass::T2;
  return TripleClass::T;
}

QuadClass classify_quadruple(const Group& g, const OrbitRep& r, std::optional<Element> h0) {
  if (r.kind() != OrbitKind::Quadruple) throw InvalidInput("classify_quadruple needs a quadruple orbit");
  const auto members = through_zero_members(g, r.base);
  const Element zero = g.zero();

  auto omega1 = [&](Element x) { return is_involution_or_zero(g, x); };

  // {0, a, -a, h} with 2h = 0; returns the h of a matching labeling via `pred`.
  auto negation_pair = [&](const std::array<Element, 3>& t, auto&& pred) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Element w = t[3 - i - j];
        if (t[j] == g.neg(t[i]) && omega1(w) && pred(w)) return true;
      }
    }
    return false;
  };

  bool q_prime = false, q_dprime = false, q_tprime = false;
  bool e = false, q1 = false, q2 = false, q3 = false;
  for (const Subset& m : members) {
    const auto t = nonzero_part(m);
    if (any_sum_labeling(g, t, [](Element, Element) { return true; })) {
      q_prime = true;
      e = e || any_sum_labeling(g, t, [&](Element x, Element y) { return in_E(g, x, y); });
      q3 = q3 || any_sum_labeling(g, t, [&](Element x, Element y) { return omega1(x) && omega1(y); });
      if (h0) {
        auto q2_shape = [&](Element a, Element h) {
          return omega1(h) && h != zero && h != *h0 && !omega1(a) && g.add(a, a) != h;
        };
        q2 = q2 || any_sum_labeling(g, t, [&](Element x, Element y) { return q2_shape(x, y) || q2_shape(y, x); });
      }
    }
    if (negation_pair(t, [](Element) { return true; })) {
      q_dprime = true;
      if (h0) q1 = q1 || negation_pair(t, [&](Element w) { return w == *h0; });
    }
    if (omega1(t[0]) && omega1(t[1]) && omega1(t[2])) q_tprime = true;
  }

  if (e) return QuadClass::E;
  if (q1) return QuadClass::Q1;
  if (q2) return QuadClass::Q2;
  if (q3) return QuadClass::Q3;
  if (q_prime) return QuadClass::Qprime;
  if (q_dprime) return QuadClass::Qdprime;
  if (q_tprime) return QuadClass::Qtprime;
  return QuadClass::Asymmetric;
}

bool is_symmetric_block(const Group& g, const Subset& b) {
  if (b.size() != 4) throw InvalidInput("is_symmetric_block needs a 4-subset");
  // x -> c - x maps b[0] onto some b[j], so c = b[0] + b[j].
  for (Element y : b) {
    if (negate_translate(g, b, g.add(b[0], y)) == b) return true;
  }
  return false;
}

std::string_view to_string(TripleClass c) {
  switch (c) {
    case TripleClass::T: return "T";
    case TripleClass::T1: return "T1";
    case TripleClass::T2: return "T2";
  }
  return "?";
}

std::string_view to_string(QuadClass c) {
  switch (c) {
    case QuadClass::E: return "E";
    case QuadClass::Q1: return "Q1";
    case QuadClass::Q2: return "Q2";
    case QuadClass::Q3: return "Q3";
    case QuadClass::Qprime: return "Qprime";
    case QuadClass::Qdprime: return "Qdprime";
    case QuadClass::Qtprime: return "Qtprime";
    case QuadClass::Asymmetric: return "Asymmetric";
  }
  return "?";
}

}  // namespace kohler
