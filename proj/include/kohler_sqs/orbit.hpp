#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "kohler_sqs/group.hpp"

namespace kohler {

// Orbits of 3- and 4-subsets of A under the group generated by translations
// x -> x + a and the negation x -> -x.

enum class OrbitKind { Triple, Quadruple };

// Canonical representative of an orbit: the lexicographically smallest sorted
// member that contains 0. Two subsets lie in the same orbit iff their
// representatives are equal.
struct OrbitRep {
  Subset base;

  OrbitKind kind() const { return base.size() == 3 ? OrbitKind::Triple : OrbitKind::Quadruple; }

  friend bool operator==(const OrbitRep&, const OrbitRep&) = default;
  friend auto operator<=>(const OrbitRep& a, const OrbitRep& b) { return a.base <=> b.base; }
};

struct OrbitRepHash {
  std::size_t operator()(const OrbitRep& r) const noexcept { return SubsetHash{}(r.base); }
};

// Distinct orbit members containing 0, sorted. These are exactly the sets
// S - x and -S + x for x in S.
std::vector<Subset> through_zero_members(const Group& g, const Subset& s);

OrbitRep canonicalize(const Group& g, const Subset& s);

// Every member of the orbit, sorted.
std::vector<Subset> expand_orbit(const Group& g, const OrbitRep& r);

// Orbit length from the double count (|S|)|orbit| = v * #(members through 0).
std::size_t orbit_size(const Group& g, const OrbitRep& r);

// [a,b] with a != +-b, 2a not in {0,b,2b}, 2b not in {0,a,2a}. Requires a, b
// nonzero and distinct.
bool in_T(const Group& g, Element a, Element b);

// [a,b,a+b] with 0 not in {2a,2b} and {+-a,+-2a} disjoint from {+-b,+-2b}.
// Requires {0,a,b,a+b} to have four distinct elements.
bool in_E(const Group& g, Element a, Element b);

enum class TripleClass { T, T1, T2 };

// T1: [a,-a] with 2a != 0. T2: [a,h] with 2h = 0. T: everything else. The
// three families partition the triple orbits; T1 wins where T1 and T2 meet.
TripleClass classify_triple(const Group& g, const OrbitRep& r);

enum class QuadClass { E, Q1, Q2, Q3, Qprime, Qdprime, Qtprime, Asymmetric };

// Finest tag in the order E, Q1, Q2, Q3, Q', Q'', Q''', Asymmetric. Q1 and Q2
// are relative to the involution `h0`; without one those tags are skipped.
QuadClass classify_quadruple(const Group& g, const OrbitRep& r, std::optional<Element> h0 = std::nullopt);

// B = -B + x for some x.
bool is_symmetric_block(const Group& g, const Subset& b);

std::string_view to_string(TripleClass c);
std::string_view to_string(QuadClass c);

}  // namespace kohler
