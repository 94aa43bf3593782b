#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kohler_sqs/group.hpp"
#include "kohler_sqs/kohler_graph.hpp"
#include "kohler_sqs/orbit.hpp"

namespace kohler {

// Lexicographically smallest element of order 2. Throws InvalidOrder when the
// group has odd order.
Element choose_h0(const Group& g);

// v ≡ 2 or 4 (mod 6).
bool has_sqs_order(const Group& g);

// Orbit representatives of Q1 ∪ Q2 ∪ Q3 relative to `h0`, sorted:
//   Q1 = [a,-a,h0]       a ∉ Ω1
//   Q2 = [a,h,h+a]       a ∉ Ω1, h ∈ Ω1 \ <h0>, 2a != h
//   Q3 = [h,h',h+h']     h, h' distinct nonzero in Ω1
std::vector<OrbitRep> b0_orbits(const Group& g, Element h0);

// Every block of the forced family B0, sorted. Requires v ≡ 2, 4 (mod 6) and
// checks the size against count_b0_formula.
std::vector<Subset> build_b0(const Group& g, Element h0);

// |B0| = v²ω1/8 - v(2ω1² + 3ω2 - 2)/24.
std::int64_t count_b0_formula(const Group& g);

// Number of triples whose orbit is in T1 ∪ T2:
// v²ω1/2 - v(2ω1² + 3ω2 - 2)/6.
std::int64_t count_special_triples_formula(const Group& g);

// Brute-force counterparts of the two closed forms: the number of triples
// whose orbit lies outside T, and the size of the union of the B0 orbits.
std::int64_t enumerate_special_triples(const Group& g);
std::int64_t enumerate_b0(const Group& g, Element h0);

struct Provenance {
  enum class Source { B0, Factor, External };
  Source source = Source::External;
  std::size_t edge = 0;  // Köhler graph edge index when source == Factor

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Design {
  Group group;
  Element h0;
  std::vector<Subset> blocks;  // sorted
  std::vector<Provenance> provenance;
};

struct ConstructionFailure {
  std::string reason;
  // Vertices (triple orbits) of the Köhler graph component with no 1-factor.
  std::vector<OrbitRep> witness_component;
  bool isolated_vertex = false;
};

// B0 together with the expansion of every edge orbit of a 1-factor of the
// Köhler graph. The returned design has been verified. Requires v ≡ 2, 4
// (mod 6); an explicit `h0` must have order 2.
std::variant<Design, ConstructionFailure> construct_design(const Group& g,
                                                           std::optional<Element> h0 = std::nullopt);

struct CoverageViolation {
  Subset triple;
  std::uint32_t count;
};

struct InvarianceViolation {
  Subset block;
  Subset missing_image;
};

struct VerificationReport {
  bool is_sqs = false;
  bool is_reversible = false;
  std::vector<CoverageViolation> triple_coverage_violations;
  std::vector<Subset> asymmetric_blocks;
  std::vector<InvarianceViolation> invariance_violations;
};

// Counts how often each of the C(v,3) triples is covered. Only the coverage
// part of the report is filled in.
VerificationReport verify_sqs(const Group& g, const std::vector<Subset>& blocks);

// Checks block symmetry and closure under every generator translation and
// negation. Only the reversibility part of the report is filled in.
VerificationReport verify_reversible(const Group& g, const std::vector<Subset>& blocks);

namespace detail {
// Coverage check that sorts covered-triple ranks instead of keeping a dense
// counter per triple. verify_sqs switches to it for large v.
VerificationReport verify_sqs_streaming(const Group& g, const std::vector<Subset>& blocks);
}  // namespace detail

// Both checks.
VerificationReport verify_design(const Group& g, const std::vector<Subset>& blocks);

// Whether every block of B0(h0) is present.
bool contains_b0(const Group& g, Element h0, const std::vector<Subset>& blocks);

enum class Verdict { Yes, No, Unknown };

struct PrimeCheck {
  std::int64_t prime;
  bool evaluated = false;
  bool has_one_factor = false;
};

// Condition (iv) of the cyclic Sylow-2 characterization, split into its
// computable parts.
struct CyclicDiagnostics {
  std::int64_t v_mod_8 = 0;
  bool even = false;
  bool not_divisible_by_3 = false;
  bool not_divisible_by_8 = false;
  std::vector<PrimeCheck> primes;
};

struct ExistenceVerdict {
  Verdict verdict = Verdict::Unknown;
  // Which rule decided: "order_residue", "one_factor", "cyclic_sylow2_no_one_factor"
  // or "no_one_factor".
  std::string rule;
  std::string reason;
  std::optional<Design> witness;
  std::optional<ConstructionFailure> failure;
  std::optional<CyclicDiagnostics> diagnostics;
};

ExistenceVerdict existence_check(const Group& g);

std::string_view to_string(Verdict v);

}  // namespace kohler
