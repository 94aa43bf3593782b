#include "kohler_sqs/sqs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace kohler {

namespace {

// Dense per-triple counters are used up to this many triples (one byte each).
constexpr std::uint64_t kDenseTripleLimit = 200'000'000;

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Colex rank of x < y < z.
std::uint64_t triple_rank(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  return choose3(z) + choose2(y) + x;
}

Subset triple_of(std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  return Subset{Element{x}, Element{y}, Element{z}};
}

void validate_blocks(const Group& g, const std::vector<Subset>& blocks) {
  for (const Subset& b : blocks) {
    if (b.size() != 4) throw InvalidInput("block must have 4 elements");
    for (Element x : b) {
      if (!g.contains(x)) throw InvalidInput("block element outside the group");
    }
  }
}

// The four 3-subsets of a sorted block, as index triples in increasing order.
template <typename F>
void for_each_triple(const Subset& b, F&& f) {
  const std::uint32_t e0 = b[0].index, e1 = b[1].index, e2 = b[2].index, e3 = b[3].index;
  f(e0, e1, e2);
  f(e0, e1, e3);
  f(e0, e2, e3);
  f(e1, e2, e3);
}

std::int64_t omega1_size(const Group& g) {
  std::int64_t w = 1;
  for (std::int64_t d : g.factors()) w *= std::gcd(d, std::int64_t{2});
  return w;
}

std::int64_t omega2_size(const Group& g) {
  std::int64_t w = 1;
  for (std::int64_t d : g.factors()) w *= std::gcd(d, std::int64_t{4});
  return w;
}

void require_sqs_order(const Group& g) {
  if (!has_sqs_order(g)) {
    throw InvalidOrder("group order " + std::to_string(g.order()) + " is not congruent to 2 or 4 mod 6");
  }
}

void require_involution(const Group& g, Element h0) {
  if (!g.contains(h0) || g.element_order(h0) != 2) throw InvalidInput("h0 must be an element of order 2");
}

// Exact division, or an internal-consistency failure.
std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string(what) + " is not an integer");
  return num / den;
}

}  // namespace

Element choose_h0(const Group& g) {
  if (g.order() % 2 != 0) throw InvalidOrder("group of odd order " + std::to_string(g.order()) + " has no involution");
  for (Element x : omega1(g)) {
    if (x != g.zero()) return x;
  }
  throw std::logic_error("even order group without involution");
}

bool has_sqs_order(const Group& g) {
  const std::size_t r = g.order() % 6;
  return r == 2 || r == 4;
}

std::vector<OrbitRep> b0_orbits(const Group& g, Element h0) {
  require_involution(g, h0);
  const Element zero = g.zero();
  const auto elements = enumerate_elements(g);
  const auto invol = omega1(g);

  std::set<OrbitRep> reps;
  for (Element a : elements) {
    const Element a2 = g.add(a, a);
    if (a2 == zero) continue;
    reps.insert(canonicalize(g, Subset{zero, a, g.neg(a), h0}));
    for (Element h : invol) {
      if (h == zero || h == h0 || a2 == h) continue;
      reps.insert(canonicalize(g, Subset{zero, a, h, g.add(h, a)}));
    }
  }
  for (Element h : invol) {
    for (Element h2 : invol) {
      if (h == zero || h2 == zero || h == h2) continue;
      reps.insert(canonicalize(g, Subset{zero, h, h2, g.add(h, h2)}));
    }
  }
  return {reps.begin(), reps.end()};
}

namespace {

std::vector<Subset> expand_b0(const Group& g, Element h0) {
  std::vector<Subset> blocks;
  for (const OrbitRep& r : b0_orbits(g, h0)) {
    auto orbit = expand_orbit(g, r);
    blocks.insert(blocks.end(), orbit.begin(), orbit.end());
  }
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  return blocks;
}

}  // namespace

std::vector<Subset> build_b0(const Group& g, Element h0) {
  require_sqs_order(g);
  auto blocks = expand_b0(g, h0);
  if (static_cast<std::int64_t>(blocks.size()) != count_b0_formula(g)) {
    throw std::logic_error("B0 size disagrees with its closed form");
  }
  return blocks;
}

std::int64_t count_b0_formula(const Group& g) {
  require_sqs_order(g);
  const auto v = static_cast<std::int64_t>(g.order());
  const std::int64_t w1 = omega1_size(g), w2 = omega2_size(g);
  return exact_div(3 * v * v * w1 - v * (2 * w1 * w1 + 3 * w2 - 2), 24, "|B0|");
}

std::int64_t count_special_triples_formula(const Group& g) {
  require_sqs_order(g);
  const auto v = static_cast<std::int64_t>(g.order());
  const std::int64_t w1 = omega1_size(g), w2 = omega2_size(g);
  return exact_div(3 * v * v * w1 - v * (2 * w1 * w1 + 3 * w2 - 2), 6, "special triple count");
}

std::int64_t enumerate_special_triples(const Group& g) {
  check_capacity(g.order());
  const auto elements = enumerate_elements(g);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      for (std::size_t k = j + 1; k < elements.size(); ++k) {
        const Element b = g.sub(elements[j], elements[i]), c = g.sub(elements[k], elements[i]);
        if (!in_T(g, b, c)) ++count;
      }
    }
  }
  return count;
}

std::int64_t enumerate_b0(const Group& g, Element h0) {
  return static_cast<std::int64_t>(expand_b0(g, h0).size());
}

std::variant<Design, ConstructionFailure> construct_design(const Group& g, std::optional<Element> h0) {
  require_sqs_order(g);
  const Element involution = h0 ? *h0 : choose_h0(g);
  require_involution(g, involution);

  const KohlerGraph graph = build_graph(g);
  auto factor = one_factor(graph.to_simple_graph());
  if (auto* fail = std::get_if<NoPerfectMatching>(&factor)) {
    ConstructionFailure out;
    out.isolated_vertex = fail->component.size() == 1;
    for (std::size_t v : fail->component) out.witness_component.push_back(graph.vertices()[v]);
    out.reason = out.isolated_vertex ? "Kohler graph has an isolated vertex"
                 : fail->odd_component ? "Kohler graph has a component of odd order"
                                       : "Kohler graph component has no 1-factor";
    return out;
  }
  const Matching& matching = std::get<Matching>(factor);

  std::vector<std::pair<Subset, Provenance>> tagged;
  for (const Subset& b : build_b0(g, involution)) tagged.emplace_back(b, Provenance{Provenance::Source::B0, 0});
  for (std::size_t e : matching.matched_edges) {
    for (const Subset& b : expand_orbit(g, graph.edges()[e].orbit)) {
      tagged.emplace_back(b, Provenance{Provenance::Source::Factor, e});
    }
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  Design d{g, involution, {}, {}};
  d.blocks.reserve(tagged.size());
  d.provenance.reserve(tagged.size());
  for (auto& [b, p] : tagged) {
    d.blocks.push_back(b);
    d.provenance.push_back(p);
  }

  const VerificationReport report = verify_design(g, d.blocks);
  if (!report.is_sqs || !report.is_reversible) {
    throw std::logic_error("constructed design failed verification");
  }
  return d;
}

VerificationReport verify_sqs(const Group& g, const std::vector<Subset>& blocks) {
  validate_blocks(g, blocks);
  const std::uint64_t v = g.order();
  const std::uint64_t total = choose3(v);
  if (total > kDenseTripleLimit) return detail::verify_sqs_streaming(g, blocks);

  std::vector<std::uint8_t> count(total, 0);
  for (const Subset& b : blocks) {
    for_each_triple(b, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
      auto& c = count[triple_rank(x, y, z)];
      if (c < 255) ++c;
    });
  }

  VerificationReport r;
  for (std::uint32_t x = 0; x < v; ++x) {
    for (std::uint32_t y = x + 1; y < v; ++y) {
      for (std::uint32_t z = y + 1; z < v; ++z) {
        const std::uint8_t c = count[triple_rank(x, y, z)];
        if (c != 1) r.triple_coverage_violations.push_back({triple_of(x, y, z), c});
      }
    }
  }
  r.is_sqs = r.triple_coverage_violations.empty();
  return r;
}

VerificationReport detail::verify_sqs_streaming(const Group& g, const std::vector<Subset>& blocks) {
  validate_blocks(g, blocks);
  const std::uint64_t v = g.order();

  std::vector<std::uint64_t> ranks;
  ranks.reserve(4 * blocks.size());
  for (const Subset& b : blocks) {
    for_each_triple(b, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) { ranks.push_back(triple_rank(x, y, z)); });
  }
  std::sort(ranks.begin(), ranks.end());

  // Walk triples in colex order alongside the sorted ranks.
  VerificationReport r;
  std::size_t pos = 0;
  std::uint64_t rank = 0;
  for (std::uint32_t z = 2; z < v; ++z) {
    for (std::uint32_t y = 1; y < z; ++y) {
      for (std::uint32_t x = 0; x < y; ++x, ++rank) {
        std::uint32_t c = 0;
        while (pos < ranks.size() && ranks[pos] == rank) {
          ++c;
          ++pos;
        }
        if (c != 1) r.triple_coverage_violations.push_back({triple_of(x, y, z), std::min<std::uint32_t>(c, 255)});
      }
    }
  }
  std::sort(r.triple_coverage_violations.begin(), r.triple_coverage_violations.end(),
            [](const CoverageViolation& a, const CoverageViolation& b) { return a.triple < b.triple; });
  r.is_sqs = r.triple_coverage_violations.empty();
  return r;
}

VerificationReport verify_reversible(const Group& g, const std::vector<Subset>& blocks) {
  validate_blocks(g, blocks);
  const std::unordered_set<Subset, SubsetHash> present(blocks.begin(), blocks.end());

  VerificationReport r;
  for (const Subset& b : blocks) {
    if (!is_symmetric_block(g, b)) r.asymmetric_blocks.push_back(b);
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const Subset image = translate(g, b, g.generator(i));
      if (!present.contains(image)) r.invariance_violations.push_back({b, image});
    }
    const Subset mirrored = negate_translate(g, b, g.zero());
    if (!present.contains(mirrored)) r.invariance_violations.push_back({b, mirrored});
  }
  r.is_reversible = r.asymmetric_blocks.empty() && r.invariance_violations.empty();
  return r;
}

VerificationReport verify_design(const Group& g, const std::vector<Subset>& blocks) {
  VerificationReport r = verify_sqs(g, blocks);
  VerificationReport rev = verify_reversible(g, blocks);
  r.is_reversible = rev.is_reversible;
  r.asymmetric_blocks = std::move(rev.asymmetric_blocks);
  r.invariance_violations = std::move(rev.invariance_violations);
  return r;
}

bool contains_b0(const Group& g, Element h0, const std::vector<Subset>& blocks) {
  const std::unordered_set<Subset, SubsetHash> present(blocks.begin(), blocks.end());
  const auto b0 = build_b0(g, h0);
  return std::all_of(b0.begin(), b0.end(), [&](const Subset& b) { return present.contains(b); });
}

namespace {

std::vector<std::int64_t> odd_prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    if (p != 2) out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 2) out.push_back(n);
  return out;
}

CyclicDiagnostics cyclic_diagnostics(const Group& g) {
  const auto v = static_cast<std::int64_t>(g.order());
  CyclicDiagnostics d;
  d.v_mod_8 = v % 8;
  d.even = v % 2 == 0;
  d.not_divisible_by_3 = v % 3 != 0;
  d.not_divisible_by_8 = v % 8 != 0;
  for (std::int64_t p : odd_prime_divisors(v)) {
    PrimeCheck check{p};
    if (static_cast<std::uint64_t>(2 * p) <= capacity_limit()) {
      const KohlerGraph graph = build_graph(Group::make({2 * p}));
      check.evaluated = true;
      check.has_one_factor = std::holds_alternative<Matching>(one_factor(graph.to_simple_graph()));
    }
    d.primes.push_back(check);
  }
  return d;
}

}  // namespace

ExistenceVerdict existence_check(const Group& g) {
  check_capacity(g.order());
  ExistenceVerdict out;
  const std::size_t v = g.order();
  if (!has_sqs_order(g)) {
    out.verdict = Verdict::No;
    out.rule = "order_residue";
    out.reason = "an SQS(v) exists only for v = 2 or 4 (mod 6); v = " + std::to_string(v);
    return out;
  }

  const bool cyclic = g.is_sylow2_cyclic();
  if (cyclic) out.diagnostics = cyclic_diagnostics(g);

  auto result = construct_design(g);
  if (auto* design = std::get_if<Design>(&result)) {
    out.verdict = Verdict::Yes;
    out.rule = "one_factor";
    out.reason = "the Kohler graph has a 1-factor; B0 plus its edge orbits is an A-reversible SQS(" +
                 std::to_string(v) + ")";
    out.witness = std::move(*design);
    return out;
  }

  out.failure = std::get<ConstructionFailure>(std::move(result));
  if (cyclic) {
    out.verdict = Verdict::No;
    out.rule = "cyclic_sylow2_no_one_factor";
    out.reason = "Sylow 2-subgroup is cyclic, so an A-reversible SQS exists iff the Kohler graph has a 1-factor: " +
                 out.failure->reason;
  } else {
    out.verdict = Verdict::Unknown;
    out.rule = "no_one_factor";
    out.reason = "no 1-factor (" + out.failure->reason +
                 "); with a non-cyclic Sylow 2-subgroup a design without B0 may still exist";
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

}  // namespace kohler
