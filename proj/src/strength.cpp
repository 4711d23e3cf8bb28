#include "hyperstrength/strength.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperstrength/detail/checked.hpp"
#include "hyperstrength/ordering.hpp"

namespace hyperstrength {

using detail::saturating_mul;

long double strength_cost(const Hypergraph& h, std::span<const Weight> gamma) {
  if (gamma.size() != h.num_edges()) throw std::invalid_argument("strength count mismatch");
  long double total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (gamma[e] <= 0) throw std::invalid_argument("strengths must be positive");
    total += static_cast<long double>(h.weight(e)) / static_cast<long double>(gamma[e]);
  }
  return total;
}

long double cost_bound(const Hypergraph& h) {
  if (h.num_vertices() == 0) return 0;
  return 8.0L * static_cast<long double>(h.rank()) *
         static_cast<long double>(h.num_vertices() - 1);
}

bool LightnessReport::light() const {
  if (kappa_after < kappa_before) return false;
  const auto gained = static_cast<Weight>(kappa_after - kappa_before);
  return removed_weight <= saturating_mul(ell, gained);
}

LightnessReport lightness(const Hypergraph& h, std::span<const EdgeId> edges, Weight ell) {
  LightnessReport report;
  report.ell = ell;
  for (EdgeId e : edges) report.removed_weight = detail::checked_add(report.removed_weight, h.weight(e));
  report.kappa_before = components(h).count;
  report.kappa_after = components(delete_edges(h, edges).graph).count;
  return report;
}

namespace {

std::vector<EdgeId> identity_ids(std::size_t m) {
  std::vector<EdgeId> ids(m);
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  return ids;
}

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

Weight pow2_times(std::size_t exponent, Weight k) {
  if (exponent >= 63) return std::numeric_limits<Weight>::max();
  return saturating_mul(Weight{1} << exponent, k);
}

// Partition on h, answered in h's edge ids, unsorted.
std::vector<EdgeId> partition_ids(const Hypergraph& h, Weight k) {
  if (k < 1) throw std::invalid_argument("partition threshold k must be positive");
  const std::size_t kappa = components(h).count;  // contraction never changes it
  Hypergraph current = h;
  std::vector<EdgeId> to_input = identity_ids(h.num_edges());

  while (true) {
    const auto forest_size = static_cast<Weight>(current.num_vertices() - kappa);
    if (current.total_weight() <= saturating_mul(saturating_mul(2, k), forest_size)) {
      return to_input;
    }
    auto kept = certificate_weighted(current, k);
    std::vector<EdgeId> residual;
    for (EdgeId e = 0; e < current.num_edges(); ++e) {
      if (kept[e] < current.weight(e)) residual.push_back(e);
    }
    // Some copy of each residual edge is outside the certificate, and
    // contracting one copy swallows the rest.
    auto contraction = contract_edges(current, residual);
    std::vector<EdgeId> next_to_input(contraction.graph.num_edges());
    for (EdgeId e = 0; e < current.num_edges(); ++e) {
      EdgeId image = contraction.map.edge_image[e];
      if (image != kAbsorbed) next_to_input[image] = to_input[e];
    }
    current = std::move(contraction.graph);
    to_input = std::move(next_to_input);
  }
}

struct WeakEdgesRun {
  std::vector<EdgeId> edges;
  std::size_t kappa_after = 0;
};

WeakEdgesRun weak_edges_ids(const Hypergraph& h, Weight k) {
  if (k < 1) throw std::invalid_argument("weak edge threshold k must be positive");
  const Weight partition_k = saturating_mul(saturating_mul(2, static_cast<Weight>(h.rank())), k);
  const std::size_t rounds = 1 + ceil_log2(h.num_vertices());

  WeakEdgesRun run;
  Hypergraph current = h;
  std::vector<EdgeId> to_input = identity_ids(h.num_edges());
  for (std::size_t round = 0; round < rounds && current.num_edges() > 0; ++round) {
    auto found = partition_ids(current, partition_k);
    // An empty round leaves the hypergraph unchanged, so every later round
    // would repeat it.
    if (found.empty()) break;
    for (EdgeId e : found) run.edges.push_back(to_input[e]);
    auto rest = delete_edges(current, found);
    std::vector<EdgeId> next_to_input;
    next_to_input.reserve(rest.edge_to_original.size());
    for (EdgeId e : rest.edge_to_original) next_to_input.push_back(to_input[e]);
    current = std::move(rest.graph);
    to_input = std::move(next_to_input);
  }
  std::sort(run.edges.begin(), run.edges.end());
  run.kappa_after = components(current).count;
  return run;
}

StrengthMap cascade(const Hypergraph& h, Weight base) {
  if (base < 1) throw std::invalid_argument("strength lower bound must be positive");
  StrengthMap out;
  out.gamma.assign(h.num_edges(), 0);
  out.level.assign(h.num_edges(), 0);
  out.window.assign(h.num_edges(), std::nullopt);

  Hypergraph current = h;
  std::vector<EdgeId> to_input = identity_ids(h.num_edges());
  for (std::size_t i = 1; current.num_edges() > 0; ++i) {
    auto weak = weak_edges_ids(current, pow2_times(i, base)).edges;
    const Weight assigned = pow2_times(i - 1, base);
    for (EdgeId e : weak) {
      out.gamma[to_input[e]] = assigned;
      out.level[to_input[e]] = static_cast<std::uint32_t>(i);
    }
    auto rest = delete_edges(current, weak);
    std::vector<EdgeId> next_to_input;
    next_to_input.reserve(rest.edge_to_original.size());
    for (EdgeId e : rest.edge_to_original) next_to_input.push_back(to_input[e]);
    current = std::move(rest.graph);
    to_input = std::move(next_to_input);
  }
  return out;
}

}  // namespace

LightEdgeSet partition(const Hypergraph& h, Weight k) {
  LightEdgeSet out;
  out.edges = partition_ids(h, k);
  std::sort(out.edges.begin(), out.edges.end());
  out.report = lightness(h, out.edges, saturating_mul(2, k));
  return out;
}

LightEdgeSet weak_edges(const Hypergraph& h, Weight k) {
  auto run = weak_edges_ids(h, k);
  LightEdgeSet out;
  out.report.ell = saturating_mul(saturating_mul(4, static_cast<Weight>(h.rank())), k);
  for (EdgeId e : run.edges) {
    out.report.removed_weight = detail::checked_add(out.report.removed_weight, h.weight(e));
  }
  out.report.kappa_before = components(h).count;
  out.report.kappa_after = run.kappa_after;
  out.edges = std::move(run.edges);
  return out;
}

StrengthMap estimate_strengths(const Hypergraph& h, Weight k_base) { return cascade(h, k_base); }

StrengthMap estimate_strengths_weighted(const Hypergraph& h, Weight b,
                                        std::optional<Weight> ratio_bound) {
  if (ratio_bound) {
    if (*ratio_bound < 1) throw std::invalid_argument("weight ratio bound must be positive");
    if (h.total_weight() > saturating_mul(b, *ratio_bound)) {
      throw std::invalid_argument("total weight exceeds b * M");
    }
  }
  return cascade(h, b);
}

}  // namespace hyperstrength
