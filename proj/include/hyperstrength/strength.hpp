#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperstrength/hypergraph.hpp"

namespace hyperstrength {

/// Approximate strengths gamma'(e) with the level that assigned them.
///
/// gamma'(e) = 2^(level-1) * base for the base the estimation was started
/// with. window is filled only by the windowed driver.
struct StrengthMap {
  std::vector<Weight> gamma;
  std::vector<std::uint32_t> level;
  std::vector<std::optional<std::uint32_t>> window;

  std::size_t size() const { return gamma.size(); }
};

/// Sum of w(e) / gamma(e).
long double strength_cost(const Hypergraph& h, std::span<const Weight> gamma);

/// The bound 8 r (n - 1) that the approximate strengths keep the cost under.
long double cost_bound(const Hypergraph& h);

/// |E'| <= ell * (kappa(H - E') - kappa(H)), with |E'| counted as weight.
struct LightnessReport {
  Weight removed_weight = 0;
  std::size_t kappa_before = 0;
  std::size_t kappa_after = 0;
  Weight ell = 0;

  bool light() const;
};

struct LightEdgeSet {
  std::vector<EdgeId> edges;  // ascending ids of the input hypergraph
  LightnessReport report;
};

/// Measures an arbitrary edge set against a lightness factor.
LightnessReport lightness(const Hypergraph& h, std::span<const EdgeId> edges, Weight ell);

/// A 2k-light k-partition: contains every edge crossing a cut lighter than k.
///
/// Returns all edges once their weight fits under 2k(n - kappa); otherwise
/// contracts everything outside a weighted k-sparse certificate and repeats
/// on the smaller hypergraph. Edges swallowed by the contraction are never
/// reported.
LightEdgeSet partition(const Hypergraph& h, Weight k);

/// A 4rk-light superset of the k-weak edges, from 1 + ceil(log2 n) rounds of
/// partition(current, 2rk) with the found edges removed between rounds.
LightEdgeSet weak_edges(const Hypergraph& h, Weight k);

/// Doubling cascade: iteration i removes weak_edges(H_{i-1}, 2^i k_base) and
/// assigns those edges 2^(i-1) k_base. Requires k_base to lower-bound every
/// strength (1 always works).
StrengthMap estimate_strengths(const Hypergraph& h, Weight k_base = 1);

/// Same cascade over integer weights read as parallel copies.
///
/// b must lower-bound every strength and the total weight must be at most
/// b * ratio_bound; the ratio is only validated, the loop stops when the
/// hypergraph runs out of edges.
StrengthMap estimate_strengths_weighted(const Hypergraph& h, Weight b,
                                        std::optional<Weight> ratio_bound = std::nullopt);

}  // namespace hyperstrength
