#pragma once

#include <vector>

#include "hyperstrength/hypergraph.hpp"

namespace hyperstrength {

/// A maximum adjacency ordering together with the induced head ordering of
/// the edges.
///
/// The head of an edge is its vertex that comes first in the order. An edge
/// is a backward edge of every other vertex it contains. Edges are listed in
/// head_order by head position, ties by EdgeId.
struct MAOrdering {
  std::vector<VertexId> order;       // order[i] = i-th vertex
  std::vector<std::size_t> position; // position[v] = index of v in order
  std::vector<VertexId> head;        // per edge
  std::vector<EdgeId> head_order;

  std::size_t head_position(EdgeId e) const { return position[head[e]]; }
};

/// Greedy weighted MA ordering; see detail::ma_sequence for the tie rules.
MAOrdering ma_ordering(const Hypergraph& h);

/// Backward edges of each vertex, each list in head order.
std::vector<std::vector<EdgeId>> backward_edges(const Hypergraph& h, const MAOrdering& ordering);

/// Edge set of the unweighted k-sparse certificate: the union over vertices of
/// their first k backward edges. Requires unit weights and k >= 1.
std::vector<EdgeId> certificate_unweighted(const Hypergraph& h, Weight k);

/// Weighted k-sparse certificate weights w'(e) <= w(e). Each vertex spends a
/// budget of k over its backward edges in head order; an edge keeps the
/// largest amount any of its vertices granted it. Requires k >= 1.
std::vector<Weight> certificate_weighted(const Hypergraph& h, Weight k);

/// Same, reusing a precomputed ordering of h.
std::vector<Weight> certificate_weighted(const Hypergraph& h, const MAOrdering& ordering, Weight k);

/// Per-vertex budget split: out[i] = max(min(k - sum_{j<i} w_j, w_i), 0).
std::vector<Weight> budget_split(std::span<const Weight> backward_weights, Weight k);

/// Keeps edges with positive certificate weight, reweighted to w'.
Hypergraph certificate_hypergraph(const Hypergraph& h, std::span<const Weight> certificate);

}  // namespace hyperstrength
