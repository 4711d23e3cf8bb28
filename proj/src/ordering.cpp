#include "hyperstrength/ordering.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperstrength/detail/checked.hpp"
#include "hyperstrength/detail/ma_sequence.hpp"

namespace hyperstrength {

namespace {

detail::IncidenceView view_of(const Hypergraph& h) {
  return {h.num_vertices(), h.edge_offsets(), h.pins(), h.vertex_offsets(), h.incidence()};
}

void require_positive(Weight k) {
  if (k < 1) throw std::invalid_argument("certificate threshold k must be positive");
}

}  // namespace

MAOrdering ma_ordering(const Hypergraph& h) {
  MAOrdering out;
  out.order = detail::ma_sequence<Weight>(view_of(h), h.weights());
  out.position.assign(h.num_vertices(), 0);
  for (std::size_t i = 0; i < out.order.size(); ++i) out.position[out.order[i]] = i;

  out.head.assign(h.num_edges(), 0);
  // Counting sort by head position keeps EdgeId order within a bucket.
  std::vector<std::size_t> bucket(h.num_vertices() + 1, 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    VertexId best = vs[0];
    for (VertexId v : vs) {
      if (out.position[v] < out.position[best]) best = v;
    }
    out.head[e] = best;
    ++bucket[out.position[best] + 1];
  }
  for (std::size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
  out.head_order.assign(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out.head_order[bucket[out.position[out.head[e]]]++] = e;
  }
  return out;
}

std::vector<std::vector<EdgeId>> backward_edges(const Hypergraph& h, const MAOrdering& ordering) {
  std::vector<std::vector<EdgeId>> out(h.num_vertices());
  for (EdgeId e : ordering.head_order) {
    for (VertexId v : h.edge(e)) {
      if (v != ordering.head[e]) out[v].push_back(e);
    }
  }
  return out;
}

std::vector<Weight> budget_split(std::span<const Weight> backward_weights, Weight k) {
  require_positive(k);
  std::vector<Weight> out;
  out.reserve(backward_weights.size());
  Weight spent = 0;
  for (Weight w : backward_weights) {
    Weight grant = std::max<Weight>(std::min(k - std::min(spent, k), w), 0);
    out.push_back(grant);
    spent = detail::saturating_add(spent, w);
  }
  return out;
}

std::vector<Weight> certificate_weighted(const Hypergraph& h, const MAOrdering& ordering,
                                         Weight k) {
  require_positive(k);
  std::vector<Weight> granted(h.num_edges(), 0);
  // Budget left per vertex; a vertex stops granting once it is spent, so the
  // scan over head order touches each pin once.
  std::vector<Weight> budget(h.num_vertices(), k);
  for (EdgeId e : ordering.head_order) {
    const Weight w = h.weight(e);
    for (VertexId v : h.edge(e)) {
      if (v == ordering.head[e] || budget[v] == 0) continue;
      const Weight grant = std::min(budget[v], w);
      budget[v] -= grant;
      granted[e] = std::max(granted[e], grant);
    }
  }
  return granted;
}

std::vector<Weight> certificate_weighted(const Hypergraph& h, Weight k) {
  require_positive(k);
  return certificate_weighted(h, ma_ordering(h), k);
}

std::vector<EdgeId> certificate_unweighted(const Hypergraph& h, Weight k) {
  require_positive(k);
  if (!h.is_unit_weight()) {
    throw std::invalid_argument("unweighted certificate needs unit edge weights");
  }
  auto granted = certificate_weighted(h, k);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (granted[e] > 0) out.push_back(e);
  }
  return out;
}

Hypergraph certificate_hypergraph(const Hypergraph& h, std::span<const Weight> certificate) {
  if (certificate.size() != h.num_edges()) throw std::invalid_argument("weight count mismatch");
  std::vector<EdgeRecord> records;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (certificate[e] <= 0) continue;
    auto vs = h.edge(e);
    records.push_back({{vs.begin(), vs.end()}, certificate[e]});
  }
  return Hypergraph(h.num_vertices(), std::move(records));
}

}  // namespace hyperstrength
