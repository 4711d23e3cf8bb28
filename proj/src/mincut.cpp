#include "hyperstrength/mincut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hyperstrength/detail/ma_sequence.hpp"

namespace hyperstrength {

namespace {

// Working copy of h with vertex classes collapsed, rebuilt once per phase.
template <class Scalar>
struct Collapsed {
  std::vector<std::size_t> edge_offsets{0};
  std::vector<std::uint32_t> pins;
  std::vector<std::size_t> vertex_offsets;
  std::vector<std::uint32_t> incidence;
  std::vector<Scalar> weights;

  void rebuild(const Hypergraph& h, std::span<const Scalar> input_weights,
               std::span<const VertexId> label, std::size_t classes) {
    edge_offsets.assign(1, 0);
    pins.clear();
    weights.clear();
    std::vector<std::uint32_t> scratch;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      scratch.clear();
      for (VertexId v : h.edge(e)) scratch.push_back(label[v]);
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      if (scratch.size() < 2) continue;
      pins.insert(pins.end(), scratch.begin(), scratch.end());
      edge_offsets.push_back(pins.size());
      weights.push_back(input_weights[e]);
    }
    vertex_offsets.assign(classes + 1, 0);
    for (auto v : pins) ++vertex_offsets[v + 1];
    for (std::size_t v = 0; v < classes; ++v) vertex_offsets[v + 1] += vertex_offsets[v];
    incidence.assign(pins.size(), 0);
    std::vector<std::size_t> cursor(vertex_offsets.begin(), vertex_offsets.end() - 1);
    for (std::uint32_t e = 0; e + 1 < edge_offsets.size(); ++e) {
      for (std::size_t j = edge_offsets[e]; j < edge_offsets[e + 1]; ++j) {
        incidence[cursor[pins[j]]++] = e;
      }
    }
  }

  detail::IncidenceView view(std::size_t classes) const {
    return {classes, edge_offsets, pins, vertex_offsets, incidence};
  }
};

template <class Scalar>
BasicCutResult<Scalar> ordering_mincut(const Hypergraph& h, std::span<const Scalar> weights) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw std::invalid_argument("mincut needs at least two vertices");

  auto comps = components(h);
  if (comps.count > 1) {
    BasicCutResult<Scalar> out{Scalar{0}, VertexSet(n)};
    for (VertexId v = 0; v < n; ++v) {
      if (comps.label[v] == 0) out.side.insert(v);
    }
    return out;
  }

  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  std::vector<std::vector<VertexId>> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};

  BasicCutResult<Scalar> best{std::numeric_limits<Scalar>::max(), VertexSet(n)};
  Collapsed<Scalar> g;
  for (std::size_t classes = n; classes > 1; --classes) {
    g.rebuild(h, weights, label, classes);
    auto order = detail::ma_sequence<Scalar>(g.view(classes), g.weights);
    const VertexId t = order[classes - 1];
    const VertexId s = order[classes - 2];

    Scalar phase_cut{0};
    for (std::size_t i = g.vertex_offsets[t]; i < g.vertex_offsets[t + 1]; ++i) {
      phase_cut += g.weights[g.incidence[i]];
    }
    if (phase_cut < best.value) {
      best.value = phase_cut;
      best.side = VertexSet::of(n, members[t]);
    }

    // Merge t into s, then move the last class into t's slot to stay dense.
    members[s].insert(members[s].end(), members[t].begin(), members[t].end());
    for (VertexId v : members[t]) label[v] = s;
    const auto last = static_cast<VertexId>(classes - 1);
    if (t != last) {
      members[t] = std::move(members[last]);
      for (VertexId v : members[t]) label[v] = t;
    }
    members[last].clear();
  }
  return best;
}

void require_limit(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw OracleLimitExceeded(std::string(what) + " refused: n = " + std::to_string(n) +
                              " exceeds limit " + std::to_string(limit));
  }
}

CutResult solve(const Hypergraph& h, MincutEngine engine) {
  return engine == MincutEngine::ordering ? mincut_exact(h) : mincut_bruteforce(h);
}

void assign_strengths(const Hypergraph& g, std::span<const EdgeId> to_root, Weight floor,
                      MincutEngine engine, std::vector<Weight>& gamma) {
  if (g.num_edges() == 0) return;
  auto comps = components(g);
  if (comps.count > 1) {
    for (VertexId c = 0; c < comps.count; ++c) {
      VertexSet part(g.num_vertices());
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (comps.label[v] == c) part.insert(v);
      }
      auto sub = induced(g, part);
      if (sub.graph.num_edges() == 0) continue;
      std::vector<EdgeId> sub_to_root;
      for (EdgeId e : sub.edge_to_original) sub_to_root.push_back(to_root[e]);
      assign_strengths(sub.graph, sub_to_root, floor, engine, gamma);
    }
    return;
  }
  auto cut = solve(g, engine);
  const Weight level = std::max(floor, cut.value);
  for (EdgeId e : cut_edges(g, cut.side)) gamma[to_root[e]] = level;
  for (const auto& side : {cut.side, cut.side.complement()}) {
    auto sub = induced(g, side);
    std::vector<EdgeId> sub_to_root;
    for (EdgeId e : sub.edge_to_original) sub_to_root.push_back(to_root[e]);
    assign_strengths(sub.graph, sub_to_root, level, engine, gamma);
  }
}

}  // namespace

CutResult mincut_exact(const Hypergraph& h) { return ordering_mincut<Weight>(h, h.weights()); }

BasicCutResult<double> mincut_exact(const Hypergraph& h, std::span<const double> weights) {
  if (weights.size() != h.num_edges()) throw std::invalid_argument("weight count mismatch");
  return ordering_mincut<double>(h, weights);
}

CutResult mincut_bruteforce(const Hypergraph& h, std::size_t limit) {
  const std::size_t n = h.num_vertices();
  if (n < 2) throw std::invalid_argument("mincut needs at least two vertices");
  require_limit(n, std::min<std::size_t>(limit, 63), "brute-force mincut");
  std::vector<std::uint64_t> edge_mask(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (VertexId v : h.edge(e)) edge_mask[e] |= std::uint64_t{1} << v;
  }
  CutResult best{std::numeric_limits<Weight>::max(), VertexSet(n)};
  std::uint64_t best_mask = 0;
  const std::uint64_t end = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    Weight value = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if ((edge_mask[e] & mask) != 0 && (edge_mask[e] & ~mask) != 0) value += h.weight(e);
    }
    if (value < best.value) {
      best.value = value;
      best_mask = mask;
    }
  }
  best.side = VertexSet::from_mask(n, best_mask);
  return best;
}

std::vector<Weight> strength_exact(const Hypergraph& h, std::size_t limit, MincutEngine engine) {
  require_limit(h.num_vertices(), limit, "exact strength");
  if (engine == MincutEngine::brute_force) require_limit(h.num_vertices(), 20, "exact strength");
  std::vector<Weight> gamma(h.num_edges(), 0);
  std::vector<EdgeId> ids(h.num_edges());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  assign_strengths(h, ids, 0, engine, gamma);
  return gamma;
}

CutResult mincut_approx(const Hypergraph& h, double epsilon, const SamplingParams& params) {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (h.num_vertices() < 2) throw std::invalid_argument("mincut needs at least two vertices");
  if (components(h).count > 1) return mincut_exact(h);

  SamplingParams scaled = params;
  scaled.epsilon = epsilon / 3;
  auto sample = sparsify(h, scaled);
  auto sparse_cut = mincut_exact(sample.structure, sample.weights);
  return {cut_weight(h, sparse_cut.side), sparse_cut.side};
}

}  // namespace hyperstrength
