#include "hyperstrength/windowing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hyperstrength/detail/checked.hpp"
#include "hyperstrength/detail/union_find.hpp"

namespace hyperstrength {

StarGraph star_graph(const Hypergraph& h) {
  StarGraph a;
  a.num_vertices = h.num_vertices();
  a.center.reserve(h.num_edges());
  a.edges.reserve(h.size() - h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    a.center.push_back(vs[0]);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      a.edges.push_back({vs[0], vs[i], h.weight(e), e, static_cast<std::uint32_t>(i - 1)});
    }
  }
  return a;
}

Hypergraph to_hypergraph(const StarGraph& a) {
  std::vector<EdgeRecord> records;
  records.reserve(a.edges.size());
  for (const auto& s : a.edges) records.push_back({{s.u, s.v}, s.weight});
  return Hypergraph(a.num_vertices, std::move(records));
}

SpanningForest max_spanning_forest(const StarGraph& a) {
  const std::size_t n = a.num_vertices;
  std::vector<std::size_t> by_weight(a.edges.size());
  std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
  std::sort(by_weight.begin(), by_weight.end(), [&](std::size_t x, std::size_t y) {
    const auto& ex = a.edges[x];
    const auto& ey = a.edges[y];
    if (ex.weight != ey.weight) return ex.weight > ey.weight;
    if (ex.origin != ey.origin) return ex.origin < ey.origin;
    return ex.position < ey.position;
  });

  SpanningForest f;
  detail::UnionFind uf(n);
  std::vector<std::vector<std::pair<VertexId, Weight>>> adjacent(n);
  for (std::size_t i : by_weight) {
    const auto& s = a.edges[i];
    if (!uf.unite(s.u, s.v)) continue;
    f.forest_edges_.push_back(i);
    adjacent[s.u].emplace_back(s.v, s.weight);
    adjacent[s.v].emplace_back(s.u, s.weight);
  }

  f.tree_.assign(n, 0);
  f.parent_.assign(n, 0);
  f.parent_weight_.assign(n, kUnboundedBottleneck);
  f.depth_.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    const auto tree = static_cast<VertexId>(f.num_trees_++);
    seen[root] = 1;
    f.parent_[root] = root;
    f.tree_[root] = tree;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId u = queue[head];
      for (auto [v, w] : adjacent[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        f.parent_[v] = u;
        f.parent_weight_[v] = w;
        f.depth_[v] = f.depth_[u] + 1;
        f.tree_[v] = tree;
        queue.push_back(v);
      }
    }
  }

  const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n));
  f.up_.assign(levels, {});
  f.low_.assign(levels, {});
  f.up_[0] = f.parent_;
  f.low_[0] = f.parent_weight_;
  for (std::size_t j = 1; j < levels; ++j) {
    f.up_[j].resize(n);
    f.low_[j].resize(n);
    for (VertexId v = 0; v < n; ++v) {
      VertexId mid = f.up_[j - 1][v];
      f.up_[j][v] = f.up_[j - 1][mid];
      f.low_[j][v] = std::min(f.low_[j - 1][v], f.low_[j - 1][mid]);
    }
  }
  return f;
}

std::optional<Weight> SpanningForest::bottleneck(VertexId u, VertexId v) const {
  if (tree_[u] != tree_[v]) return std::nullopt;
  Weight best = kUnboundedBottleneck;
  if (depth_[u] < depth_[v]) std::swap(u, v);
  std::uint32_t lift = depth_[u] - depth_[v];
  for (std::size_t j = 0; lift != 0; ++j, lift >>= 1) {
    if (lift & 1U) {
      best = std::min(best, low_[j][u]);
      u = up_[j][u];
    }
  }
  if (u == v) return best;
  for (std::size_t j = up_.size(); j-- > 0;) {
    if (up_[j][u] != up_[j][v]) {
      best = std::min({best, low_[j][u], low_[j][v]});
      u = up_[j][u];
      v = up_[j][v];
    }
  }
  return std::min({best, low_[0][u], low_[0][v]});
}

std::vector<Weight> rough_strengths(const Hypergraph& h, const SpanningForest& forest) {
  std::vector<Weight> d(h.num_edges(), kUnboundedBottleneck);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 1; i < vs.size(); ++i) {
      // The edge's own star keeps its vertices in one tree.
      d[e] = std::min(d[e], *forest.bottleneck(vs[0], vs[i]));
    }
  }
  return d;
}

std::vector<Weight> rough_strengths(const Hypergraph& h) {
  return rough_strengths(h, max_spanning_forest(star_graph(h)));
}

WindowSet windows(std::span<const Weight> rough, std::size_t p) {
  WindowSet out;
  out.window_of.assign(rough.size(), 0);
  if (rough.empty()) return out;
  const auto scale = static_cast<Weight>(std::max<std::size_t>(p, 1));
  std::vector<EdgeId> by_lo(rough.size());
  std::iota(by_lo.begin(), by_lo.end(), EdgeId{0});
  for (Weight d : rough) {
    if (d < 1) throw std::invalid_argument("rough strengths must be positive");
  }
  std::stable_sort(by_lo.begin(), by_lo.end(),
                   [&](EdgeId x, EdgeId y) { return rough[x] < rough[y]; });
  for (EdgeId e : by_lo) {
    const Weight lo = rough[e];
    const Weight hi = detail::saturating_mul(lo, scale);
    if (out.intervals.empty() || lo > out.intervals.back().hi) {
      out.intervals.push_back({lo, hi});
    } else {
      out.intervals.back().hi = std::max(out.intervals.back().hi, hi);
    }
    out.window_of[e] = static_cast<std::uint32_t>(out.intervals.size() - 1);
  }
  return out;
}

WindowedEstimate windowed_estimate_report(const Hypergraph& h) {
  WindowedEstimate out;
  out.rough = rough_strengths(h);
  out.windows = windows(out.rough, h.size());
  const std::size_t t = out.windows.intervals.size();
  out.stats.assign(t, {});
  out.strengths.gamma.assign(h.num_edges(), 0);
  out.strengths.level.assign(h.num_edges(), 0);
  out.strengths.window.assign(h.num_edges(), std::nullopt);

  std::vector<std::vector<EdgeId>> members(t);
  for (EdgeId e = 0; e < h.num_edges(); ++e) members[out.windows.window_of[e]].push_back(e);

  detail::UnionFind uf(h.num_vertices());
  std::vector<VertexId> class_min(h.num_vertices());
  std::iota(class_min.begin(), class_min.end(), VertexId{0});
  std::vector<VertexId> local(h.num_vertices(), kAbsorbed);
  std::vector<VertexId> touched;
  std::vector<VertexId> scratch;

  for (std::size_t i = t; i-- > 0;) {
    const auto& window_edges = members[i];
    const Weight floor = out.windows.intervals[i].lo;

    // Heavier windows are already merged in uf; number the touched classes
    // by their smallest original vertex.
    touched.clear();
    for (EdgeId e : window_edges) {
      for (VertexId v : h.edge(e)) {
        VertexId r = uf.find(v);
        if (local[r] == kAbsorbed) {
          local[r] = 0;
          touched.push_back(r);
        }
      }
    }
    std::sort(touched.begin(), touched.end(),
              [&](VertexId x, VertexId y) { return class_min[x] < class_min[y]; });
    for (std::size_t j = 0; j < touched.size(); ++j) local[touched[j]] = static_cast<VertexId>(j);

    std::vector<EdgeRecord> records;
    std::vector<EdgeId> to_input;
    for (EdgeId e : window_edges) {
      scratch.clear();
      for (VertexId v : h.edge(e)) scratch.push_back(local[uf.find(v)]);
      std::sort(scratch.begin(), scratch.end());
      scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
      if (scratch.size() < 2) {
        // Only reachable if the window bounds were wrong; the floor is still
        // a valid lower bound.
        out.strengths.gamma[e] = floor;
        out.strengths.window[e] = static_cast<std::uint32_t>(i);
        continue;
      }
      records.push_back({scratch, h.weight(e)});
      to_input.push_back(e);
    }
    Hypergraph window_graph(touched.size(), std::move(records));
    auto& stats = out.stats[i];
    stats.edges = window_edges.size();
    stats.vertices = touched.size();
    stats.total_weight = window_graph.total_weight();

    auto estimate = estimate_strengths_weighted(window_graph, floor);
    for (std::size_t j = 0; j < to_input.size(); ++j) {
      const EdgeId e = to_input[j];
      out.strengths.gamma[e] = estimate.gamma[j];
      out.strengths.level[e] = estimate.level[j];
      out.strengths.window[e] = static_cast<std::uint32_t>(i);
      stats.levels = std::max(stats.levels, estimate.level[j]);
    }

    for (VertexId r : touched) local[r] = kAbsorbed;
    for (EdgeId e : window_edges) {
      auto vs = h.edge(e);
      for (std::size_t j = 1; j < vs.size(); ++j) {
        VertexId a = uf.find(vs[0]);
        VertexId b = uf.find(vs[j]);
        if (a == b) continue;
        const VertexId low = std::min(class_min[a], class_min[b]);
        uf.unite(a, b);
        class_min[uf.find(a)] = low;
      }
    }
  }
  return out;
}

StrengthMap windowed_estimate(const Hypergraph& h) {
  return windowed_estimate_report(h).strengths;
}

}  // namespace hyperstrength
