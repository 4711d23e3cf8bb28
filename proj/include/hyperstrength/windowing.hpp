#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "hyperstrength/hypergraph.hpp"
#include "hyperstrength/strength.hpp"

namespace hyperstrength {

/// Returned by bottleneck(u, u): the path is empty.
inline constexpr Weight kUnboundedBottleneck = std::numeric_limits<Weight>::max();

/// Multigraph replacing each hyperedge by a star on its vertices.
struct StarGraph {
  struct Edge {
    VertexId u = 0;  // the star centre
    VertexId v = 0;
    Weight weight = 0;
    EdgeId origin = 0;         // hyperedge the star edge came from
    std::uint32_t position = 0;  // index among the origin's star edges
  };

  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<VertexId> center;  // per hyperedge
};

/// Centre = smallest vertex of each edge; an edge of cardinality c gives c - 1
/// star edges of its weight.
StarGraph star_graph(const Hypergraph& h);

/// The star graph as a rank-2 hypergraph, star edge i becoming edge i.
Hypergraph to_hypergraph(const StarGraph& a);

/// Maximum weight spanning forest with binary-lifting tables for path-minimum
/// queries. Trees are rooted at their smallest vertex.
class SpanningForest {
 public:
  SpanningForest() = default;

  std::size_t num_vertices() const { return parent_.size(); }
  /// Indices into StarGraph::edges, in the order Kruskal accepted them.
  const std::vector<std::size_t>& edges() const { return forest_edges_; }
  std::size_t num_trees() const { return num_trees_; }
  VertexId tree_of(VertexId v) const { return tree_[v]; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  Weight parent_weight(VertexId v) const { return parent_weight_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }

  /// Lightest edge on the tree path, kUnboundedBottleneck when u == v and
  /// nothing when u and v lie in different trees. O(log n).
  std::optional<Weight> bottleneck(VertexId u, VertexId v) const;

 private:
  friend SpanningForest max_spanning_forest(const StarGraph& a);

  std::vector<std::size_t> forest_edges_;
  std::size_t num_trees_ = 0;
  std::vector<VertexId> tree_;
  std::vector<VertexId> parent_;
  std::vector<Weight> parent_weight_;
  std::vector<std::uint32_t> depth_;
  // up_[j][v] is the 2^j-th ancestor; low_[j][v] the lightest edge on the way.
  std::vector<std::vector<VertexId>> up_;
  std::vector<std::vector<Weight>> low_;
};

/// Kruskal over (weight desc, origin asc, position asc).
SpanningForest max_spanning_forest(const StarGraph& a);

/// d_e = min over u in e of bottleneck(v, u), v the smallest vertex of e.
/// Satisfies d_e <= gamma(e) <= p d_e.
std::vector<Weight> rough_strengths(const Hypergraph& h);
std::vector<Weight> rough_strengths(const Hypergraph& h, const SpanningForest& forest);

struct WindowSet {
  struct Interval {
    Weight lo = 0;
    Weight hi = 0;
  };
  std::vector<Interval> intervals;          // ascending, disjoint
  std::vector<std::uint32_t> window_of;     // per edge
};

/// Maximal intervals of the union of [d_e, p d_e] (overlapping or touching
/// intervals merge). Throws std::invalid_argument if some d_e < 1.
WindowSet windows(std::span<const Weight> rough, std::size_t p);

struct WindowStats {
  std::size_t edges = 0;
  std::size_t vertices = 0;  // vertex classes touched by the window
  Weight total_weight = 0;
  std::uint32_t levels = 0;  // cascade iterations used
};

struct WindowedEstimate {
  StrengthMap strengths;
  std::vector<Weight> rough;
  WindowSet windows;
  std::vector<WindowStats> stats;  // per window
};

/// Runs the cascade once per window, heaviest first. Window i sees its own
/// edges with every heavier window contracted and every lighter one deleted,
/// starting from the window's lower end as the strength floor.
WindowedEstimate windowed_estimate_report(const Hypergraph& h);
StrengthMap windowed_estimate(const Hypergraph& h);

}  // namespace hyperstrength
