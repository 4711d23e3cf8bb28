#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperstrength {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr EdgeId kAbsorbed = std::numeric_limits<EdgeId>::max();

/// An edge as supplied by callers. The vertex list may be unsorted; the
/// Hypergraph constructor sorts it and rejects duplicates.
struct EdgeRecord {
  std::vector<VertexId> vertices;
  Weight weight = 1;
};

/// Raised by cut operations when the side is empty or the whole vertex set.
class InvalidCut : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parser; what() already carries "line N: ...".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Raised when an exponential or quadratic oracle is asked to run above its
/// configured size limit.
class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Membership over 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : bits_(n, false) {}
  static VertexSet of(std::size_t n, std::initializer_list<VertexId> members);
  static VertexSet of(std::size_t n, std::span<const VertexId> members);
  /// Bit i of mask selects vertex i; n must be at most 64.
  static VertexSet from_mask(std::size_t n, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  bool contains(VertexId v) const { return bits_[v]; }
  void insert(VertexId v) { bits_[v] = true; }
  void erase(VertexId v) { bits_[v] = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  /// True when the set is neither empty nor everything.
  bool is_nontrivial_cut() const;
  VertexSet complement() const;
  std::vector<VertexId> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<bool> bits_;
};

/// Immutable weighted hypergraph stored as flat pin and incidence arrays.
///
/// Edges are kept in id order with strictly increasing vertex lists. Every
/// edge has at least two vertices and weight at least one; parallel edges
/// stay distinct.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n);
  Hypergraph(std::size_t n, std::vector<EdgeRecord> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return weights_.size(); }
  /// Maximum edge cardinality (0 when edgeless).
  std::size_t rank() const { return rank_; }
  /// Sum of edge cardinalities.
  std::size_t size() const { return pins_.size(); }
  Weight total_weight() const { return total_weight_; }
  bool is_unit_weight() const { return unit_weight_; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {pins_.data() + edge_offsets_[e], pins_.data() + edge_offsets_[e + 1]};
  }
  Weight weight(EdgeId e) const { return weights_[e]; }
  std::span<const Weight> weights() const { return weights_; }
  std::span<const EdgeId> incident(VertexId v) const {
    return {incidence_.data() + vertex_offsets_[v],
            incidence_.data() + vertex_offsets_[v + 1]};
  }

  std::span<const std::size_t> edge_offsets() const { return edge_offsets_; }
  std::span<const VertexId> pins() const { return pins_; }
  std::span<const std::size_t> vertex_offsets() const { return vertex_offsets_; }
  std::span<const EdgeId> incidence() const { return incidence_; }

  std::vector<EdgeRecord> edge_records() const;
  /// Same structure, every weight replaced.
  Hypergraph with_weights(std::span<const Weight> weights) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edge_offsets_ == b.edge_offsets_ && a.pins_ == b.pins_ &&
           a.weights_ == b.weights_;
  }

 private:
  void build(std::vector<EdgeRecord> edges);

  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  Weight total_weight_ = 0;
  bool unit_weight_ = true;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> pins_;
  std::vector<Weight> weights_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> incidence_;
};

// Cuts ----------------------------------------------------------------------

/// Edges with a vertex on each side of S. Throws InvalidCut for trivial S.
std::vector<EdgeId> cut_edges(const Hypergraph& h, const VertexSet& side);
/// Total weight of cut_edges(h, side); overflow-checked.
Weight cut_weight(const Hypergraph& h, const VertexSet& side);
/// Cut weight for a bitmask side (n <= 64) without the non-triviality check.
/// Used by the enumeration oracles.
Weight cut_weight_mask(const Hypergraph& h, std::uint64_t mask);

// Views ---------------------------------------------------------------------

struct InducedSubhypergraph {
  Hypergraph graph;
  std::vector<VertexId> vertex_to_original;  // new id -> old id
  std::vector<EdgeId> edge_to_original;      // new id -> old id
};

/// H[U]: edges fully inside U, vertices relabelled densely in ascending order.
InducedSubhypergraph induced(const Hypergraph& h, const VertexSet& keep);

struct EdgeSubset {
  Hypergraph graph;
  std::vector<EdgeId> edge_to_original;
};

/// Same vertex set, edges E minus the given ids. Throws std::out_of_range for
/// an unknown id.
EdgeSubset delete_edges(const Hypergraph& h, std::span<const EdgeId> removed);

/// Keeps exactly the flagged edges (flags.size() == num_edges()).
EdgeSubset keep_edges(const Hypergraph& h, const std::vector<bool>& keep);

/// Vertex surjection and per-edge fate produced by contraction.
struct ContractionMap {
  std::vector<VertexId> vertex_image;  // old vertex -> new vertex
  std::vector<EdgeId> edge_image;      // old edge -> new edge or kAbsorbed

  /// this followed by next; next must be a map out of this map's image.
  ContractionMap then(const ContractionMap& next) const;
};

struct Contraction {
  Hypergraph graph;
  ContractionMap map;
};

/// Contracts every edge in the set simultaneously.
///
/// Vertex classes come from a union-find over all contracted edges; each new
/// vertex is numbered by the smallest original vertex in its class, so the
/// result does not depend on the order of the set. Surviving edges are mapped
/// and deduplicated; edges left with fewer than two vertices are absorbed.
/// Weights are unchanged.
Contraction contract_edges(const Hypergraph& h, std::span<const EdgeId> contracted);

/// Contracts arbitrary vertex classes given as a labelling 0..classes-1.
Contraction contract_vertices(const Hypergraph& h, std::span<const VertexId> label,
                              std::size_t classes);

struct Components {
  std::size_t count = 0;
  std::vector<VertexId> label;  // component index, numbered by smallest vertex
};

Components components(const Hypergraph& h);

// Text format -----------------------------------------------------------------
//
// Line 1: "n m weighted" with weighted in {0,1}. Then m edge lines, "w v1 .. vk"
// when weighted, otherwise "v1 .. vk". Vertices are 1-indexed. Lines starting
// with '#' and blank lines are skipped. Singleton edges are accepted and
// dropped.

Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

enum class WeightFormat { automatic, weighted, unweighted };

/// Canonical text: vertices ascending, edges in id order. The automatic
/// format writes weights only when some weight differs from 1.
std::string serialize(const Hypergraph& h, WeightFormat format = WeightFormat::automatic);
void write_hypergraph(std::ostream& out, const Hypergraph& h,
                      WeightFormat format = WeightFormat::automatic);

}  // namespace hyperstrength
