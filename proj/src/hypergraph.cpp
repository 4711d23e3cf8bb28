#include "hyperstrength/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

#include "hyperstrength/detail/checked.hpp"
#include "hyperstrength/detail/union_find.hpp"

namespace hyperstrength {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

// VertexSet -------------------------------------------------------------------

VertexSet VertexSet::of(std::size_t n, std::initializer_list<VertexId> members) {
  return of(n, std::span<const VertexId>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t n, std::span<const VertexId> members) {
  VertexSet s(n);
  for (VertexId v : members) {
    if (v >= n) throw std::out_of_range("vertex id outside the vertex set");
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw std::invalid_argument("mask sets support at most 64 vertices");
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) s.insert(static_cast<VertexId>(v));
  }
  return s;
}

std::size_t VertexSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool VertexSet::is_nontrivial_cut() const {
  const std::size_t c = count();
  return c > 0 && c < bits_.size();
}

VertexSet VertexSet::complement() const {
  VertexSet out(*this);
  out.bits_.flip();
  return out;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

// Hypergraph ----------------------------------------------------------------

Hypergraph::Hypergraph(std::size_t n) : n_(n), vertex_offsets_(n + 1, 0) {}

Hypergraph::Hypergraph(std::size_t n, std::vector<EdgeRecord> edges) : n_(n) {
  build(std::move(edges));
}

void Hypergraph::build(std::vector<EdgeRecord> edges) {
  if (edges.size() >= kAbsorbed) throw std::length_error("too many edges");
  std::size_t pin_count = 0;
  for (const auto& e : edges) pin_count += e.vertices.size();

  edge_offsets_.assign(1, 0);
  edge_offsets_.reserve(edges.size() + 1);
  pins_.clear();
  pins_.reserve(pin_count);
  weights_.clear();
  weights_.reserve(edges.size());
  std::vector<std::size_t> degree(n_, 0);

  for (auto& e : edges) {
    if (e.vertices.size() < 2) {
      throw std::invalid_argument("edges need at least two vertices");
    }
    if (e.weight < 1) throw std::invalid_argument("edge weights must be positive");
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end()) {
      throw std::invalid_argument("duplicate vertex inside an edge");
    }
    if (e.vertices.back() >= n_) throw std::out_of_range("edge vertex id out of range");
    for (VertexId v : e.vertices) ++degree[v];
    pins_.insert(pins_.end(), e.vertices.begin(), e.vertices.end());
    edge_offsets_.push_back(pins_.size());
    weights_.push_back(e.weight);
    rank_ = std::max(rank_, e.vertices.size());
    total_weight_ = detail::checked_add(total_weight_, e.weight);
    unit_weight_ = unit_weight_ && e.weight == 1;
  }

  vertex_offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) vertex_offsets_[v + 1] = vertex_offsets_[v] + degree[v];
  incidence_.assign(pins_.size(), 0);
  std::vector<std::size_t> cursor(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
  for (EdgeId e = 0; e < weights_.size(); ++e) {
    for (VertexId v : edge(e)) incidence_[cursor[v]++] = e;
  }
}

std::vector<EdgeRecord> Hypergraph::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    auto vs = edge(e);
    out.push_back({{vs.begin(), vs.end()}, weights_[e]});
  }
  return out;
}

Hypergraph Hypergraph::with_weights(std::span<const Weight> weights) const {
  if (weights.size() != num_edges()) throw std::invalid_argument("weight count mismatch");
  auto records = edge_records();
  for (std::size_t e = 0; e < records.size(); ++e) records[e].weight = weights[e];
  return Hypergraph(n_, std::move(records));
}

// Cuts --------------------------------------------------------------------

namespace {

bool crosses(std::span<const VertexId> vs, const VertexSet& side) {
  bool in = false, out = false;
  for (VertexId v : vs) {
    (side.contains(v) ? in : out) = true;
    if (in && out) return true;
  }
  return false;
}

void require_cut(const Hypergraph& h, const VertexSet& side) {
  if (side.universe() != h.num_vertices()) {
    throw std::invalid_argument("vertex set universe does not match the hypergraph");
  }
  if (!side.is_nontrivial_cut()) throw InvalidCut("cut side must be non-empty and proper");
}

}  // namespace

std::vector<EdgeId> cut_edges(const Hypergraph& h, const VertexSet& side) {
  require_cut(h, side);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (crosses(h.edge(e), side)) out.push_back(e);
  }
  return out;
}

Weight cut_weight(const Hypergraph& h, const VertexSet& side) {
  Weight total = 0;
  for (EdgeId e : cut_edges(h, side)) total = detail::checked_add(total, h.weight(e));
  return total;
}

Weight cut_weight_mask(const Hypergraph& h, std::uint64_t mask) {
  Weight total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    bool in = false, out = false;
    for (VertexId v : h.edge(e)) {
      ((mask >> v) & 1U ? in : out) = true;
    }
    if (in && out) total = detail::checked_add(total, h.weight(e));
  }
  return total;
}

// Views ---------------------------------------------------------------------

InducedSubhypergraph induced(const Hypergraph& h, const VertexSet& keep) {
  if (keep.universe() != h.num_vertices()) {
    throw std::invalid_argument("vertex set universe does not match the hypergraph");
  }
  InducedSubhypergraph out;
  std::vector<VertexId> relabel(h.num_vertices(), kAbsorbed);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (keep.contains(v)) {
      relabel[v] = static_cast<VertexId>(out.vertex_to_original.size());
      out.vertex_to_original.push_back(v);
    }
  }
  std::vector<EdgeRecord> records;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    if (!std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return keep.contains(v); })) {
      continue;
    }
    EdgeRecord rec{{}, h.weight(e)};
    rec.vertices.reserve(vs.size());
    for (VertexId v : vs) rec.vertices.push_back(relabel[v]);
    records.push_back(std::move(rec));
    out.edge_to_original.push_back(e);
  }
  out.graph = Hypergraph(out.vertex_to_original.size(), std::move(records));
  return out;
}

EdgeSubset keep_edges(const Hypergraph& h, const std::vector<bool>& keep) {
  if (keep.size() != h.num_edges()) throw std::invalid_argument("edge flag count mismatch");
  EdgeSubset out;
  std::vector<EdgeRecord> records;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!keep[e]) continue;
    auto vs = h.edge(e);
    records.push_back({{vs.begin(), vs.end()}, h.weight(e)});
    out.edge_to_original.push_back(e);
  }
  out.graph = Hypergraph(h.num_vertices(), std::move(records));
  return out;
}

EdgeSubset delete_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<bool> keep(h.num_edges(), true);
  for (EdgeId e : removed) {
    if (e >= h.num_edges()) throw std::out_of_range("unknown edge id " + std::to_string(e));
    keep[e] = false;
  }
  return keep_edges(h, keep);
}

ContractionMap ContractionMap::then(const ContractionMap& next) const {
  ContractionMap out;
  out.vertex_image.reserve(vertex_image.size());
  for (VertexId v : vertex_image) out.vertex_image.push_back(next.vertex_image.at(v));
  out.edge_image.reserve(edge_image.size());
  for (EdgeId e : edge_image) {
    out.edge_image.push_back(e == kAbsorbed ? kAbsorbed : next.edge_image.at(e));
  }
  return out;
}

Contraction contract_vertices(const Hypergraph& h, std::span<const VertexId> label,
                              std::size_t classes) {
  if (label.size() != h.num_vertices()) throw std::invalid_argument("label count mismatch");
  Contraction out;
  out.map.vertex_image.assign(label.begin(), label.end());
  out.map.edge_image.assign(h.num_edges(), kAbsorbed);
  std::vector<EdgeRecord> records;
  std::vector<VertexId> scratch;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    scratch.clear();
    for (VertexId v : h.edge(e)) scratch.push_back(label[v]);
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    if (scratch.size() < 2) continue;
    out.map.edge_image[e] = static_cast<EdgeId>(records.size());
    records.push_back({scratch, h.weight(e)});
  }
  out.graph = Hypergraph(classes, std::move(records));
  return out;
}

Contraction contract_edges(const Hypergraph& h, std::span<const EdgeId> contracted) {
  detail::UnionFind uf(h.num_vertices());
  for (EdgeId e : contracted) {
    if (e >= h.num_edges()) throw std::out_of_range("unknown edge id " + std::to_string(e));
    auto vs = h.edge(e);
    for (std::size_t i = 1; i < vs.size(); ++i) uf.unite(vs[0], vs[i]);
  }
  // Scanning vertices in ascending order numbers each class by its smallest
  // member.
  std::vector<VertexId> root_label(h.num_vertices(), kAbsorbed);
  std::vector<VertexId> label(h.num_vertices());
  VertexId next = 0;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    VertexId r = uf.find(v);
    if (root_label[r] == kAbsorbed) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return contract_vertices(h, label, next);
}

Components components(const Hypergraph& h) {
  detail::UnionFind uf(h.num_vertices());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto vs = h.edge(e);
    for (std::size_t i = 1; i < vs.size(); ++i) uf.unite(vs[0], vs[i]);
  }
  Components out;
  out.label.assign(h.num_vertices(), 0);
  std::vector<VertexId> root_label(h.num_vertices(), kAbsorbed);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    VertexId r = uf.find(v);
    if (root_label[r] == kAbsorbed) root_label[r] = static_cast<VertexId>(out.count++);
    out.label[v] = root_label[r];
  }
  return out;
}

// Text format -----------------------------------------------------------------

namespace {

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  bool weighted = false;
  std::vector<EdgeRecord> records;
  std::size_t edges_read = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'n m weighted_flag'");
      n = parse_int<std::size_t>(tokens[0], line_no, "vertex count");
      m = parse_int<std::size_t>(tokens[1], line_no, "edge count");
      int flag = parse_int<int>(tokens[2], line_no, "weighted flag");
      if (flag != 0 && flag != 1) throw ParseError(line_no, "weighted flag must be 0 or 1");
      if (n >= kAbsorbed) throw ParseError(line_no, "vertex count too large");
      weighted = flag == 1;
      have_header = true;
      records.reserve(std::min<std::size_t>(m, 1U << 24));
    } else {
      if (edges_read == m) throw ParseError(line_no, "more edge lines than declared");
      ++edges_read;
      EdgeRecord rec;
      std::size_t first = 0;
      if (weighted) {
        rec.weight = parse_int<Weight>(tokens[0], line_no, "weight");
        if (rec.weight < 1) throw ParseError(line_no, "edge weight must be positive");
        first = 1;
      }
      if (tokens.size() <= first) throw ParseError(line_no, "edge has no vertices");
      for (std::size_t t = first; t < tokens.size(); ++t) {
        auto v = parse_int<std::uint64_t>(tokens[t], line_no, "vertex id");
        if (v < 1 || v > n) {
          throw ParseError(line_no, "vertex id " + std::string(tokens[t]) + " out of range 1.." +
                                        std::to_string(n));
        }
        rec.vertices.push_back(static_cast<VertexId>(v - 1));
      }
      std::sort(rec.vertices.begin(), rec.vertices.end());
      if (std::adjacent_find(rec.vertices.begin(), rec.vertices.end()) != rec.vertices.end()) {
        throw ParseError(line_no, "duplicate vertex in edge");
      }
      if (rec.vertices.size() >= 2) records.push_back(std::move(rec));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (edges_read != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                  std::to_string(edges_read));
  }
  return Hypergraph(n, std::move(records));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_hypergraph(text);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h, WeightFormat format) {
  bool weighted = format == WeightFormat::weighted ||
                  (format == WeightFormat::automatic && !h.is_unit_weight());
  if (!weighted && !h.is_unit_weight()) {
    throw std::invalid_argument("unweighted output requested for a weighted hypergraph");
  }
  std::string buf;
  buf += std::to_string(h.num_vertices()) + ' ' + std::to_string(h.num_edges()) + ' ' +
         (weighted ? '1' : '0') + '\n';
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (weighted) buf += std::to_string(h.weight(e)) + ' ';
    auto vs = h.edge(e);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) buf += ' ';
      buf += std::to_string(vs[i] + 1);
    }
    buf += '\n';
    if (buf.size() > (1U << 16)) {
      out << buf;
      buf.clear();
    }
  }
  out << buf;
}

std::string serialize(const Hypergraph& h, WeightFormat format) {
  std::ostringstream out;
  write_hypergraph(out, h, format);
  return out.str();
}

}  // namespace hyperstrength
