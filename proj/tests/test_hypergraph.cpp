#include <doctest.h>

#include <random>
#include <sstream>

#include "hyperstrength/hypergraph.hpp"
#include "hyperstrength/mincut.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace hyperstrength;
using namespace hyperstrength::testing;

namespace {

std::vector<std::vector<VertexId>> edge_lists(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) out.emplace_back(h.edge(e).begin(), h.edge(e).end());
  return out;
}

using Lists = std::vector<std::vector<VertexId>>;

}  // namespace

TEST_CASE("construction normalises vertex order and derives sizes") {
  Hypergraph h(5, {{{3, 1}, 2}, {{4, 0, 2}, 1}});
  CHECK(h.num_vertices() == 5);
  CHECK(h.num_edges() == 2);
  CHECK(h.rank() == 3);
  CHECK(h.size() == 5);
  CHECK(h.total_weight() == 3);
  CHECK_FALSE(h.is_unit_weight());
  CHECK(edge_lists(h) == Lists{{1, 3}, {0, 2, 4}});
  CHECK(h.incident(2).size() == 1);
  CHECK(h.incident(0)[0] == 1);
}

TEST_CASE("construction rejects malformed edges") {
  CHECK_THROWS_AS(Hypergraph(3, {{{0, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{{0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{{0, 1}, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, {{{0, 3}, 1}}), std::out_of_range);
}

TEST_CASE("cut_edges on fixtures") {
  auto bow = bowtie();
  CHECK(cut_edges(bow, VertexSet::of(6, {0, 1, 2})) == std::vector<EdgeId>{kBowtieBridge});

  Hypergraph single(3, {{{0, 1, 2}, 1}});
  CHECK(cut_edges(single, VertexSet::of(3, {0})) == std::vector<EdgeId>{0});

  auto k = k4();
  CHECK(cut_edges(k, VertexSet::of(4, {0, 1})).size() == 4);
  CHECK(cut_weight(k, VertexSet::of(4, {0, 1})) == 4);
}

TEST_CASE("cut_weight on fixtures") {
  CHECK(cut_weight(k4(), VertexSet::of(4, {0})) == 3);
  CHECK(cut_weight(bowtie(), VertexSet::of(6, {0, 1, 2})) == 1);
  CHECK(cut_weight(k4(5), VertexSet::of(4, {0, 1})) == 20);
}

TEST_CASE("trivial cuts are rejected") {
  auto k = k4();
  CHECK_THROWS_AS(cut_edges(k, VertexSet(4)), InvalidCut);
  CHECK_THROWS_AS(cut_weight(k, VertexSet(4).complement()), InvalidCut);
}

TEST_CASE("cut weight equals the weight of the cut edges") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = random_hypergraph(rng, {.max_n = 9, .max_m = 14, .max_rank = 5, .max_weight = 9});
    for_each_cut(h.num_vertices(), [&](std::uint64_t mask) {
      auto side = VertexSet::from_mask(h.num_vertices(), mask);
      Weight sum = 0;
      for (EdgeId e : cut_edges(h, side)) sum += h.weight(e);
      REQUIRE(sum == cut_weight(h, side));
      REQUIRE(sum == cut_weight_mask(h, mask));
    });
  }
}

TEST_CASE("induced subhypergraph") {
  auto s = induced(star(4), VertexSet::of(4, {0, 1, 2}));
  CHECK(edge_lists(s.graph) == Lists{{0, 1}, {0, 1, 2}});
  CHECK(s.edge_to_original == std::vector<EdgeId>{0, 1});

  auto k = k4(3);
  CHECK(induced(k, VertexSet(4).complement()).graph == k);

  auto tri = induced(bowtie(), VertexSet::of(6, {0, 1, 2}));
  CHECK(tri.graph.num_vertices() == 3);
  CHECK(edge_lists(tri.graph) == Lists{{0, 1}, {0, 2}, {1, 2}});

  auto hi = induced(bowtie(), VertexSet::of(6, {3, 4, 5}));
  CHECK(hi.vertex_to_original == std::vector<VertexId>{3, 4, 5});
  CHECK(hi.edge_to_original == std::vector<EdgeId>{3, 4, 5});

  CHECK(induced(k, VertexSet(4)).graph.num_vertices() == 0);
}

TEST_CASE("delete_edges keeps vertices and maps ids") {
  auto bow = bowtie();
  std::vector<EdgeId> bridge{kBowtieBridge};
  auto cut = delete_edges(bow, bridge);
  CHECK(cut.graph.num_vertices() == 6);
  CHECK(cut.graph.num_edges() == 6);
  CHECK(cut.edge_to_original == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});

  std::vector<EdgeId> firsts{0, 3};
  auto d = delete_edges(k4(), firsts);
  CHECK(d.edge_to_original == std::vector<EdgeId>{1, 2, 4, 5});

  CHECK(delete_edges(star(4), {}).graph == star(4));

  std::vector<EdgeId> unknown{9};
  CHECK_THROWS_AS(delete_edges(bow, unknown), std::out_of_range);
}

TEST_CASE("contract_edges on fixtures") {
  std::vector<EdgeId> bridge{kBowtieBridge};
  auto c = contract_edges(bowtie(), bridge);
  CHECK(c.graph.num_vertices() == 5);
  CHECK(c.graph.num_edges() == 6);
  CHECK(c.map.edge_image[kBowtieBridge] == kAbsorbed);
  CHECK(c.map.vertex_image[2] == c.map.vertex_image[3]);

  Hypergraph single(3, {{{0, 1, 2}, 1}});
  std::vector<EdgeId> only{0};
  auto s = contract_edges(single, only);
  CHECK(s.graph.num_vertices() == 1);
  CHECK(s.graph.num_edges() == 0);

  auto st = contract_edges(star(4), only);
  CHECK(st.graph.num_vertices() == 3);
  CHECK(edge_lists(st.graph) == Lists{{0, 1}, {0, 2}});
  CHECK(st.map.edge_image == std::vector<EdgeId>{kAbsorbed, 0, 1});
}

TEST_CASE("contraction does not depend on the order of the set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, {.max_n = 10, .max_m = 12, .max_rank = 4, .max_weight = 5});
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (rng() % 3 == 0) f.push_back(e);
    }
    auto reversed = f;
    std::reverse(reversed.begin(), reversed.end());
    auto a = contract_edges(h, f);
    auto b = contract_edges(h, reversed);
    REQUIRE(a.graph == b.graph);
    REQUIRE(a.map.edge_image == b.map.edge_image);

    // Matches one-at-a-time contraction composed through the maps.
    Contraction step{h, {}};
    step.map.vertex_image.resize(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v) step.map.vertex_image[v] = v;
    step.map.edge_image.resize(h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) step.map.edge_image[e] = e;
    for (EdgeId e : reversed) {
      const EdgeId cur = step.map.edge_image[e];
      if (cur == kAbsorbed) continue;
      std::vector<EdgeId> one{cur};
      auto next = contract_edges(step.graph, one);
      step = {next.graph, step.map.then(next.map)};
    }
    REQUIRE(step.graph.num_vertices() == a.graph.num_vertices());
    REQUIRE(step.map.edge_image == a.map.edge_image);
    // Same partition of the original vertices.
    for (VertexId u = 0; u < h.num_vertices(); ++u) {
      for (VertexId v = 0; v < h.num_vertices(); ++v) {
        REQUIRE((a.map.vertex_image[u] == a.map.vertex_image[v]) ==
                (step.map.vertex_image[u] == step.map.vertex_image[v]));
      }
    }
  }
}

TEST_CASE("components") {
  CHECK(components(bowtie()).count == 1);
  std::vector<EdgeId> bridge{kBowtieBridge};
  auto split = components(delete_edges(bowtie(), bridge).graph);
  CHECK(split.count == 2);
  CHECK(split.label == std::vector<VertexId>{0, 0, 0, 1, 1, 1});
  CHECK(components(Hypergraph(5)).count == 5);
}

TEST_CASE("contraction never increases the component count") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, {.max_n = 12, .max_m = 8, .max_rank = 3});
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (rng() % 2 == 0) f.push_back(e);
    }
    REQUIRE(components(contract_edges(h, f).graph).count <= components(h).count);
  }
}

TEST_CASE("parse the star fixture and isolated vertices") {
  CHECK(parse_hypergraph("4 3 1\n1 1 2\n1 1 2 3\n1 1 2 4\n") == star(4));
  CHECK(parse_hypergraph("4 3 0\n# star\n\n1 2\n1 2 3\n2 1 4\n") == star(4));
  auto iso = parse_hypergraph("3 0 0\n");
  CHECK(iso.num_vertices() == 3);
  CHECK(iso.num_edges() == 0);
}

TEST_CASE("parse drops singleton edges") {
  auto h = parse_hypergraph("3 2 0\n2\n1 3\n");
  CHECK(h.num_edges() == 1);
  CHECK(edge_lists(h) == Lists{{0, 2}});
}

TEST_CASE("parse errors carry the line number") {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("4 3\n") == 1);
  CHECK(line_of("x 1 0\n1 2\n") == 1);
  CHECK(line_of("3 1 2\n1 2\n") == 1);
  CHECK(line_of("3 2 0\n1 2\n1 4\n") == 3);
  CHECK(line_of("3 1 1\n0 1 2\n") == 2);
  CHECK(line_of("3 1 1\n-2 1 2\n") == 2);
  CHECK(line_of("# c\n3 1 0\n\n2 2\n") == 4);
  CHECK(line_of("3 1 0\n0 1\n") == 2);
  CHECK(line_of("3 1 0\n1 2\n2 3\n") == 3);
  CHECK(line_of("3 2 0\n1 2\n") > 0);
  CHECK(line_of("") > 0);
  try {
    parse_hypergraph("3 1 0\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2:", 0) == 0);
  }
}

TEST_CASE("serialize writes canonical text") {
  CHECK(serialize(star(4)) == "4 3 0\n1 2\n1 2 3\n1 2 4\n");
  CHECK(serialize(star(4), WeightFormat::weighted) == "4 3 1\n1 1 2\n1 1 2 3\n1 1 2 4\n");
  Hypergraph w(3, {{{2, 0}, 7}});
  CHECK(serialize(w) == "3 1 1\n7 1 3\n");
  CHECK_THROWS_AS(serialize(w, WeightFormat::unweighted), std::invalid_argument);
}

TEST_CASE("serialize after parse is the normal form, 100 fuzzed files") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, {.min_n = 1, .max_n = 12, .max_m = 10, .max_rank = 5,
                                     .max_weight = trial % 2 ? 50 : 1});
    const bool weighted = !h.is_unit_weight() || rng() % 2 == 0;
    // Messy rendering: comments, blank lines, shuffled vertices, singletons.
    std::vector<std::string> lines;
    std::size_t declared = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (rng() % 4 == 0) {
        std::string single = weighted ? "3 " : "";
        lines.push_back(single + std::to_string(1 + rng() % h.num_vertices()));
        ++declared;
      }
      std::vector<VertexId> vs(h.edge(e).begin(), h.edge(e).end());
      std::shuffle(vs.begin(), vs.end(), rng);
      std::string line = weighted ? std::to_string(h.weight(e)) : "";
      for (VertexId v : vs) line += (line.empty() ? "" : "  ") + std::to_string(v + 1);
      lines.push_back(line);
      ++declared;
      if (rng() % 5 == 0) lines.push_back(rng() % 2 ? "" : "# note");
    }
    std::string text = "# generated\n" + std::to_string(h.num_vertices()) + " " +
                       std::to_string(declared) + (weighted ? " 1\n" : " 0\n");
    for (const auto& l : lines) text += l + "\n";

    auto parsed = parse_hypergraph(text);
    REQUIRE(parsed == h);
    REQUIRE(serialize(parsed) == serialize(h));
    REQUIRE(parse_hypergraph(serialize(parsed)) == parsed);
  }
}

TEST_CASE("read and write through streams") {
  std::stringstream ss;
  write_hypergraph(ss, bowtie(4, 2));
  CHECK(read_hypergraph(ss) == bowtie(4, 2));
}

TEST_CASE("deleting edges never raises and contracting never lowers strength") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto h = random_hypergraph(rng, {.min_n = 3, .max_n = 8, .max_m = 12, .max_rank = 4,
                                     .max_weight = 4});
    auto gamma = strength_exact(h);
    std::vector<EdgeId> f;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (rng() % 4 == 0) f.push_back(e);
    }
    auto del = delete_edges(h, f);
    auto gd = strength_exact(del.graph);
    for (EdgeId e = 0; e < del.graph.num_edges(); ++e) {
      REQUIRE(gd[e] <= gamma[del.edge_to_original[e]]);
    }
    auto con = contract_edges(h, f);
    auto gc = strength_exact(con.graph);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const EdgeId image = con.map.edge_image[e];
      if (image != kAbsorbed) REQUIRE(gc[image] >= gamma[e]);
    }
  }
}

TEST_CASE("vertex sets") {
  auto s = VertexSet::of(5, {1, 3});
  CHECK(s.count() == 2);
  CHECK(s.is_nontrivial_cut());
  CHECK(s.complement().members() == std::vector<VertexId>{0, 2, 4});
  CHECK(VertexSet::from_mask(5, 0b1010) == s);
  CHECK_FALSE(VertexSet(3).is_nontrivial_cut());
}
