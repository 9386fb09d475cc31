#include <catch2/catch_amalgamated.hpp>

#include "hatcrystal/graphs.hpp"
#include "hatcrystal/hatlayer.hpp"

using namespace hatcrystal;

TEST_CASE("bfs truncations have the expected layers") {
  BinfModel free3(IndexSet(3));
  auto gen = bfs_generate(free3, 3, "free3");
  CHECK(gen.graph.layer_counts() == std::vector<size_t>{1, 3, 9, 21});
  CHECK(gen.graph.source == "free3");

  HwModel level1(IndexSet(3), {0});
  auto hw = bfs_generate(level1, 6, "level1");
  CHECK(hw.graph.layer_counts() == std::vector<size_t>{1, 1, 2, 2, 4, 5, 7});

  auto hat = bfs_generate(hat_hw_model(3), 4, "hat");
  CHECK(hat.graph.layer_counts() == std::vector<size_t>{1, 1, 2, 2, 4});
}

TEST_CASE("axiom sweep accepts generated truncations") {
  BinfModel free3(IndexSet(3));
  auto gen = bfs_generate(free3, 3);
  CHECK(axiom_violations(free3.idx, gen.graph).empty());
  CHECK(inversion_violations(free3, gen).empty());

  HwModel level1(IndexSet(3), {0});
  auto hw = bfs_generate(level1, 5);
  CHECK(axiom_violations(level1.idx, hw.graph).empty());
  CHECK(inversion_violations(level1, hw).empty());

  auto hat = hat_binf_model(3);
  auto hg = bfs_generate(hat, 3);
  CHECK(axiom_violations(IndexSet(3), hg.graph).empty());
  CHECK(inversion_violations(hat, hg).empty());
}

TEST_CASE("axiom sweep pinpoints a corrupted edge") {
  HwModel level1(IndexSet(3), {0});
  auto hw = bfs_generate(level1, 3);
  CrystalGraph g = hw.graph;
  auto edge = *g.edges.begin();
  g.edges.erase(g.edges.begin());
  std::get<1>(edge) = (std::get<1>(edge) + 1) % 3;
  g.edges.insert(edge);
  auto bad = axiom_violations(level1.idx, g);
  CHECK(!bad.empty());
}

TEST_CASE("forced map matches folded and plain truncations") {
  auto hat_free = bfs_generate(hat_binf_model(3), 3, "hat-free");
  auto plain_free = bfs_generate(BinfModel(IndexSet(3)), 3, "plain-free");
  auto iso = check_isomorphism(hat_free.graph, plain_free.graph);
  CHECK(iso.ok);
  CHECK(iso.detail.empty());
  CHECK(iso.vmap.size() == hat_free.graph.vertices.size());

  auto hat_hw = bfs_generate(hat_hw_model(3), 5, "hat-hw");
  auto plain_hw = bfs_generate(HwModel(IndexSet(3), {0}), 5, "plain-hw");
  auto iso2 = check_isomorphism(hat_hw.graph, plain_hw.graph);
  CHECK(iso2.ok);
}

TEST_CASE("forced map reports counterexamples") {
  auto g1 = bfs_generate(HwModel(IndexSet(3), {0}), 4).graph;
  auto g2 = g1;

  // Dropping a leaf breaks the size comparison.
  std::string leaf;
  for (const auto& [k, v] : g2.vertices)
    if (v.depth == 4) leaf = k;
  g2.vertices.erase(leaf);
  for (auto it = g2.edges.begin(); it != g2.edges.end();)
    it = (std::get<2>(*it) == leaf) ? g2.edges.erase(it) : std::next(it);
  auto iso = check_isomorphism(g1, g2);
  CHECK(!iso.ok);
  CHECK(iso.detail.find("counts differ") != std::string::npos);

  // Relabeling colors by the diagram flip fixing the anchor is a symmetry of
  // the truncation, while moving the anchor color is not.
  CHECK(check_isomorphism(g1, g1, {0, 2, 1}).ok);
  auto moved = check_isomorphism(g1, g1, {1, 0, 2});
  CHECK(!moved.ok);
  CHECK(!moved.detail.empty());
  CHECK(check_isomorphism(g1, g1).ok);
}

TEST_CASE("graph json round trips byte for byte") {
  auto gen = bfs_generate(hat_hw_model(3), 3, "roundtrip");
  std::string text = to_json(gen.graph);
  CrystalGraph parsed = graph_from_json(text);
  CHECK(parsed == gen.graph);
  CHECK(to_json(parsed) == text);
  CHECK(text.find("\"schema\": 1") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json("{\"schema\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("not json"), nlohmann::json::exception);
}

TEST_CASE("dot export lists vertices and labeled edges") {
  auto gen = bfs_generate(HwModel(IndexSet(6), {0, 3}), 1, "dot");
  std::string dot = to_dot(gen.graph);
  CHECK(dot.find("digraph crystal") != std::string::npos);
  CHECK(dot.find("\";\" -> \";1\" [label=\"3\"]") != std::string::npos);
}

TEST_CASE("file helpers report the failing path") {
  std::string path = "/tmp/hatcrystal_graph_test.json";
  write_file(path, "hello");
  CHECK(read_file(path) == "hello");
  CHECK_THROWS_AS(read_file("/tmp/definitely/missing/file.json"), std::runtime_error);
  CHECK_THROWS_AS(write_file("/tmp/definitely/missing/file.json", "x"), std::runtime_error);
}

TEST_CASE("generation is deterministic") {
  auto a = to_json(bfs_generate(hat_binf_model(3), 3, "s").graph);
  auto b = to_json(bfs_generate(hat_binf_model(3), 3, "s").graph);
  CHECK(a == b);
}
