#include <sstream>

#include "doctest.h"
#include "shiftlab/error.hpp"
#include "shiftlab/families.hpp"
#include "shiftlab/graph.hpp"
#include "test_support.hpp"

using namespace shiftlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("graph construction canonicalises and rejects bad edges") {
  std::vector<Edge> p3{{1, 2}, {1, 0}};
  Graph g(3, p3);
  CHECK(g.m() == 2);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{1, 2});
  CHECK(g.degree(1) == 2);
  CHECK(g.find_edge(2, 1) == 1);
  CHECK(g.find_edge(0, 2) == -1);
  CHECK(g.other_end(1, 2) == 1);

  std::vector<Edge> k2{{0, 1}};
  CHECK(Graph(2, k2).m() == 1);

  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(code_of([&] { Graph(4, dup); }) == ErrorCode::DuplicateEdge);
  std::vector<Edge> loop{{2, 2}};
  CHECK(code_of([&] { Graph(4, loop); }) == ErrorCode::LoopEdge);
  std::vector<Edge> far{{0, 4}};
  CHECK(code_of([&] { Graph(4, far); }) == ErrorCode::EndpointOutOfRange);
}

TEST_CASE("incidence lists are ascending by edge id") {
  Graph g = families::petersen();
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t i = 1; i < inc.size(); ++i) CHECK(inc[i - 1].edge < inc[i].edge);
  }
}

TEST_CASE("family generators") {
  CHECK(families::path(5).m() == 4);
  CHECK(families::star(4).degree(0) == 4);
  Graph ds = families::double_star(3, 2);
  CHECK(ds.n() == 7);
  CHECK(ds.degree(0) == 4);
  CHECK(ds.degree(1) == 3);
  CHECK(ds.edge(0) == Edge{0, 1});
  CHECK(families::copies_of_p3(4).m() == 8);
  Graph pet = families::petersen();
  CHECK(pet.m() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
  Graph q3 = families::hypercube(3);
  CHECK(q3.m() == 12);
  CHECK(q3.max_degree() == 3);
  CHECK(families::complete_bipartite(3, 3).m() == 9);
  CHECK(families::complete(4).m() == 6);
  CHECK(families::p5prime().degree(2) == 3);
  CHECK(families::two_s3().degree(4) == 3);

  families::FamilyParams p;
  auto fam = families::parse_family("p5", &p);
  REQUIRE(fam);
  CHECK(*fam == families::Family::Path);
  CHECK(p.n == 5);
  CHECK_FALSE(families::parse_family("nonsense"));
  CHECK(code_of([] { families::path(0); }) == ErrorCode::BadParameters);
}

TEST_CASE("components") {
  auto two = components(families::two_p4());
  REQUIRE(two.size() == 2);
  CHECK(two[0].graph.n() == 4);
  CHECK(two[1].graph.n() == 4);
  CHECK(two[1].vertex_map == std::vector<Vertex>{4, 5, 6, 7});
  CHECK(two[1].edge_map == std::vector<EdgeId>{3, 4, 5});

  CHECK(components(families::complete(4)).size() == 1);
  auto singles = components(Graph(3, {}));
  REQUIRE(singles.size() == 3);
  for (const auto& c : singles) CHECK(c.graph.n() == 1);
}

TEST_CASE("component maps preserve edges") {
  testsupport::Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    Graph g = testsupport::random_graph(rng, 9, testsupport::uniform(rng, 0, 12));
    int total = 0;
    for (const auto& c : components(g)) {
      total += c.graph.m();
      for (EdgeId e = 0; e < c.graph.m(); ++e) {
        auto [u, v] = c.graph.edge(e);
        CHECK(g.edge(c.edge_map[e]) ==
              Edge{c.vertex_map[static_cast<std::size_t>(u)], c.vertex_map[static_cast<std::size_t>(v)]});
      }
    }
    CHECK(total == g.m());
  }
}

TEST_CASE("forest and K2 predicates") {
  CHECK(is_forest(families::two_p4()));
  CHECK_FALSE(is_forest(families::cycle(4)));
  CHECK(has_k2_component(families::path(2)));
  CHECK_FALSE(has_k2_component(families::path(3)));
  std::vector<Edge> e{{0, 1}, {2, 3}, {3, 4}};
  CHECK(has_k2_component(Graph(5, e)));
}

TEST_CASE("level partitions") {
  auto p5 = level_partition(families::path(5), 2);
  CHECK(p5.levels == std::vector<std::vector<Vertex>>{{2}, {1, 3}, {0, 4}});
  CHECK(p5.depth() == 2);

  auto k4 = level_partition(families::complete(4), 0);
  CHECK(k4.levels == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});

  auto s3 = level_partition(families::star(3), 0);
  CHECK(s3.levels[1] == std::vector<Vertex>{1, 2, 3});

  auto split = level_partition(families::two_p4(), 0);
  CHECK(split.level_of[5] == -1);

  CHECK(code_of([] { level_partition(families::path(3), 3); }) == ErrorCode::RootOutOfRange);
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(default_root(families::p5prime(), all) == 2);
}

TEST_CASE("layer subgraphs") {
  Graph c4 = families::cycle(4);
  auto p = level_partition(c4, 0);
  auto l2 = layer_subgraphs(p, c4, 2);
  CHECK(l2.intra.empty());
  CHECK(l2.cross.size() == 2);

  Graph k4 = families::complete(4);
  auto l1 = layer_subgraphs(level_partition(k4, 0), k4, 1);
  CHECK(l1.intra.size() == 3);
  CHECK(l1.cross.size() == 3);

  CHECK(code_of([&] { layer_subgraphs(p, c4, 0); }) == ErrorCode::LevelOutOfRange);
  CHECK(code_of([&] { layer_subgraphs(p, c4, 3); }) == ErrorCode::LevelOutOfRange);

  testsupport::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Graph tree = testsupport::random_tree(rng, testsupport::uniform(rng, 2, 15));
    auto tp = level_partition(tree, 0);
    std::size_t counted = 0;
    for (int i = 1; i <= tp.depth(); ++i) {
      auto layer = layer_subgraphs(tp, tree, i);
      CHECK(layer.intra.empty());
      CHECK(layer.cross.size() == tp.levels[static_cast<std::size_t>(i)].size());
      counted += layer.cross.size();
    }
    CHECK(counted == static_cast<std::size_t>(tree.m()));
  }
}

TEST_CASE("edge list parsing") {
  std::istringstream ok("# a path\n3 2\n0 1\n\n1 2\n");
  Graph g = parse_edge_list(ok);
  CHECK(g == families::path(3));

  std::ostringstream out;
  write_edge_list(out, families::petersen());
  std::istringstream back(out.str());
  CHECK(parse_edge_list(back) == families::petersen());

  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_edge_list(in);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("3 2\n0 1\n1 x\n").find("line 3") != std::string::npos);
  CHECK(message("3 2\n0 1\n").find("expected 2 edges") != std::string::npos);
  CHECK(message("3 1\n0 5\n").find("out of range") != std::string::npos);
  CHECK(message("").find("missing header") != std::string::npos);
  CHECK(message("3 2\n0 1\n1 0\n").find("DuplicateEdge") != std::string::npos);
  CHECK(message("3 1\n0 1\n1 2\n").find("trailing") != std::string::npos);
}
