#include "shiftlab/families.hpp"

#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab::families {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph star(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph double_star(int a, int b) {
  require(a >= 1 && b >= 1, "double star needs a, b >= 1");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < a; ++i) edges.emplace_back(0, 2 + i);
  for (int j = 0; j < b; ++j) edges.emplace_back(1, 2 + a + j);
  return Graph(a + b + 2, edges);
}

Graph copies_of_p3(int c) {
  require(c >= 0, "cP3 needs c >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  return Graph(3 * c, edges);
}

Graph two_p4() { return disjoint_union(path(4), path(4)); }

Graph two_s3() { return disjoint_union(star(3), star(3)); }

Graph p5prime() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph hypercube(int dim) {
  require(dim >= 1 && dim <= 20, "hypercube dimension must be in 1..20");
  int n = 1 << dim;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit) {
      int u = v ^ (1 << bit);
      if (v < u) edges.emplace_back(v, u);
    }
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, 5 + i);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

std::optional<Family> parse_family(std::string_view name, FamilyParams* params) {
  if (name == "path") return Family::Path;
  if (name == "p5") {
    if (params) params->n = 5;
    return Family::Path;
  }
  if (name == "star") return Family::Star;
  if (name == "double_star" || name == "double-star") return Family::DoubleStar;
  if (name == "cp3") return Family::CopiesOfP3;
  if (name == "2p4" || name == "two_p4") return Family::TwoP4;
  if (name == "2s3" || name == "two_s3") return Family::TwoS3;
  if (name == "p5prime" || name == "p5'") return Family::P5Prime;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "cube" || name == "hypercube") return Family::Hypercube;
  if (name == "petersen") return Family::Petersen;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::DoubleStar: return "double_star";
    case Family::CopiesOfP3: return "cp3";
    case Family::TwoP4: return "2p4";
    case Family::TwoS3: return "2s3";
    case Family::P5Prime: return "p5prime";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Hypercube: return "cube";
    case Family::Petersen: return "petersen";
  }
  return "unknown";
}

Graph build(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::Path: return path(p.n);
    case Family::Star: return star(p.n);
    case Family::DoubleStar: return double_star(p.a, p.b);
    case Family::CopiesOfP3: return copies_of_p3(p.c);
    case Family::TwoP4: return two_p4();
    case Family::TwoS3: return two_s3();
    case Family::P5Prime: return p5prime();
    case Family::Cycle: return cycle(p.n);
    case Family::Complete: return complete(p.n);
    case Family::CompleteBipartite: return complete_bipartite(p.a, p.b);
    case Family::Hypercube: return hypercube(p.n);
    case Family::Petersen: return petersen();
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.first + a.n(), e.second + a.n());
  return Graph(a.n() + b.n(), edges);
}

}  // namespace shiftlab::families
