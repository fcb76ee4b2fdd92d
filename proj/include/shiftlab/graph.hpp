// graph.hpp - simple undirected graphs, components and BFS level partitions
//
// Vertices are dense ids 0..n-1. Edges are stored canonically as (min, max)
// pairs sorted lexicographically; an edge is referred to everywhere else by
// its position in that list (EdgeId).

#ifndef SHIFTLAB_GRAPH_HPP
#define SHIFTLAB_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

using Vertex = int;
using EdgeId = int;
using Edge = std::pair<Vertex, Vertex>;

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class Graph {
 public:
  Graph() = default;

  // Throws Error{LoopEdge | DuplicateEdge | EndpointOutOfRange}.
  Graph(int n, std::span<const Edge> raw_edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Incident edges of v in ascending EdgeId order.
  const std::vector<Incidence>& incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }
  int max_degree() const;

  // EdgeId of {u, v}, or -1 when the vertices are not adjacent.
  EdgeId find_edge(Vertex u, Vertex v) const;

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& uv = edge(e);
    return uv.first == v ? uv.second : uv.first;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(int n, std::span<const Edge> raw_edges);

// A connected component re-indexed to 0..n'-1. Local vertex i is global
// vertex vertex_map[i]; local edge j is global edge edge_map[j]. Local ids
// follow ascending global ids, so canonical edge order is preserved.
struct Component {
  Graph graph;
  std::vector<Vertex> vertex_map;
  std::vector<EdgeId> edge_map;
};

// Components ordered by their smallest vertex id.
std::vector<Component> components(const Graph& g);

bool is_forest(const Graph& g);

// True when some component is a single edge.
bool has_k2_component(const Graph& g);

// Lowest-id vertex of maximum degree among `vertices`.
Vertex default_root(const Graph& g, std::span<const Vertex> vertices);

struct LevelPartition {
  Vertex root = 0;
  // levels[i] holds the vertices at distance i from root, ascending by id.
  std::vector<std::vector<Vertex>> levels;
  // level_of[v] is the distance from root, or -1 outside root's component.
  std::vector<int> level_of;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

// BFS layers of root's component. Throws Error{RootOutOfRange}.
LevelPartition level_partition(const Graph& g, Vertex root);

// Edge sets of G[L_i] (intra) and of the bipartite G[L_i, L_{i-1}] (cross),
// each ascending by EdgeId.
struct LayerEdges {
  std::vector<EdgeId> intra;
  std::vector<EdgeId> cross;
};

// Requires 1 <= i <= depth. Throws Error{LevelOutOfRange}.
LayerEdges layer_subgraphs(const LevelPartition& p, const Graph& g, int i);

// Edge-list text format: "n m" on the first line, then m lines "u v".
// Blank lines and lines starting with '#' are ignored. Throws
// Error{ParseError} with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace shiftlab

#endif  // SHIFTLAB_GRAPH_HPP
