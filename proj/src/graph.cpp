#include "shiftlab/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> raw_edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::EndpointOutOfRange, "negative vertex count");
  edges_.reserve(raw_edges.size());
  for (const Edge& raw : raw_edges) {
    auto [u, v] = raw;
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge " + edge_text(raw) + " with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "edge " + edge_text(raw));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(*dup));

  adjacency_.resize(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < m(); ++e) {
    auto [u, v] = edges_[static_cast<std::size_t>(e)];
    adjacency_[static_cast<std::size_t>(u)].push_back({v, e});
    adjacency_[static_cast<std::size_t>(v)].push_back({u, e});
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

EdgeId Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph build_graph(int n, std::span<const Edge> raw_edges) { return Graph(n, raw_edges); }

std::vector<Component> components(const Graph& g) {
  std::vector<int> comp_of(static_cast<std::size_t>(g.n()), -1);
  int count = 0;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp_of[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> stack{s};
    comp_of[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        auto& c = comp_of[static_cast<std::size_t>(inc.neighbor)];
        if (c == -1) {
          c = count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }

  std::vector<Component> result(static_cast<std::size_t>(count));
  std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    auto& c = result[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])];
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(c.vertex_map.size());
    c.vertex_map.push_back(v);
  }
  std::vector<std::vector<Edge>> local_edges(static_cast<std::size_t>(count));
  for (EdgeId e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    auto c = static_cast<std::size_t>(comp_of[static_cast<std::size_t>(u)]);
    result[c].edge_map.push_back(e);
    local_edges[c].emplace_back(local[static_cast<std::size_t>(u)],
                                local[static_cast<std::size_t>(v)]);
  }
  for (std::size_t c = 0; c < result.size(); ++c) {
    result[c].graph = Graph(static_cast<int>(result[c].vertex_map.size()), local_edges[c]);
  }
  return result;
}

bool is_forest(const Graph& g) {
  // A graph is a forest iff m = n - (number of components).
  return g.m() == g.n() - static_cast<int>(components(g).size());
}

bool has_k2_component(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.first) == 1 && g.degree(e.second) == 1) return true;
  }
  return false;
}

Vertex default_root(const Graph& g, std::span<const Vertex> vertices) {
  Vertex best = vertices.front();
  for (Vertex v : vertices) {
    if (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best)) best = v;
  }
  return best;
}

LevelPartition level_partition(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.n()) {
    throw Error(ErrorCode::RootOutOfRange,
                "root " + std::to_string(root) + " with n=" + std::to_string(g.n()));
  }
  LevelPartition p;
  p.root = root;
  p.level_of.assign(static_cast<std::size_t>(g.n()), -1);
  p.level_of[static_cast<std::size_t>(root)] = 0;
  std::queue<Vertex> queue;
  queue.push(root);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    int lv = p.level_of[static_cast<std::size_t>(v)];
    if (static_cast<int>(p.levels.size()) <= lv) p.levels.emplace_back();
    p.levels[static_cast<std::size_t>(lv)].push_back(v);
    for (const Incidence& inc : g.incident(v)) {
      auto& l = p.level_of[static_cast<std::size_t>(inc.neighbor)];
      if (l == -1) {
        l = lv + 1;
        queue.push(inc.neighbor);
      }
    }
  }
  for (auto& level : p.levels) std::sort(level.begin(), level.end());
  return p;
}

LayerEdges layer_subgraphs(const LevelPartition& p, const Graph& g, int i) {
  if (i < 1 || i > p.depth()) {
    throw Error(ErrorCode::LevelOutOfRange,
                "level " + std::to_string(i) + " with depth " + std::to_string(p.depth()));
  }
  LayerEdges out;
  for (EdgeId e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    int lu = p.level_of[static_cast<std::size_t>(u)];
    int lv = p.level_of[static_cast<std::size_t>(v)];
    if (lu == i && lv == i) {
      out.intra.push_back(e);
    } else if ((lu == i && lv == i - 1) || (lu == i - 1 && lv == i)) {
      out.cross.push_back(e);
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) throw fail("missing header \"n m\"");
  long long n = 0, m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) throw fail("expected header \"n m\"");
    if (n < 0 || m < 0) throw fail("negative count in header");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line()) {
      ++line_no;
      throw fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw fail("expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line()) throw fail("unexpected trailing content");
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

}  // namespace shiftlab
