#include "shiftlab/trails.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "shiftlab/error.hpp"

namespace shiftlab {

char to_char(TrailType t) {
  switch (t) {
    case TrailType::W: return 'W';
    case TrailType::M: return 'M';
    case TrailType::N: return 'N';
  }
  return '?';
}

namespace {

// Local multigraph over the remainder edges plus an auxiliary hub vertex.
struct Remainder {
  std::vector<Vertex> vertices;                 // local -> global
  std::unordered_map<Vertex, int> local;        // global -> local
  std::vector<std::pair<int, int>> ends;        // per local edge
  std::vector<EdgeId> global_edge;              // -1 for hub edges
  std::vector<std::vector<int>> incident;       // local edge ids per local vertex

  int vertex(Vertex v) {
    auto [it, fresh] = local.emplace(v, static_cast<int>(vertices.size()));
    if (fresh) {
      vertices.push_back(v);
      incident.emplace_back();
    }
    return it->second;
  }

  void add_edge(int a, int b, EdgeId original) {
    int id = static_cast<int>(ends.size());
    ends.emplace_back(a, b);
    global_edge.push_back(original);
    incident[static_cast<std::size_t>(a)].push_back(id);
    incident[static_cast<std::size_t>(b)].push_back(id);
  }
};

Remainder build_remainder(const Graph& g, std::span<const EdgeId> edges) {
  Remainder r;
  for (EdgeId e : edges) {
    auto [u, v] = g.edge(e);
    r.add_edge(r.vertex(u), r.vertex(v), e);
  }
  return r;
}

// Every component with an edge must contain an odd-degree vertex.
bool splits_into_open_trails(const Remainder& r) {
  std::size_t n = r.vertices.size();
  std::vector<int> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || r.incident[s].empty()) continue;
    bool has_odd = false;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (r.incident[v].size() % 2 == 1) has_odd = true;
      for (int e : r.incident[v]) {
        auto [a, b] = r.ends[static_cast<std::size_t>(e)];
        auto w = static_cast<std::size_t>(static_cast<std::size_t>(a) == v ? b : a);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (!has_odd) return false;
  }
  return true;
}

// Hierholzer on the remainder plus a hub joined to every odd vertex; cutting
// the circuit at the hub leaves open trails between distinct odd vertices.
std::vector<Trail> extract_trails(Remainder r) {
  int hub = static_cast<int>(r.vertices.size());
  r.vertices.push_back(-1);
  r.incident.emplace_back();
  for (int v = 0; v < hub; ++v) {
    if (r.incident[static_cast<std::size_t>(v)].size() % 2 == 1) r.add_edge(hub, v, -1);
  }

  std::vector<char> used(r.ends.size(), 0);
  std::vector<std::size_t> cursor(r.vertices.size(), 0);
  std::vector<Trail> trails;

  auto next_edge = [&](int v) -> int {
    auto& list = r.incident[static_cast<std::size_t>(v)];
    auto& pos = cursor[static_cast<std::size_t>(v)];
    while (pos < list.size() && used[static_cast<std::size_t>(list[pos])]) ++pos;
    return pos < list.size() ? list[pos] : -1;
  };
  auto across = [&](int e, int v) {
    auto [a, b] = r.ends[static_cast<std::size_t>(e)];
    return a == v ? b : a;
  };

  // Circuits through the hub first (each odd component), then any leftover
  // edges; those lie in components already visited by construction.
  std::vector<int> start_order{hub};
  for (int v = 0; v < hub; ++v) start_order.push_back(v);

  for (int start : start_order) {
    while (next_edge(start) != -1) {
      // Iterative Hierholzer producing the circuit as (vertex, edge) steps.
      std::vector<std::pair<int, int>> stack{{start, -1}};
      std::vector<std::pair<int, int>> circuit;
      while (!stack.empty()) {
        int v = stack.back().first;
        int e = next_edge(v);
        if (e == -1) {
          circuit.push_back(stack.back());
          stack.pop_back();
        } else {
          used[static_cast<std::size_t>(e)] = 1;
          stack.emplace_back(across(e, v), e);
        }
      }
      std::reverse(circuit.begin(), circuit.end());
      // circuit[j] = (vertex reached, edge used to reach it)
      Trail current;
      auto flush = [&] {
        if (!current.edges.empty()) trails.push_back(std::move(current));
        current = Trail{};
      };
      for (auto [v, e] : circuit) {
        if (v == hub) {
          flush();
          continue;
        }
        if (e == -1 || r.global_edge[static_cast<std::size_t>(e)] == -1) {
          flush();
          current.vertices.push_back(r.vertices[static_cast<std::size_t>(v)]);
          continue;
        }
        current.edges.push_back(r.global_edge[static_cast<std::size_t>(e)]);
        current.vertices.push_back(r.vertices[static_cast<std::size_t>(v)]);
      }
      flush();
    }
  }
  return trails;
}

void classify(std::vector<Trail>& trails, const std::unordered_set<Vertex>& deeper) {
  for (Trail& t : trails) {
    bool front = deeper.contains(t.vertices.front());
    bool back = deeper.contains(t.vertices.back());
    if (front && back) {
      t.type = TrailType::M;
    } else if (!front && !back) {
      t.type = TrailType::W;
    } else {
      t.type = TrailType::N;
      if (!front) {
        std::reverse(t.vertices.begin(), t.vertices.end());
        std::reverse(t.edges.begin(), t.edges.end());
      }
    }
  }
}

}  // namespace

TrailDecomposition find_sigma_and_trails(const Graph& g, std::span<const EdgeId> cross,
                                         std::span<const Vertex> deeper) {
  // Components of the cross graph are independent: a sigma choice inside one
  // never changes the remainder of another, so each is searched on its own.
  Remainder whole = build_remainder(g, cross);
  std::vector<int> comp(whole.vertices.size(), -1);
  int comp_count = 0;
  for (std::size_t s = 0; s < whole.vertices.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = comp_count;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (int e : whole.incident[v]) {
        auto [a, b] = whole.ends[static_cast<std::size_t>(e)];
        auto w = static_cast<std::size_t>(static_cast<std::size_t>(a) == v ? b : a);
        if (comp[w] == -1) {
          comp[w] = comp_count;
          stack.push_back(w);
        }
      }
    }
    ++comp_count;
  }

  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(comp_count));
  std::vector<std::vector<EdgeId>> comp_edges(static_cast<std::size_t>(comp_count));
  std::vector<std::vector<EdgeId>> options(deeper.size());
  for (std::size_t j = 0; j < deeper.size(); ++j) {
    auto it = whole.local.find(deeper[j]);
    if (it == whole.local.end()) {
      throw Error(ErrorCode::NoValidSigma,
                  "vertex " + std::to_string(deeper[j]) + " has no edge to the previous level");
    }
    members[static_cast<std::size_t>(comp[static_cast<std::size_t>(it->second)])].push_back(j);
    for (int e : whole.incident[static_cast<std::size_t>(it->second)]) {
      options[j].push_back(whole.global_edge[static_cast<std::size_t>(e)]);
    }
    std::sort(options[j].begin(), options[j].end());
  }
  for (std::size_t e = 0; e < whole.ends.size(); ++e) {
    auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(whole.ends[e].first)]);
    comp_edges[c].push_back(whole.global_edge[e]);
  }

  std::vector<EdgeId> sigma(deeper.size(), -1);
  for (int c = 0; c < comp_count; ++c) {
    const auto& who = members[static_cast<std::size_t>(c)];
    const auto& edges = comp_edges[static_cast<std::size_t>(c)];
    std::vector<std::size_t> choice(who.size(), 0);
    // Odometer over the per-vertex choices, last vertex varying fastest.
    while (true) {
      std::unordered_set<EdgeId> taken;
      for (std::size_t t = 0; t < who.size(); ++t) {
        sigma[who[t]] = options[who[t]][choice[t]];
        taken.insert(sigma[who[t]]);
      }
      std::vector<EdgeId> rest;
      for (EdgeId e : edges)
        if (!taken.contains(e)) rest.push_back(e);
      if (splits_into_open_trails(build_remainder(g, rest))) break;
      std::size_t t = who.size();
      bool exhausted = true;
      while (t > 0) {
        --t;
        if (++choice[t] < options[who[t]].size()) {
          exhausted = false;
          break;
        }
        choice[t] = 0;
      }
      if (exhausted) {
        throw Error(ErrorCode::NoValidSigma,
                    "no sigma leaves a decomposition into open trails with disjoint ends");
      }
    }
  }

  std::unordered_set<EdgeId> taken(sigma.begin(), sigma.end());
  std::vector<EdgeId> rest;
  for (EdgeId e : cross)
    if (!taken.contains(e)) rest.push_back(e);

  TrailDecomposition dec;
  dec.deeper.assign(deeper.begin(), deeper.end());
  dec.sigma = sigma;
  dec.trails = extract_trails(build_remainder(g, rest));
  classify(dec.trails, std::unordered_set<Vertex>(deeper.begin(), deeper.end()));
  return dec;
}

std::optional<std::string> check_trail_decomposition(const Graph& g,
                                                     std::span<const EdgeId> cross,
                                                     const TrailDecomposition& dec) {
  std::set<EdgeId> cross_set(cross.begin(), cross.end());
  std::unordered_set<Vertex> deeper(dec.deeper.begin(), dec.deeper.end());
  if (dec.sigma.size() != dec.deeper.size()) return "sigma size differs from level size";

  std::set<EdgeId> sigma_set;
  for (std::size_t j = 0; j < dec.sigma.size(); ++j) {
    EdgeId e = dec.sigma[j];
    if (!cross_set.contains(e)) return "sigma edge " + std::to_string(e) + " is not a cross edge";
    auto [a, b] = g.edge(e);
    if (a != dec.deeper[j] && b != dec.deeper[j]) {
      return "sigma edge " + std::to_string(e) + " is not incident to " +
             std::to_string(dec.deeper[j]);
    }
    if (!sigma_set.insert(e).second) return "sigma is not injective";
  }

  std::multiset<EdgeId> covered;
  std::map<Vertex, int> endpoint_use;
  for (const Trail& t : dec.trails) {
    if (t.edges.empty()) return std::string("empty trail");
    if (t.vertices.size() != t.edges.size() + 1) return std::string("trail vertex/edge mismatch");
    if (t.vertices.front() == t.vertices.back()) return std::string("closed trail");
    std::set<EdgeId> own;
    for (std::size_t j = 0; j < t.edges.size(); ++j) {
      EdgeId e = t.edges[j];
      auto [a, b] = g.edge(e);
      Vertex x = t.vertices[j], y = t.vertices[j + 1];
      if (!((a == x && b == y) || (a == y && b == x))) {
        return "trail step " + std::to_string(x) + "-" + std::to_string(y) +
               " does not match edge " + std::to_string(e);
      }
      if (!own.insert(e).second) return "trail repeats edge " + std::to_string(e);
      covered.insert(e);
    }
    if (++endpoint_use[t.vertices.front()] > 1 || ++endpoint_use[t.vertices.back()] > 1) {
      return std::string("two trails share an end vertex");
    }
    bool front = deeper.contains(t.vertices.front());
    bool back = deeper.contains(t.vertices.back());
    TrailType expected = front && back     ? TrailType::M
                         : !front && !back ? TrailType::W
                                           : TrailType::N;
    if (t.type != expected) return std::string("trail type does not match its end levels");
    if (t.type == TrailType::N && !front) return std::string("N trail not stored deeper-end first");
  }
  for (EdgeId e : cross) {
    std::size_t want = sigma_set.contains(e) ? 0 : 1;
    if (covered.count(e) != want) {
      return "cross edge " + std::to_string(e) + " covered " + std::to_string(covered.count(e)) +
             " times";
    }
  }
  if (covered.size() + sigma_set.size() != cross_set.size()) {
    return std::string("trails use edges outside the cross graph");
  }
  return std::nullopt;
}

void label_trails(const TrailDecomposition& dec, Label low, Label high,
                  PartialLabeling& partial) {
  std::size_t total = 0;
  for (const Trail& t : dec.trails) total += t.edges.size();
  if (static_cast<Label>(total) != high - low + 1) {
    throw Error(ErrorCode::RangeSizeMismatch,
                std::to_string(total) + " trail edges for range " + std::to_string(low) + ".." +
                    std::to_string(high));
  }

  // Low labels come from `low` upward, high labels from `high` downward;
  // r counts the low labels used so far.
  Label next_low = low;
  Label next_high = high;
  auto put = [&](EdgeId e, Label x) { partial[static_cast<std::size_t>(e)] = x; };
  auto alternate = [&](const std::vector<EdgeId>& edges, bool high_first) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      bool take_high = (j % 2 == 0) == high_first;
      put(edges[j], take_high ? next_high-- : next_low++);
    }
  };

  std::vector<const Trail*> n_trails;
  for (const Trail& t : dec.trails) {
    if (t.type == TrailType::N) {
      n_trails.push_back(&t);
      continue;
    }
    if (t.edges.size() % 2 != 0) {
      throw Error(ErrorCode::OddWMTrail, std::string(1, to_char(t.type)) + " trail with " +
                                             std::to_string(t.edges.size()) + " edges");
    }
    alternate(t.edges, t.type == TrailType::M);
  }

  std::stable_sort(n_trails.begin(), n_trails.end(), [](const Trail* a, const Trail* b) {
    return a->edges.size() > b->edges.size();
  });
  for (std::size_t j = 0; j < n_trails.size(); j += 2) {
    // First of the pair runs from its deeper end, starting high.
    alternate(n_trails[j]->edges, true);
    if (j + 1 < n_trails.size()) {
      // Second runs from its shallower end, starting low.
      std::vector<EdgeId> reversed(n_trails[j + 1]->edges.rbegin(), n_trails[j + 1]->edges.rend());
      alternate(reversed, false);
    }
  }
}

}  // namespace shiftlab
