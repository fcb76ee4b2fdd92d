#include "shiftlab/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "shiftlab/error.hpp"
#include "shiftlab/families.hpp"

namespace shiftlab {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

int count_isolated(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.n(); ++v) count += g.degree(v) == 0 ? 1 : 0;
  return count;
}

// Edge from v to the previous level (trees have exactly one).
EdgeId parent_edge(const Graph& h, const LevelPartition& p, Vertex v) {
  int lv = p.level_of[at(v)];
  for (const Incidence& inc : h.incident(v)) {
    if (p.level_of[at(inc.neighbor)] == lv - 1) return inc.edge;
  }
  return -1;
}

// Gives next, next+1, ... to the edges owned by `owners`, ordered by the
// owners' partial sums (excluding the owned edge), ties by vertex id.
void label_by_partial_sums(const Graph& h, PartialLabeling& partial,
                           const std::vector<Vertex>& owners, const std::vector<EdgeId>& owned,
                           Label& next) {
  std::vector<std::pair<Label, Vertex>> keys;
  std::vector<std::size_t> order(owners.size());
  for (std::size_t j = 0; j < owners.size(); ++j) {
    keys.emplace_back(partial_vertex_sum(h, partial, owners[j], owned[j]), owners[j]);
  }
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  for (std::size_t j : order) partial[at(owned[j])] = next++;
}

void copy_component(const Component& comp, const PartialLabeling& local,
                    PartialLabeling& global) {
  for (std::size_t e = 0; e < comp.edge_map.size(); ++e) global[at(comp.edge_map[e])] = local[e];
}

TrailDecomposition to_global(const Component& comp, TrailDecomposition dec) {
  for (Vertex& v : dec.deeper) v = comp.vertex_map[at(v)];
  for (EdgeId& e : dec.sigma) e = comp.edge_map[at(e)];
  for (Trail& t : dec.trails) {
    for (Vertex& v : t.vertices) v = comp.vertex_map[at(v)];
    for (EdgeId& e : t.edges) e = comp.edge_map[at(e)];
  }
  return dec;
}

// Labels of the strongly antimagic path labeling, edge i joining i and i+1.
std::vector<Label> strong_path_labels(int n) {
  std::vector<Label> labels;
  for (int i = 1; i <= n - 1; ++i) {  // i indexes edge v_i v_{i+1}
    if (i == 1) {
      labels.push_back(1);
    } else if (n % 2 == 1) {
      labels.push_back(i == n - 1 ? 2 : i + 1);
    } else {
      labels.push_back(n + 1 - i);
    }
  }
  return labels;
}

// Families that are closed under negation: build for mirror(k) when that is
// the larger side.
template <typename Build>
std::optional<EdgeLabeling> via_mirror(int m, Label k, Build build) {
  Label other = mirror_shift(k, m);
  if (other > k) {
    auto f = build(other);
    if (!f) return std::nullopt;
    return negate_labeling(*f);
  }
  return build(k);
}

}  // namespace

EdgeLabeling construct_forest_sdds(const Graph& g) {
  if (!is_forest(g)) throw Error(ErrorCode::NotForest, "graph has a cycle");
  if (has_k2_component(g)) throw Error(ErrorCode::HasK2Component, "forest has a K2 component");
  if (count_isolated(g) > 1) {
    throw Error(ErrorCode::MultipleIsolatedVertices, "isolated vertices all sum to 0");
  }

  PartialLabeling labels(at(g.m()));
  Label next = 1;
  for (const Component& comp : components(g)) {
    const Graph& h = comp.graph;
    if (h.m() == 0) continue;
    std::vector<Vertex> all(at(h.n()));
    std::iota(all.begin(), all.end(), 0);
    LevelPartition p = level_partition(h, default_root(h, all));
    PartialLabeling local(at(h.m()));

    // Deepest level: canonical edge order.
    for (EdgeId e : layer_subgraphs(p, h, p.depth()).cross) local[at(e)] = next++;
    for (int i = p.depth() - 1; i >= 1; --i) {
      const auto& level = p.levels[at(i)];
      std::vector<EdgeId> parents;
      for (Vertex v : level) parents.push_back(parent_edge(h, p, v));
      label_by_partial_sums(h, local, level, parents, next);
    }
    copy_component(comp, local, labels);
  }
  return finish(labels, 0);
}

OddDegreeResult construct_odd_degree_traced(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) % 2 == 0) {
      throw Error(ErrorCode::EvenDegreeVertex,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (has_k2_component(g)) throw Error(ErrorCode::HasK2Component, "graph has a K2 component");

  OddDegreeResult result;
  PartialLabeling labels(at(g.m()));
  Label next = 1;
  auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Component& comp = comps[c];
    const Graph& h = comp.graph;
    std::vector<Vertex> all(at(h.n()));
    std::iota(all.begin(), all.end(), 0);
    LevelPartition p = level_partition(h, default_root(h, all));
    PartialLabeling local(at(h.m()));

    for (int i = p.depth(); i >= 1; --i) {
      LayerEdges layer = layer_subgraphs(p, h, i);
      for (EdgeId e : layer.intra) local[at(e)] = next++;

      TrailDecomposition dec = find_sigma_and_trails(h, layer.cross, p.levels[at(i)]);
      Label trail_edges = 0;
      for (const Trail& t : dec.trails) trail_edges += static_cast<Label>(t.edges.size());
      if (trail_edges > 0) label_trails(dec, next, next + trail_edges - 1, local);
      next += trail_edges;

      label_by_partial_sums(h, local, dec.deeper, dec.sigma, next);

      std::vector<EdgeId> cross_global;
      for (EdgeId e : layer.cross) cross_global.push_back(comp.edge_map[at(e)]);
      result.levels.push_back(
          LevelTrace{static_cast<int>(c), i, std::move(cross_global), to_global(comp, dec)});
    }
    copy_component(comp, local, labels);
  }
  result.labeling = finish(labels, 0);
  return result;
}

EdgeLabeling construct_odd_degree(const Graph& g) { return construct_odd_degree_traced(g).labeling; }

EdgeLabeling construct_path_strong(int n) {
  if (n < 3) throw Error(ErrorCode::PathTooShort, "strong path labeling needs n >= 3");
  return EdgeLabeling{0, strong_path_labels(n)};
}

EdgeLabeling construct_path_shifted(int n, Label k) {
  if (n < 6) throw Error(ErrorCode::PathTooShort, "every-k path labeling needs n >= 6");
  const int m = n - 1;
  if (k >= 0) return shift_labeling(construct_path_strong(n), k);
  // Negative k: handle -n/2 <= k <= -1 directly, mirror the rest.
  if (2 * (-k) > n) return negate_labeling(construct_path_shifted(n, mirror_shift(k, m)));

  std::vector<Label> labels;
  if (k == -2) {
    for (int i = 1; i <= m; ++i) {
      if (n % 2 == 1) {
        labels.push_back(i == 1 ? -1 : i == 2 ? 1 : i == 3 ? 0 : i - 2);
      } else {
        labels.push_back(i == 1 ? 0 : i == 2 ? -1 : n - i);
      }
    }
    return EdgeLabeling{k, labels};
  }

  // Split at edge v_j v_{j+1} (label 0): the j-vertex prefix takes the
  // negated strong labeling, the suffix the strong labeling.
  const int j = static_cast<int>(-k);
  if (j >= 3) {
    for (Label x : strong_path_labels(j)) labels.push_back(-x);
  }
  labels.push_back(0);
  for (Label x : strong_path_labels(n - j)) labels.push_back(x);
  return EdgeLabeling{k, labels};
}

std::optional<EdgeLabeling> construct_star(int leaves, Label k) {
  if (leaves < 2) throw Error(ErrorCode::TooFewLeaves, "star needs at least two leaves");
  const Label n = leaves;
  const Label center = n * k + n * (n + 1) / 2;
  if (k + 1 <= center && center <= k + n) return std::nullopt;
  EdgeLabeling f{k, {}};
  for (Label i = 1; i <= n; ++i) f.labels.push_back(k + i);
  return f;
}

std::optional<EdgeLabeling> construct_double_star(int a, int b, Label k) {
  if (a < 1 || b < 1) throw Error(ErrorCode::BadParameters, "double star needs a, b >= 1");
  const Graph g = families::double_star(a, b);
  const int m = g.m();

  Label n_pos = 0, n_neg = 0;
  for (Label x = k + 1; x <= k + m; ++x) {
    n_pos += x > 0 ? 1 : 0;
    n_neg += x < 0 ? 1 : 0;
  }
  if (n_pos < n_neg) {
    auto f = construct_double_star(a, b, mirror_shift(k, m));
    if (!f) return std::nullopt;
    return negate_labeling(*f);
  }

  // v is the center with more leaves, u the other.
  const Vertex v = a >= b ? 0 : 1;
  const Vertex u = 1 - v;
  const int big = std::max(a, b);
  const int small = std::min(a, b);
  std::vector<EdgeId> v_leaf, u_leaf;
  for (const Incidence& inc : g.incident(v))
    if (inc.neighbor != u) v_leaf.push_back(inc.edge);
  for (const Incidence& inc : g.incident(u))
    if (inc.neighbor != v) u_leaf.push_back(inc.edge);
  const EdgeId bridge = g.find_edge(u, v);

  PartialLabeling labels(static_cast<std::size_t>(m));
  auto put = [&](EdgeId e, Label x) { labels[at(e)] = x; };
  auto done = [&]() -> std::optional<EdgeLabeling> { return finish(labels, k); };

  // Descending labels to the bridge, then alternately v- and u-leaves while
  // both last, then the rest of the longer side.
  auto descending_interleave = [&](std::vector<Label> pool, EdgeId center_edge,
                                   const std::vector<EdgeId>& first,
                                   const std::vector<EdgeId>& second) {
    std::sort(pool.rbegin(), pool.rend());
    std::size_t next = 0;
    put(center_edge, pool[next++]);
    std::size_t i = 0, j = 0;
    while (i < first.size() || j < second.size()) {
      if (i < first.size()) put(first[i++], pool[next++]);
      if (j < second.size()) put(second[j++], pool[next++]);
    }
  };

  if (big == 2 && small == 1) {
    if (k == -2) return std::nullopt;
    // k >= -1 here: leaves of v get k+2, k+3; bridge k+4; u's leaf k+1.
    put(v_leaf[0], k + 2);
    put(v_leaf[1], k + 3);
    put(bridge, k + 4);
    put(u_leaf[0], k + 1);
    return done();
  }

  std::vector<Label> all;
  for (Label x = k + 1; x <= k + m; ++x) all.push_back(x);

  if (small >= 2) {
    if (n_neg == 0) {
      descending_interleave(all, bridge, v_leaf, u_leaf);
      return done();
    }
    if (n_pos - n_neg >= 2) {
      // Cancel +-1..+-n_neg on pairs of leaves at one center, u side first.
      std::size_t ui = 0, vi = 0;
      for (Label x = 1; x <= n_neg; ++x) {
        if (u_leaf.size() - ui >= 2) {
          put(u_leaf[ui++], x);
          put(u_leaf[ui++], -x);
        } else {
          put(v_leaf[vi++], x);
          put(v_leaf[vi++], -x);
        }
      }
      std::vector<Label> pool{0};
      for (Label x = n_neg + 1; x <= n_pos; ++x) pool.push_back(x);
      std::vector<EdgeId> v_rest(v_leaf.begin() + static_cast<long>(vi), v_leaf.end());
      std::vector<EdgeId> u_rest(u_leaf.begin() + static_cast<long>(ui), u_leaf.end());
      if (v_rest.empty() || u_rest.empty()) {
        // Remainder is a star: any order works.
        std::vector<EdgeId> rest{bridge};
        rest.insert(rest.end(), v_rest.begin(), v_rest.end());
        rest.insert(rest.end(), u_rest.begin(), u_rest.end());
        std::sort(rest.begin(), rest.end());
        std::sort(pool.begin(), pool.end());
        for (std::size_t t = 0; t < rest.size(); ++t) put(rest[t], pool[t]);
      } else if (v_rest.size() >= u_rest.size()) {
        descending_interleave(pool, bridge, v_rest, u_rest);
      } else {
        descending_interleave(pool, bridge, u_rest, v_rest);
      }
      return done();
    }
    if (n_pos - n_neg == 1) {
      // Zero on the bridge; the center with an odd leaf count keeps three
      // leaves for n_pos, n_neg, n_neg-1 and the other two for -n_neg,
      // -(n_neg-1); everything else cancels in +-pairs.
      put(bridge, 0);
      const bool v_keeps_three = v_leaf.size() % 2 == 1;
      const auto& three = v_keeps_three ? v_leaf : u_leaf;
      const auto& two = v_keeps_three ? u_leaf : v_leaf;
      std::size_t ti = 0, wi = 0;
      for (Label x = 1; x <= n_neg - 2; ++x) {
        if (three.size() - ti > 3) {
          put(three[ti++], x);
          put(three[ti++], -x);
        } else {
          put(two[wi++], x);
          put(two[wi++], -x);
        }
      }
      put(three[ti++], n_pos);
      put(three[ti++], n_neg);
      put(three[ti++], n_neg - 1);
      put(two[wi++], -n_neg);
      put(two[wi++], -(n_neg - 1));
      return done();
    }
    // n_pos == n_neg: negatives to u's leaves first, so u sums low, v high.
    put(bridge, 0);
    std::vector<Label> seq;
    for (Label x = -n_neg; x <= -1; ++x) seq.push_back(x);
    for (Label x = 1; x <= n_pos; ++x) seq.push_back(x);
    std::size_t t = 0;
    for (EdgeId e : u_leaf) put(e, seq[t++]);
    for (EdgeId e : v_leaf) put(e, seq[t++]);
    return done();
  }

  // One center has a single leaf.
  if (n_neg == 0) {
    std::sort(all.rbegin(), all.rend());
    std::size_t t = 0;
    put(bridge, all[t++]);
    put(v_leaf[0], all[t++]);
    put(u_leaf[0], all[t++]);
    for (std::size_t i = 1; i < v_leaf.size(); ++i) put(v_leaf[i], all[t++]);
    return done();
  }
  if (n_pos - n_neg >= 2) {
    put(bridge, n_pos);
    put(u_leaf[0], 0);
    std::size_t i = 0;
    for (Label x : all)
      if (x != 0 && x != n_pos) put(v_leaf[i++], x);
    return done();
  }
  if (n_pos - n_neg == 1) {
    put(bridge, -(n_neg - 1));
    put(u_leaf[0], -n_neg);
    std::size_t i = 0;
    for (Label x : all)
      if (x != -n_neg && x != -(n_neg - 1)) put(v_leaf[i++], x);
    return done();
  }
  // n_pos == n_neg forces an odd leaf count and k = -(big+3)/2.
  return std::nullopt;
}

EdgeLabeling construct_cp3(int c, Label k) {
  if (c < 1) throw Error(ErrorCode::BadParameters, "cP3 needs c >= 1");
  const Label base = c / 2;
  if (k < base) {
    throw Error(ErrorCode::KBelowThreshold,
                "k=" + std::to_string(k) + " is below floor(c/2)=" + std::to_string(base));
  }
  const Label l = base;
  std::vector<std::pair<Label, Label>> pairs;
  if (c % 2 == 1) {
    for (Label i = 0; i <= l; ++i) pairs.emplace_back(l + 2 * i + 1, 4 * l + 2 - i);
    for (Label i = 1; i <= l; ++i) pairs.emplace_back(l + 2 * i, 5 * l + 3 - i);
  } else {
    for (Label i = 0; i <= l - 1; ++i) pairs.emplace_back(l + 2 * i + 1, 4 * l - i);
    for (Label i = 1; i <= l; ++i) pairs.emplace_back(l + 2 * i, 5 * l + 1 - i);
  }
  EdgeLabeling f{base, {}};
  for (auto [low, high] : pairs) {
    f.labels.push_back(low);
    f.labels.push_back(high);
  }
  return shift_labeling(f, k - base);
}

std::optional<EdgeLabeling> construct_2p4(Label k) {
  return via_mirror(6, k, [](Label kk) -> std::optional<EdgeLabeling> {
    if (kk == -2 || kk == -5) return std::nullopt;
    if (kk == -3) return EdgeLabeling{kk, {-2, -1, 0, 2, 3, 1}};
    // kk >= -1: shift of the strongly antimagic (-1)-labeling.
    return shift_labeling(EdgeLabeling{-1, {0, 4, 1, 2, 5, 3}}, kk + 1);
  });
}

std::optional<EdgeLabeling> construct_2s3(Label k) {
  return via_mirror(6, k, [](Label kk) -> std::optional<EdgeLabeling> {
    if (kk == -2 || kk == -5) return std::nullopt;
    if (kk == -3) return EdgeLabeling{kk, {-2, -1, 0, 1, 2, 3}};
    return EdgeLabeling{kk, {kk + 1, kk + 3, kk + 6, kk + 2, kk + 4, kk + 5}};
  });
}

std::optional<EdgeLabeling> construct_p5prime(Label k) {
  // Edge order: v1v2, v2v3, v3v4, v0v3, v4v5.
  return via_mirror(5, k, [](Label kk) -> std::optional<EdgeLabeling> {
    if (kk == -3) return std::nullopt;
    if (kk == -2) return EdgeLabeling{kk, {3, 2, 1, -1, 0}};
    if (kk == -1) return EdgeLabeling{kk, {1, 3, 4, 0, 2}};
    return shift_labeling(EdgeLabeling{0, {2, 4, 5, 1, 3}}, kk);
  });
}

long long p3_threshold_for_edges(long long m) {
  for (long long c = m + 1;; ++c) {
    if ((1 + m + 2 * c) * (m + 2 * c) < (1 + m + 5 * c) * (c - m)) return c;
  }
}

long long p3_threshold(const Graph& g) { return p3_threshold_for_edges(g.m()); }

}  // namespace shiftlab
