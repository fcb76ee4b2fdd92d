#include "shiftlab/labeling.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

Verdict reject(RejectKind kind, std::string reason, int first, int second) {
  return Verdict{false, kind, std::move(reason), first, second};
}

// Lexicographically smallest pair (u, v), u < v, with key(u) == key(v).
template <typename Key>
std::optional<std::pair<Vertex, Vertex>> first_collision(int n, Key key) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return key(a) < key(b); });
  std::optional<std::pair<Vertex, Vertex>> best;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    // order is stable, so within a run of equal keys ids ascend.
    if (key(order[i]) == key(order[i + 1]) && (i == 0 || key(order[i - 1]) != key(order[i]))) {
      std::pair<Vertex, Vertex> candidate{order[i], order[i + 1]};
      if (!best || candidate < *best) best = candidate;
    }
  }
  return best;
}

void require_one_to_m(const Graph& g, const EdgeLabeling& f) {
  if (static_cast<int>(f.labels.size()) != g.m()) {
    throw Error(ErrorCode::LabelsNotOneToM, "labeling has " + std::to_string(f.labels.size()) +
                                                " labels for " + std::to_string(g.m()) + " edges");
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.m()) + 1, false);
  for (Label x : f.labels) {
    if (x < 1 || x > g.m() || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::LabelsNotOneToM, "label " + std::to_string(x) +
                                                  " breaks the permutation of 1.." +
                                                  std::to_string(g.m()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::string pair_text(int a, int b) { return std::to_string(a) + " and " + std::to_string(b); }

}  // namespace

std::string to_string(RejectKind kind) {
  switch (kind) {
    case RejectKind::None: return "none";
    case RejectKind::WrongLabelCount: return "wrong_label_count";
    case RejectKind::DuplicateLabel: return "duplicate_label";
    case RejectKind::LabelOutOfSet: return "label_out_of_set";
    case RejectKind::SumCollision: return "sum_collision";
    case RejectKind::DegreeOrderViolation: return "degree_order_violation";
  }
  return "unknown";
}

VertexSums vertex_sums(const Graph& g, const EdgeLabeling& f) {
  if (static_cast<int>(f.labels.size()) != g.m()) {
    throw Error(ErrorCode::IncompleteLabeling, std::to_string(f.labels.size()) + " labels for " +
                                                   std::to_string(g.m()) + " edges");
  }
  VertexSums sums(static_cast<std::size_t>(g.n()), 0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    sums[static_cast<std::size_t>(u)] += f.labels[static_cast<std::size_t>(e)];
    sums[static_cast<std::size_t>(v)] += f.labels[static_cast<std::size_t>(e)];
  }
  return sums;
}

Verdict verify_shifted(const Graph& g, const EdgeLabeling& f, Label k) {
  if (static_cast<int>(f.labels.size()) != g.m()) {
    return reject(RejectKind::WrongLabelCount,
                  std::to_string(f.labels.size()) + " labels for " + std::to_string(g.m()) +
                      " edges",
                  -1, -1);
  }
  std::unordered_map<Label, EdgeId> first_use;
  for (EdgeId e = 0; e < g.m(); ++e) {
    Label x = f.labels[static_cast<std::size_t>(e)];
    auto [it, fresh] = first_use.emplace(x, e);
    if (!fresh) {
      return reject(RejectKind::DuplicateLabel,
                    "edges " + pair_text(it->second, e) + " share label " + std::to_string(x),
                    it->second, e);
    }
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    Label x = f.labels[static_cast<std::size_t>(e)];
    if (x < k + 1 || x > k + g.m()) {
      return reject(RejectKind::LabelOutOfSet,
                    "edge " + std::to_string(e) + " has label " + std::to_string(x) +
                        " outside {" + std::to_string(k + 1) + ".." +
                        std::to_string(k + g.m()) + "}",
                    e, -1);
    }
  }
  VertexSums sums = vertex_sums(g, f);
  auto hit = first_collision(g.n(), [&](Vertex v) { return sums[static_cast<std::size_t>(v)]; });
  if (hit) {
    return reject(RejectKind::SumCollision,
                  "vertices " + pair_text(hit->first, hit->second) + " both sum to " +
                      std::to_string(sums[static_cast<std::size_t>(hit->first)]),
                  hit->first, hit->second);
  }
  return Verdict{};
}

Verdict is_sdds(const Graph& g, const EdgeLabeling& f) {
  require_one_to_m(g, f);
  VertexSums sums = vertex_sums(g, f);
  auto hit = first_collision(g.n(), [&](Vertex v) {
    return std::pair{g.degree(v), sums[static_cast<std::size_t>(v)]};
  });
  if (hit) {
    return reject(RejectKind::SumCollision,
                  "degree-" + std::to_string(g.degree(hit->first)) + " vertices " +
                      pair_text(hit->first, hit->second) + " both sum to " +
                      std::to_string(sums[static_cast<std::size_t>(hit->first)]),
                  hit->first, hit->second);
  }
  return Verdict{};
}

Verdict is_strongly_antimagic(const Graph& g, const EdgeLabeling& f) {
  require_one_to_m(g, f);
  Verdict antimagic = verify_shifted(g, f, 0);
  if (!antimagic) return antimagic;

  VertexSums sums = vertex_sums(g, f);
  // Per degree: the vertex with the smallest and with the largest sum.
  std::map<int, std::pair<Vertex, Vertex>> extremes;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto [it, fresh] = extremes.emplace(g.degree(v), std::pair{v, v});
    if (fresh) continue;
    auto& [lo, hi] = it->second;
    if (sums[static_cast<std::size_t>(v)] < sums[static_cast<std::size_t>(lo)]) lo = v;
    if (sums[static_cast<std::size_t>(v)] > sums[static_cast<std::size_t>(hi)]) hi = v;
  }
  std::optional<Vertex> running_max;
  for (const auto& [degree, lohi] : extremes) {
    auto [lo, hi] = lohi;
    if (running_max &&
        sums[static_cast<std::size_t>(lo)] <= sums[static_cast<std::size_t>(*running_max)]) {
      return reject(RejectKind::DegreeOrderViolation,
                    "vertex " + std::to_string(lo) + " (degree " + std::to_string(degree) +
                        ", sum " + std::to_string(sums[static_cast<std::size_t>(lo)]) +
                        ") does not exceed vertex " + std::to_string(*running_max) +
                        " (degree " + std::to_string(g.degree(*running_max)) + ", sum " +
                        std::to_string(sums[static_cast<std::size_t>(*running_max)]) + ")",
                    lo, *running_max);
    }
    if (!running_max ||
        sums[static_cast<std::size_t>(hi)] > sums[static_cast<std::size_t>(*running_max)]) {
      running_max = hi;
    }
  }
  return Verdict{};
}

EdgeLabeling shift_labeling(const EdgeLabeling& f, Label t) {
  EdgeLabeling out{f.base + t, f.labels};
  for (Label& x : out.labels) x += t;
  return out;
}

EdgeLabeling negate_labeling(const EdgeLabeling& f) {
  EdgeLabeling out{mirror_shift(f.base, static_cast<int>(f.labels.size())), f.labels};
  for (Label& x : out.labels) x = -x;
  return out;
}

Label sdds_shift_threshold(const Graph& g) {
  if (g.m() == 0) throw Error(ErrorCode::EmptyGraph, "threshold needs at least one edge");
  return static_cast<Label>(g.m() - 1) * static_cast<Label>(g.max_degree() - 1);
}

Label partial_vertex_sum(const Graph& g, const PartialLabeling& partial, Vertex v,
                         EdgeId excluded) {
  Label total = 0;
  bool saw_excluded = false;
  for (const Incidence& inc : g.incident(v)) {
    if (inc.edge == excluded) {
      saw_excluded = true;
      continue;
    }
    const auto& label = partial[static_cast<std::size_t>(inc.edge)];
    if (!label) {
      throw Error(ErrorCode::UnlabeledIncidentEdge,
                  "edge " + std::to_string(inc.edge) + " at vertex " + std::to_string(v));
    }
    total += *label;
  }
  if (!saw_excluded) {
    throw Error(ErrorCode::UnlabeledIncidentEdge,
                "excluded edge " + std::to_string(excluded) + " is not incident to vertex " +
                    std::to_string(v));
  }
  return total;
}

EdgeLabeling finish(const PartialLabeling& partial, Label base) {
  EdgeLabeling out{base, {}};
  out.labels.reserve(partial.size());
  for (std::size_t e = 0; e < partial.size(); ++e) {
    if (!partial[e]) throw Error(ErrorCode::IncompleteLabeling, "edge " + std::to_string(e));
    out.labels.push_back(*partial[e]);
  }
  return out;
}

}  // namespace shiftlab
