#include "shiftlab/search.hpp"

#include <stdexcept>
#include <string>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

class Searcher {
 public:
  Searcher(const Graph& g, Label k, SearchGoal goal, SearchStats* stats)
      : g_(g), goal_(goal), stats_(stats) {
    Label base = goal == SearchGoal::Shifted ? k : 0;
    for (int i = 1; i <= g.m(); ++i) pool_.push_back(base + i);
    used_.assign(pool_.size(), false);
    sums_.assign(static_cast<std::size_t>(g.n()), 0);
    labels_.assign(static_cast<std::size_t>(g.m()), 0);
    plan_order();
  }

  std::optional<EdgeLabeling> run() {
    // Isolated vertices are final from the start.
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (g_.degree(v) == 0 && !finalize(v)) return std::nullopt;
    }
    if (!step(0)) return std::nullopt;
    return EdgeLabeling{0, labels_};
  }

 private:
  void plan_order() {
    std::vector<int> remaining(static_cast<std::size_t>(g_.n()));
    for (Vertex v = 0; v < g_.n(); ++v) remaining[static_cast<std::size_t>(v)] = g_.degree(v);
    std::vector<bool> taken(static_cast<std::size_t>(g_.m()), false);
    for (int step = 0; step < g_.m(); ++step) {
      EdgeId best = -1;
      int best_score = -1;
      for (EdgeId e = 0; e < g_.m(); ++e) {
        if (taken[static_cast<std::size_t>(e)]) continue;
        auto [u, v] = g_.edge(e);
        int score = (remaining[static_cast<std::size_t>(u)] == 1 ? 1 : 0) +
                    (remaining[static_cast<std::size_t>(v)] == 1 ? 1 : 0);
        if (score > best_score) {
          best = e;
          best_score = score;
        }
      }
      taken[static_cast<std::size_t>(best)] = true;
      auto [u, v] = g_.edge(best);
      std::vector<Vertex> done;
      if (--remaining[static_cast<std::size_t>(u)] == 0) done.push_back(u);
      if (--remaining[static_cast<std::size_t>(v)] == 0) done.push_back(v);
      order_.push_back(best);
      completes_.push_back(std::move(done));
    }
  }

  bool conflicts(Vertex a, Vertex b) const {
    Label sa = sums_[static_cast<std::size_t>(a)];
    Label sb = sums_[static_cast<std::size_t>(b)];
    switch (goal_) {
      case SearchGoal::Shifted:
        return sa == sb;
      case SearchGoal::Sdds:
        return sa == sb && g_.degree(a) == g_.degree(b);
      case SearchGoal::Strong: {
        int da = g_.degree(a), db = g_.degree(b);
        if (sa == sb) return true;
        return (da > db && sa < sb) || (db > da && sb < sa);
      }
    }
    return true;
  }

  // Pushes v onto the finalized stack unless it conflicts with one already there.
  bool finalize(Vertex v) {
    for (Vertex w : finalized_) {
      if (conflicts(v, w)) return false;
    }
    finalized_.push_back(v);
    return true;
  }

  bool step(std::size_t depth) {
    if (stats_) ++stats_->nodes;
    if (depth == order_.size()) return true;
    EdgeId e = order_[depth];
    auto [u, v] = g_.edge(e);
    const auto& done = completes_[depth];
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      if (used_[i]) continue;
      Label x = pool_[i];
      used_[i] = true;
      labels_[static_cast<std::size_t>(e)] = x;
      sums_[static_cast<std::size_t>(u)] += x;
      sums_[static_cast<std::size_t>(v)] += x;
      std::size_t mark = finalized_.size();
      bool ok = true;
      for (Vertex w : done) {
        if (!finalize(w)) {
          ok = false;
          break;
        }
      }
      if (ok && step(depth + 1)) return true;
      finalized_.resize(mark);
      sums_[static_cast<std::size_t>(u)] -= x;
      sums_[static_cast<std::size_t>(v)] -= x;
      used_[i] = false;
    }
    return false;
  }

  const Graph& g_;
  SearchGoal goal_;
  SearchStats* stats_;
  std::vector<Label> pool_;
  std::vector<bool> used_;
  std::vector<Label> sums_;
  std::vector<Label> labels_;
  std::vector<EdgeId> order_;
  std::vector<std::vector<Vertex>> completes_;
  std::vector<Vertex> finalized_;
};

}  // namespace

std::optional<EdgeLabeling> search_labeling(const Graph& g, Label k, SearchGoal goal, int budget,
                                            SearchStats* stats) {
  if (g.m() > budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(g.m()) + " edges exceed the budget of " +
                                               std::to_string(budget));
  }
  auto found = Searcher(g, k, goal, stats).run();
  if (found && goal == SearchGoal::Shifted) found->base = k;
  return found;
}

Decision decide(const Graph& g, Label k, int budget) {
  Decision d{k, false, search_labeling(g, k, SearchGoal::Shifted, budget)};
  if (d.certificate) {
    d.feasible = true;
    if (!verify_shifted(g, *d.certificate, k)) {
      throw std::logic_error("search produced a labeling the verifier rejects");
    }
  }
  return d;
}

}  // namespace shiftlab
