// search.hpp - exact backtracking search for labelings of small graphs

#ifndef SHIFTLAB_SEARCH_HPP
#define SHIFTLAB_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "shiftlab/graph.hpp"
#include "shiftlab/labeling.hpp"

namespace shiftlab {

inline constexpr int kDefaultBudget = 10;

enum class SearchGoal {
  Shifted,  // labels {k+1..k+m}, all vertex sums distinct
  Sdds,     // labels {1..m}, same-degree vertices distinct
  Strong,   // labels {1..m}, distinct and ordered by degree
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

// Depth-first over label assignments. Edges are taken in an order that
// finalizes vertices as early as possible (greedy: the unlabeled edge that
// completes the most vertices, ties by EdgeId); a branch is cut as soon as
// two finalized vertices conflict. k is ignored for Sdds and Strong.
// Throws Error{BudgetExceeded} when m > budget.
std::optional<EdgeLabeling> search_labeling(const Graph& g, Label k, SearchGoal goal,
                                            int budget = kDefaultBudget,
                                            SearchStats* stats = nullptr);

struct Decision {
  Label k = 0;
  bool feasible = false;
  std::optional<EdgeLabeling> certificate;
};

// Exact k-shifted-antimagic decision. A returned certificate has already
// passed verify_shifted. Throws Error{BudgetExceeded}.
Decision decide(const Graph& g, Label k, int budget = kDefaultBudget);

}  // namespace shiftlab

#endif  // SHIFTLAB_SEARCH_HPP
