// constructors.hpp - explicit labelings for forests, odd-degree graphs, paths,
// stars, double stars and the small disconnected families.
//
// Family constructors return std::nullopt exactly for the k at which the
// family has no shifted-antimagic labeling. Vertex numbering follows
// families.hpp.

#ifndef SHIFTLAB_CONSTRUCTORS_HPP
#define SHIFTLAB_CONSTRUCTORS_HPP

#include <optional>
#include <vector>

#include "shiftlab/graph.hpp"
#include "shiftlab/labeling.hpp"
#include "shiftlab/trails.hpp"

namespace shiftlab {

// SDDS labeling (labels 1..m) of a forest. Components get consecutive label
// blocks in component order; inside a tree, levels are labeled deepest
// first, each level's edges toward the root ordered by partial vertex sums.
// Throws Error{NotForest | HasK2Component | MultipleIsolatedVertices}.
EdgeLabeling construct_forest_sdds(const Graph& g);

// Per-level trace of the odd-degree construction for one component,
// expressed in global vertex and edge ids.
struct LevelTrace {
  int component = 0;
  int level = 0;
  std::vector<EdgeId> cross;
  TrailDecomposition decomposition;
};

struct OddDegreeResult {
  EdgeLabeling labeling;
  std::vector<LevelTrace> levels;
};

// SDDS labeling (labels 1..m) of a graph whose degrees are all odd.
// Throws Error{EvenDegreeVertex | HasK2Component}, or Error{NoValidSigma}
// if the sigma search fails.
OddDegreeResult construct_odd_degree_traced(const Graph& g);
EdgeLabeling construct_odd_degree(const Graph& g);

// Strongly antimagic labeling of the path on n >= 3 vertices.
// Throws Error{PathTooShort}.
EdgeLabeling construct_path_strong(int n);

// k-shifted-antimagic labeling of the path on n >= 6 vertices, any k.
// Throws Error{PathTooShort}.
EdgeLabeling construct_path_shifted(int n, Label k);

// Throws Error{TooFewLeaves} for fewer than two leaves.
std::optional<EdgeLabeling> construct_star(int leaves, Label k);

// Throws Error{BadParameters} unless a, b >= 1.
std::optional<EdgeLabeling> construct_double_star(int a, int b, Label k);

// Requires k >= floor(c/2) (Error{KBelowThreshold}) and c >= 1.
EdgeLabeling construct_cp3(int c, Label k);

std::optional<EdgeLabeling> construct_2p4(Label k);
std::optional<EdgeLabeling> construct_2s3(Label k);
std::optional<EdgeLabeling> construct_p5prime(Label k);

// Smallest c > m with (1+m+2c)(m+2c) < (1+m+5c)(c-m); G + cP3 is then not
// antimagic.
long long p3_threshold(const Graph& g);
long long p3_threshold_for_edges(long long m);

}  // namespace shiftlab

#endif  // SHIFTLAB_CONSTRUCTORS_HPP
