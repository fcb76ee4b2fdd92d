// trails.hpp - sigma injections and open-trail decompositions of the
// bipartite layer graphs G[L_i, L_{i-1}], and the low/high trail labeling
// used by the odd-degree constructor.

#ifndef SHIFTLAB_TRAILS_HPP
#define SHIFTLAB_TRAILS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftlab/graph.hpp"
#include "shiftlab/labeling.hpp"

namespace shiftlab {

// W: both ends in the shallower level L_{i-1}. M: both ends in the deeper
// level L_i. N: one end in each.
enum class TrailType { W, M, N };

char to_char(TrailType t);

struct Trail {
  TrailType type = TrailType::W;
  std::vector<Vertex> vertices;  // edges.size() + 1 entries
  std::vector<EdgeId> edges;
};

// sigma[j] is the edge chosen for deeper[j]. N-type trails are stored
// starting at their deeper-level end.
struct TrailDecomposition {
  std::vector<Vertex> deeper;
  std::vector<EdgeId> sigma;
  std::vector<Trail> trails;
};

// Searches sigma choices depth-first in canonical order (each deeper vertex
// tries its cross edges by ascending EdgeId) and returns the first choice for
// which cross - sigma splits into open trails with pairwise disjoint
// endpoints. That holds exactly when every non-trivial component of the
// remainder has an odd-degree vertex; the trails are then read off an Euler
// circuit through an auxiliary vertex joined to all odd vertices.
// Throws Error{NoValidSigma} when no choice works.
TrailDecomposition find_sigma_and_trails(const Graph& g, std::span<const EdgeId> cross,
                                         std::span<const Vertex> deeper);

// Empty on success; otherwise describes the first broken invariant.
std::optional<std::string> check_trail_decomposition(const Graph& g,
                                                     std::span<const EdgeId> cross,
                                                     const TrailDecomposition& dec);

// Labels every trail edge with the range low..high (inclusive), writing into
// `partial`. W and M trails go first, then N trails paired longest-first,
// then a possible leftover N trail. Consecutive trail edges meeting at a
// shallower vertex sum to low+high or low+high+1; at a deeper vertex to
// low+high or low+high-1.
// Throws Error{RangeSizeMismatch} or Error{OddWMTrail}.
void label_trails(const TrailDecomposition& dec, Label low, Label high,
                  PartialLabeling& partial);

}  // namespace shiftlab

#endif  // SHIFTLAB_TRAILS_HPP
