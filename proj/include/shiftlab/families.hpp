// families.hpp - generators for the named graph families
//
// Vertex numbering is fixed so constructors can address vertices by role:
//   path(n)            v_1..v_n -> 0..n-1, edge i joins i and i+1
//   star(n)            center 0, leaves 1..n
//   double_star(a, b)  centers 0 (a leaves: 2..a+1) and 1 (b leaves: a+2..a+b+1)
//   copies_of_p3(c)    copy i is 3i - 3i+1 - 3i+2 (center 3i+1)
//   two_p4()           v_1..v_4 -> 0..3, u_1..u_4 -> 4..7
//   two_s3()           centers 0 and 4, leaves 1..3 and 5..7
//   p5prime()          path 0..4 plus vertex 5 attached to 2

#ifndef SHIFTLAB_FAMILIES_HPP
#define SHIFTLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "shiftlab/graph.hpp"

namespace shiftlab::families {

// Named families with a known exclusion set, plus a few regular graphs that
// the CLI can generate.
enum class Family {
  Path,
  Star,
  DoubleStar,
  CopiesOfP3,
  TwoP4,
  TwoS3,
  P5Prime,
  Cycle,
  Complete,
  CompleteBipartite,
  Hypercube,
  Petersen,
};

struct FamilyParams {
  int n = 0;  // path vertices, star leaves, cycle/complete order, cube dimension
  int a = 0;  // double star / complete bipartite sides
  int b = 0;
  int c = 0;  // copies of P3
};

// Accepts the CLI spellings: path, p5 (path with n=5), star, double_star,
// cp3, 2p4, 2s3, p5prime, cycle, complete, complete_bipartite, cube,
// petersen. Returns std::nullopt for anything else.
std::optional<Family> parse_family(std::string_view name, FamilyParams* params = nullptr);
std::string family_name(Family f);

// Throws Error{BadParameters} when params do not fit the family.
Graph build(Family f, const FamilyParams& params);

Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph double_star(int a, int b);
Graph copies_of_p3(int c);
Graph two_p4();
Graph two_s3();
Graph p5prime();
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph hypercube(int dim);
Graph petersen();

// Disjoint union; vertices of `b` are offset by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace shiftlab::families

#endif  // SHIFTLAB_FAMILIES_HPP
