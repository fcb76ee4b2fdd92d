// labeling.hpp - edge labelings, vertex sums and the antimagic verifiers

#ifndef SHIFTLAB_LABELING_HPP
#define SHIFTLAB_LABELING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftlab/graph.hpp"

namespace shiftlab {

using Label = std::int64_t;

// labels[e] is the label of EdgeId e. `base` is the shift k the labeling is
// meant for; it is informational, the verifiers take k explicitly. Raw
// labelings may hold any integers (the verifier decides the set condition).
struct EdgeLabeling {
  Label base = 0;
  std::vector<Label> labels;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

// Partially labeled edges, used while a constructor is still running.
using PartialLabeling = std::vector<std::optional<Label>>;

using VertexSums = std::vector<Label>;

enum class RejectKind {
  None,
  WrongLabelCount,
  DuplicateLabel,
  LabelOutOfSet,
  SumCollision,
  DegreeOrderViolation,
};

std::string to_string(RejectKind kind);

struct Verdict {
  bool accepted = true;
  RejectKind kind = RejectKind::None;
  std::string reason;
  // Witness: two edges for label failures, two vertices for sum failures.
  int first = -1;
  int second = -1;

  explicit operator bool() const { return accepted; }
};

// Throws Error{IncompleteLabeling} when f does not label every edge.
VertexSums vertex_sums(const Graph& g, const EdgeLabeling& f);

// Accepts iff the labels are exactly {k+1, ..., k+m} and all vertex sums are
// pairwise distinct. Checks run in a fixed order: label count, duplicate
// labels, out-of-set labels, then sums; the first failure (lowest edge or
// vertex pair) is reported.
Verdict verify_shifted(const Graph& g, const EdgeLabeling& f, Label k);

// Same-degree vertices get distinct sums. Requires labels to be a
// permutation of 1..m (Error{LabelsNotOneToM}).
Verdict is_sdds(const Graph& g, const EdgeLabeling& f);

// Antimagic, and deg(u) > deg(v) implies sum(u) > sum(v). Requires labels
// to be a permutation of 1..m (Error{LabelsNotOneToM}).
Verdict is_strongly_antimagic(const Graph& g, const EdgeLabeling& f);

// Every label plus t; base moves with it.
EdgeLabeling shift_labeling(const EdgeLabeling& f, Label t);

// Every label negated; base k becomes -(m+k+1).
EdgeLabeling negate_labeling(const EdgeLabeling& f);

// The shift that negation pairs with k on a graph with m edges.
constexpr Label mirror_shift(Label k, int m) { return -(static_cast<Label>(m) + k + 1); }

// (m-1)(maxdeg-1): shifting an SDDS labeling by at least this much yields a
// shifted-antimagic labeling. Throws Error{EmptyGraph} when m = 0.
Label sdds_shift_threshold(const Graph& g);

// Sum of labels on edges at v other than `excluded`. Throws
// Error{UnlabeledIncidentEdge} if any such edge is unlabeled, or if
// `excluded` is not incident to v.
Label partial_vertex_sum(const Graph& g, const PartialLabeling& partial, Vertex v,
                         EdgeId excluded);

// Unwraps a fully labeled PartialLabeling. Throws Error{IncompleteLabeling}.
EdgeLabeling finish(const PartialLabeling& partial, Label base);

}  // namespace shiftlab

#endif  // SHIFTLAB_LABELING_HPP
