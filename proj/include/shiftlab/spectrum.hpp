// spectrum.hpp - finite windows, full spectrum reports and the closed-form
// exclusion sets of the named families.
//
// Outside a finite window [lo, hi] every k is feasible: above hi by shifting
// an SDDS (or strongly antimagic) labeling, below lo by negation. Inside the
// window each k is decided exactly.

#ifndef SHIFTLAB_SPECTRUM_HPP
#define SHIFTLAB_SPECTRUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/families.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/labeling.hpp"
#include "shiftlab/search.hpp"

namespace shiftlab {

enum class WindowBasis { Strong, Sdds };

struct FiniteWindow {
  Label lo = 0;
  Label hi = 0;
  WindowBasis basis = WindowBasis::Sdds;
  EdgeLabeling certificate;  // strongly antimagic or SDDS, labels 1..m
  std::string justification;
};

// Window from an SDDS labeling alone: hi = sdds_shift_threshold(g),
// lo = -(hi+m+1). The labeling comes from the forest or odd-degree
// constructor when they apply, else from exhaustive search (m <= budget).
// Throws Error{NoSddsFound} or Error{EmptyGraph}.
FiniteWindow sdds_window(const Graph& g, int budget = kDefaultBudget);

// Tries a strongly antimagic labeling first (window [-m, -1]), then falls
// back to sdds_window.
FiniteWindow finite_window(const Graph& g, int budget = kDefaultBudget);

// Two vertices that always share a sum (a K2 component, or two isolated
// vertices) rule out every k.
bool never_shifted_antimagic(const Graph& g);

enum class Status { Feasible, Infeasible, Lemma, Unknown };

std::string to_string(Status s);

struct KVerdict {
  Label k = 0;
  Status status = Status::Unknown;
  std::optional<EdgeLabeling> certificate;
};

struct SpectrumOptions {
  int budget = kDefaultBudget;
  // Range to brute-force instead of the provable window.
  std::optional<std::pair<Label, Label>> window;
  bool parallel = true;
};

struct SpectrumReport {
  Graph graph;
  Label lo = 0;  // brute-forced range, inclusive
  Label hi = -1;
  std::vector<KVerdict> verdicts;  // ascending k over [lo, hi]
  std::vector<Label> excluded;     // infeasible k found in [lo, hi]
  bool excludes_all = false;       // structurally infeasible for every k
  std::optional<FiniteWindow> proven;
  std::string justification;
};

// Status for any k, including ks outside the brute-forced range.
Status status_at(const SpectrumReport& report, Label k);

// Decides every k in the window (only one of each mirror pair k and
// -(m+k+1) is searched; the other is its negation).
// Throws Error{BudgetExceeded}, or Error{NoSddsFound} when no window is
// provable and no explicit range was given.
SpectrumReport spectrum(const Graph& g, const SpectrumOptions& options = {});

struct ExcludedSet {
  bool all = false;
  std::vector<Label> values;  // ascending

  bool contains(Label k) const;
  friend bool operator==(const ExcludedSet&, const ExcludedSet&) = default;
};

// Exclusion set known in closed form for the named families. Throws
// Error{BadParameters} for families without one or out-of-range params.
ExcludedSet closed_form_spectrum(families::Family family, const families::FamilyParams& params);

}  // namespace shiftlab

#endif  // SHIFTLAB_SPECTRUM_HPP
