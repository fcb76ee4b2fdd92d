#include "shiftlab/spectrum.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "shiftlab/constructors.hpp"
#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

bool all_degrees_odd(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) % 2 == 0) return false;
  return true;
}

FiniteWindow window_from_sdds(const Graph& g, EdgeLabeling f, std::string source) {
  FiniteWindow w;
  w.hi = sdds_shift_threshold(g);
  w.lo = mirror_shift(w.hi, g.m());
  w.basis = WindowBasis::Sdds;
  w.certificate = std::move(f);
  w.justification = "SDDS labeling from " + source + "; feasible for k >= " +
                    std::to_string(w.hi) + " by shifting and for k <= " + std::to_string(w.lo) +
                    " by negation";
  return w;
}

}  // namespace

bool never_shifted_antimagic(const Graph& g) {
  int isolated = 0;
  for (Vertex v = 0; v < g.n(); ++v) isolated += g.degree(v) == 0 ? 1 : 0;
  return isolated > 1 || has_k2_component(g);
}

FiniteWindow sdds_window(const Graph& g, int budget) {
  if (g.m() == 0) throw Error(ErrorCode::EmptyGraph, "no edges to label");
  if (never_shifted_antimagic(g)) {
    throw Error(ErrorCode::NoSddsFound, "two vertices of equal degree always share a sum");
  }
  if (is_forest(g)) return window_from_sdds(g, construct_forest_sdds(g), "the forest construction");
  if (all_degrees_odd(g)) {
    return window_from_sdds(g, construct_odd_degree(g), "the odd-degree construction");
  }
  if (g.m() <= budget) {
    if (auto f = search_labeling(g, 0, SearchGoal::Sdds, budget)) {
      return window_from_sdds(g, std::move(*f), "exhaustive search");
    }
    throw Error(ErrorCode::NoSddsFound, "exhaustive search found no SDDS labeling");
  }
  throw Error(ErrorCode::NoSddsFound,
              "no constructor applies and m=" + std::to_string(g.m()) + " exceeds the budget");
}

FiniteWindow finite_window(const Graph& g, int budget) {
  if (g.m() == 0) throw Error(ErrorCode::EmptyGraph, "no edges to label");
  if (g.m() <= budget && !never_shifted_antimagic(g)) {
    if (auto f = search_labeling(g, 0, SearchGoal::Strong, budget)) {
      FiniteWindow w;
      w.lo = -g.m();
      w.hi = -1;
      w.basis = WindowBasis::Strong;
      w.certificate = std::move(*f);
      w.justification =
          "strongly antimagic labeling; feasible for k >= 0 by shifting and for k <= " +
          std::to_string(-g.m() - 1) + " by negation";
      return w;
    }
  }
  return sdds_window(g, budget);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::Lemma: return "lemma";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

Status status_at(const SpectrumReport& report, Label k) {
  if (report.excludes_all) return Status::Infeasible;
  if (k >= report.lo && k <= report.hi) {
    return report.verdicts[static_cast<std::size_t>(k - report.lo)].status;
  }
  if (report.proven && (k > report.proven->hi || k < report.proven->lo)) return Status::Lemma;
  return Status::Unknown;
}

SpectrumReport spectrum(const Graph& g, const SpectrumOptions& options) {
  if (g.m() > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(g.m()) + " edges exceed the budget of " +
                                               std::to_string(options.budget));
  }
  SpectrumReport report;
  report.graph = g;

  if (never_shifted_antimagic(g)) {
    report.excludes_all = true;
    report.justification = "two vertices always share a vertex sum (K2 component or two isolated vertices)";
  } else if (g.m() == 0) {
    throw Error(ErrorCode::EmptyGraph, "no edges to label");
  } else {
    try {
      report.proven = finite_window(g, options.budget);
      report.justification = report.proven->justification;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSddsFound || !options.window) throw;
      report.justification = std::string("no provable window (") + e.what() +
                             "); outside the searched range the spectrum is unknown";
    }
  }

  if (options.window) {
    std::tie(report.lo, report.hi) = *options.window;
  } else if (report.proven) {
    report.lo = report.proven->lo;
    report.hi = report.proven->hi;
  } else {
    // Every k fails; list the same range a strong window would cover.
    report.lo = -g.m();
    report.hi = -1;
  }

  const int m = g.m();
  // One search per mirror pair; the larger k of the pair is the one searched.
  std::map<Label, std::future<Decision>> pending;
  std::map<Label, Decision> decided;
  for (Label k = report.lo; k <= report.hi; ++k) {
    Label rep = std::max(k, mirror_shift(k, m));
    if (pending.contains(rep) || decided.contains(rep)) continue;
    if (report.excludes_all) {
      decided.emplace(rep, Decision{rep, false, std::nullopt});
    } else if (options.parallel) {
      pending.emplace(rep, std::async(std::launch::async,
                                      [&g, rep, budget = options.budget] {
                                        return decide(g, rep, budget);
                                      }));
    } else {
      decided.emplace(rep, decide(g, rep, options.budget));
    }
  }
  for (auto& [rep, fut] : pending) decided.emplace(rep, fut.get());

  for (Label k = report.lo; k <= report.hi; ++k) {
    Label rep = std::max(k, mirror_shift(k, m));
    const Decision& d = decided.at(rep);
    KVerdict v{k, d.feasible ? Status::Feasible : Status::Infeasible, std::nullopt};
    if (d.certificate) {
      v.certificate = rep == k ? *d.certificate : negate_labeling(*d.certificate);
    }
    if (!d.feasible) report.excluded.push_back(k);
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

bool ExcludedSet::contains(Label k) const {
  return all || std::binary_search(values.begin(), values.end(), k);
}

ExcludedSet closed_form_spectrum(families::Family family, const families::FamilyParams& p) {
  using families::Family;
  auto bad = [](const std::string& what) { return Error(ErrorCode::BadParameters, what); };
  switch (family) {
    case Family::Path:
      if (p.n < 2) throw bad("path needs n >= 2");
      if (p.n == 2) return {true, {}};
      if (p.n == 3) return {false, {-2, -1}};
      if (p.n == 4) return {false, {-2}};
      if (p.n == 5) return {false, {-3, -2}};
      return {};
    case Family::Star: {
      if (p.n < 2) throw bad("star needs at least two leaves");
      Label n = p.n;
      if (n % 2 == 0) return {false, {-n / 2 - 1, -n / 2}};
      return {false, {-(n + 1) / 2}};
    }
    case Family::DoubleStar: {
      if (p.a < 1 || p.b < 1) throw bad("double star needs a, b >= 1");
      Label big = std::max(p.a, p.b), small = std::min(p.a, p.b);
      if (big == 2 && small == 1) return {false, {-3, -2}};
      if (small == 1 && big % 2 == 1) return {false, {-(big + 3) / 2}};
      return {};
    }
    case Family::CopiesOfP3: {
      if (p.c < 1) throw bad("cP3 needs c >= 1");
      ExcludedSet out;
      for (Label k = -(5 * static_cast<Label>(p.c)) / 2; k <= p.c / 2 - 1; ++k) out.values.push_back(k);
      return out;
    }
    case Family::TwoP4:
    case Family::TwoS3:
      return {false, {-5, -2}};
    case Family::P5Prime:
      return {false, {-3}};
    default:
      throw bad("no closed form for family " + families::family_name(family));
  }
}

}  // namespace shiftlab
