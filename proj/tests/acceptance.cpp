// Acceptance checks: one PASS/FAIL line per criterion. Exit status is
// non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "shiftlab/constructors.hpp"
#include "shiftlab/families.hpp"
#include "shiftlab/search.hpp"
#include "shiftlab/spectrum.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using families::Family;
using families::FamilyParams;
using testsupport::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.pass = false;
    out.detail += " [over time limit " + std::to_string(limit_seconds) + " s]";
  }
  if (!out.pass) ++failures;
  std::printf("%s [%d] %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string set_text(const std::vector<Label>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

FamilyParams params(int n, int a = 0, int b = 0, int c = 0) { return FamilyParams{n, a, b, c}; }

Outcome closed_form_spectra() {
  struct Case {
    std::string name;
    Family fam;
    FamilyParams p;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 6; ++n) cases.push_back({"S_" + std::to_string(n), Family::Star, params(n)});
  for (int n = 2; n <= 7; ++n) cases.push_back({"P_" + std::to_string(n), Family::Path, params(n)});
  cases.push_back({"S_{2,1}", Family::DoubleStar, params(0, 2, 1)});
  cases.push_back({"S_{3,1}", Family::DoubleStar, params(0, 3, 1)});
  cases.push_back({"S_{2,2}", Family::DoubleStar, params(0, 2, 2)});
  cases.push_back({"S_{3,2}", Family::DoubleStar, params(0, 3, 2)});
  cases.push_back({"P5'", Family::P5Prime, params(0)});
  cases.push_back({"2P4", Family::TwoP4, params(0)});
  cases.push_back({"2S3", Family::TwoS3, params(0)});
  for (int c = 1; c <= 3; ++c) cases.push_back({std::to_string(c) + "P3", Family::CopiesOfP3, params(0, 0, 0, c)});

  Outcome out;
  int matched = 0;
  for (const Case& c : cases) {
    Graph g = families::build(c.fam, c.p);
    SpectrumReport r = spectrum(g);
    ExcludedSet closed = closed_form_spectrum(c.fam, c.p);
    bool ok = r.excludes_all == closed.all && (closed.all || r.excluded == closed.values);
    // The unpruned enumeration must see the same set over the window.
    if (ok && !closed.all) ok = testsupport::unpruned_excluded(g, r.lo, r.hi) == r.excluded;
    if (ok && closed.all) ok = !testsupport::unpruned_feasible(g, 0) && !testsupport::unpruned_feasible(g, -1);
    if (ok) {
      ++matched;
    } else {
      out.pass = false;
      out.detail += c.name + " got " + (r.excludes_all ? "all" : set_text(r.excluded)) + " expected " +
                    (closed.all ? "all" : set_text(closed.values)) + "; ";
    }
  }
  out.detail += std::to_string(matched) + "/" + std::to_string(cases.size()) + " graphs match";
  return out;
}

Outcome random_trees() {
  Rng rng(2024);
  int ok = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = testsupport::random_tree(rng, testsupport::uniform(rng, 4, 20));
    EdgeLabeling f = construct_forest_sdds(g);
    Label s = sdds_shift_threshold(g);
    if (is_sdds(g, f) && verify_shifted(g, shift_labeling(f, s), s) &&
        testsupport::oracle_sdds(g, f.labels) &&
        testsupport::oracle_shifted(g, shift_labeling(f, s).labels, s))
      ++ok;
  }
  return {ok == 200, std::to_string(ok) + "/200 trees"};
}

Outcome odd_degree_graphs() {
  std::vector<std::pair<std::string, Graph>> graphs{{"K4", families::complete(4)},
                                                    {"K33", families::complete_bipartite(3, 3)},
                                                    {"Q3", families::hypercube(3)},
                                                    {"Petersen", families::petersen()}};
  Outcome out;
  int ok = 0, levels = 0;
  for (const auto& [name, g] : graphs) {
    OddDegreeResult r = construct_odd_degree_traced(g);
    Label s = sdds_shift_threshold(g);
    bool good = is_sdds(g, r.labeling) && verify_shifted(g, shift_labeling(r.labeling, s), s) &&
                testsupport::oracle_sdds(g, r.labeling.labels);
    for (const LevelTrace& lt : r.levels) {
      ++levels;
      if (auto problem = check_trail_decomposition(g, lt.cross, lt.decomposition)) {
        good = false;
        out.detail += name + ": " + *problem + "; ";
      }
    }
    if (good) {
      ++ok;
    } else {
      out.pass = false;
    }
  }
  out.detail += std::to_string(ok) + "/4 graphs, " + std::to_string(levels) + " decompositions checked";
  return out;
}

Outcome paths() {
  int cases = 0, ok = 0;
  for (int n = 6; n <= 30; ++n) {
    Graph g = families::path(n);
    for (Label k = -2 * n; k <= 2 * n; ++k) {
      ++cases;
      EdgeLabeling f = construct_path_shifted(n, k);
      if (verify_shifted(g, f, k) && testsupport::oracle_shifted(g, f.labels, k)) ++ok;
    }
  }
  int p6 = 0;
  for (Label k = -12; k <= 6; ++k) p6 += decide(families::path(6), k).feasible ? 1 : 0;
  return {ok == cases && p6 == 19,
          std::to_string(ok) + "/" + std::to_string(cases) + " constructed, P6 feasible at " +
              std::to_string(p6) + "/19 k by search"};
}

Outcome copies_of_p3() {
  int cases = 0, ok = 0, sums_ok = 0, odd = 0;
  for (int c = 1; c <= 50; ++c) {
    Graph g = families::copies_of_p3(c);
    const Label l = c / 2;
    for (Label k : {l, l + 7}) {
      ++cases;
      EdgeLabeling f = construct_cp3(c, k);
      if (verify_shifted(g, f, k) && testsupport::oracle_shifted(g, f.labels, k)) ++ok;
    }
    if (c % 2 == 1) {
      ++odd;
      VertexSums sums = vertex_sums(g, construct_cp3(c, l));
      std::vector<Label> centers, expected;
      for (int i = 0; i < c; ++i) centers.push_back(sums[static_cast<std::size_t>(3 * i + 1)]);
      std::sort(centers.begin(), centers.end());
      for (Label s = 5 * l + 3; s <= 7 * l + 3; ++s) expected.push_back(s);
      if (centers == expected) ++sums_ok;
    }
  }
  return {ok == cases && sums_ok == odd,
          std::to_string(ok) + "/" + std::to_string(cases) + " labelings verify, center sums exact for " +
              std::to_string(sums_ok) + "/" + std::to_string(odd) + " odd c"};
}

Outcome symmetry() {
  Rng rng(77);
  int agree = 0, accepted = 0;
  for (int t = 0; t < 1000; ++t) {
    Graph g = testsupport::random_graph(rng, testsupport::uniform(rng, 2, 8), testsupport::uniform(rng, 1, 10));
    Label k = testsupport::uniform(rng, -20, 10);
    std::vector<Label> xs(static_cast<std::size_t>(g.m()));
    std::iota(xs.begin(), xs.end(), k + 1);
    std::shuffle(xs.begin(), xs.end(), rng);
    EdgeLabeling f{k, xs};
    bool a = static_cast<bool>(verify_shifted(g, f, k));
    bool b = static_cast<bool>(verify_shifted(g, negate_labeling(f), mirror_shift(k, g.m())));
    accepted += a ? 1 : 0;
    agree += a == b ? 1 : 0;
  }
  return {agree == 1000, std::to_string(agree) + "/1000 agree (" + std::to_string(accepted) + " accepted)"};
}

Outcome search_oracle() {
  Rng rng(99);
  int agree = 0, feasible = 0;
  for (int t = 0; t < 50; ++t) {
    Graph g = testsupport::random_graph(rng, testsupport::uniform(rng, 2, 7), testsupport::uniform(rng, 1, 6));
    Label k = testsupport::uniform(rng, -10, 5);
    Decision d = decide(g, k);
    bool brute = testsupport::unpruned_feasible(g, k);
    feasible += brute ? 1 : 0;
    if (d.feasible == brute && (!d.certificate || testsupport::oracle_shifted(g, d.certificate->labels, k))) ++agree;
  }
  return {agree == 50, std::to_string(agree) + "/50 agree (" + std::to_string(feasible) + " feasible)"};
}

// Smallest integer c > m with c^2 - (8m+1)c - 2m^2 - 2m > 0, by the
// quadratic formula plus an exact integer fix-up.
long long quadratic_threshold(long long m) {
  double b = 8.0 * m + 1.0;
  long long c = static_cast<long long>(std::floor((b + std::sqrt(b * b + 8.0 * m * m + 8.0 * m)) / 2.0)) + 1;
  auto positive = [&](long long x) { return x * x - (8 * m + 1) * x - 2 * m * m - 2 * m > 0; };
  while (c > 0 && positive(c - 1)) --c;
  while (!positive(c)) ++c;
  return std::max(c, m + 1);
}

Outcome p3_thresholds() {
  struct Row {
    std::string name;
    long long m;
    long long stated;
  };
  std::vector<Row> rows{{"m=0", 0, 2}, {"P3", 2, 20}, {"K3", 3, 26}};
  Outcome out;
  for (const Row& r : rows) {
    long long got = r.m == 2   ? p3_threshold(families::path(3))
                    : r.m == 3 ? p3_threshold(families::complete(3))
                               : p3_threshold_for_edges(0);
    long long solved = quadratic_threshold(r.m);
    bool ok = got == r.stated && got == solved;
    if (!ok) out.pass = false;
    out.detail += r.name + ": got " + std::to_string(got) + ", stated " + std::to_string(r.stated) +
                  ", quadratic " + std::to_string(solved) + (ok ? "" : " MISMATCH") + "; ";
  }
  return out;
}

}  // namespace

int main() {
  run(1, "closed-form spectra reproduced by brute force", 10.0, closed_form_spectra);
  run(2, "forest SDDS constructor on random trees", 0, random_trees);
  run(3, "odd-degree constructor and trail invariants", 5.0, odd_degree_graphs);
  run(4, "paths are absolutely antimagic", 5.0, paths);
  run(5, "cP3 constructor", 0, copies_of_p3);
  run(6, "negation symmetry", 0, symmetry);
  run(7, "pruned search matches unpruned enumeration", 60.0, search_oracle);
  run(8, "P3 threshold", 0, p3_thresholds);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
