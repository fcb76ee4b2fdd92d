// shiftlab - construct, verify and decide k-shifted-antimagic labelings.
//
//   shiftlab construct --family path --n 8 --k -3 --out cert.json
//   shiftlab verify cert.json
//   shiftlab decide --graph g.txt --k -2
//   shiftlab spectrum --family p5
//   shiftlab threshold-p3 --family complete --n 3
//
// JSON goes to stdout, a short summary to stderr. Exit status: 0 on
// success/accept/feasible, 2 on reject/infeasible, 1 on usage or I/O errors.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "shiftlab/certificate.hpp"
#include "shiftlab/constructors.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/families.hpp"
#include "shiftlab/search.hpp"
#include "shiftlab/spectrum.hpp"

using namespace shiftlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNo = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string graph_path;
  std::string family;
  families::FamilyParams params;
};

struct Loaded {
  Graph graph;
  std::optional<families::Family> family;
  families::FamilyParams params;
};

Loaded load(const Input& in) {
  if (in.graph_path.empty() == in.family.empty()) {
    throw UsageError("give exactly one of --graph FILE or --family NAME");
  }
  Loaded out;
  if (!in.graph_path.empty()) {
    out.graph = read_edge_list_file(in.graph_path);
    return out;
  }
  out.params = in.params;
  out.family = families::parse_family(in.family, &out.params);
  if (!out.family) throw UsageError("unknown family '" + in.family + "'");
  out.graph = families::build(*out.family, out.params);
  return out;
}

Label parse_label(const std::string& s) {
  Label v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  return v;
}

std::pair<Label, Label> parse_window(const std::string& s) {
  auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw UsageError("--window expects lo:hi, got '" + s + "'");
  Label lo = parse_label(s.substr(0, colon));
  Label hi = parse_label(s.substr(colon + 1));
  if (lo > hi) throw UsageError("--window lo must not exceed hi");
  return {lo, hi};
}

// A labeling from an SDDS certificate when k lies outside its window,
// otherwise exact search.
std::optional<EdgeLabeling> construct_generic(const Graph& g, Label k, int budget) {
  try {
    FiniteWindow w = sdds_window(g, budget);
    if (k >= w.hi) return shift_labeling(w.certificate, k);
    if (k <= w.lo) {
      return negate_labeling(shift_labeling(w.certificate, mirror_shift(k, g.m())));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoSddsFound) throw;
    if (never_shifted_antimagic(g)) return std::nullopt;
  }
  return decide(g, k, budget).certificate;
}

std::optional<EdgeLabeling> construct_for(const Loaded& in, Label k, int budget) {
  using families::Family;
  const Graph& g = in.graph;
  if (!in.family) return construct_generic(g, k, budget);
  const auto& p = in.params;
  switch (*in.family) {
    case Family::Path:
      if (p.n >= 6) return construct_path_shifted(p.n, k);
      if (closed_form_spectrum(Family::Path, p).contains(k)) return std::nullopt;
      return decide(g, k, budget).certificate;
    case Family::Star:
      return construct_star(p.n, k);
    case Family::DoubleStar:
      return construct_double_star(p.a, p.b, k);
    case Family::CopiesOfP3: {
      if (closed_form_spectrum(Family::CopiesOfP3, p).contains(k)) return std::nullopt;
      if (k >= p.c / 2) return construct_cp3(p.c, k);
      return negate_labeling(construct_cp3(p.c, mirror_shift(k, g.m())));
    }
    case Family::TwoP4: return construct_2p4(k);
    case Family::TwoS3: return construct_2s3(k);
    case Family::P5Prime: return construct_p5prime(k);
    default: return construct_generic(g, k, budget);
  }
}

void print_sums(const Graph& g, const EdgeLabeling& f) {
  std::cerr << "vertex sums:";
  for (Label s : vertex_sums(g, f)) std::cerr << ' ' << s;
  std::cerr << '\n';
}

void add_input_options(CLI::App* cmd, Input& in) {
  cmd->add_option("--graph", in.graph_path, "edge-list file (header \"n m\", then m lines \"u v\")");
  cmd->add_option("--family", in.family,
                  "path, p5, star, double_star, cp3, 2p4, 2s3, p5prime, cycle, complete, "
                  "complete_bipartite, cube, petersen");
  cmd->add_option("--n", in.params.n, "path/cycle/complete order, star leaves, cube dimension");
  cmd->add_option("--a", in.params.a, "double star / complete bipartite side");
  cmd->add_option("--b", in.params.b, "double star / complete bipartite side");
  cmd->add_option("--c", in.params.c, "number of P3 copies");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-shifted-antimagic labelings: construct, verify, decide, spectrum"};
  app.require_subcommand(1);

  Input input;
  std::string k_text, window_text, out_path, cert_path;
  int budget = kDefaultBudget;
  bool sequential = false;
  long long edge_count = -1;

  auto* construct = app.add_subcommand("construct", "build a labeling and write its certificate");
  add_input_options(construct, input);
  construct->add_option("--k", k_text, "shift k (negative values as --k=-3)")->required();
  construct->add_option("--out", out_path, "certificate output path");
  construct->add_option("--budget", budget, "largest m for exact search");

  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->add_option("certificate", cert_path, "certificate JSON")->required();

  auto* decide_cmd = app.add_subcommand("decide", "exact decision for one k");
  add_input_options(decide_cmd, input);
  decide_cmd->add_option("--k", k_text, "shift k (negative values as --k=-3)")->required();
  decide_cmd->add_option("--budget", budget, "largest m for exact search");
  decide_cmd->add_option("--out", out_path, "write the certificate here when feasible");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "decide every k in the finite window");
  add_input_options(spectrum_cmd, input);
  spectrum_cmd->add_option("--window", window_text, "search lo:hi instead of the provable window");
  spectrum_cmd->add_option("--budget", budget, "largest m for exact search");
  spectrum_cmd->add_option("--out", out_path, "also write the report here");
  spectrum_cmd->add_flag("--sequential", sequential, "decide one k at a time");

  auto* p3_cmd = app.add_subcommand("threshold-p3", "smallest c making G + cP3 non-antimagic");
  add_input_options(p3_cmd, input);
  p3_cmd->add_option("--m", edge_count, "use an edge count instead of a graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) {
      Label k = parse_label(k_text);
      Loaded in = load(input);
      auto f = construct_for(in, k, budget);
      if (!f) {
        std::cerr << "no " << k << "-shifted-antimagic labeling exists\n";
        return kExitNo;
      }
      f->base = k;
      Json cert = certificate_to_json(in.graph, *f, k);
      if (!out_path.empty()) write_json_file(out_path, cert);
      std::cout << cert.dump() << '\n';
      print_sums(in.graph, *f);
      Verdict v = verify_shifted(in.graph, *f, k);
      if (!v) {
        std::cerr << "constructed labeling rejected: " << v.reason << '\n';
        return kExitNo;
      }
      return kExitOk;
    }

    if (*verify) {
      Certificate c = read_certificate_file(cert_path);
      Verdict v = verify_shifted(c.graph, c.labeling, c.k);
      Json out{{"accepted", v.accepted}, {"k", c.k}, {"reason", v.reason},
               {"kind", to_string(v.kind)}};
      if (!v.accepted) out["witness"] = {v.first, v.second};
      std::cout << out.dump() << '\n';
      std::cerr << (v.accepted ? "accept" : "reject: " + v.reason) << '\n';
      return v.accepted ? kExitOk : kExitNo;
    }

    if (*decide_cmd) {
      Label k = parse_label(k_text);
      Loaded in = load(input);
      Decision d = decide(in.graph, k, budget);
      Json out{{"graph", graph_to_json(in.graph)}, {"k", k}, {"feasible", d.feasible}};
      out["certificate"] = d.certificate ? Json(d.certificate->labels) : Json(nullptr);
      std::cout << out.dump() << '\n';
      if (d.certificate) {
        if (!out_path.empty()) {
          write_json_file(out_path, certificate_to_json(in.graph, *d.certificate, k));
        }
        std::cerr << "feasible at k=" << k << '\n';
        print_sums(in.graph, *d.certificate);
        return kExitOk;
      }
      std::cerr << "infeasible at k=" << k << " (search exhausted)\n";
      return kExitNo;
    }

    if (*spectrum_cmd) {
      Loaded in = load(input);
      SpectrumOptions opts;
      opts.budget = budget;
      opts.parallel = !sequential;
      if (!window_text.empty()) opts.window = parse_window(window_text);
      SpectrumReport report = spectrum(in.graph, opts);
      Json out = report_to_json(report);
      if (!out_path.empty()) write_json_file(out_path, out);
      std::cout << out.dump() << '\n';
      if (report.excludes_all) {
        std::cerr << "excluded: every k\n";
      } else {
        std::cerr << "window [" << report.lo << ", " << report.hi << "], excluded {";
        for (std::size_t i = 0; i < report.excluded.size(); ++i) {
          std::cerr << (i ? ", " : "") << report.excluded[i];
        }
        std::cerr << "}\n";
      }
      return kExitOk;
    }

    if (*p3_cmd) {
      long long m = edge_count;
      if (m < 0) m = load(input).graph.m();
      long long c = p3_threshold_for_edges(m);
      std::cout << Json{{"m", m}, {"c", c}}.dump() << '\n';
      std::cerr << "G + cP3 is not antimagic for c = " << c << " (m = " << m << ")\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nrun with --help for options\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::BudgetExceeded) std::cerr << "hint: raise --budget\n";
    if (e.code() == ErrorCode::NoSddsFound) std::cerr << "hint: pass --window lo:hi\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
