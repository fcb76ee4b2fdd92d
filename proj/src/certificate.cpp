#include "shiftlab/certificate.hpp"

#include <fstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadCertificate, what); }

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

Label integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<Label>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Json certificate_to_json(const Graph& g, const EdgeLabeling& f, Label k) {
  Json j = graph_to_json(g);
  j["k"] = k;
  j["labels"] = f.labels;
  if (static_cast<int>(f.labels.size()) == g.m()) {
    j["vertex_sums"] = vertex_sums(g, f);
  } else {
    j["vertex_sums"] = Json::array();
  }
  j["valid"] = static_cast<bool>(verify_shifted(g, f, k));
  return j;
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("certificate must be a JSON object");
  Label n = integer(field(j, "n"), "n");
  if (n < 0 || n > (1 << 24)) bad("n out of range");
  const Json& edges = field(j, "edges");
  const Json& labels = field(j, "labels");
  if (!edges.is_array()) bad("edges must be an array");
  if (!labels.is_array()) bad("labels must be an array");
  if (labels.size() != edges.size()) {
    bad("labels has " + std::to_string(labels.size()) + " entries for " +
        std::to_string(edges.size()) + " edges");
  }
  std::vector<Edge> raw;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a pair [u, v]");
    raw.emplace_back(static_cast<Vertex>(integer(e[0], "edge endpoint")),
                     static_cast<Vertex>(integer(e[1], "edge endpoint")));
  }
  Certificate c;
  try {
    c.graph = Graph(static_cast<int>(n), raw);
  } catch (const Error& e) {
    bad(e.what());
  }
  c.k = integer(field(j, "k"), "k");
  c.labeling.base = c.k;
  c.labeling.labels.assign(raw.size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    EdgeId id = c.graph.find_edge(raw[i].first, raw[i].second);
    c.labeling.labels[static_cast<std::size_t>(id)] = integer(labels[i], "label");
  }
  return c;
}

Certificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  return certificate_from_json(j);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

Json report_to_json(const SpectrumReport& report) {
  Json j;
  j["graph"] = graph_to_json(report.graph);
  j["window"] = {report.lo, report.hi};
  j["excluded"] = report.excluded;
  j["excludes_all"] = report.excludes_all;
  Json verdicts = Json::array();
  for (const KVerdict& v : report.verdicts) {
    Json entry{{"k", v.k}, {"status", to_string(v.status)}};
    entry["certificate"] =
        v.certificate ? Json(v.certificate->labels) : Json(nullptr);
    verdicts.push_back(std::move(entry));
  }
  j["verdicts"] = std::move(verdicts);
  // What holds outside the searched range.
  if (report.excludes_all) {
    j["outside"] = "infeasible";
  } else if (report.proven) {
    j["outside"] = {{"feasible_below", report.proven->lo}, {"feasible_above", report.proven->hi},
                    {"status", "lemma"}};
    j["proven_window"] = {report.proven->lo, report.proven->hi};
  } else {
    j["outside"] = "unknown";
  }
  j["justification"] = report.justification;
  return j;
}

}  // namespace shiftlab
