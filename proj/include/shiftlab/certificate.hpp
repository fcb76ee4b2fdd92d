// certificate.hpp - JSON forms of labelings and spectrum reports
//
// Certificate:
//   {"n": 5, "edges": [[0,1], ...], "k": -1, "labels": [...],
//    "vertex_sums": [...], "valid": true}
// labels[i] belongs to edges[i]. vertex_sums and valid are written for
// readers; on load they are ignored and recomputed.

#ifndef SHIFTLAB_CERTIFICATE_HPP
#define SHIFTLAB_CERTIFICATE_HPP

#include <string>

#include "json.hpp"
#include "shiftlab/graph.hpp"
#include "shiftlab/labeling.hpp"
#include "shiftlab/spectrum.hpp"

namespace shiftlab {

using Json = nlohmann::json;

struct Certificate {
  Graph graph;
  Label k = 0;
  EdgeLabeling labeling;  // indexed by canonical EdgeId
};

Json graph_to_json(const Graph& g);

Json certificate_to_json(const Graph& g, const EdgeLabeling& f, Label k);

// Throws Error{BadCertificate} for missing or mistyped fields, a labels
// array of the wrong length, or an edge list the graph parser rejects.
Certificate certificate_from_json(const Json& j);

Certificate read_certificate_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

Json report_to_json(const SpectrumReport& report);

}  // namespace shiftlab

#endif  // SHIFTLAB_CERTIFICATE_HPP
