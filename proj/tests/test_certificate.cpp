#include "doctest.h"
#include "shiftlab/certificate.hpp"
#include "shiftlab/constructors.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/families.hpp"

using namespace shiftlab;

namespace {

ErrorCode load_error(const Json& j) {
  try {
    certificate_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("certificate round trip") {
  Graph g = families::path(8);
  EdgeLabeling f = construct_path_shifted(8, -3);
  Json j = certificate_to_json(g, f, -3);
  CHECK(j["valid"] == true);
  CHECK(j["k"] == -3);
  CHECK(j["vertex_sums"].size() == 8);
  Certificate back = certificate_from_json(Json::parse(j.dump()));
  CHECK(back.graph == g);
  CHECK(back.k == -3);
  CHECK(back.labeling.labels == f.labels);
}

TEST_CASE("stored vertex sums and validity are advisory") {
  Graph g = families::path(5);
  Json j = certificate_to_json(g, EdgeLabeling{-1, {0, 1, 3, 2}}, -1);
  j["valid"] = false;
  j["vertex_sums"] = {1, 1, 1, 1, 1};
  Certificate c = certificate_from_json(j);
  CHECK(verify_shifted(c.graph, c.labeling, c.k));

  j["labels"][2] = 1;  // tamper: duplicate label
  Certificate bad = certificate_from_json(j);
  Verdict v = verify_shifted(bad.graph, bad.labeling, bad.k);
  CHECK_FALSE(v);
  CHECK(v.kind == RejectKind::DuplicateLabel);
  CHECK(certificate_to_json(bad.graph, bad.labeling, bad.k)["valid"] == false);
}

TEST_CASE("labels follow the file's edge order") {
  Json j = Json::parse(R"({"n":3,"edges":[[2,1],[0,1]],"k":0,"labels":[2,1]})");
  Certificate c = certificate_from_json(j);
  CHECK(c.graph.edge(0) == Edge{0, 1});
  CHECK(c.labeling.labels == std::vector<Label>{1, 2});
}

TEST_CASE("malformed certificates") {
  CHECK(load_error(Json::parse(R"([1,2])")) == ErrorCode::BadCertificate);
  CHECK(load_error(Json::parse(R"({"n":3,"edges":[[0,1]],"labels":[1]})")) == ErrorCode::BadCertificate);
  CHECK(load_error(Json::parse(R"({"n":3,"edges":[[0,1]],"k":0,"labels":[1,2]})")) ==
        ErrorCode::BadCertificate);
  CHECK(load_error(Json::parse(R"({"n":3,"edges":[[0,1],[1,0]],"k":0,"labels":[1,2]})")) ==
        ErrorCode::BadCertificate);
  CHECK(load_error(Json::parse(R"({"n":2,"edges":[[0,5]],"k":0,"labels":[1]})")) ==
        ErrorCode::BadCertificate);
  CHECK(load_error(Json::parse(R"({"n":2,"edges":[[0,1]],"k":"x","labels":[1]})")) ==
        ErrorCode::BadCertificate);
  CHECK_THROWS_AS(read_certificate_file("/nonexistent/cert.json"), Error);
}

TEST_CASE("report JSON") {
  SpectrumReport r = spectrum(families::path(5));
  Json j = report_to_json(r);
  CHECK(j["window"] == Json::array({-4, -1}));
  CHECK(j["excluded"] == Json::array({-3, -2}));
  REQUIRE(j["verdicts"].size() == 4);
  CHECK(j["verdicts"][0]["status"] == "feasible");
  CHECK(j["verdicts"][1]["status"] == "infeasible");
  CHECK(j["verdicts"][1]["certificate"].is_null());
  CHECK(j["outside"]["status"] == "lemma");
  CHECK(j["graph"]["n"] == 5);
}
