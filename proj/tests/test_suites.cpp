#include <rapidjson/document.h>
#include <rapidjson/schema.h>

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "spinmon/scalars.hpp"
#include "spinmon/suites.hpp"

using namespace spinmon;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool schema_valid(const std::string& schema_file, const std::string& json) {
  rapidjson::Document sd;
  REQUIRE_FALSE(sd.Parse(read_file(std::string(SPINMON_DOCS_DIR) + "/" + schema_file).c_str()).HasParseError());
  rapidjson::SchemaDocument schema(sd);
  rapidjson::Document d;
  if (d.Parse(json.c_str()).HasParseError()) return false;
  rapidjson::SchemaValidator v(schema);
  return d.Accept(v);
}

SuiteReport failing_report() {
  SuiteReport r{"spin", SuiteParams{}, {}};
  r.records.push_back({"spin/a", "first", true, 3, std::nullopt, 1.25});
  r.records.push_back({"spin/b", "second", false, 2, std::string("(n,m)=(1,2)"), 0.5});
  return r;
}

}  // namespace

TEST_CASE("overall status is the conjunction of the records") {
  SuiteReport r = failing_report();
  CHECK_FALSE(r.pass());
  r.records[1].pass = true;
  CHECK(r.pass());
}

TEST_CASE("json report has a fixed field order and serializes witnesses") {
  SuiteReport r = failing_report();
  auto j = report_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "suite", "parameters", "records", "status"});
  CHECK(j["status"] == "fail");
  CHECK(j["records"][1]["witness"] == "(n,m)=(1,2)");
  CHECK_FALSE(j["records"][0].contains("witness"));
  CHECK_FALSE(j["records"][0].contains("millis"));
  CHECK(report_json(r, true)["records"][0]["millis"] == 1.3);
  CHECK(schema_valid("report-schema-v1.json", j.dump()));
  CHECK(schema_valid("report-schema-v1.json", report_json(r, true).dump()));
}

TEST_CASE("schema rejects malformed reports") {
  auto j = report_json(failing_report());
  auto bad_status = j;
  bad_status["status"] = "maybe";
  CHECK_FALSE(schema_valid("report-schema-v1.json", bad_status.dump()));
  auto extra = j;
  extra["records"][0]["note"] = "x";
  CHECK_FALSE(schema_valid("report-schema-v1.json", extra.dump()));
  auto missing = j;
  missing["records"][0].erase("cases");
  CHECK_FALSE(schema_valid("report-schema-v1.json", missing.dump()));
  auto bad_q = j;
  bad_q["parameters"]["q"] = 3;
  CHECK_FALSE(schema_valid("report-schema-v1.json", bad_q.dump()));
}

TEST_CASE("text report marks each check") {
  std::string t = report_text(failing_report());
  CHECK(t.find("✓ spin/a [first] cases=3\n") != std::string::npos);
  CHECK(t.find("✗ spin/b [second] cases=2 witness: (n,m)=(1,2)\n") != std::string::npos);
  CHECK(t.find("spin: fail (1/2 checks)") != std::string::npos);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(run_suite("bogus", SuiteParams{}), DomainError);
  SuiteParams p;
  p.q = 3;
  CHECK_THROWS_AS(validate_params("spin", p), DomainError);
  p = SuiteParams{};
  p.max_rank = 0;
  CHECK_THROWS_AS(validate_params("spin", p), DomainError);
  p = SuiteParams{};
  p.trials = 0;
  CHECK_THROWS_AS(validate_params("queer", p), DomainError);
  CHECK_NOTHROW(validate_params("all", SuiteParams{}));
  CHECK(suite_names().size() == 11);
}

TEST_CASE("spin suite at total rank 8") {
  SuiteParams p;
  p.max_rank = 8;
  SuiteReport r = run_suite("spin", p);
  CHECK(r.pass());
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].id == "spin/tau-double-product");
  CHECK(r.records[0].cases == 45);
}

TEST_CASE("factor-systems suite at q = 16 includes the S-level relation") {
  SuiteParams p;
  p.q = 16;
  SuiteReport r = run_suite("factor-systems", p);
  CHECK(r.pass());
  bool saw = false;
  for (const auto& c : r.records) saw = saw || c.id == "factor-systems/relation/a-b-d-phi_a_prime-with-omega_sharp/q=16";
  CHECK(saw);
}

TEST_CASE("reports are deterministic") {
  SuiteParams p;
  p.trials = 3;
  p.seed = 5;
  std::string a = report_json(run_suite("queer", p)).dump();
  std::string b = report_json(run_suite("queer", p)).dump();
  CHECK(a == b);
  CHECK(schema_valid("report-schema-v1.json", a));
}

TEST_CASE("dictionary table") {
  Table t = make_table("dictionary", 6);
  CHECK(t.columns.size() == 7);
  bool saw = false;
  for (const auto& row : t.rows)
    if (row[0] == "(2,1)") {
      saw = true;
      CHECK(row[3] == "1/2");
      CHECK(row[4] == "1/2*sqrt2");
      CHECK(row[5] == true);
    }
  CHECK(saw);
  // Strict partitions of 1..6: 1 + 1 + 2 + 2 + 3 + 4.
  CHECK(t.rows.size() == 13);
  CHECK(schema_valid("table-schema-v1.json", table_json(t).dump()));
  std::string csv = table_csv(t);
  CHECK(csv.rfind("lambda,length,epsilon,L,N,queer,expansion_hash\n", 0) == 0);
  CHECK(csv.find("\"(2,1)\",2,1,1/2,1/2*sqrt2,true,") != std::string::npos);
}

TEST_CASE("tau table") {
  Table t = make_table("tau", 6);
  CHECK(t.columns == std::vector<std::string>{"n", "m", "word", "c_power"});
  CHECK(t.rows.size() == 28);
  for (const auto& row : t.rows) {
    int n = row[0].get<int>(), m = row[1].get<int>();
    CHECK(row[3].get<int>() == (n * (n - 1) / 2) * (m * (m - 1) / 2) % 2);
    if (n == 1 && m == 2) CHECK(row[2] == "s2 s1");
  }
  CHECK(schema_valid("table-schema-v1.json", table_json(t).dump()));
}

TEST_CASE("qfun table") {
  Table t = make_table("qfun", 6);
  REQUIRE(t.rows.size() == 7);
  CHECK(t.rows[0][3] == "(1)m[]");
  CHECK(t.rows[2][3] == "(2)m[2] + (4)m[1,1]");
  // q_k has one term per partition of k.
  CHECK(t.rows[6][2] == 11);
  CHECK_THROWS_AS(make_table("qfun", 40), DomainError);
  CHECK_THROWS_AS(make_table("bogus", 3), DomainError);
}
