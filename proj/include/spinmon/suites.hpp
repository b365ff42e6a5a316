#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace spinmon {

inline constexpr const char* kReportSchema = "spinmon-report/1";
inline constexpr const char* kTableSchema = "spinmon-table/1";

struct SuiteParams {
  int q = 8;
  int max_rank = 6;
  int trials = 25;
  std::uint64_t seed = 0;
};

struct CheckRecord {
  std::string id;
  std::string anchor;
  bool pass = false;
  long cases = 0;
  std::optional<std::string> witness;
  double millis = 0;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckRecord> records;
  bool pass() const;
};

// Suite names in run order, without "all".
const std::vector<std::string>& suite_names();
// Throws DomainError on an unknown suite or a parameter out of range.
void validate_params(const std::string& suite, const SuiteParams& p);
SuiteReport run_suite(const std::string& suite, const SuiteParams& p);

// Field order is fixed; millis appear only when timings is set.
nlohmann::ordered_json report_json(const SuiteReport& r, bool timings = false);
std::string report_text(const SuiteReport& r, bool timings = false);

struct Table {
  std::string kind;
  int max_degree = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

const std::vector<std::string>& table_kinds();
// qfun: q_0..q_N in N variables; tau: n + m <= N; dictionary: |lambda| <= N.
Table make_table(const std::string& kind, int max_degree);
nlohmann::ordered_json table_json(const Table& t);
std::string table_csv(const Table& t);

}  // namespace spinmon
