#include "k2t/records.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace k2t {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_significant(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

std::string to_csv_row(const SearchRecord& r) {
  std::string row = r.graph6;
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.t);
  row += ',' + format_real(r.mu);
  row += ',' + format_real(r.gap_upper);
  row += ',' + (r.gap_ysh ? format_real(*r.gap_ysh) : std::string{});
  row += ',' + std::string(r.is_ft ? "true" : "false");
  return row;
}

std::string to_jsonl(const SearchRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["t"] = r.t;
  j["mu"] = round_significant(r.mu);
  j["gap_upper"] = round_significant(r.gap_upper);
  j["gap_ysh"] = r.gap_ysh ? nlohmann::ordered_json(round_significant(*r.gap_ysh)) : nlohmann::ordered_json();
  j["is_ft"] = r.is_ft;
  j["violated"] = r.violated;
  auto trace = nlohmann::ordered_json::array();
  for (const Move& m : r.move_trace) trace.push_back(to_string(m));
  j["move_trace"] = std::move(trace);
  return j.dump();
}

}  // namespace k2t
