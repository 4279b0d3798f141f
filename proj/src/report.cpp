#include "ptlab/report.hpp"

#include <cstdio>
#include <ostream>

namespace ptlab::report {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(std::ostream& out, const Config& config, const Row& header,
               const std::vector<Row>& rows) {
  out << "# schema_version=" << kSchemaVersion << "\n";
  for (const auto& [k, v] : config) out << "# " << k << "=" << v << "\n";
  auto line = [&](const Row& r) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << csv_field(r[k]);
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

nlohmann::json config_json(const Config& config) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : config) j[k] = v;
  return j;
}

nlohmann::json document(const Config& config, const std::string& key, nlohmann::json body) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = config_json(config);
  j[key] = std::move(body);
  return j;
}

}  // namespace ptlab::report
