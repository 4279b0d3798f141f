#pragma once

// CSV / JSON emitters. Every document starts with the resolved configuration
// so a run can be repeated from its own output.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace ptlab::report {

inline constexpr int kSchemaVersion = 1;

using Config = std::vector<std::pair<std::string, std::string>>;
using Row = std::vector<std::string>;

std::string format_double(double x);  // round-trippable
std::string csv_field(const std::string& s);

// "# schema_version=1", one "# key=value" line per config entry, header, rows.
void write_csv(std::ostream& out, const Config& config, const Row& header,
               const std::vector<Row>& rows);

nlohmann::json config_json(const Config& config);
// {"schema_version", "config", key: body}
nlohmann::json document(const Config& config, const std::string& key, nlohmann::json body);

}  // namespace ptlab::report
