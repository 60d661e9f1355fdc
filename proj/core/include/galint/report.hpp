#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace galint {

using ojson = nlohmann::ordered_json;

enum class Status { Confirmed, Refuted, Inconclusive };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Stage {
  std::string name;
  Status status = Status::Confirmed;
  ojson data = ojson::object();
};

struct Report {
  std::vector<Stage> stages;
  ojson verdict = ojson::object();

  Stage& add(std::string name, Status status, ojson data = ojson::object()) {
    stages.push_back({std::move(name), status, std::move(data)});
    return stages.back();
  }
};

enum class Format { Json, Text };

ojson to_json(const Report& r);
Report report_from_json(const ojson& j);

/// JSON output is indented, key order is insertion order, and it ends with a
/// newline. Text output renders one "key: value" line per scalar, indented by
/// nesting depth.
std::string emit_report(const Report& r, Format format);

}  // namespace galint
