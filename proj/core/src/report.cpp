#include "galint/report.hpp"

#include "galint/error.hpp"

namespace galint {

std::string to_string(Status s) {
  switch (s) {
    case Status::Confirmed:
      return "confirmed";
    case Status::Refuted:
      return "refuted";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Status status_from_string(const std::string& s) {
  if (s == "confirmed") return Status::Confirmed;
  if (s == "refuted") return Status::Refuted;
  if (s == "inconclusive") return Status::Inconclusive;
  throw InputError("unknown stage status '" + s + "'");
}

ojson to_json(const Report& r) {
  ojson stages = ojson::array();
  for (const Stage& s : r.stages)
    stages.push_back(ojson{{"name", s.name}, {"status", to_string(s.status)}, {"data", s.data}});
  return ojson{{"stages", std::move(stages)}, {"verdict", r.verdict}};
}

Report report_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("stages") || !j["stages"].is_array())
    throw InputError("report: expected an object with a 'stages' array");
  Report r;
  for (const auto& s : j["stages"]) {
    if (!s.is_object() || !s.contains("name") || !s.contains("status"))
      throw InputError("report: malformed stage record");
    r.stages.push_back({s["name"].get<std::string>(), status_from_string(s["status"].get<std::string>()),
                        s.value("data", ojson::object())});
  }
  r.verdict = j.value("verdict", ojson::object());
  return r;
}

namespace {

std::string scalar(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(const ojson& v, int depth, std::string& out) {
  std::string pad(static_cast<size_t>(2 * depth), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out += pad + k + ":\n";
        render(x, depth + 1, out);
      } else {
        out += pad + k + ": " + (x.is_structured() ? (x.is_array() ? "[]" : "{}") : scalar(x)) + "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured() && !x.empty()) {
        out += pad + "-\n";
        render(x, depth + 1, out);
      } else {
        out += pad + "- " + (x.is_structured() ? (x.is_array() ? "[]" : "{}") : scalar(x)) + "\n";
      }
    }
  } else {
    out += pad + scalar(v) + "\n";
  }
}

}  // namespace

std::string emit_report(const Report& r, Format format) {
  if (format == Format::Json) return to_json(r).dump(2) + "\n";
  std::string out;
  for (const Stage& s : r.stages) {
    out += "stage " + s.name + ": " + to_string(s.status) + "\n";
    render(s.data, 1, out);
  }
  if (!r.verdict.empty()) {
    out += "verdict:\n";
    render(r.verdict, 0, out);
  }
  return out;
}

}  // namespace galint
