#include "spintor/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace spintor {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}

}  // namespace

std::string report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (auto& item : r.items) {
    nlohmann::ordered_json c;
    c["name"] = item.name;
    c["status"] = status_name(item.status);
    // string-form residual keeps the serialization byte-stable
    c["max_residual"] = format_double(item.max_residual);
    c["samples"] = item.samples;
    if (!item.note.empty()) c["notes"] = item.note;
    j["checks"].push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "# " << r.command << " (seed " << r.seed << ")\n";
  for (auto& item : r.items) {
    os << "[" << status_name(item.status) << "] " << item.name
       << "  max_residual=" << format_double(item.max_residual)
       << "  samples=" << item.samples;
    if (!item.note.empty()) os << "  (" << item.note << ")";
    os << "\n";
  }
  os << (r.all_pass() ? "ALL PASS\n" : "FAILURES PRESENT\n");
  return os.str();
}

}  // namespace spintor
