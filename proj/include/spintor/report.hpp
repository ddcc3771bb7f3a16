#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spintor {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double max_residual = 0.0;
  int samples = 0;
  std::string note;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, double residual, int samples,
           std::string note = "") {
    items.push_back({std::move(name),
                     pass ? CheckStatus::Pass : CheckStatus::Fail, residual,
                     samples, std::move(note)});
  }
  void add_skipped(std::string name, std::string note) {
    items.push_back({std::move(name), CheckStatus::Skipped, 0.0, 0,
                     std::move(note)});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (CheckItem item : other.items) {
      item.name = prefix.empty() ? item.name : prefix + "." + item.name;
      items.push_back(std::move(item));
    }
  }
  bool all_pass() const {
    for (auto& i : items)
      if (i.status == CheckStatus::Fail) return false;
    return true;
  }
};

// Byte-stable serializations (fixed float formatting, ordered keys).
std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

// Stable float formatting shared by all report writers.
std::string format_double(double v);

}  // namespace spintor
