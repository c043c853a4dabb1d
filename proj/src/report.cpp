#include "grl/report.hpp"

namespace grl {

const Verdict* CheckReport::find(const std::string& name) const {
  for (const auto& [key, v] : verdicts) {
    if (key == name) return &v;
  }
  return nullptr;
}

void CheckReport::require_equal(const std::vector<std::string>& names) {
  const Verdict* first = nullptr;
  for (const auto& name : names) {
    const Verdict* v = find(name);
    if (!v) continue;
    if (!first) first = v;
    if (v->value != first->value) agreement = false;
  }
}

void CheckReport::skip(std::string reason) {
  applicable = false;
  skipped_reason = std::move(reason);
}

json to_json(const CheckReport& report) {
  json verdicts = json::object();
  for (const auto& [name, v] : report.verdicts) {
    verdicts[name] = {{"value", v.value}, {"vacuous", v.vacuous}};
  }
  json out = {{"check", report.check},
              {"subject", report.subject},
              {"applicable", report.applicable},
              {"agreement", report.agreement},
              {"verdicts", verdicts},
              {"details", report.details}};
  if (!report.applicable) out["skipped_reason"] = report.skipped_reason;
  return out;
}

void cap_witnesses(json& node, std::size_t cap) {
  if (node.is_object()) {
    json totals = json::object();
    for (auto it = node.begin(); it != node.end(); ++it) {
      json& child = it.value();
      if (child.is_array() && child.size() > cap && !child.empty() && child.front().is_object()) {
        totals[it.key() + "_total"] = child.size();
        child.erase(child.begin() + static_cast<std::ptrdiff_t>(cap), child.end());
      }
      cap_witnesses(child, cap);
    }
    for (auto it = totals.begin(); it != totals.end(); ++it) node[it.key()] = it.value();
  } else if (node.is_array()) {
    for (auto& child : node) cap_witnesses(child, cap);
  }
}

}  // namespace grl
