#pragma once

// Machine-readable verdicts shared by the theorem checks, the corpus suites
// and the CLI.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace grl {

using json = nlohmann::json;

struct Verdict {
  bool value = false;
  bool vacuous = false;
};

/// Outcome of one cross-check. `agreement` is false only when two
/// independently computed sides disagree, which signals an implementation
/// bug. A check whose hypotheses fail is reported with `applicable = false`.
struct CheckReport {
  std::string check;
  std::string subject;
  bool applicable = true;
  std::string skipped_reason;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  bool agreement = true;
  json details = json::object();

  void add(std::string name, bool value, bool vacuous = false) {
    verdicts.emplace_back(std::move(name), Verdict{value, vacuous});
  }
  const Verdict* find(const std::string& name) const;
  /// Sets `agreement` from the named verdicts all being equal.
  void require_equal(const std::vector<std::string>& names);
  /// Marks the check as inapplicable.
  void skip(std::string reason);
};

json to_json(const CheckReport& report);

/// Truncates every array of objects longer than `cap` found under `node`,
/// recording the original length in a sibling "<key>_total".
void cap_witnesses(json& node, std::size_t cap);

}  // namespace grl
