#include "simson/verify/report.hpp"

#include <algorithm>

namespace simson::verify {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

const CheckResult* Report::find(std::string_view name) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

std::string Report::to_text() const {
  std::string out = "params: " + params + "\n";
  if (!flags.empty()) {
    out += "flags:";
    for (const auto& f : flags) out += " " + f;
    out += "\n";
  }
  for (const auto& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name;
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
    for (const auto& d : c.witness) out += "    " + d.key + ": " + d.value + "\n";
  }
  out += std::to_string(passed()) + "/" + std::to_string(checks.size()) + " checks pass\n";
  return out;
}

}  // namespace simson::verify
