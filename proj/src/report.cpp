#include "trusskit/report.hpp"

#include <algorithm>
#include <iomanip>

namespace trusskit {
namespace {

std::string render(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

void Report::add(std::string name, Json value, bool passed, bool exhaustive) {
  findings.push_back({std::move(name), std::move(value), passed, exhaustive});
}

bool Report::passed() const {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.passed; });
}

Json Report::to_json() const {
  Json list = Json::array();
  for (const auto& f : findings) {
    list.push_back({{"name", f.name}, {"value", f.value}, {"passed", f.passed}, {"exhaustive", f.exhaustive}});
  }
  Json j{{"command", command}, {"inputs", inputs}, {"findings", std::move(list)}};
  if (!witnesses.empty()) j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  j["passed"] = passed();
  return j;
}

void Report::print_table(std::ostream& out, std::chrono::duration<double> elapsed) const {
  out << command;
  for (const auto& [key, value] : inputs.items()) out << "  " << key << "=" << render(value);
  out << "\n";

  std::size_t name_width = 7;
  std::size_t value_width = 5;
  std::vector<std::string> values;
  for (const auto& f : findings) {
    values.push_back(render(f.value));
    name_width = std::max(name_width, f.name.size());
    value_width = std::max(value_width, std::min<std::size_t>(values.back().size(), 40));
  }
  out << std::left << std::setw(static_cast<int>(name_width + 2)) << "finding" << std::setw(static_cast<int>(value_width + 2))
      << "value" << std::setw(8) << "status" << "exhaustive\n";
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const auto& f = findings[i];
    out << std::setw(static_cast<int>(name_width + 2)) << f.name << std::setw(static_cast<int>(value_width + 2)) << values[i]
        << std::setw(8) << (f.passed ? "pass" : "FAIL") << (f.exhaustive ? "yes" : "no") << "\n";
  }
  out << std::right;
  for (const auto& note : notes) out << "note: " << note << "\n";
  out << "elapsed: " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  out.unsetf(std::ios::fixed);
}

}  // namespace trusskit
