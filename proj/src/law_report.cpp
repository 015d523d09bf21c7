#include "ternalg/law_report.hpp"

namespace ternalg {

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::Total:
      return "total";
    case Mode::Partial:
      return "partial";
    case Mode::Weak:
      return "weak";
  }
  return "?";
}

bool LawReport::passed() const { return violation_count() == 0; }

std::size_t LawReport::violation_count() const {
  std::size_t n = violations.size();
  for (const auto& p : parts) n += p.violation_count();
  return n;
}

const LawReport* LawReport::find(std::string_view name) const {
  if (law == name) return this;
  for (const auto& p : parts) {
    if (const LawReport* hit = p.find(name)) return hit;
  }
  return nullptr;
}

std::vector<std::string> LawReport::failing_laws() const {
  std::vector<std::string> out;
  if (!violations.empty()) out.push_back(law);
  for (const auto& p : parts) {
    for (auto& name : p.failing_laws()) out.push_back(std::move(name));
  }
  return out;
}

LawReport conjunction(std::string law, std::string statement, std::vector<LawReport> parts) {
  LawReport r;
  r.law = std::move(law);
  r.statement = std::move(statement);
  r.parts = std::move(parts);
  return r;
}

}  // namespace ternalg
