#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/scalar.hpp"

namespace ternalg {

enum class Mode { Total, Partial, Weak };
using AssocMode = Mode;
using CoassocMode = Mode;

std::string_view mode_name(Mode mode);

struct Violation {
  std::vector<std::size_t> index;  // 1-based basis indices
  std::string relation;            // which equality or sum failed
  std::vector<QuadScalar> residual;
};

/// Verdict of one named law; composite checks nest their clauses in `parts`.
struct LawReport {
  std::string law;
  std::string statement;
  std::vector<Violation> violations;
  std::vector<LawReport> parts;

  bool passed() const;
  // Own violations plus those of every nested part.
  std::size_t violation_count() const;
  const LawReport* find(std::string_view name) const;
  // Names of the innermost failing laws, depth first.
  std::vector<std::string> failing_laws() const;
};

LawReport conjunction(std::string law, std::string statement, std::vector<LawReport> parts);

}  // namespace ternalg
