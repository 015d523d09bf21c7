#pragma once

// JSON structure files and check reports. Scalars travel as strings in the
// literal grammar; indices in files are 1-based.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ternalg/bialgebra.hpp"
#include "ternalg/law_report.hpp"
#include "ternalg/matched_pair.hpp"
#include "ternalg/trimodule.hpp"

namespace ternalg::io {

enum class Kind { Algebra, Coalgebra, Bialgebra, Module, MatchedPair, Map };

std::string_view kind_name(Kind kind);

struct ModuleData {
  std::optional<TernaryAlgebra> algebra;  // acting algebra, when embedded
  std::size_t dim_a = 0;
  BihomModule module;
  TrimoduleActions actions;
};

/// Exactly one payload is set, selected by `kind`.
struct StructureFile {
  Kind kind = Kind::Algebra;
  std::optional<TernaryAlgebra> algebra;
  std::optional<TernaryCoalgebra> coalgebra;
  std::optional<TernaryBialgebra> bialgebra;
  std::optional<ModuleData> module;
  std::optional<MatchedPairData> matched_pair;
  std::optional<Matrix> map;
};

/// Throws ParseError (with 1-based line and column for JSON syntax errors) or DimensionMismatch.
StructureFile parse_structure(std::string_view text);
StructureFile load_structure(const std::string& path, std::string* raw = nullptr);

/// Canonical form: sorted indices, zero entries omitted, canonical scalar strings,
/// radicand set to the one field all entries live in. Ends with a newline.
std::string serialize(const StructureFile& file);
std::string serialize(const TernaryAlgebra& A);
std::string serialize(const TernaryCoalgebra& C);
std::string serialize(const TernaryBialgebra& B);
std::string serialize(const Matrix& f);

StructureFile wrap(TernaryAlgebra A);
StructureFile wrap(TernaryCoalgebra C);
StructureFile wrap(TernaryBialgebra B);
StructureFile wrap(Matrix f);

std::string sha256_hex(std::string_view bytes);

inline constexpr std::string_view kToolName = "ternalg";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct ReportContext {
  std::string input_digest;
  std::string command;
  std::string mode;
};

inline constexpr std::size_t kReportedViolations = 10;

/// One record per law, depth first; each record keeps its first ten violations.
std::string report_json(const ReportContext& ctx, const std::vector<LawReport>& laws);
std::string report_text(const ReportContext& ctx, const std::vector<LawReport>& laws);

}  // namespace ternalg::io
