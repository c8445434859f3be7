#ifndef GLIE_IO_HPP
#define GLIE_IO_HPP

#include "glie/theorems.hpp"

namespace glie {

/// Syntax error in an on-disk document, with 1-based position.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Semantic error in an otherwise well-formed document; the message names
/// the offending field.
class semantic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structurally valid algebra whose axioms fail validation.
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string msg, std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Document layout (UTF-8 JSON):
///   { "name": ..., "field": {"kind": "prime", "p": 5} | {"kind": "rational"},
///     "group": {"free_rank": r, "torsion": [m...]},
///     "basis": [{"name": ..., "degree": [..]}, ...],
///     "brackets": [{"i": i, "j": j, "coeffs": {"k": scalar, ...}}, ...] }
/// Prime-field scalars are integers in [0,p); rational scalars are "n/d"
/// strings. Bracket pairs appear for i < j only; omitted pairs are zero.
AlgebraPtr parse_algebra(const std::string& text, bool allow_invalid = false);
std::string serialize_algebra(const GradedLieAlgebra& L);

/// Ideal presentations: {"generators": [[...], ...]}, a bare generator
/// array, or {"preset": "zero" | "full" | "derived"} (also accepted as a
/// bare preset word).
Subspace parse_ideal_spec(const std::string& text, const AlgebraPtr& L);

Vector parse_vector(const std::string& text, const GradedLieAlgebra& L);

/// Stable machine format: {"version", "variant", "entries": [{"id",
/// "status", "witness", "instances", "millis"}]}. Byte-deterministic for
/// identical reports.
std::string emit_report_json(const TheoremReport& report);
TheoremReport parse_report_json(const std::string& text);

/// Human-readable rendering: one status line per entry plus witnesses.
std::string emit_report_text(const SuiteRun& run);

/// Compact one-line witness rendering shared with the CLI.
std::string witness_text(const nlohmann::json& witness);

}  // namespace glie

#endif
