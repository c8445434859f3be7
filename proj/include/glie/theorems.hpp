#ifndef GLIE_THEOREMS_HPP
#define GLIE_THEOREMS_HPP

#include <span>

#include "json.hpp"

#include "glie/classify.hpp"

namespace glie {

enum class TheoremStatus { verified, counterexample };
std::string status_name(TheoremStatus s);

/// One suite entry in the stable machine schema: id, status, first witness
/// in canonical order (null when verified), quantifier tuples examined, and
/// elapsed milliseconds (zero unless timing collection was switched on; the
/// default keeps reports byte-reproducible).
struct TheoremEntryResult {
  std::string id;
  TheoremStatus status;
  nlohmann::json witness;  // null or {algebra, items[...]}
  long long instances = 0;
  long long millis = 0;
  bool operator==(const TheoremEntryResult&) const = default;
};

struct TheoremReport {
  int version = 1;
  QuantifierVariant variant;
  std::vector<TheoremEntryResult> entries;
  bool operator==(const TheoremReport&) const = default;
};

/// Static description of a suite entry, for the human-readable rendering.
struct TheoremInfo {
  const char* id;
  const char* summary;
  bool variant_sensitive;
};
std::span<const TheoremInfo> theorem_catalog();

struct SuiteOptions {
  int jobs = 1;          // worker threads for (entry, algebra) cells
  bool timings = false;  // fill millis with wall-clock measurements
  EnumLimits limits;
};

/// A completed run: the report plus which corpus entries were actually
/// decided (rational-field entries only support the constructive layer and
/// are listed as skipped).
struct SuiteRun {
  TheoremReport report;
  std::vector<std::string> corpus;
  std::vector<std::string> skipped;
};

/// Evaluates every catalogued statement against every finite-field corpus
/// entry by exhaustive search. VERIFIED means no counterexample exists in
/// the searched space, never a proof; COUNTEREXAMPLE carries the first
/// witness in canonical order. Results are deterministic for a fixed corpus
/// and variant, independent of the job count.
SuiteRun theorem_suite(std::span<const AlgebraPtr> corpus, QuantifierVariant v,
                       const SuiteOptions& opts = {});

/// JSON encodings shared by the suite and the report emitters.
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json vector_json(const Vector& v);
nlohmann::json subspace_json(const Subspace& s);
nlohmann::json witness_json(const std::string& algebra, const Witness& w);

}  // namespace glie

#endif
