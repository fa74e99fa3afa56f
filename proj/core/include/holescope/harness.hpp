#pragma once
// Claim registry: every checkable statement about the drawing families,
// executed over a configurable corpus. Reports are deterministic — identical
// corpus, filter, and flags produce byte-identical JSON (timings are zeroed
// unless requested).

#include <cstdint>
#include <string>
#include <vector>

#include "holescope/json_io.hpp"

namespace holescope {

inline constexpr const char* kReportSchema = "holescope-report-v1";

struct ClaimResult {
  std::string claim_id;
  std::string corpus_item;        // drawing label, or family tag for sampled runs
  std::string verdict;            // pass / fail / skip / consistent (sampled)
  nlohmann::ordered_json witness; // witness or re-checkable counterexample
  long long runtime_ms{};
};

struct SampledSpec {
  int count{};
  int n{};
  std::uint64_t seed{};
};

struct CorpusSpec {
  struct Family {
    std::string family;        // convex | twisted | twisted-prime | dn | random-convex
    std::vector<int> n_values; // explicit sizes (closed-form families)
    int count{};               // random-convex only
    int n_min{}, n_max{};      // random-convex only
    std::uint64_t seed{};      // random-convex only
  };
  std::vector<Family> families;
  std::vector<std::string> point_files;
  SampledSpec hole6;      // 6-hole consistency sampling
  SampledSpec colorings;  // monochromatic 4-triangulation sampling
  std::string base_dir;   // directory point_files resolve against (not serialized)
};

/// The checked-in corpus: closed-form families at exhaustive sizes plus 50
/// seeded random geometric instances.
CorpusSpec default_corpus();
CorpusSpec corpus_from_json(const nlohmann::json& j, std::string base_dir = {});
nlohmann::ordered_json corpus_to_json(const CorpusSpec& c);

struct HarnessOptions {
  std::vector<std::string> claims;  // empty = all registered claims
  bool include_sampled{};
  bool timings{};
  int threads{};  // <= 0: HOLESCOPE_THREADS env var, then hardware
};

/// Registered claim ids in report order.
const std::vector<std::string>& known_claims();

/// Execute the selected claims over the corpus. Unknown claim ids throw
/// std::invalid_argument. Items failing validate() yield skip verdicts with
/// the violation as reason.
std::vector<ClaimResult> run_claims(const CorpusSpec& corpus,
                                    const HarnessOptions& opt);

struct CensusRow {
  std::string family;
  int n{};
  int k{};
  long long count{};
};

/// Empty-k-cycle counts for one family across sizes (sizes incompatible with
/// the family are skipped).
std::vector<CensusRow> census_empty_cycles(const std::string& family,
                                           const std::vector<int>& sizes,
                                           int k);

/// Schema-versioned report with stable field order.
nlohmann::ordered_json report_document(const CorpusSpec& corpus,
                                       const HarnessOptions& opt,
                                       const std::vector<ClaimResult>& results,
                                       const std::vector<CensusRow>& census = {});

}  // namespace holescope
