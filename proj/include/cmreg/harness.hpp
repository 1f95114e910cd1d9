#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/ideal.hpp"

namespace cmreg {

// Configuration for one verification campaign. `trials` is the number of
// *accepted* trials the run must produce; draws whose hypotheses fail are
// recorded and retried. The corpus campaigns ("cone", "reg-equiv") ignore
// `trials` and walk the whole corpus instead.
struct CampaignConfig {
  std::string campaign;
  int trials = 100;
  uint64_t seed = 1;
  int ambient_n = 2;   // projective dimension; the ring has ambient_n + 1 variables
  int d = 3;           // size parameter: number of subspaces / generator budget
  uint32_t char_p = 32003;
  int window = -1;     // vanishing window for equivalence checks; -1 = default
};

enum class Verdict { pass, fail, hypothesis_rejected };

std::string verdict_name(Verdict v);

// One draw of a campaign. `replay` is a complete input document in the tool's
// file format; a failing trial can be re-run from it directly. `wall_ms` is
// informational and never part of the canonical report.
struct TrialRecord {
  uint64_t draw_index = 0;
  Verdict verdict = Verdict::pass;
  std::string description;
  std::vector<std::pair<std::string, std::string>> quantities;
  std::string replay;
  int64_t wall_ms = 0;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<TrialRecord> records;
  int target = 0;  // accepted-trial count required for the run to pass
  int accepted = 0;
  int passed = 0;
  int failed = 0;
  int rejected = 0;
  uint64_t draws = 0;

  bool ok() const { return failed == 0 && accepted == target && accepted > 0; }
};

// Runs one campaign to completion. Campaign names: "thm-prod",
// "disjoint-union", "lines", "two-planes", "cone", "reg-equiv".
// Identical configurations produce identical results.
CampaignResult run_campaign(const CampaignConfig& config);

// Fixed corpus of small ideals used by the corpus campaigns and the
// acceptance suite. Entries are deterministic for a given characteristic.
struct CorpusEntry {
  std::string name;
  Ideal ideal;
};

std::vector<CorpusEntry> corpus_ideals(uint32_t p);

}  // namespace cmreg
