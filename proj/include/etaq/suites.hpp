#pragma once

#include <string>
#include <vector>

#include "etaq/parity.hpp"
#include "json.hpp"

namespace etaq {

using ordered_json = nlohmann::ordered_json;

// One verification stage. `failures` carries stable identifiers
// ("sweeps/T42B", "collapse/j2+ = 1/Delta", ...) so runs can be diffed; the
// fault-injection harness declares a flip detected when a failure id appears
// that the baseline run does not have.
struct StageResult {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
  ordered_json details;
};

struct SuiteOptions {
  Exp n_max = 50000;    // coefficient range for collapse/support/lemma scans
  Exp t_max = 50;       // theorem and table sweeps
  Exp cor_t_max = 70;   // corollary sweeps
  int threads = 1;
};

// Every catalog id the stages read; the flip-target sample space.
std::vector<HauptmodulId> suite_read_ids();

// 1/Delta mod 2 on [-1, P], built along a route disjoint from the catalog's
// j pipeline: Delta mod 2 is the cube-power series dilated by 8 and shifted
// by 1, inverted with the quadratic schoolbook recurrence.
Gf2Series inverse_delta_reference(Exp P);

// The five stages: mod-2 collapse identities, parity supports, shifted-sum
// lemmas, theorem/corollary interval sweeps, and the twelve table families.
StageResult stage_collapse(Catalog& catalog, Exp n_max);
StageResult stage_support(Catalog& catalog, Exp n_max);
StageResult stage_lemmas(Catalog& catalog, Exp n_max, int threads = 1);
StageResult stage_sweeps(Catalog& catalog, Exp t_max, Exp cor_t_max, int threads = 1);
StageResult stage_table(Catalog& catalog, Exp t_max, int threads = 1);

struct SuiteReport {
  SuiteOptions options;
  std::vector<StageResult> stages;
  bool ok() const {
    for (const auto& s : stages)
      if (!s.ok) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> ids;
    for (const auto& s : stages) ids.insert(ids.end(), s.failures.begin(), s.failures.end());
    return ids;
  }
};

// Expands every suite-read id to its planned precision, then runs the five
// stages in order. Deterministic for fixed options regardless of threads.
SuiteReport run_verify_all(Catalog& catalog, const SuiteOptions& options = {});

}  // namespace etaq
