#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "etaq/serialize.hpp"
#include "etaq/suites.hpp"

using namespace etaq;

namespace {

std::set<std::string> failure_set(const SuiteReport& report) {
  auto ids = report.failures();
  return {ids.begin(), ids.end()};
}

const SuiteOptions small_options{400, 3, 3, 1};

}  // namespace

TEST_CASE("inverse delta reference") {
  Gf2Series ref = inverse_delta_reference(300);
  CHECK(ref.val() == -1);
  CHECK(ref.valid_to() == 300);
  CHECK(ref.coeff(-1) == 1);
  for (Exp n = 0; n <= 6; ++n) CHECK(ref.coeff(n) == 0);
  CHECK(ref.coeff(7) == 1);  // 30178575

  Catalog catalog;
  const Gf2Series& j = *catalog.expand({HauptKind::J, 0}, 300).bits;
  CHECK(agree_on(ref, j, -1, 300));
}

TEST_CASE("suite read ids") {
  auto ids = suite_read_ids();
  REQUIRE(ids.size() == 23);
  CHECK(ids.front() == HauptmodulId{HauptKind::J, 0});
  CHECK(std::count_if(ids.begin(), ids.end(), [](const HauptmodulId& id) {
          return id.kind == HauptKind::G_PLUS;
        }) == 4);
  CHECK(std::find(ids.begin(), ids.end(), HauptmodulId{HauptKind::G_PLUS, 2}) == ids.end());
  std::set<std::string> names;
  for (const auto& id : ids) names.insert(to_string(id));
  CHECK(names.size() == ids.size());
}

TEST_CASE("stages at reduced scale") {
  Catalog catalog;

  StageResult collapse = stage_collapse(catalog, 400);
  CHECK(collapse.name == "collapse");
  CHECK(collapse.ok);
  CHECK(collapse.failures.empty());
  CHECK(collapse.details["checks"].size() == 17);

  StageResult support = stage_support(catalog, 400);
  CHECK(support.ok);
  CHECK(support.details["checks"].size() == 15);

  StageResult lemmas = stage_lemmas(catalog, 400);
  CHECK(lemmas.ok);
  CHECK(lemmas.details["checks"].size() == 4);

  // The even level-7 split statement is genuinely false at t = 1; the sweep
  // stage must say so and nothing else.
  StageResult sweeps = stage_sweeps(catalog, 3, 3);
  CHECK_FALSE(sweeps.ok);
  CHECK(sweeps.failures == std::vector<std::string>{"sweeps/T42B"});
  CHECK(sweeps.details["checks"].size() == 14);

  StageResult table = stage_table(catalog, 3);
  CHECK(table.ok);
  CHECK(table.details["checks"].size() == 12);
}

TEST_CASE("run_verify_all aggregates the stages") {
  Catalog catalog;
  SuiteReport report = run_verify_all(catalog, small_options);
  REQUIRE(report.stages.size() == 5);
  CHECK(report.stages[0].name == "collapse");
  CHECK(report.stages[1].name == "support");
  CHECK(report.stages[2].name == "lemmas");
  CHECK(report.stages[3].name == "sweeps");
  CHECK(report.stages[4].name == "table");
  CHECK_FALSE(report.ok());
  CHECK(report.failures() == std::vector<std::string>{"sweeps/T42B"});

  // Reruns on the warmed catalog are byte-identical.
  SuiteReport again = run_verify_all(catalog, small_options);
  CHECK(to_json(report).dump() == to_json(again).dump());

  // The thread count shapes the schedule, never the findings.
  Catalog fresh;
  SuiteOptions threaded = small_options;
  threaded.threads = 4;
  SuiteReport parallel = run_verify_all(fresh, threaded);
  CHECK(to_json(parallel)["stages"] == to_json(report)["stages"]);
}

TEST_CASE("any single parity flip surfaces as a new failure id") {
  Catalog catalog;
  SuiteReport baseline_report = run_verify_all(catalog, small_options);
  std::set<std::string> baseline = failure_set(baseline_report);

  struct Flip {
    HauptmodulId id;
    Exp n;
  };
  // One target per stage detector family: reference collapse, case split,
  // support, plus-series recombination, split-series lemma.
  const Flip flips[] = {
      {{HauptKind::J, 0}, 399},
      {{HauptKind::J_PLUS, 3}, 101},
      {{HauptKind::F_PLUS, 7}, 103},
      {{HauptKind::G_PLUS, 13}, 57},
      {{HauptKind::J_LEVEL, 5}, 199},
  };
  for (const Flip& flip : flips) {
    CAPTURE(to_string(flip.id));
    CAPTURE(flip.n);
    Catalog forked = catalog.fork_with_bit_flip(flip.id, flip.n);
    SuiteReport corrupted = run_verify_all(forked, small_options);
    std::set<std::string> now = failure_set(corrupted);
    std::vector<std::string> fresh_ids;
    std::set_difference(now.begin(), now.end(), baseline.begin(), baseline.end(),
                        std::back_inserter(fresh_ids));
    CHECK_FALSE(fresh_ids.empty());
  }
}

TEST_CASE("suite report serialization") {
  Catalog catalog;
  SuiteReport report = run_verify_all(catalog, small_options);

  ordered_json js = to_json(report);
  CHECK(js["n_max"] == 400);
  CHECK(js["t_max"] == 3);
  CHECK(js["cor_t_max"] == 3);
  CHECK(js["threads"] == 1);
  CHECK(js["ok"] == false);
  REQUIRE(js["stages"].size() == 5);
  CHECK(js["stages"][0]["name"] == "collapse");
  CHECK(js["stages"][0]["ok"] == true);
  CHECK(js["stages"][3]["ok"] == false);
  std::size_t total_checks = 0;
  for (const auto& stage : js["stages"]) total_checks += stage["checks"].size();
  CHECK(total_checks == 62);

  std::string csv = suites_csv(report);
  CHECK(csv.rfind("stage,check,ok,info\n", 0) == 0);
  CHECK(csv.find("sweeps,T42B,false") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 63);

  FamilySummary t42b = verify_family(catalog, parse_family_id("T42B"), 1);
  ordered_json summary = to_json(t42b);
  CHECK(summary["family"] == "T42B");
  CHECK(summary["failed"] == 1);
  REQUIRE(summary.contains("failure"));
  CHECK(summary["failure"]["verdict"] == "FAIL");
  CHECK(summary["failure"]["witnesses"].empty());
  CHECK(summary["failure"]["hypothesis_holds"] == true);
  std::string row = summary_csv({t42b});
  CHECK(row.rfind("family,t_max,pass,skipped,failed,skipped_t,failure_t\n", 0) == 0);
  CHECK(row.find("T42B,1,0,0,1,,1") != std::string::npos);
}
