#include "etaq/suites.hpp"

#include <algorithm>

#include "etaq/eta.hpp"

namespace etaq {

namespace {

std::optional<Exp> first_mismatch(const Gf2Series& a, const Gf2Series& b, Exp lo, Exp hi) {
  for (Exp n = lo; n <= hi; ++n) {
    if (a.coeff(n) != b.coeff(n)) return n;
  }
  return std::nullopt;
}

Exp residue_of(Exp n, Exp modulus) { return ((n % modulus) + modulus) % modulus; }

class StageBuilder {
 public:
  explicit StageBuilder(StageResult& stage) : stage_(stage) {
    checks_ = ordered_json::array();
  }

  ordered_json& add(const std::string& name, bool ok) {
    checks_.push_back(ordered_json{{"name", name}, {"ok", ok}});
    if (!ok) {
      stage_.ok = false;
      stage_.failures.push_back(stage_.name + "/" + name);
    }
    return checks_.back();
  }

  void finish() { stage_.details["checks"] = std::move(checks_); }

 private:
  StageResult& stage_;
  ordered_json checks_;
};

}  // namespace

std::vector<HauptmodulId> suite_read_ids() {
  std::vector<HauptmodulId> ids;
  ids.push_back({HauptKind::J, 0});
  for (int N : {2, 3, 4, 5, 7, 13}) ids.push_back({HauptKind::J_PLUS, N});
  for (int N : {2, 3, 4, 5, 7, 13}) ids.push_back({HauptKind::J_LEVEL, N});
  for (int N : {2, 3, 4, 5, 7, 13}) ids.push_back({HauptKind::F_PLUS, N});
  for (int N : {3, 5, 7, 13}) ids.push_back({HauptKind::G_PLUS, N});
  return ids;
}

Gf2Series inverse_delta_reference(Exp P) {
  // Want the product series on [1, P+2] so the inverse window reaches P.
  Exp cube_top = std::max<Exp>(0, (P - 6 + 7) / 8);
  Gf2Series cube = reduce_mod2(jacobi_cube_expand(cube_top));
  Gf2Series delta = cube.dilated(8).shifted(1).truncated(checked_add(P, 2));
  return inverse_naive(delta);
}

StageResult stage_collapse(Catalog& catalog, Exp n_max) {
  StageResult stage;
  stage.name = "collapse";
  stage.details = ordered_json::object();
  stage.details["n_max"] = static_cast<long long>(n_max);
  StageBuilder builder(stage);

  auto check_equal = [&](const std::string& name, const Gf2Series& a, const Gf2Series& b,
                         Exp lo) {
    bool ok = agree_on(a, b, lo, n_max);
    ordered_json& entry = builder.add(name, ok);
    if (!ok) entry["first_mismatch"] = static_cast<long long>(*first_mismatch(a, b, lo, n_max));
  };

  Gf2Series ref = inverse_delta_reference(n_max);
  const Gf2Series& j = *catalog.expand({HauptKind::J, 0}, n_max).bits;
  check_equal("j = 1/Delta", j, ref, -1);
  check_equal("j2+ = 1/Delta", *catalog.expand({HauptKind::J_PLUS, 2}, n_max).bits, ref, -1);
  check_equal("j4+ = 1/Delta", *catalog.expand({HauptKind::J_PLUS, 4}, n_max).bits, ref, -1);

  for (int N : {2, 3, 4, 5, 7, 13}) {
    const Gf2Series& jN = *catalog.expand({HauptKind::J_LEVEL, N}, n_max).bits;
    const Gf2Series& fN = *catalog.expand({HauptKind::F_PLUS, N}, n_max).bits;
    check_equal("j" + std::to_string(N) + " = f" + std::to_string(N) + "+", jN, fN, -1);
  }
  for (int N : {2, 4}) {
    check_equal("j" + std::to_string(N) + "+ = j" + std::to_string(N),
                *catalog.expand({HauptKind::J_PLUS, N}, n_max).bits,
                *catalog.expand({HauptKind::J_LEVEL, N}, n_max).bits, -1);
  }
  for (int N : {3, 5, 7, 13}) {
    std::string tag = std::to_string(N);
    Gf2Series sum = *catalog.expand({HauptKind::J_LEVEL, N}, n_max).bits +
                    *catalog.expand({HauptKind::G_PLUS, N}, n_max).bits;
    check_equal("j" + tag + "+ = j" + tag + " xor g" + tag + "+",
                *catalog.expand({HauptKind::J_PLUS, N}, n_max).bits, sum, -1);
  }

  // On odd residues the plus-series parity must come from the matching split
  // half alone.
  for (int N : {3, 7}) {
    std::string tag = std::to_string(N);
    const Gf2Series& c = *catalog.expand({HauptKind::J_PLUS, N}, n_max).bits;
    const Gf2Series& f = *catalog.expand({HauptKind::F_PLUS, N}, n_max).bits;
    const Gf2Series& g = *catalog.expand({HauptKind::G_PLUS, N}, n_max).bits;
    std::optional<Exp> bad;
    for (Exp n = -1; n <= n_max && !bad; ++n) {
      Exp r = residue_of(n, 4);
      if (r == 3 && c.coeff(n) != f.coeff(n)) bad = n;
      if (r == 1 && c.coeff(n) != g.coeff(n)) bad = n;
    }
    ordered_json& entry = builder.add("c" + tag + "+ case split", !bad);
    if (bad) entry["first_mismatch"] = static_cast<long long>(*bad);
  }

  builder.finish();
  return stage;
}

StageResult stage_support(Catalog& catalog, Exp n_max) {
  StageResult stage;
  stage.name = "support";
  stage.details = ordered_json::object();
  stage.details["n_max"] = static_cast<long long>(n_max);
  StageBuilder builder(stage);

  auto check_support = [&](const std::string& name, const HauptmodulId& id, Exp modulus,
                           std::vector<Exp> allowed) {
    const Gf2Series& bits = *catalog.expand(id, n_max).bits;
    std::optional<Exp> bad;
    for (Exp n = bits.val(); n <= n_max && !bad; ++n) {
      if (bits.coeff(n) == 0) continue;
      if (std::find(allowed.begin(), allowed.end(), residue_of(n, modulus)) == allowed.end())
        bad = n;
    }
    ordered_json& entry = builder.add(name, !bad);
    if (bad) entry["odd_coefficient_at"] = static_cast<long long>(*bad);
  };

  check_support("c support in 7 mod 8", {HauptKind::J, 0}, 8, {7});
  check_support("c2+ support in 7 mod 8", {HauptKind::J_PLUS, 2}, 8, {7});
  check_support("c4+ support in 7 mod 8", {HauptKind::J_PLUS, 4}, 8, {7});
  check_support("c3+ even on 0,2 mod 4", {HauptKind::J_PLUS, 3}, 4, {1, 3});
  check_support("c7+ even on 0,2 mod 4", {HauptKind::J_PLUS, 7}, 4, {1, 3});
  check_support("f3+ support in 3 mod 4", {HauptKind::F_PLUS, 3}, 4, {3});
  check_support("f7+ support in 3 mod 4", {HauptKind::F_PLUS, 7}, 4, {3});
  check_support("g3+ support in 1 mod 4", {HauptKind::G_PLUS, 3}, 4, {1});
  check_support("g7+ support in 1 mod 4", {HauptKind::G_PLUS, 7}, 4, {1});
  check_support("c2 support in 7 mod 8", {HauptKind::J_LEVEL, 2}, 8, {7});
  check_support("c3 support in 3 mod 4", {HauptKind::J_LEVEL, 3}, 4, {3});
  check_support("c4 support in 7 mod 8", {HauptKind::J_LEVEL, 4}, 8, {7});
  check_support("c5 support in 1 mod 2", {HauptKind::J_LEVEL, 5}, 2, {1});
  check_support("c7 support in 3 mod 4", {HauptKind::J_LEVEL, 7}, 4, {3});
  check_support("c13 support in 1 mod 2", {HauptKind::J_LEVEL, 13}, 2, {1});

  builder.finish();
  return stage;
}

StageResult stage_lemmas(Catalog& catalog, Exp n_max, int threads) {
  StageResult stage;
  stage.name = "lemmas";
  stage.details = ordered_json::object();
  stage.details["n_max"] = static_cast<long long>(n_max);
  StageBuilder builder(stage);

  for (LemmaId lemma : {LemmaId::A3, LemmaId::B3, LemmaId::A7, LemmaId::B7}) {
    LemmaReport report = verify_lemma(catalog, lemma, n_max, -1, threads);
    ordered_json& entry = builder.add("lemma " + to_string(lemma), report.ok());
    entry["counterexamples"] = static_cast<long long>(report.counterexamples.size());
    if (!report.ok()) {
      ordered_json sample = ordered_json::array();
      for (std::size_t i = 0; i < report.counterexamples.size() && i < 10; ++i)
        sample.push_back(static_cast<long long>(report.counterexamples[i]));
      entry["first"] = std::move(sample);
    }
  }

  builder.finish();
  return stage;
}

namespace {

void run_family_checks(Catalog& catalog, StageBuilder& builder,
                       const std::vector<FamilyId>& families, Exp t_max, Exp cor_t_max,
                       int threads) {
  for (const auto& family : families) {
    Exp bound = family.group == FamilyId::Group::COR21 ? cor_t_max : t_max;
    FamilySummary summary = verify_family(catalog, family, bound, -1, threads);
    ordered_json& entry = builder.add(to_string(family), summary.ok());
    entry["t_max"] = static_cast<long long>(bound);
    entry["pass"] = static_cast<long long>(summary.pass);
    entry["skipped"] = static_cast<long long>(summary.skipped);
    entry["failed"] = static_cast<long long>(summary.failed);
    ordered_json skipped = ordered_json::array();
    for (Exp t : summary.skipped_t) skipped.push_back(static_cast<long long>(t));
    entry["skipped_t"] = std::move(skipped);
    if (summary.failure) {
      const WitnessReport& f = *summary.failure;
      entry["failure"] = ordered_json{
          {"t", static_cast<long long>(f.claim.t)},
          {"interval", ordered_json::array({static_cast<long long>(f.claim.lo),
                                            static_cast<long long>(f.claim.hi)})},
          {"expected", to_string(f.claim.expected)},
          {"hypothesis_holds", f.hypothesis_holds}};
    }
  }
}

}  // namespace

StageResult stage_sweeps(Catalog& catalog, Exp t_max, Exp cor_t_max, int threads) {
  StageResult stage;
  stage.name = "sweeps";
  stage.details = ordered_json::object();
  stage.details["t_max"] = static_cast<long long>(t_max);
  stage.details["cor_t_max"] = static_cast<long long>(cor_t_max);
  StageBuilder builder(stage);
  run_family_checks(catalog, builder, theorem_families(), t_max, cor_t_max, threads);
  builder.finish();
  return stage;
}

StageResult stage_table(Catalog& catalog, Exp t_max, int threads) {
  StageResult stage;
  stage.name = "table";
  stage.details = ordered_json::object();
  stage.details["t_max"] = static_cast<long long>(t_max);
  StageBuilder builder(stage);
  run_family_checks(catalog, builder, table_families(), t_max, t_max, threads);
  builder.finish();
  return stage;
}

SuiteReport run_verify_all(Catalog& catalog, const SuiteOptions& options) {
  // One expansion per id at its maximum use across the stages, so no series
  // is rebuilt at a larger precision mid-run.
  Exp nm = options.n_max;
  Exp split_base = checked_add(nm, 1);  // lemma scans read up to n_max + 1

  auto family_need = [&](FamilyId::Group group, ParityKind parity, HauptKind kind, int level,
                         Exp bound) {
    return required_precision({group, parity, {kind, level}}, bound);
  };

  Exp cor = options.cor_t_max;
  Exp cor_need = cor >= 1 ? family_need(FamilyId::Group::COR21, ParityKind::EVEN, HauptKind::J,
                                        0, cor)
                          : nm;
  catalog.expand({HauptKind::J, 0}, std::max(nm, cor_need));
  for (int N : {2, 4})
    catalog.expand({HauptKind::J_PLUS, N}, std::max(nm, cor_need));
  for (int N : {3, 5, 7, 13}) catalog.expand({HauptKind::J_PLUS, N}, nm);

  for (int N : {2, 3, 4, 5, 7, 13}) {
    Exp need = nm;
    if (options.t_max >= 1) {
      need = std::max(need, family_need(FamilyId::Group::TABLE5, ParityKind::ODD,
                                        HauptKind::J_LEVEL, N, options.t_max));
      need = std::max(need, family_need(FamilyId::Group::TABLE5, ParityKind::EVEN,
                                        HauptKind::J_LEVEL, N, options.t_max));
    }
    catalog.expand({HauptKind::J_LEVEL, N}, need);
  }

  auto split_need = [&](FamilyId::Group group, HauptKind kind, int level) {
    Exp need = split_base;
    if (options.t_max >= 1) {
      need = std::max(need, family_need(group, ParityKind::ODD, kind, level, options.t_max));
      need = std::max(need, family_need(group, ParityKind::EVEN, kind, level, options.t_max));
    }
    return need;
  };
  catalog.expand({HauptKind::F_PLUS, 3},
                 split_need(FamilyId::Group::T31, HauptKind::F_PLUS, 3));
  catalog.expand({HauptKind::G_PLUS, 3},
                 split_need(FamilyId::Group::T32, HauptKind::G_PLUS, 3));
  catalog.expand({HauptKind::F_PLUS, 7},
                 split_need(FamilyId::Group::T41, HauptKind::F_PLUS, 7));
  catalog.expand({HauptKind::G_PLUS, 7},
                 split_need(FamilyId::Group::T42, HauptKind::G_PLUS, 7));
  for (int N : {2, 4, 5, 13}) catalog.expand({HauptKind::F_PLUS, N}, nm);
  for (int N : {5, 13}) catalog.expand({HauptKind::G_PLUS, N}, nm);

  SuiteReport report;
  report.options = options;
  report.stages.push_back(stage_collapse(catalog, nm));
  report.stages.push_back(stage_support(catalog, nm));
  report.stages.push_back(stage_lemmas(catalog, nm, options.threads));
  report.stages.push_back(stage_sweeps(catalog, options.t_max, options.cor_t_max,
                                       options.threads));
  report.stages.push_back(stage_table(catalog, options.t_max, options.threads));
  return report;
}

}  // namespace etaq
