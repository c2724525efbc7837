#include "etaq/serialize.hpp"

#include <sstream>

namespace etaq {

namespace {

ordered_json exp_array(const std::vector<Exp>& values) {
  ordered_json arr = ordered_json::array();
  for (Exp v : values) arr.push_back(static_cast<long long>(v));
  return arr;
}

std::string joined(const std::vector<Exp>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<Exp> exps_of(const ordered_json& arr) {
  std::vector<Exp> out;
  for (const auto& v : arr) out.push_back(v.get<long long>());
  return out;
}

void put_id(ordered_json& payload, const HauptmodulId& id) {
  payload["id"] = to_string(id);
  if (id.level != 0) payload["N"] = id.level;
}

ordered_json family_cell(Catalog& catalog, const FamilyId& family, Exp t_max, int threads) {
  IntervalClaim shape = make_claim(family, 1);
  FamilySummary summary = verify_family(catalog, family, t_max, -1, threads);
  ordered_json cell;
  cell["interval"] = shape.interval_display;
  cell["hypothesis"] = shape.hypothesis ? ordered_json(shape.hypothesis->display)
                                        : ordered_json(nullptr);
  cell["pass"] = static_cast<long long>(summary.pass);
  cell["skipped"] = static_cast<long long>(summary.skipped);
  cell["failed"] = static_cast<long long>(summary.failed);
  cell["skipped_t"] = exp_array(summary.skipped_t);
  if (summary.failure) cell["failure"] = to_json(*summary.failure);
  return cell;
}

}  // namespace

ordered_json to_json(const Gf2Series& s) {
  ordered_json out;
  out["ring"] = "GF2";
  out["val"] = static_cast<long long>(s.val());
  out["valid_to"] = static_cast<long long>(s.valid_to());
  ordered_json coeffs = ordered_json::array();
  for (Exp n = s.val(); n <= s.valid_to(); ++n) coeffs.push_back(s.coeff(n));
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json to_json(const IntSeries& s) {
  ordered_json out;
  out["ring"] = "INT";
  out["val"] = static_cast<long long>(s.val());
  out["valid_to"] = static_cast<long long>(s.valid_to());
  ordered_json coeffs = ordered_json::array();
  for (Exp n = s.val(); n <= s.valid_to(); ++n) coeffs.push_back(s.coeff(n).get_str());
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json expand_payload(const HauptmodulId& id, Exp precision, const IntSeries& s) {
  ordered_json out;
  put_id(out, id);
  out["precision"] = static_cast<long long>(precision);
  out["ring"] = "INT";
  out["val"] = static_cast<long long>(s.val());
  ordered_json coeffs = ordered_json::array();
  for (Exp n = s.val(); n <= s.valid_to(); ++n) coeffs.push_back(s.coeff(n).get_str());
  out["coeffs"] = std::move(coeffs);
  return out;
}

ordered_json expand_payload(const HauptmodulId& id, Exp precision, const Gf2Series& s) {
  ordered_json out;
  put_id(out, id);
  out["precision"] = static_cast<long long>(precision);
  out["ring"] = "GF2";
  out["val"] = static_cast<long long>(s.val());
  ordered_json bits = ordered_json::array();
  for (Exp n = s.val(); n <= s.valid_to(); ++n) bits.push_back(s.coeff(n));
  out["parity_bits"] = std::move(bits);
  return out;
}

ordered_json to_json(const LemmaReport& report) {
  ordered_json out;
  out["lemma"] = to_string(report.id);
  out["n_lo"] = static_cast<long long>(report.n_lo);
  out["n_hi"] = static_cast<long long>(report.n_hi);
  out["ok"] = report.ok();
  out["counterexamples"] = exp_array(report.counterexamples);
  return out;
}

ordered_json to_json(const WitnessReport& report) {
  const IntervalClaim& claim = report.claim;
  ordered_json out;
  out["family"] = to_string(claim.family);
  out["t"] = static_cast<long long>(claim.t);
  out["interval"] =
      ordered_json::array({static_cast<long long>(claim.lo), static_cast<long long>(claim.hi)});
  out["modulus"] = static_cast<long long>(claim.modulus);
  out["residue"] = static_cast<long long>(claim.residue);
  out["expected"] = to_string(claim.expected);
  out["hypothesis_holds"] = report.hypothesis_holds;
  out["witnesses"] = exp_array(report.witnesses);
  out["proof_position_witnesses"] = exp_array(report.proof_position_witnesses);
  out["verdict"] = to_string(report.verdict);
  return out;
}

ordered_json to_json(const FamilySummary& summary) {
  ordered_json out;
  out["family"] = to_string(summary.family);
  out["t_max"] = static_cast<long long>(summary.t_max);
  out["pass"] = static_cast<long long>(summary.pass);
  out["skipped"] = static_cast<long long>(summary.skipped);
  out["failed"] = static_cast<long long>(summary.failed);
  out["skipped_t"] = exp_array(summary.skipped_t);
  if (summary.failure) out["failure"] = to_json(*summary.failure);
  return out;
}

ordered_json to_json(const SuiteReport& report) {
  ordered_json out;
  out["n_max"] = static_cast<long long>(report.options.n_max);
  out["t_max"] = static_cast<long long>(report.options.t_max);
  out["cor_t_max"] = static_cast<long long>(report.options.cor_t_max);
  out["threads"] = report.options.threads;
  out["ok"] = report.ok();
  ordered_json stages = ordered_json::array();
  for (const auto& stage : report.stages) {
    ordered_json s;
    s["name"] = stage.name;
    s["ok"] = stage.ok;
    for (const auto& [key, value] : stage.details.items()) s[key] = value;
    stages.push_back(std::move(s));
  }
  out["stages"] = std::move(stages);
  return out;
}

ordered_json density_payload(const HauptmodulId& id, Exp modulus, Exp residue, Exp n_max,
                             const DensityStats& stats) {
  ordered_json out;
  put_id(out, id);
  out["modulus"] = static_cast<long long>(modulus);
  out["residue"] = static_cast<long long>(residue);
  out["n_max"] = static_cast<long long>(n_max);
  out["odd"] = static_cast<long long>(stats.odd);
  out["total"] = static_cast<long long>(stats.total);
  out["ratio"] = stats.ratio;
  return out;
}

ordered_json table5_payload(Catalog& catalog, Exp t_max, int threads) {
  ordered_json out;
  out["t_max"] = static_cast<long long>(t_max);
  ordered_json rows = ordered_json::array();
  for (int N : {2, 3, 4, 5, 7, 13}) {
    FamilyId odd{FamilyId::Group::TABLE5, ParityKind::ODD, {HauptKind::J_LEVEL, N}};
    FamilyId even{FamilyId::Group::TABLE5, ParityKind::EVEN, {HauptKind::J_LEVEL, N}};
    ordered_json row;
    row["N"] = N;
    row["progression"] = make_claim(odd, 1).progression_display;
    row["odd"] = family_cell(catalog, odd, t_max, threads);
    row["even"] = family_cell(catalog, even, t_max, threads);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string expand_csv(const ordered_json& payload) {
  std::string out = "n,coefficient\n";
  Exp val = payload["val"].get<long long>();
  const ordered_json& coeffs =
      payload.contains("coeffs") ? payload["coeffs"] : payload["parity_bits"];
  Exp n = val;
  for (const auto& c : coeffs) {
    out += std::to_string(n++);
    out += ',';
    out += c.is_string() ? c.get<std::string>() : std::to_string(c.get<long long>());
    out += '\n';
  }
  return out;
}

std::string lemma_csv(const LemmaReport& report) {
  std::string out = "lemma,n_lo,n_hi,ok,counterexamples\n";
  out += to_string(report.id) + ',' + std::to_string(report.n_lo) + ',' +
         std::to_string(report.n_hi) + ',' + (report.ok() ? "true" : "false") + ',' +
         joined(report.counterexamples) + '\n';
  return out;
}

std::string witness_csv(const WitnessReport& report) {
  const IntervalClaim& claim = report.claim;
  std::string out =
      "family,t,lo,hi,modulus,residue,expected,hypothesis_holds,verdict,witnesses,"
      "proof_position_witnesses\n";
  out += to_string(claim.family) + ',' + std::to_string(claim.t) + ',' +
         std::to_string(claim.lo) + ',' + std::to_string(claim.hi) + ',' +
         std::to_string(claim.modulus) + ',' + std::to_string(claim.residue) + ',' +
         to_string(claim.expected) + ',' + (report.hypothesis_holds ? "true" : "false") + ',' +
         to_string(report.verdict) + ',' + joined(report.witnesses) + ',' +
         joined(report.proof_position_witnesses) + '\n';
  return out;
}

std::string summary_csv(const std::vector<FamilySummary>& summaries) {
  std::string out = "family,t_max,pass,skipped,failed,skipped_t,failure_t\n";
  for (const auto& s : summaries) {
    out += to_string(s.family) + ',' + std::to_string(s.t_max) + ',' + std::to_string(s.pass) +
           ',' + std::to_string(s.skipped) + ',' + std::to_string(s.failed) + ',' +
           joined(s.skipped_t) + ',';
    if (s.failure) out += std::to_string(s.failure->claim.t);
    out += '\n';
  }
  return out;
}

std::string suites_csv(const SuiteReport& report) {
  std::string out = "stage,check,ok,info\n";
  for (const auto& stage : report.stages) {
    for (const auto& check : stage.details["checks"]) {
      out += stage.name + ',' + check["name"].get<std::string>() + ',' +
             (check["ok"].get<bool>() ? "true" : "false") + ',';
      std::string info;
      for (const auto& [key, value] : check.items()) {
        if (key == "name" || key == "ok") continue;
        if (!info.empty()) info += ';';
        info += key + '=' + value.dump();
      }
      out += info + '\n';
    }
  }
  return out;
}

std::string density_csv(const ordered_json& payload) {
  std::string out = "id,modulus,residue,n_max,odd,total,ratio\n";
  std::ostringstream ratio;
  ratio << payload["ratio"].get<double>();
  out += payload["id"].get<std::string>() + ',' +
         std::to_string(payload["modulus"].get<long long>()) + ',' +
         std::to_string(payload["residue"].get<long long>()) + ',' +
         std::to_string(payload["n_max"].get<long long>()) + ',' +
         std::to_string(payload["odd"].get<long long>()) + ',' +
         std::to_string(payload["total"].get<long long>()) + ',' + ratio.str() + '\n';
  return out;
}

std::string table5_csv(const ordered_json& payload) {
  std::string out = "N,progression,parity,interval,hypothesis,pass,skipped,failed,skipped_t\n";
  for (const auto& row : payload["rows"]) {
    for (const char* parity : {"odd", "even"}) {
      const ordered_json& cell = row[parity];
      out += std::to_string(row["N"].get<int>()) + ',' +
             row["progression"].get<std::string>() + ',' + parity + ',' +
             cell["interval"].get<std::string>() + ',' +
             (cell["hypothesis"].is_null() ? "" : cell["hypothesis"].get<std::string>()) + ',' +
             std::to_string(cell["pass"].get<long long>()) + ',' +
             std::to_string(cell["skipped"].get<long long>()) + ',' +
             std::to_string(cell["failed"].get<long long>()) + ',' +
             joined(exps_of(cell["skipped_t"])) + '\n';
    }
  }
  return out;
}

}  // namespace etaq
