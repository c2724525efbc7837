#pragma once

#include <string>

#include "etaq/suites.hpp"

namespace etaq {

// JSON shapes are part of the CLI contract: key order fixed, no timestamps,
// INT coefficients as decimal strings, GF2 coefficients as 0/1 integers.

ordered_json to_json(const Gf2Series& s);
ordered_json to_json(const IntSeries& s);

// Expansion payload: {id, N?, precision, val, coeffs | parity_bits}. The
// series must already be truncated to the advertised precision.
ordered_json expand_payload(const HauptmodulId& id, Exp precision, const IntSeries& s);
ordered_json expand_payload(const HauptmodulId& id, Exp precision, const Gf2Series& s);

ordered_json to_json(const LemmaReport& report);
ordered_json to_json(const WitnessReport& report);
ordered_json to_json(const FamilySummary& summary);
ordered_json to_json(const SuiteReport& report);

ordered_json density_payload(const HauptmodulId& id, Exp modulus, Exp residue, Exp n_max,
                             const DensityStats& stats);

// The twelve table rows, symbol-for-symbol, with sweep summaries at t_max.
ordered_json table5_payload(Catalog& catalog, Exp t_max, int threads = 1);

// CSV renderings (header line + rows, '\n' terminated).
std::string expand_csv(const ordered_json& payload);
std::string lemma_csv(const LemmaReport& report);
std::string witness_csv(const WitnessReport& report);
std::string summary_csv(const std::vector<FamilySummary>& summaries);
std::string suites_csv(const SuiteReport& report);
std::string density_csv(const ordered_json& payload);
std::string table5_csv(const ordered_json& payload);

}  // namespace etaq
