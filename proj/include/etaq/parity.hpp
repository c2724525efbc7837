#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etaq/exponent.hpp"
#include "etaq/hauptmodul.hpp"

namespace etaq {

// ---------------------------------------------------------------------------
// Quadratic-form membership
// ---------------------------------------------------------------------------

// m = scale * f(l) for f among l(l+1), l(3l-1), l(3l+1), solved exactly by
// discriminant arithmetic over nonnegative l.
enum class FormShape { OBLONG, PENT_MINUS, PENT_PLUS };

struct QuadraticFormId {
  FormShape shape = FormShape::OBLONG;
  Exp scale = 1;

  friend bool operator==(const QuadraticFormId&, const QuadraticFormId&) = default;
};

std::string to_string(const QuadraticFormId& form);

// The unique l >= 0 with scale * f(l) = m, or nullopt. m may be any integer;
// negative m is never representable.
std::optional<Exp> solve_form(const QuadraticFormId& form, Exp m);

// ---------------------------------------------------------------------------
// Shifted-sum lemmas
// ---------------------------------------------------------------------------

// The four congruences driving the interval theorems, keyed by the split
// series they constrain:
//   A3:  sum_k a3+(n - (6k(k+1)+1))            = [n = 2l(l+1)]         n >= 0
//   B3:  sum_k b3+(n - (2k(k+1)-1))            = [n = 6l(l+1)]         n >= 1
//   A7:  sum over both pentagonal branches of
//        a7+(n - (14k(3k-/+1)+1))              = [n = 2l(3l-/+1)]      n >= 0
//   B7:  likewise b7+(n - 2k(3k-/+1))          = [n-1 = 14l(3l-/+1)]   n >= 1
// Double-sum shift multisets take the minus branch from k = 0 and the plus
// branch from k = 1 (the bilateral pentagonal sum; the two k = 0 shifts
// coincide and would cancel mod 2).
enum class LemmaId { A3, B3, A7, B7 };

std::string to_string(LemmaId lemma);
LemmaId parse_lemma_id(const std::string& text);

struct LemmaSpec {
  LemmaId id;
  HauptmodulId series;
  Exp n_lo;                               // lowest n the statement covers
  Exp rhs_offset;                         // RHS tests (n - offset) against the forms
  std::vector<QuadraticFormId> rhs_forms;
};

const LemmaSpec& lemma_spec(LemmaId lemma);

// All shifts <= max_shift, ascending.
std::vector<Exp> lemma_shifts(LemmaId lemma, Exp max_shift);

// XOR of catalog parities at n - s over every shift s with n - s >= val.
int lemma_lhs(Catalog& catalog, LemmaId lemma, Exp n, Exp P);

// RHS indicator via solve_form (l >= 0 admitted).
int lemma_rhs(LemmaId lemma, Exp n);

struct LemmaReport {
  LemmaId id;
  Exp n_lo = 0;
  Exp n_hi = 0;
  std::vector<Exp> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

// Checks LHS == RHS for every n in [stated range, n_max]. P = -1 derives the
// minimum sufficient precision n_max + 1; an explicit P below that throws
// QueryBeyondPrecision.
LemmaReport verify_lemma(Catalog& catalog, LemmaId lemma, Exp n_max, Exp P = -1,
                         int threads = 1);

// ---------------------------------------------------------------------------
// Interval claims
// ---------------------------------------------------------------------------

enum class ParityKind { ODD, EVEN };

std::string to_string(ParityKind parity);

// Claim families. T-prefixed ids are the eight split-series interval
// statements (levels 3 and 7, odd/even variants), COR21_* are the three
// j-collapse corollary instances per parity, TABLE5_* the twelve c_N rows.
struct FamilyId {
  enum class Group { COR21, T31, T32, T41, T42, TABLE5 } group = Group::COR21;
  ParityKind parity = ParityKind::ODD;
  // COR21: the series checked (J, J_PLUS(2), J_PLUS(4)); TABLE5: J_LEVEL(N).
  // T-families: fixed by the group (F_PLUS/G_PLUS at level 3 or 7).
  HauptmodulId series;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// "T31A", "T42B", "COR21_ODD_J2P", "TABLE5_EVEN_13", ...
std::string to_string(const FamilyId& family);
FamilyId parse_family_id(const std::string& text);

// The eight T-families followed by the six corollary families.
std::vector<FamilyId> theorem_families();
// The twelve level-N table families in row order (N = 2,3,4,5,7,13).
std::vector<FamilyId> table_families();

struct Hypothesis {
  Exp value = 0;                          // the number that must avoid the forms
  std::vector<QuadraticFormId> forms;
  std::string display;                    // e.g. "3t(t+1) != l(l+1)"
};

struct IntervalClaim {
  FamilyId family;
  Exp t = 0;
  Exp lo = 0;
  Exp hi = 0;
  Exp modulus = 0;
  Exp residue = 0;
  ParityKind expected = ParityKind::ODD;
  std::optional<Hypothesis> hypothesis;
  // Informational: the positions n0(t) - shift the underlying proof pins the
  // witness to, for the eight T-families; empty elsewhere.
  std::vector<Exp> proof_positions;
  std::string interval_display;           // e.g. "[12t-1,6t(t+1)-1]"
  std::string progression_display;        // e.g. "3 mod 4"
};

IntervalClaim make_claim(const FamilyId& family, Exp t);

enum class Verdict { PASS, HYPOTHESIS_SKIPPED, FAIL };

std::string to_string(Verdict v);

struct WitnessReport {
  IntervalClaim claim;
  bool hypothesis_holds = true;
  std::vector<Exp> witnesses;             // all qualifying n, ascending
  std::vector<Exp> proof_position_witnesses;  // witnesses that sit on proof positions
  Verdict verdict = Verdict::PASS;
};

// Scans interval cap progression reading the family's series parities from
// the catalog. P = -1 uses the claim's own hi.
WitnessReport check_claim(Catalog& catalog, const IntervalClaim& claim, Exp P = -1);

struct FamilySummary {
  FamilyId family;
  Exp t_max = 0;
  Exp pass = 0;
  Exp skipped = 0;
  Exp failed = 0;
  std::vector<Exp> skipped_t;
  std::optional<WitnessReport> failure;   // first FAIL, when any
  bool ok() const { return failed == 0; }
};

// Smallest precision covering every claim of the family through t_max.
Exp required_precision(const FamilyId& family, Exp t_max);

// check_claim over t = 1..t_max. Any FAIL stops the sweep and is carried in
// the summary. P = -1 derives required_precision.
FamilySummary verify_family(Catalog& catalog, const FamilyId& family, Exp t_max, Exp P = -1,
                            int threads = 1);

// ---------------------------------------------------------------------------
// Density statistics (exploratory; no pass/fail)
// ---------------------------------------------------------------------------

struct DensityStats {
  Exp odd = 0;
  Exp total = 0;
  double ratio = 0.0;                     // 0 when total is 0
};

DensityStats density_stats(Catalog& catalog, const HauptmodulId& id, Exp modulus, Exp residue,
                           Exp n_max, Exp P = -1);

}  // namespace etaq
