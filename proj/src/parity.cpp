#include "etaq/parity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

std::optional<Exp> exact_sqrt(Exp m) {
  if (m < 0) return std::nullopt;
  auto um = static_cast<unsigned long long>(m);
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(um)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > um) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= um) ++r;
  if (static_cast<unsigned __int128>(r) * r == um) return static_cast<Exp>(r);
  return std::nullopt;
}

// Runs fn over [lo, hi] split into contiguous blocks, one per thread. fn must
// be safe to run concurrently on disjoint blocks.
template <typename Fn>
void parallel_blocks(Exp lo, Exp hi, int threads, Fn&& fn) {
  if (hi < lo) return;
  Exp count = hi - lo + 1;
  if (threads <= 1 || count < 2 * threads) {
    fn(lo, hi, 0);
    return;
  }
  std::vector<std::thread> pool;
  Exp block = count / threads;
  Exp extra = count % threads;
  Exp start = lo;
  for (int i = 0; i < threads; ++i) {
    Exp len = block + (i < extra ? 1 : 0);
    Exp bl = start;
    Exp bh = start + len - 1;
    start = bh + 1;
    pool.emplace_back([&fn, bl, bh, i] { fn(bl, bh, i); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::string to_string(const QuadraticFormId& form) {
  std::string prefix = form.scale == 1 ? "" : std::to_string(form.scale);
  switch (form.shape) {
    case FormShape::OBLONG:
      return prefix + "l(l+1)";
    case FormShape::PENT_MINUS:
      return prefix + "l(3l-1)";
    case FormShape::PENT_PLUS:
      return prefix + "l(3l+1)";
  }
  throw std::invalid_argument("corrupt form id");
}

std::optional<Exp> solve_form(const QuadraticFormId& form, Exp m) {
  if (form.scale < 1) throw std::invalid_argument("form scale must be >= 1");
  if (m < 0) return std::nullopt;
  if (m % form.scale != 0) return std::nullopt;
  Exp mp = m / form.scale;
  switch (form.shape) {
    case FormShape::OBLONG: {
      auto s = exact_sqrt(checked_add(checked_mul(4, mp), 1));
      if (!s) return std::nullopt;
      return (*s - 1) / 2;
    }
    case FormShape::PENT_MINUS: {
      if (mp == 0) return 0;
      auto s = exact_sqrt(checked_add(checked_mul(12, mp), 1));
      if (!s || *s % 6 != 5) return std::nullopt;
      return (*s + 1) / 6;
    }
    case FormShape::PENT_PLUS: {
      if (mp == 0) return 0;
      auto s = exact_sqrt(checked_add(checked_mul(12, mp), 1));
      if (!s || *s % 6 != 1) return std::nullopt;
      return (*s - 1) / 6;
    }
  }
  throw std::invalid_argument("corrupt form id");
}

std::string to_string(LemmaId lemma) {
  switch (lemma) {
    case LemmaId::A3:
      return "a3+";
    case LemmaId::B3:
      return "b3+";
    case LemmaId::A7:
      return "a7+";
    case LemmaId::B7:
      return "b7+";
  }
  throw std::invalid_argument("corrupt lemma id");
}

LemmaId parse_lemma_id(const std::string& text) {
  for (LemmaId lemma : {LemmaId::A3, LemmaId::B3, LemmaId::A7, LemmaId::B7}) {
    if (text == to_string(lemma)) return lemma;
  }
  throw std::invalid_argument("unknown lemma id '" + text + "' (expected a3+, b3+, a7+, b7+)");
}

const LemmaSpec& lemma_spec(LemmaId lemma) {
  static const LemmaSpec a3{LemmaId::A3,
                            {HauptKind::F_PLUS, 3},
                            0,
                            0,
                            {{FormShape::OBLONG, 2}}};
  static const LemmaSpec b3{LemmaId::B3,
                            {HauptKind::G_PLUS, 3},
                            1,
                            0,
                            {{FormShape::OBLONG, 6}}};
  static const LemmaSpec a7{LemmaId::A7,
                            {HauptKind::F_PLUS, 7},
                            0,
                            0,
                            {{FormShape::PENT_MINUS, 2}, {FormShape::PENT_PLUS, 2}}};
  static const LemmaSpec b7{LemmaId::B7,
                            {HauptKind::G_PLUS, 7},
                            1,
                            1,
                            {{FormShape::PENT_MINUS, 14}, {FormShape::PENT_PLUS, 14}}};
  switch (lemma) {
    case LemmaId::A3:
      return a3;
    case LemmaId::B3:
      return b3;
    case LemmaId::A7:
      return a7;
    case LemmaId::B7:
      return b7;
  }
  throw std::invalid_argument("corrupt lemma id");
}

std::vector<Exp> lemma_shifts(LemmaId lemma, Exp max_shift) {
  std::vector<Exp> shifts;
  auto take_while = [&](auto shift_of_k, Exp k0) {
    for (Exp k = k0;; ++k) {
      Exp s = shift_of_k(k);
      if (s > max_shift) break;
      shifts.push_back(s);
    }
  };
  switch (lemma) {
    case LemmaId::A3:
      take_while([](Exp k) { return 6 * k * (k + 1) + 1; }, 0);
      break;
    case LemmaId::B3:
      take_while([](Exp k) { return 2 * k * (k + 1) - 1; }, 0);
      break;
    case LemmaId::A7:
      take_while([](Exp k) { return 14 * k * (3 * k - 1) + 1; }, 0);
      take_while([](Exp k) { return 14 * k * (3 * k + 1) + 1; }, 1);
      break;
    case LemmaId::B7:
      take_while([](Exp k) { return 2 * k * (3 * k - 1); }, 0);
      take_while([](Exp k) { return 2 * k * (3 * k + 1); }, 1);
      break;
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

int lemma_rhs(LemmaId lemma, Exp n) {
  const LemmaSpec& spec = lemma_spec(lemma);
  Exp m = n - spec.rhs_offset;
  for (const auto& form : spec.rhs_forms) {
    if (solve_form(form, m)) return 1;
  }
  return 0;
}

int lemma_lhs(Catalog& catalog, LemmaId lemma, Exp n, Exp P) {
  if (n > P) throw QueryBeyondPrecision(n, P);
  const LemmaSpec& spec = lemma_spec(lemma);
  CatalogEntry entry = catalog.expand(spec.series, std::max<Exp>(P, 0));
  const Gf2Series& bits = *entry.bits;
  Exp val = bits.val();
  int acc = 0;
  for (Exp s : lemma_shifts(lemma, n - val)) {
    acc ^= bits.coeff(n - s);
  }
  return acc;
}

LemmaReport verify_lemma(Catalog& catalog, LemmaId lemma, Exp n_max, Exp P, int threads) {
  const LemmaSpec& spec = lemma_spec(lemma);
  Exp min_precision = checked_add(n_max, 1);
  if (P < 0) {
    P = min_precision;
  } else if (P < min_precision) {
    throw QueryBeyondPrecision(min_precision, P);
  }
  CatalogEntry entry = catalog.expand(spec.series, P);
  const Gf2Series& bits = *entry.bits;
  Exp val = bits.val();
  std::vector<Exp> shifts = lemma_shifts(lemma, n_max - val);

  LemmaReport report{lemma, spec.n_lo, n_max, {}};
  if (n_max < spec.n_lo) return report;

  std::vector<std::vector<Exp>> found(static_cast<std::size_t>(std::max(threads, 1)));
  parallel_blocks(spec.n_lo, n_max, threads, [&](Exp lo, Exp hi, int slot) {
    auto& bad = found[static_cast<std::size_t>(slot)];
    for (Exp n = lo; n <= hi; ++n) {
      int lhs = 0;
      for (Exp s : shifts) {
        if (s > n - val) break;
        lhs ^= bits.coeff(n - s);
      }
      if (lhs != lemma_rhs(lemma, n)) bad.push_back(n);
    }
  });
  for (auto& bad : found) {
    report.counterexamples.insert(report.counterexamples.end(), bad.begin(), bad.end());
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  return report;
}

std::string to_string(ParityKind parity) {
  return parity == ParityKind::ODD ? "odd" : "even";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS:
      return "PASS";
    case Verdict::HYPOTHESIS_SKIPPED:
      return "HYPOTHESIS_SKIPPED";
    case Verdict::FAIL:
      return "FAIL";
  }
  throw std::invalid_argument("corrupt verdict");
}

namespace {

std::string series_tag(const HauptmodulId& id) {
  switch (id.kind) {
    case HauptKind::J:
      return "J";
    case HauptKind::J_PLUS:
      return "J" + std::to_string(id.level) + "P";
    default:
      throw std::invalid_argument("corollary families run on j, j2+, j4+ only");
  }
}

}  // namespace

std::string to_string(const FamilyId& family) {
  std::string suffix = family.parity == ParityKind::ODD ? "A" : "B";
  switch (family.group) {
    case FamilyId::Group::T31:
      return "T31" + suffix;
    case FamilyId::Group::T32:
      return "T32" + suffix;
    case FamilyId::Group::T41:
      return "T41" + suffix;
    case FamilyId::Group::T42:
      return "T42" + suffix;
    case FamilyId::Group::COR21:
      return std::string("COR21_") + (family.parity == ParityKind::ODD ? "ODD" : "EVEN") + "_" +
             series_tag(family.series);
    case FamilyId::Group::TABLE5:
      return std::string("TABLE5_") + (family.parity == ParityKind::ODD ? "ODD" : "EVEN") + "_" +
             std::to_string(family.series.level);
  }
  throw std::invalid_argument("corrupt family id");
}

std::vector<FamilyId> theorem_families() {
  std::vector<FamilyId> families;
  const HauptmodulId f3{HauptKind::F_PLUS, 3};
  const HauptmodulId g3{HauptKind::G_PLUS, 3};
  const HauptmodulId f7{HauptKind::F_PLUS, 7};
  const HauptmodulId g7{HauptKind::G_PLUS, 7};
  families.push_back({FamilyId::Group::T31, ParityKind::ODD, f3});
  families.push_back({FamilyId::Group::T31, ParityKind::EVEN, f3});
  families.push_back({FamilyId::Group::T32, ParityKind::ODD, g3});
  families.push_back({FamilyId::Group::T32, ParityKind::EVEN, g3});
  families.push_back({FamilyId::Group::T41, ParityKind::ODD, f7});
  families.push_back({FamilyId::Group::T41, ParityKind::EVEN, f7});
  families.push_back({FamilyId::Group::T42, ParityKind::ODD, g7});
  families.push_back({FamilyId::Group::T42, ParityKind::EVEN, g7});
  for (ParityKind parity : {ParityKind::ODD, ParityKind::EVEN}) {
    families.push_back({FamilyId::Group::COR21, parity, {HauptKind::J, 0}});
    families.push_back({FamilyId::Group::COR21, parity, {HauptKind::J_PLUS, 2}});
    families.push_back({FamilyId::Group::COR21, parity, {HauptKind::J_PLUS, 4}});
  }
  return families;
}

std::vector<FamilyId> table_families() {
  std::vector<FamilyId> families;
  for (int N : {2, 3, 4, 5, 7, 13}) {
    families.push_back({FamilyId::Group::TABLE5, ParityKind::ODD, {HauptKind::J_LEVEL, N}});
    families.push_back({FamilyId::Group::TABLE5, ParityKind::EVEN, {HauptKind::J_LEVEL, N}});
  }
  return families;
}

FamilyId parse_family_id(const std::string& text) {
  std::string upper = text;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (const auto& family : theorem_families()) {
    if (to_string(family) == upper) return family;
  }
  for (const auto& family : table_families()) {
    if (to_string(family) == upper) return family;
  }
  throw UnsupportedFamily("unknown claim family '" + text + "'");
}

namespace {

Hypothesis oblong_hypothesis(Exp value, Exp form_scale, const std::string& display) {
  return Hypothesis{value, {{FormShape::OBLONG, form_scale}}, display};
}

Hypothesis pent_hypothesis(Exp value, Exp form_scale, const std::string& display) {
  return Hypothesis{value,
                    {{FormShape::PENT_MINUS, form_scale}, {FormShape::PENT_PLUS, form_scale}},
                    display};
}

// Positions n0 - s(k) for k in [k0, k_hi], appended in k order.
template <typename ShiftFn>
void append_positions(std::vector<Exp>& out, Exp n0, ShiftFn shift, Exp k0, Exp k_hi) {
  for (Exp k = k0; k <= k_hi; ++k) out.push_back(n0 - shift(k));
}

}  // namespace

IntervalClaim make_claim(const FamilyId& family, Exp t) {
  if (t < 1) throw std::invalid_argument("claim parameter t must be >= 1");
  const bool odd = family.parity == ParityKind::ODD;
  IntervalClaim claim;
  claim.family = family;
  claim.t = t;
  claim.expected = family.parity;

  switch (family.group) {
    case FamilyId::Group::COR21:
      claim.modulus = 8;
      claim.residue = 7;
      claim.progression_display = "7 mod 8";
      if (odd) {
        claim.lo = t;
        claim.hi = 4 * t * (t + 1) - 1;
        claim.interval_display = "[t,4t(t+1)-1]";
      } else {
        claim.lo = 16 * t - 1;
        claim.hi = (4 * t + 1) * (4 * t + 1) - 1;
        claim.interval_display = "[16t-1,(4t+1)^2-1]";
      }
      break;

    case FamilyId::Group::T31: {
      claim.modulus = 4;
      claim.residue = 3;
      claim.progression_display = "3 mod 4";
      auto s6 = [](Exp k) { return 6 * k * (k + 1) + 1; };
      if (odd) {
        claim.lo = 12 * t - 1;
        claim.hi = 6 * t * (t + 1) - 1;
        claim.interval_display = "[12t-1,6t(t+1)-1]";
        claim.hypothesis = oblong_hypothesis(3 * t * (t + 1), 1, "3t(t+1) != l(l+1)");
        append_positions(claim.proof_positions, 6 * t * (t + 1), s6, 0, t - 1);
      } else {
        claim.lo = 24 * t - 1;
        claim.hi = 12 * t * (2 * t + 1) - 1;
        claim.interval_display = "[24t-1,12t(2t+1)-1]";
        claim.hypothesis = oblong_hypothesis(6 * t * (2 * t + 1), 1, "6t(2t+1) != l(l+1)");
        append_positions(claim.proof_positions, 12 * t * (2 * t + 1), s6, 0, 2 * t - 1);
      }
      break;
    }

    case FamilyId::Group::T32: {
      claim.modulus = 4;
      claim.residue = 1;
      claim.progression_display = "1 mod 4";
      auto s2 = [](Exp k) { return 2 * k * (k + 1) - 1; };
      if (odd) {
        claim.lo = 4 * t + 1;
        claim.hi = 2 * t * (t + 1) + 1;
        claim.interval_display = "[4t+1,2t(t+1)+1]";
        claim.hypothesis = oblong_hypothesis(t * (t + 1), 3, "t(t+1) != 3l(l+1)");
        append_positions(claim.proof_positions, 2 * t * (t + 1), s2, 0, t - 1);
      } else {
        claim.lo = 8 * t + 1;
        claim.hi = 4 * t * (2 * t + 1) + 1;
        claim.interval_display = "[8t+1,4t(2t+1)+1]";
        claim.hypothesis = oblong_hypothesis(2 * t * (2 * t + 1), 3, "2t(2t+1) != 3l(l+1)");
        append_positions(claim.proof_positions, 4 * t * (2 * t + 1), s2, 0, 2 * t - 1);
      }
      break;
    }

    case FamilyId::Group::T41: {
      claim.modulus = 4;
      claim.residue = 3;
      claim.progression_display = "3 mod 4";
      auto p14m = [](Exp k) { return 14 * k * (3 * k - 1) + 1; };
      auto p14p = [](Exp k) { return 14 * k * (3 * k + 1) + 1; };
      if (odd) {
        claim.lo = 56 * t - 29;
        claim.hi = 14 * t * (3 * t - 1) - 1;
        claim.interval_display = "[56t-29,14t(3t-1)-1]";
        claim.hypothesis =
            pent_hypothesis(7 * t * (3 * t - 1), 1, "7t(3t-1) != l(3l-1) != l(3l+1)");
        Exp n0 = 14 * t * (3 * t - 1);
        append_positions(claim.proof_positions, n0, p14m, 0, t - 1);
        append_positions(claim.proof_positions, n0, p14p, 1, t - 1);
      } else {
        claim.lo = 112 * t - 29;
        claim.hi = 28 * t * (6 * t - 1) - 1;
        claim.interval_display = "[112t-29,28t(6t-1)-1]";
        claim.hypothesis =
            pent_hypothesis(14 * t * (6 * t - 1), 1, "14t(6t-1) != l(3l-1) != l(3l+1)");
        Exp n0 = 28 * t * (6 * t - 1);
        append_positions(claim.proof_positions, n0, p14m, 0, 2 * t - 1);
        append_positions(claim.proof_positions, n0, p14p, 1, 2 * t - 1);
      }
      break;
    }

    case FamilyId::Group::T42: {
      claim.modulus = 4;
      claim.residue = 1;
      claim.progression_display = "1 mod 4";
      auto p2m = [](Exp k) { return 2 * k * (3 * k - 1); };
      auto p2p = [](Exp k) { return 2 * k * (3 * k + 1); };
      if (odd) {
        claim.lo = 8 * t - 3;
        claim.hi = 2 * t * (3 * t - 1) + 1;
        claim.interval_display = "[8t-3,2t(3t-1)+1]";
        claim.hypothesis =
            pent_hypothesis(t * (3 * t - 1), 7, "t(3t-1) != 7l(3l-1) != 7l(3l+1)");
        Exp n0 = 2 * t * (3 * t - 1) + 1;
        append_positions(claim.proof_positions, n0, p2m, 0, t - 1);
        append_positions(claim.proof_positions, n0, p2p, 1, t - 1);
      } else {
        claim.lo = 16 * t - 3;
        claim.hi = 4 * t * (6 * t - 1) + 1;
        claim.interval_display = "[16t-3,4t(6t-1)+1]";
        claim.hypothesis =
            pent_hypothesis(2 * t * (3 * t - 1), 7, "2t(3t-1) != 7l(3l-1) != 7l(3l+1)");
        Exp n0 = 4 * t * (6 * t - 1) + 1;
        append_positions(claim.proof_positions, n0, p2m, 0, 2 * t - 1);
        append_positions(claim.proof_positions, n0, p2p, 1, 2 * t - 1);
      }
      break;
    }

    case FamilyId::Group::TABLE5: {
      int N = family.series.level;
      require_level(N);
      switch (N) {
        case 2:
        case 4: {
          FamilyId cor{FamilyId::Group::COR21, family.parity, {HauptKind::J, 0}};
          IntervalClaim base = make_claim(cor, t);
          claim.lo = base.lo;
          claim.hi = base.hi;
          claim.modulus = base.modulus;
          claim.residue = base.residue;
          claim.interval_display = base.interval_display;
          claim.progression_display = base.progression_display;
          break;
        }
        case 3: {
          FamilyId thm{FamilyId::Group::T31, family.parity, {HauptKind::F_PLUS, 3}};
          IntervalClaim base = make_claim(thm, t);
          claim.lo = base.lo;
          claim.hi = base.hi;
          claim.modulus = base.modulus;
          claim.residue = base.residue;
          claim.interval_display = base.interval_display;
          claim.progression_display = base.progression_display;
          claim.hypothesis = base.hypothesis;
          break;
        }
        case 7: {
          FamilyId thm{FamilyId::Group::T41, family.parity, {HauptKind::F_PLUS, 7}};
          IntervalClaim base = make_claim(thm, t);
          claim.lo = base.lo;
          claim.hi = base.hi;
          claim.modulus = base.modulus;
          claim.residue = base.residue;
          claim.interval_display = base.interval_display;
          claim.progression_display = base.progression_display;
          claim.hypothesis = base.hypothesis;
          break;
        }
        case 5:
          claim.modulus = 2;
          claim.residue = 1;
          claim.progression_display = "1 mod 2";
          if (odd) {
            claim.lo = 10 * t - 1;
            claim.hi = 5 * t * (t + 1) - 1;
            claim.interval_display = "[10t-1,5t(t+1)-1]";
            claim.hypothesis = oblong_hypothesis(5 * t * (t + 1), 1, "5t(t+1) != l(l+1)");
          } else {
            claim.lo = 20 * t - 1;
            claim.hi = 10 * t * (2 * t + 1) - 1;
            claim.interval_display = "[20t-1,10t(2t+1)-1]";
            claim.hypothesis = oblong_hypothesis(10 * t * (2 * t + 1), 1, "10t(2t+1) != l(l+1)");
          }
          break;
        case 13:
          claim.modulus = 2;
          claim.residue = 1;
          claim.progression_display = "1 mod 2";
          if (odd) {
            claim.lo = 52 * t - 27;
            claim.hi = 13 * t * (3 * t - 1) - 1;
            claim.interval_display = "[52t-27,13t(3t-1)-1]";
            claim.hypothesis =
                pent_hypothesis(13 * t * (3 * t - 1), 1, "13t(3t-1) != l(3l-1) != l(3l+1)");
          } else {
            claim.lo = 104 * t - 27;
            claim.hi = 26 * t * (6 * t - 1) - 1;
            claim.interval_display = "[104t-27,26t(6t-1)-1]";
            claim.hypothesis =
                pent_hypothesis(26 * t * (6 * t - 1), 1, "26t(6t-1) != l(3l-1) != l(3l+1)");
          }
          break;
      }
      break;
    }
  }

  if (claim.lo > claim.hi) {
    throw std::logic_error("claim interval is empty for " + to_string(family) + " at t=" +
                           std::to_string(t));
  }
  Exp first = claim.lo + (((claim.residue - claim.lo) % claim.modulus) + claim.modulus) %
                             claim.modulus;
  if (first > claim.hi) {
    throw std::logic_error("claim interval misses its progression for " + to_string(family) +
                           " at t=" + std::to_string(t));
  }
  std::sort(claim.proof_positions.begin(), claim.proof_positions.end());
  return claim;
}

WitnessReport check_claim(Catalog& catalog, const IntervalClaim& claim, Exp P) {
  if (P < 0) {
    P = claim.hi;
  } else if (P < claim.hi) {
    throw QueryBeyondPrecision(claim.hi, P);
  }
  WitnessReport report;
  report.claim = claim;
  report.hypothesis_holds = true;
  if (claim.hypothesis) {
    for (const auto& form : claim.hypothesis->forms) {
      if (solve_form(form, claim.hypothesis->value)) {
        report.hypothesis_holds = false;
        break;
      }
    }
  }
  CatalogEntry entry = catalog.expand(claim.family.series, P);
  const Gf2Series& bits = *entry.bits;
  Exp first = claim.lo + (((claim.residue - claim.lo) % claim.modulus) + claim.modulus) %
                             claim.modulus;
  int want = claim.expected == ParityKind::ODD ? 1 : 0;
  for (Exp n = first; n <= claim.hi; n += claim.modulus) {
    if (bits.coeff(n) == want) report.witnesses.push_back(n);
  }
  for (Exp n : report.witnesses) {
    if (std::binary_search(claim.proof_positions.begin(), claim.proof_positions.end(), n)) {
      report.proof_position_witnesses.push_back(n);
    }
  }
  if (!report.hypothesis_holds) {
    report.verdict = Verdict::HYPOTHESIS_SKIPPED;
  } else {
    report.verdict = report.witnesses.empty() ? Verdict::FAIL : Verdict::PASS;
  }
  return report;
}

Exp required_precision(const FamilyId& family, Exp t_max) {
  if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
  return make_claim(family, t_max).hi;
}

FamilySummary verify_family(Catalog& catalog, const FamilyId& family, Exp t_max, Exp P,
                            int threads) {
  FamilySummary summary;
  summary.family = family;
  summary.t_max = t_max;
  if (t_max < 1) return summary;
  Exp needed = required_precision(family, t_max);
  P = std::max(P, needed);  // auto-raise; never verify on a short window
  catalog.expand(family.series, P);

  std::vector<Verdict> verdicts(static_cast<std::size_t>(t_max) + 1, Verdict::PASS);
  std::map<Exp, WitnessReport> failures;
  std::mutex failures_mu;
  parallel_blocks(1, t_max, threads, [&](Exp lo, Exp hi, int) {
    for (Exp t = lo; t <= hi; ++t) {
      WitnessReport report = check_claim(catalog, make_claim(family, t), P);
      verdicts[static_cast<std::size_t>(t)] = report.verdict;
      if (report.verdict == Verdict::FAIL) {
        std::lock_guard<std::mutex> lock(failures_mu);
        failures.emplace(t, std::move(report));
      }
    }
  });
  for (Exp t = 1; t <= t_max; ++t) {
    switch (verdicts[static_cast<std::size_t>(t)]) {
      case Verdict::PASS:
        ++summary.pass;
        break;
      case Verdict::HYPOTHESIS_SKIPPED:
        ++summary.skipped;
        summary.skipped_t.push_back(t);
        break;
      case Verdict::FAIL:
        ++summary.failed;
        summary.failure = failures.at(t);
        return summary;  // abort at the first failing t, counts reflect t' <= t
    }
  }
  return summary;
}

DensityStats density_stats(Catalog& catalog, const HauptmodulId& id, Exp modulus, Exp residue,
                           Exp n_max, Exp P) {
  if (modulus < 1) throw std::invalid_argument("progression modulus must be >= 1");
  if (P < 0) P = std::max<Exp>(n_max, 0);
  if (P < n_max) throw QueryBeyondPrecision(n_max, P);
  DensityStats stats;
  if (n_max < 0) return stats;
  CatalogEntry entry = catalog.expand(id, P);
  Exp first = ((residue % modulus) + modulus) % modulus;
  for (Exp n = first; n <= n_max; n += modulus) {
    ++stats.total;
    if (entry.bits->coeff(n) == 1) ++stats.odd;
  }
  if (stats.total > 0) {
    stats.ratio = static_cast<double>(stats.odd) / static_cast<double>(stats.total);
  }
  return stats;
}

}  // namespace etaq
