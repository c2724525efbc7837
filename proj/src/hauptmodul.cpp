#include "etaq/hauptmodul.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "etaq/errors.hpp"

namespace etaq {

void require_level(int N) {
  switch (N) {
    case 2:
    case 3:
    case 4:
    case 5:
    case 7:
    case 13:
      return;
    default:
      throw UnsupportedLevel("unsupported level " + std::to_string(N) +
                             "; admitted levels are 2, 3, 4, 5, 7, 13");
  }
}

Exp quotient_exponent(int N) {
  require_level(N);
  return 24 / (N - 1);
}

mpz_class fricke_scale(int N) {
  require_level(N);
  mpz_class s;
  mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(N),
                static_cast<unsigned long>(12 / (N - 1)));
  return s;
}

EtaQuotient f_plus_quotient(int N) {
  Exp k = quotient_exponent(N);
  return EtaQuotient{{{1, k}, {N, -k}}};
}

EtaQuotient g_plus_quotient(int N) {
  Exp k = quotient_exponent(N);
  return EtaQuotient{{{1, -k}, {N, k}}};
}

std::string to_string(const HauptmodulId& id) {
  switch (id.kind) {
    case HauptKind::J:
      return "j";
    case HauptKind::J_LEVEL:
      return "j" + std::to_string(id.level);
    case HauptKind::J_PLUS:
      return "j" + std::to_string(id.level) + "+";
    case HauptKind::F_PLUS:
      return "f" + std::to_string(id.level) + "+";
    case HauptKind::G_PLUS:
      return "g" + std::to_string(id.level) + "+";
  }
  throw std::invalid_argument("corrupt hauptmodul id");
}

HauptmodulId parse_hauptmodul_id(const std::string& text) {
  if (text == "j") return {HauptKind::J, 0};
  if (text.size() < 2) throw std::invalid_argument("unknown series id '" + text + "'");
  char head = text[0];
  bool plus = text.back() == '+';
  std::string digits = text.substr(1, text.size() - 1 - (plus ? 1 : 0));
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw std::invalid_argument("unknown series id '" + text + "'");
  }
  int N = std::stoi(digits);
  require_level(N);
  if (head == 'j') return {plus ? HauptKind::J_PLUS : HauptKind::J_LEVEL, N};
  if (head == 'f' && plus) return {HauptKind::F_PLUS, N};
  if (head == 'g' && plus) return {HauptKind::G_PLUS, N};
  throw std::invalid_argument("unknown series id '" + text + "'");
}

namespace {

void validate_id(const HauptmodulId& id) {
  if (id.kind == HauptKind::J) {
    if (id.level != 0) throw std::invalid_argument("j takes no level");
    return;
  }
  require_level(id.level);
}

const EtaQuotient kDeltaQuotient{{{1, 24}}};

}  // namespace

Catalog::Catalog(Exp int_cap, bool oracle)
    : mu_(std::make_unique<std::mutex>()), int_cap_(int_cap), oracle_(oracle) {}

Gf2Series Catalog::build_bits(const HauptmodulId& id, Exp P) {
  switch (id.kind) {
    case HauptKind::F_PLUS:
      if (oracle_) return reduce_mod2(eta_quotient_expand(f_plus_quotient(id.level), P,
                                                          ExpansionMethod::NAIVE_PRODUCT));
      return eta_quotient_expand_gf2(f_plus_quotient(id.level), P);
    case HauptKind::G_PLUS:
      if (oracle_) return reduce_mod2(eta_quotient_expand(g_plus_quotient(id.level), P,
                                                          ExpansionMethod::NAIVE_PRODUCT));
      return eta_quotient_expand_gf2(g_plus_quotient(id.level), P);
    case HauptKind::J_LEVEL: {
      Gf2Series f = build_bits({HauptKind::F_PLUS, id.level}, P);
      // The additive constant 24/(N-1) is even for every admitted level.
      Exp parity = quotient_exponent(id.level) % 2;
      Gf2Series c = parity ? Gf2Series::one(P) : Gf2Series::zero(0, P);
      return f + c;
    }
    case HauptKind::J_PLUS: {
      Gf2Series jn = build_bits({HauptKind::J_LEVEL, id.level}, P);
      // N^{12/(N-1)} has the parity of N.
      if (id.level % 2 == 0) return jn;
      return jn + build_bits({HauptKind::G_PLUS, id.level}, P);
    }
    case HauptKind::J: {
      Exp Q = checked_add(P, 3);
      Gf2Series e4 = reduce_mod2(eisenstein_e4(Q));
      Gf2Series delta = oracle_ ? reduce_mod2(eta_quotient_expand(kDeltaQuotient, Q,
                                                                  ExpansionMethod::NAIVE_PRODUCT))
                                : eta_quotient_expand_gf2(kDeltaQuotient, Q);
      return (e4.pow(3) * delta.inverse()).truncated(P);
    }
  }
  throw std::invalid_argument("corrupt hauptmodul id");
}

IntSeries Catalog::build_ints(const HauptmodulId& id, Exp P) {
  ExpansionMethod method = oracle_ ? ExpansionMethod::NAIVE_PRODUCT : ExpansionMethod::FAST;
  switch (id.kind) {
    case HauptKind::F_PLUS:
      return eta_quotient_expand(f_plus_quotient(id.level), P, method);
    case HauptKind::G_PLUS:
      return eta_quotient_expand(g_plus_quotient(id.level), P, method);
    case HauptKind::J_LEVEL: {
      IntSeries f = build_ints({HauptKind::F_PLUS, id.level}, P);
      return f + IntSeries::constant(quotient_exponent(id.level), P);
    }
    case HauptKind::J_PLUS: {
      IntSeries jn = build_ints({HauptKind::J_LEVEL, id.level}, P);
      IntSeries g = build_ints({HauptKind::G_PLUS, id.level}, P);
      return jn + g.scaled(fricke_scale(id.level));
    }
    case HauptKind::J: {
      Exp Q = checked_add(P, 3);
      IntSeries e4 = eisenstein_e4(Q);
      IntSeries delta = eta_quotient_expand(kDeltaQuotient, Q, method);
      return (e4.pow(3) * delta.inverse()).truncated(P);
    }
  }
  throw std::invalid_argument("corrupt hauptmodul id");
}

CatalogEntry Catalog::expand(const HauptmodulId& id, Exp P) {
  validate_id(id);
  if (P < 0) throw std::invalid_argument("expansion precision must be >= 0");
  {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = cache_.find(id);
    if (it != cache_.end() && it->second.bits && it->second.bits->valid_to() >= P) {
      CatalogEntry entry{id, P, it->second.bits, nullptr};
      if (it->second.ints && it->second.ints->valid_to() >= P) entry.ints = it->second.ints;
      return entry;
    }
  }
  auto fresh = std::make_shared<const Gf2Series>(build_bits(id, P));
  std::lock_guard<std::mutex> lock(*mu_);
  Slot& slot = cache_[id];
  if (!slot.bits || slot.bits->valid_to() < fresh->valid_to()) {
    if (slot.ints) {
      Exp lo = fresh->val();
      Exp hi = std::min(fresh->valid_to(), slot.ints->valid_to());
      if (!agree_on(reduce_mod2(*slot.ints), *fresh, lo, hi)) {
        throw std::logic_error("integer and GF2 expansions disagree for " + to_string(id));
      }
    }
    slot.bits = fresh;
  }
  CatalogEntry entry{id, P, slot.bits, nullptr};
  if (slot.ints && slot.ints->valid_to() >= P) entry.ints = slot.ints;
  return entry;
}

CatalogEntry Catalog::expand_ints(const HauptmodulId& id, Exp P) {
  validate_id(id);
  if (P < 0) throw std::invalid_argument("expansion precision must be >= 0");
  if (P > int_cap_) {
    throw std::invalid_argument("integer expansion at precision " + std::to_string(P) +
                                " exceeds the cap " + std::to_string(int_cap_) +
                                "; raise the cap to allow it");
  }
  CatalogEntry entry = expand(id, P);  // ensures the GF2 slot first
  if (entry.ints) return entry;
  auto fresh = std::make_shared<const IntSeries>(build_ints(id, P));
  std::lock_guard<std::mutex> lock(*mu_);
  Slot& slot = cache_[id];
  if (!slot.ints || slot.ints->valid_to() < fresh->valid_to()) {
    if (slot.bits) {
      Exp lo = fresh->val();
      Exp hi = std::min(fresh->valid_to(), slot.bits->valid_to());
      if (!agree_on(reduce_mod2(*fresh), *slot.bits, lo, hi)) {
        throw std::logic_error("integer and GF2 expansions disagree for " + to_string(id));
      }
    }
    slot.ints = fresh;
  }
  entry.ints = slot.ints;
  return entry;
}

int Catalog::coeff_parity(const HauptmodulId& id, Exp n, Exp P) {
  if (n > P) throw QueryBeyondPrecision(n, P);
  CatalogEntry entry = expand(id, std::max<Exp>(P, 0));
  return entry.bits->coeff(n);
}

Catalog Catalog::fork_with_bit_flip(const HauptmodulId& id, Exp n) const {
  Catalog fork(int_cap_, oracle_);
  std::lock_guard<std::mutex> lock(*mu_);
  fork.cache_ = cache_;
  auto it = fork.cache_.find(id);
  if (it == fork.cache_.end() || !it->second.bits || n < it->second.bits->val() ||
      n > it->second.bits->valid_to()) {
    throw std::logic_error("bit-flip target " + to_string(id) + " is not cached through " +
                           std::to_string(n));
  }
  it->second.bits = std::make_shared<const Gf2Series>(it->second.bits->with_flipped_bit(n));
  return fork;
}

}  // namespace etaq
