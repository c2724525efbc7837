#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "etaq/eta.hpp"
#include "etaq/exponent.hpp"
#include "etaq/gf2_series.hpp"
#include "etaq/int_series.hpp"

namespace etaq {

// The catalog's named modular functions:
//   J        q^-1 + 744 + ...        (E4^3 / Delta)
//   J_LEVEL  j_N = (eta(z)/eta(Nz))^{24/(N-1)} + 24/(N-1)
//   J_PLUS   j_N^+ = j_N + N^{12/(N-1)} (eta(Nz)/eta(z))^{24/(N-1)}
//   F_PLUS   (eta(z)/eta(Nz))^{24/(N-1)}     valuation -1
//   G_PLUS   (eta(Nz)/eta(z))^{24/(N-1)}     valuation +1
// with N restricted to {2, 3, 4, 5, 7, 13} (exactly the levels where
// 24/(N-1) is an integer).
enum class HauptKind { J, J_LEVEL, J_PLUS, F_PLUS, G_PLUS };

struct HauptmodulId {
  HauptKind kind = HauptKind::J;
  int level = 0;  // 0 for J, else one of {2, 3, 4, 5, 7, 13}

  friend bool operator==(const HauptmodulId&, const HauptmodulId&) = default;
  friend auto operator<=>(const HauptmodulId&, const HauptmodulId&) = default;
};

// Throws UnsupportedLevel unless N is one of the six admitted levels.
void require_level(int N);

// 24/(N-1), an integer for every admitted level.
Exp quotient_exponent(int N);

// N^{12/(N-1)}, the j_N^+ correction scale (4096, 729, 256, 125, 49, 13).
mpz_class fricke_scale(int N);

// The eta quotients behind F_PLUS / G_PLUS.
EtaQuotient f_plus_quotient(int N);
EtaQuotient g_plus_quotient(int N);

// "j", "j7", "j7+", "f7+", "g7+". Parsing accepts exactly these shapes and
// throws UnsupportedLevel / std::invalid_argument otherwise.
std::string to_string(const HauptmodulId& id);
HauptmodulId parse_hauptmodul_id(const std::string& text);

// One published expansion. bits is always present; ints is present when the
// entry was materialized on the integer path (precision <= the catalog's
// int_cap). Both series are certified through at least `precision`, and
// reduce_mod2(*ints) == *bits on the common window whenever both exist.
struct CatalogEntry {
  HauptmodulId id;
  Exp precision = 0;
  std::shared_ptr<const Gf2Series> bits;
  std::shared_ptr<const IntSeries> ints;  // may be null
};

// Concurrent-read cache of expansions, one slot per id holding the widest
// window computed so far. Entries are immutable; re-expansion at a smaller
// precision returns the cached series.
class Catalog {
 public:
  explicit Catalog(Exp int_cap = 20000, bool oracle = false);

  Catalog(const Catalog&) = delete;
  Catalog& operator=(const Catalog&) = delete;
  Catalog(Catalog&&) = default;
  Catalog& operator=(Catalog&&) = default;

  // GF2 path; the workhorse for every verification sweep. P >= 0.
  CatalogEntry expand(const HauptmodulId& id, Exp P);

  // Integer path; requires P <= int_cap(). Also fills/validates the GF2 slot.
  CatalogEntry expand_ints(const HauptmodulId& id, Exp P);

  // Parity of the n-th coefficient at precision P (n <= P enforced).
  int coeff_parity(const HauptmodulId& id, Exp n, Exp P);

  Exp int_cap() const { return int_cap_; }
  bool oracle() const { return oracle_; }

  // Test-only: a catalog sharing this one's cache except that the bit at
  // exponent n of id's GF2 series is flipped. The id must already be cached
  // through n. Deliberately leaves any INT slot untouched.
  Catalog fork_with_bit_flip(const HauptmodulId& id, Exp n) const;

 private:
  struct Slot {
    std::shared_ptr<const Gf2Series> bits;
    std::shared_ptr<const IntSeries> ints;
  };

  Gf2Series build_bits(const HauptmodulId& id, Exp P);
  IntSeries build_ints(const HauptmodulId& id, Exp P);

  mutable std::unique_ptr<std::mutex> mu_;
  std::map<HauptmodulId, Slot> cache_;
  Exp int_cap_;
  bool oracle_;
};

}  // namespace etaq
