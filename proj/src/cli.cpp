#include "etaq/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "etaq/errors.hpp"
#include "etaq/eta.hpp"
#include "etaq/serialize.hpp"

namespace etaq {

namespace {

struct GlobalFlags {
  std::string format = "json";
  std::string out_path;
  int threads = 1;
  bool oracle = false;
  bool meta = false;
  Exp int_cap = 20000;
};

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes the payload in the selected format. CSV output is the prerendered
// string; JSON is indent-2 with a trailing newline, byte-stable unless --meta
// stamps a timestamp.
void emit(const GlobalFlags& flags, std::ostream& out, ordered_json payload,
          const std::string& csv) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!flags.out_path.empty()) {
    file.open(flags.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output path " + flags.out_path);
    sink = &file;
  }
  if (flags.format == "csv") {
    *sink << csv;
  } else {
    if (flags.meta) payload["meta"] = ordered_json{{"generated_at", utc_timestamp()}};
    *sink << payload.dump(2) << '\n';
  }
}

int exit_code_for(bool any_fail) { return any_fail ? 1 : 0; }

Gf2Series random_dense_gf2(Exp valid_to, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Exp> support;
  for (Exp n = 0; n <= valid_to; ++n) {
    if (rng() & 1) support.push_back(n);
  }
  return Gf2Series::from_support(0, valid_to, support);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalFlags flags;

  CLI::App app{"truncated q-series calculator and parity verifier for hauptmoduln"};
  app.require_subcommand(1);
  app.add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", flags.out_path, "write output to this path instead of stdout");
  app.add_option("--threads", flags.threads, "worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--oracle", flags.oracle, "force naive product expansions (slow, for checking)");
  app.add_flag("--meta", flags.meta, "add a meta object with a timestamp to JSON output");
  app.add_option("--int-cap", flags.int_cap, "largest precision allowed for integer expansions")
      ->capture_default_str();

  std::string expand_id;
  Exp expand_precision = 0;
  std::string expand_ring = "gf2";
  CLI::App* expand = app.add_subcommand("expand", "expand a series to a precision window");
  expand->add_option("id", expand_id, "series id (j, j7, j7+, f7+, g7+, ...)")->required();
  expand->add_option("--precision", expand_precision, "highest certified exponent")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--ring", expand_ring, "coefficient ring")
      ->check(CLI::IsMember({"gf2", "int"}))
      ->capture_default_str();

  std::string coeff_id;
  Exp coeff_n = 0;
  Exp coeff_precision = -1;
  std::string coeff_ring = "gf2";
  CLI::App* coeff = app.add_subcommand("coeff", "one coefficient (parity by default)");
  coeff->add_option("id", coeff_id, "series id")->required();
  coeff->add_option("n", coeff_n, "exponent to query")->required();
  coeff->add_option("--precision", coeff_precision,
                    "catalog precision to use (must cover n; grown to n when omitted)");
  coeff->add_option("--ring", coeff_ring, "coefficient ring")
      ->check(CLI::IsMember({"gf2", "int"}))
      ->capture_default_str();

  std::string lemma_name;
  Exp lemma_n_max = 50000;
  Exp lemma_precision = -1;
  CLI::App* lemma_cmd = app.add_subcommand("verify-lemma", "check one shifted-sum lemma");
  lemma_cmd->add_option("lemma", lemma_name, "a3+, b3+, a7+, b7+")->required();
  lemma_cmd->add_option("--n-max", lemma_n_max, "highest n checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lemma_cmd->add_option("--precision", lemma_precision,
                        "catalog precision (>= n_max + 1; derived when omitted)");

  std::string family_name;
  Exp family_t_max = 50;
  Exp family_precision = -1;
  CLI::App* theorem = app.add_subcommand("verify-theorem", "sweep one interval claim family");
  theorem->add_option("family", family_name, "claim family id, e.g. T31A or COR21_ODD_J2P")
      ->required();
  theorem->add_option("--t-max", family_t_max, "sweep t = 1..t_max")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  theorem->add_option("--precision", family_precision,
                      "catalog precision (grown to the largest interval endpoint)");

  Exp all_t_max = 50;
  Exp all_cor_t_max = 70;
  Exp all_n_max = 50000;
  CLI::App* all = app.add_subcommand("verify-all", "run every verification stage");
  all->add_option("--t-max", all_t_max, "theorem and table sweep bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  all->add_option("--cor-t-max", all_cor_t_max, "corollary sweep bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  all->add_option("--n-max", all_n_max, "coefficient scan bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string search_id;
  Exp search_modulus = 1;
  Exp search_residue = 0;
  std::string search_parity = "odd";
  Exp search_lo = 0;
  Exp search_hi = 0;
  Exp search_precision = -1;
  CLI::App* search = app.add_subcommand("search", "list progression members with a parity");
  search->add_option("id", search_id, "series id")->required();
  search->add_option("--modulus", search_modulus, "progression modulus")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--residue", search_residue, "progression residue")->required();
  search->add_option("--parity", search_parity, "parity to collect")
      ->check(CLI::IsMember({"odd", "even"}))
      ->capture_default_str();
  search->add_option("--lo", search_lo, "inclusive lower bound")->required();
  search->add_option("--hi", search_hi, "inclusive upper bound")->required();
  search->add_option("--precision", search_precision,
                     "catalog precision (grown to hi when omitted or lower)");

  Exp table_t_max = 50;
  CLI::App* table = app.add_subcommand("table5", "reproduce the twelve level-N claim rows");
  table->add_option("--t-max", table_t_max, "sweep t = 1..t_max")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string density_id;
  Exp density_modulus = 1;
  Exp density_residue = 0;
  Exp density_n_max = 50000;
  Exp density_precision = -1;
  CLI::App* density = app.add_subcommand("density", "odd-parity density on a progression");
  density->add_option("id", density_id, "series id")->required();
  density->add_option("--modulus", density_modulus, "progression modulus")
      ->required()
      ->check(CLI::PositiveNumber);
  density->add_option("--residue", density_residue, "progression residue")->required();
  density->add_option("--n-max", density_n_max, "scan n in [0, n_max]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  density->add_option("--precision", density_precision,
                      "catalog precision (grown to n_max when omitted or lower)");

  Exp bench_precision = 100000;
  CLI::App* bench = app.add_subcommand("bench", "time the core kernels (not byte-stable)");
  bench->add_option("--precision", bench_precision, "series window size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version: CLI11 renders the text itself
      std::ostringstream help;
      int code = app.exit(e, help, help);
      out << help.str();
      return code;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    Catalog catalog(flags.int_cap, flags.oracle);

    if (app.got_subcommand(expand)) {
      HauptmodulId id = parse_hauptmodul_id(expand_id);
      if (expand_ring == "int") {
        IntSeries s = catalog.expand_ints(id, expand_precision).ints->truncated(expand_precision);
        ordered_json payload = expand_payload(id, expand_precision, s);
        emit(flags, out, payload, expand_csv(payload));
      } else {
        Gf2Series s = catalog.expand(id, expand_precision).bits->truncated(expand_precision);
        ordered_json payload = expand_payload(id, expand_precision, s);
        emit(flags, out, payload, expand_csv(payload));
      }
      return 0;
    }

    if (app.got_subcommand(coeff)) {
      HauptmodulId id = parse_hauptmodul_id(coeff_id);
      Exp P = coeff_precision < 0 ? std::max<Exp>(coeff_n, 0) : coeff_precision;
      if (coeff_n > P) throw QueryBeyondPrecision(coeff_n, P);
      ordered_json payload;
      payload["id"] = to_string(id);
      if (id.level != 0) payload["N"] = id.level;
      payload["n"] = static_cast<long long>(coeff_n);
      std::string csv;
      if (coeff_ring == "int") {
        std::string value = catalog.expand_ints(id, P).ints->coeff(coeff_n).get_str();
        payload["coefficient"] = value;
        csv = "id,n,coefficient\n" + to_string(id) + ',' + std::to_string(coeff_n) + ',' +
              value + '\n';
      } else {
        int bit = catalog.coeff_parity(id, coeff_n, P);
        payload["parity"] = bit;
        csv = "id,n,parity\n" + to_string(id) + ',' + std::to_string(coeff_n) + ',' +
              std::to_string(bit) + '\n';
      }
      emit(flags, out, payload, csv);
      return 0;
    }

    if (app.got_subcommand(lemma_cmd)) {
      LemmaId lemma = parse_lemma_id(lemma_name);
      LemmaReport report =
          verify_lemma(catalog, lemma, lemma_n_max, lemma_precision, flags.threads);
      emit(flags, out, to_json(report), lemma_csv(report));
      return exit_code_for(!report.ok());
    }

    if (app.got_subcommand(theorem)) {
      FamilyId family = parse_family_id(family_name);
      FamilySummary summary =
          verify_family(catalog, family, family_t_max, family_precision, flags.threads);
      emit(flags, out, to_json(summary), summary_csv({summary}));
      return exit_code_for(!summary.ok());
    }

    if (app.got_subcommand(all)) {
      SuiteOptions options;
      options.n_max = all_n_max;
      options.t_max = all_t_max;
      options.cor_t_max = all_cor_t_max;
      options.threads = flags.threads;
      SuiteReport report = run_verify_all(catalog, options);
      emit(flags, out, to_json(report), suites_csv(report));
      return exit_code_for(!report.ok());
    }

    if (app.got_subcommand(search)) {
      HauptmodulId id = parse_hauptmodul_id(search_id);
      if (search_lo > search_hi)
        throw std::invalid_argument("search bounds must satisfy lo <= hi");
      Exp P = std::max(search_precision, search_hi);
      const Gf2Series& bits = *catalog.expand(id, std::max<Exp>(P, 0)).bits;
      int want = search_parity == "odd" ? 1 : 0;
      std::vector<Exp> matches;
      Exp first = search_lo +
                  (((search_residue - search_lo) % search_modulus) + search_modulus) %
                      search_modulus;
      for (Exp n = first; n <= search_hi; n += search_modulus) {
        if (bits.coeff(n) == want) matches.push_back(n);
      }
      ordered_json payload;
      payload["id"] = to_string(id);
      if (id.level != 0) payload["N"] = id.level;
      payload["modulus"] = static_cast<long long>(search_modulus);
      payload["residue"] = static_cast<long long>(search_residue);
      payload["parity"] = search_parity;
      payload["lo"] = static_cast<long long>(search_lo);
      payload["hi"] = static_cast<long long>(search_hi);
      ordered_json arr = ordered_json::array();
      for (Exp n : matches) arr.push_back(static_cast<long long>(n));
      payload["matches"] = std::move(arr);
      std::string csv = "n\n";
      for (Exp n : matches) csv += std::to_string(n) + '\n';
      emit(flags, out, payload, csv);
      return 0;
    }

    if (app.got_subcommand(table)) {
      ordered_json payload = table5_payload(catalog, table_t_max, flags.threads);
      bool any_fail = false;
      for (const auto& row : payload["rows"]) {
        if (row["odd"]["failed"].get<long long>() > 0 ||
            row["even"]["failed"].get<long long>() > 0)
          any_fail = true;
      }
      emit(flags, out, payload, table5_csv(payload));
      return exit_code_for(any_fail);
    }

    if (app.got_subcommand(density)) {
      HauptmodulId id = parse_hauptmodul_id(density_id);
      Exp P = std::max(density_precision, density_n_max);
      DensityStats stats =
          density_stats(catalog, id, density_modulus, density_residue, density_n_max, P);
      ordered_json payload =
          density_payload(id, density_modulus, density_residue, density_n_max, stats);
      emit(flags, out, payload, density_csv(payload));
      return 0;
    }

    if (app.got_subcommand(bench)) {
      using clock = std::chrono::steady_clock;
      Exp P = bench_precision;

      Gf2Series a = random_dense_gf2(P, 0x5eed0001);
      Gf2Series b = random_dense_gf2(P, 0x5eed0002);
      auto t0 = clock::now();
      Gf2Series prod = a * b;
      auto t1 = clock::now();

      Gf2Series jbits = *catalog.expand({HauptKind::J, 0}, P).bits;
      auto t2 = clock::now();

      Gf2Series delta = inverse_delta_reference(P);
      auto t3 = clock::now();

      ordered_json payload;
      payload["precision"] = static_cast<long long>(P);
      payload["gf2_mul_seconds"] = std::chrono::duration<double>(t1 - t0).count();
      payload["expand_j_seconds"] = std::chrono::duration<double>(t2 - t1).count();
      payload["inverse_delta_naive_seconds"] = std::chrono::duration<double>(t3 - t2).count();
      payload["witness"] = prod.coeff(P) ^ jbits.coeff(P) ^ delta.coeff(P);
      std::string csv = "metric,value\n";
      for (const auto& [key, value] : payload.items()) {
        if (key == "precision" || key == "witness") continue;
        csv += key + ',' + value.dump() + '\n';
      }
      emit(flags, out, payload, csv);
      return 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const QueryBeyondPrecision& e) {
    err << "precision error: " << e.what() << '\n';
    return 2;
  } catch (const ExponentOverflow& e) {
    err << "overflow error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace etaq
