#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "etaq/cli.hpp"
#include "json.hpp"

using namespace etaq;
using nlohmann::ordered_json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
  ordered_json json() const { return ordered_json::parse(out); }
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand integer coefficients") {
  CliResult r = run({"expand", "j", "--precision", "2", "--ring", "int"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["id"] == "j");
  CHECK(js["precision"] == 2);
  CHECK(js["ring"] == "INT");
  CHECK(js["val"] == -1);
  CHECK(js["coeffs"] == ordered_json::array({"1", "744", "196884", "21493760"}));
  CHECK_FALSE(js.contains("N"));
  CHECK_FALSE(js.contains("meta"));
}

TEST_CASE("expand parity bits") {
  CliResult r = run({"expand", "j2+", "--precision", "8"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["id"] == "j2+");
  CHECK(js["N"] == 2);
  CHECK(js["ring"] == "GF2");
  CHECK(js["val"] == -1);
  const auto& bits = js["parity_bits"];
  REQUIRE(bits.size() == 10);  // exponents -1..8
  for (std::size_t i = 0; i < bits.size(); ++i) {
    CHECK(bits[i] == ((i == 0 || i == 8) ? 1 : 0));  // odd only at -1 and 7
  }
}

TEST_CASE("coeff grows precision to n when omitted") {
  CliResult r = run({"coeff", "j", "7"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["id"] == "j");
  CHECK(js["n"] == 7);
  CHECK(js["parity"] == 1);

  CliResult big = run({"coeff", "j", "3", "--ring", "int"});
  REQUIRE(big.code == 0);
  CHECK(big.json()["coefficient"] == "864299970");
}

TEST_CASE("coeff rejects an explicit window that misses n") {
  CliResult r = run({"coeff", "j", "3", "--precision", "2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("precision error:") != std::string::npos);
  CHECK(r.err.find("minimum sufficient precision is 3") != std::string::npos);
}

TEST_CASE("json output is byte-stable without --meta") {
  std::vector<std::string> args{"expand", "f3+", "--precision", "40"};
  CliResult first = run(args);
  CliResult second = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.back() == '\n');

  CliResult stamped = run({"--meta", "expand", "f3+", "--precision", "40"});
  ordered_json js = stamped.json();
  REQUIRE(js.contains("meta"));
  std::string ts = js["meta"]["generated_at"].get<std::string>();
  CHECK(ts.size() == 20);
  CHECK(ts.back() == 'Z');
}

TEST_CASE("csv rendering") {
  CliResult r = run({"--format", "csv", "coeff", "j", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "id,n,parity\nj,7,1\n");

  CliResult expand = run({"--format", "csv", "expand", "g3+", "--precision", "3"});
  REQUIRE(expand.code == 0);
  CHECK(expand.out.rfind("n,coefficient\n", 0) == 0);
  CHECK(expand.out.find("\n1,") != std::string::npos);
}

TEST_CASE("--out redirects the payload") {
  const char* path = "/tmp/etaq_cli_out_test.json";
  std::remove(path);
  CliResult r = run({"--out", path, "coeff", "j", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(ordered_json::parse(content.str())["parity"] == 1);
  std::remove(path);
}

TEST_CASE("verify-lemma subcommand") {
  CliResult r = run({"verify-lemma", "a3+", "--n-max", "200"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["lemma"] == "a3+");
  CHECK(js["n_hi"] == 200);
  CHECK(js["ok"] == true);
  CHECK(js["counterexamples"].empty());

  CliResult csv = run({"--format", "csv", "verify-lemma", "b7+", "--n-max", "100"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "lemma,n_lo,n_hi,ok,counterexamples\nb7+,1,100,true,\n");

  CliResult bad = run({"verify-lemma", "a5+"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-theorem subcommand") {
  CliResult pass = run({"verify-theorem", "T31A", "--t-max", "5"});
  REQUIRE(pass.code == 0);
  ordered_json js = pass.json();
  CHECK(js["family"] == "T31A");
  CHECK(js["pass"] == 3);
  CHECK(js["skipped"] == 2);
  CHECK(js["skipped_t"] == ordered_json::array({1, 5}));
  CHECK_FALSE(js.contains("failure"));

  CliResult fail = run({"verify-theorem", "T42B", "--t-max", "1"});
  CHECK(fail.code == 1);
  ordered_json fjs = fail.json();
  CHECK(fjs["failed"] == 1);
  CHECK(fjs["failure"]["verdict"] == "FAIL");
  CHECK(fjs["failure"]["witnesses"].empty());

  CliResult unknown = run({"verify-theorem", "T99"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-all at reduced scale") {
  CliResult r = run({"verify-all", "--n-max", "400", "--t-max", "3", "--cor-t-max", "3"});
  CHECK(r.code == 1);  // the even level-7 sweep genuinely fails at t = 1
  ordered_json js = r.json();
  CHECK(js["ok"] == false);
  REQUIRE(js["stages"].size() == 5);
  CHECK(js["stages"][0]["ok"] == true);
  CHECK(js["stages"][1]["ok"] == true);
  CHECK(js["stages"][2]["ok"] == true);
  CHECK(js["stages"][3]["ok"] == false);
  CHECK(js["stages"][4]["ok"] == true);

  CliResult threaded =
      run({"--threads", "4", "verify-all", "--n-max", "400", "--t-max", "3", "--cor-t-max",
           "3"});
  CHECK(threaded.code == 1);
  // Findings do not depend on the thread count.
  ordered_json a = js["stages"];
  ordered_json b = threaded.json()["stages"];
  CHECK(a == b);
}

TEST_CASE("search partitions a progression by parity") {
  CliResult odd = run({"search", "j", "--modulus", "8", "--residue", "7", "--lo", "0", "--hi",
                       "64", "--parity", "odd"});
  REQUIRE(odd.code == 0);
  CliResult even = run({"search", "j", "--modulus", "8", "--residue", "7", "--lo", "0", "--hi",
                        "64", "--parity", "even"});
  REQUIRE(even.code == 0);
  auto odds = odd.json()["matches"];
  auto evens = even.json()["matches"];
  CHECK(odds.size() + evens.size() == 8);  // 7, 15, ..., 63
  for (const auto& n : odds) CHECK(n.get<long long>() % 8 == 7);
  CHECK(std::find(odds.begin(), odds.end(), ordered_json(7)) != odds.end());

  CliResult backwards = run({"search", "j", "--modulus", "8", "--residue", "7", "--lo", "10",
                             "--hi", "5"});
  CHECK(backwards.code == 2);
}

TEST_CASE("table5 subcommand") {
  CliResult r = run({"table5", "--t-max", "3"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["t_max"] == 3);
  REQUIRE(js["rows"].size() == 6);
  CHECK(js["rows"][0]["N"] == 2);
  CHECK(js["rows"][0]["progression"] == "7 mod 8");
  CHECK(js["rows"][0]["odd"]["interval"] == "[t,4t(t+1)-1]");
  CHECK(js["rows"][0]["odd"]["hypothesis"].is_null());
  CHECK(js["rows"][1]["N"] == 3);
  CHECK(js["rows"][1]["odd"]["hypothesis"] == "3t(t+1) != l(l+1)");
  for (const auto& row : js["rows"]) {
    CHECK(row["odd"]["failed"] == 0);
    CHECK(row["even"]["failed"] == 0);
  }

  CliResult csv = run({"--format", "csv", "table5", "--t-max", "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("N,progression,parity,interval,hypothesis,pass,skipped,failed,skipped_t\n",
                      0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 13);
}

TEST_CASE("density subcommand") {
  CliResult r = run({"density", "j", "--modulus", "8", "--residue", "3", "--n-max", "1000"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["odd"] == 0);
  CHECK(js["total"] == 125);
  CHECK(js["ratio"] == 0.0);
}

TEST_CASE("bench subcommand emits timings") {
  CliResult r = run({"bench", "--precision", "2000"});
  REQUIRE(r.code == 0);
  ordered_json js = r.json();
  CHECK(js["precision"] == 2000);
  CHECK(js.contains("gf2_mul_seconds"));
  CHECK(js.contains("expand_j_seconds"));
  CHECK(js.contains("inverse_delta_naive_seconds"));
  CHECK(js["gf2_mul_seconds"].get<double>() >= 0.0);
}

TEST_CASE("integer cap is a hard limit") {
  CliResult over = run({"--int-cap", "100", "expand", "j", "--precision", "101", "--ring",
                        "int"});
  CHECK(over.code == 2);
  CHECK(over.err.find("error:") != std::string::npos);

  CliResult at = run({"--int-cap", "100", "expand", "j", "--precision", "100", "--ring",
                      "int"});
  CHECK(at.code == 0);
}

TEST_CASE("oracle expansions agree with the fast path") {
  CliResult fast = run({"expand", "f7+", "--precision", "30"});
  CliResult slow = run({"--oracle", "expand", "f7+", "--precision", "30"});
  REQUIRE(fast.code == 0);
  REQUIRE(slow.code == 0);
  CHECK(fast.out == slow.out);
}

TEST_CASE("usage errors") {
  CliResult none = run({});
  CHECK(none.code == 2);
  CHECK(none.err.find("error:") != std::string::npos);

  CliResult missing = run({"expand", "j"});
  CHECK(missing.code == 2);

  CliResult badring = run({"coeff", "j", "7", "--ring", "dec"});
  CHECK(badring.code == 2);

  CliResult badid = run({"expand", "q9", "--precision", "5"});
  CHECK(badid.code == 2);
  CHECK(badid.err.find("error:") != std::string::npos);

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("expand") != std::string::npos);
  CHECK(help.out.find("verify-all") != std::string::npos);
}
