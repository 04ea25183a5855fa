// In-process tests for the cknots command line: every subcommand is run
// through ck::run with captured streams and the JSON output is checked
// against values frozen from the library tests.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "ck/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<const char*> args, const std::string& input = "") {
  args.insert(args.begin(), "cknots");
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = ck::run(static_cast<int>(args.size()), args.data(), in, out, err);
  return {code, out.str(), err.str()};
}

// Splits stdout into one parsed JSON value per non-empty line.
std::vector<json> lines_of(const std::string& out) {
  std::vector<json> rows;
  std::istringstream s(out);
  std::string line;
  while (std::getline(s, line))
    if (!line.empty()) rows.push_back(json::parse(line));
  return rows;
}

}  // namespace

TEST_CASE("invariants reports rank, homology and genus for a reference knot") {
  CliResult r = cli({"invariants", "5", "3", "2", "3", "1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["knot"] == json({{"p", 5}, {"q", 3}, {"l", 2}, {"u", 3}, {"v", 1}, {"mirrored", false}}));
  CHECK(j["total_rank"] == 13);
  CHECK(j["h1"]["d"] == 1);
  CHECK(j["h1"]["k"] == 3);
  CHECK(j["h1"]["k_prime"] == 1);
  CHECK(j["special"] == "Generic");
  CHECK(j["lspace"] == true);
  CHECK(j["spinc_blocks"] == json::array({1, 3, 3, 3, 3}));
  CHECK(j["classes"].size() == 5);
  CHECK(j["classes"][0]["family_one"] == false);
  CHECK(j["classes"][0]["local"] == json::array({{0, 1}}));
  CHECK(j["width_genus"]["width"] == 14);
  CHECK(j["width_genus"]["thurston_norm"] == 9);
  CHECK(j["width_genus"]["genus"] == 5);
  CHECK(j["width_genus"]["fibred"] == true);
  CHECK(j["width_genus"]["top_rank"] == 1);
  // The euler characteristic sums to a unit at t = 1: total coefficient mass p.
  long long mass = 0;
  for (const auto& term : j["chi"]) mass += term[2].get<long long>();
  CHECK(mass == 5);
}

TEST_CASE("invariants reports a null genus when the norm degenerates") {
  // l - 1 = 2 steps of q' = 2 land on k = 0 mod 5: the unknot in L(5,3).
  CliResult r = cli({"invariants", "5", "3", "3", "1", "0"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["special"] == "Unknot");
  CHECK(j["total_rank"] == 5);
  CHECK(j["width_genus"]["genus"].is_null());
  CHECK(j["width_genus"]["fibred"] == false);
}

TEST_CASE("convert to a doubly pointed diagram matches the worked example") {
  CliResult r = cli({"convert", "5", "3", "2", "3", "1", "--to", "11"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["eligible"] == true);
  CHECK(j["one_one"] == json({{"p", 13}, {"q", 1}, {"r", 5}, {"s", 6}, {"chirality", 1}}));
  CHECK(j["relations"]["mirror"] == json({{"p", 13}, {"q", 1}, {"r", 6}, {"s", 9}, {"chirality", 1}}));
  CHECK(j["relations"]["alt"] == json({{"p", 13}, {"q", 1}, {"r", 6}, {"s", 4}, {"chirality", -1}}));
}

TEST_CASE("convert to a simple knot succeeds exactly for trivial patterns") {
  CliResult core = cli({"convert", "5", "3", "2", "1", "0", "--to", "simple"});
  REQUIRE(core.code == 0);
  json j = json::parse(core.out);
  REQUIRE(j["eligible"] == true);
  CHECK(j["simple"] == json({{"p", 5}, {"q", 2}, {"k", 3}}));
  CHECK(j["special"] == "Core");

  CliResult no = cli({"convert", "5", "3", "2", "3", "1", "--to", "simple"});
  REQUIRE(no.code == 0);
  json nj = json::parse(no.out);
  CHECK(nj["eligible"] == false);
  CHECK(nj["reason"].is_string());
}

TEST_CASE("convert to a one bridge braid honors the lift option") {
  CliResult r = cli({"convert", "5", "3", "2", "3", "1", "--to", "braid"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["eligible"] == true);
  CHECK(j["braid"]["w"] == 12);
  CHECK(j["braid"]["slope"] == json({{"num", 3}, {"den", 8}}));
  CHECK(j["braid"]["lift"] == 0);
  CHECK(j["braid"]["n0"] == 1);
  CHECK(j["braid"]["epsilon"] == 0);
  CHECK(j["braid"]["left_limit"] == true);

  CliResult lifted = cli({"convert", "5", "3", "2", "3", "1", "--to", "braid", "--lift", "1"});
  REQUIRE(lifted.code == 0);
  json lj = json::parse(lifted.out);
  CHECK(lj["braid"]["w"] == 17);
  CHECK(lj["braid"]["slope"] == json({{"num", 5}, {"den", 13}}));

  // Trivial patterns and knots in S^3 have no one bridge braid presentation.
  CliResult u1 = cli({"convert", "5", "3", "2", "1", "0", "--to", "braid"});
  REQUIRE(u1.code == 0);
  CHECK(json::parse(u1.out)["eligible"] == false);
  CliResult s3 = cli({"convert", "1", "0", "1", "5", "2", "--to", "braid"});
  REQUIRE(s3.code == 0);
  CHECK(json::parse(s3.out)["eligible"] == false);
}

TEST_CASE("equivalent separates the three verdicts and verifies isomorphism") {
  CliResult eq = cli({"equivalent", "7", "2", "2", "3", "1", "7", "4", "2", "3", "1"});
  REQUIRE(eq.code == 0);
  json j = json::parse(eq.out);
  CHECK(j["verdict"] == "Equivalent");
  CHECK(j["isomorphism_verified"] == true);

  CliResult ne = cli({"equivalent", "7", "2", "2", "3", "1", "7", "2", "2", "5", "1"});
  REQUIRE(ne.code == 0);
  CHECK(json::parse(ne.out)["verdict"] == "NotEquivalent");

  // Equal tuples up to q-inverse are distinct knots when l is interior.
  CliResult mid = cli({"equivalent", "5", "2", "3", "3", "1", "5", "3", "3", "3", "1"});
  REQUIRE(mid.code == 0);
  CHECK(json::parse(mid.out)["verdict"] == "NotEquivalent");

  // Composite knots with equal patterns but unidentified core summands.
  CliResult ind = cli({"equivalent", "5", "2", "1", "3", "1", "5", "3", "1", "3", "1"});
  REQUIRE(ind.code == 0);
  CHECK(json::parse(ind.out)["verdict"] == "Indeterminate");

  CliResult am = cli({"equivalent", "5", "2", "2", "3", "1", "7", "2", "2", "3", "1"});
  REQUIRE(am.code == 0);
  json aj = json::parse(am.out);
  CHECK(aj["verdict"] == "AmbientMismatch");
  CHECK(aj["reason"].is_string());
}

TEST_CASE("surgery-magic resolves, lists candidates, or reports a non lens space") {
  CliResult res = cli({"surgery-magic", "3", "1", "3", "-2", "1", "3"});
  REQUIRE(res.code == 0);
  json j = json::parse(res.out);
  CHECK(j["kind"] == "Resolved");
  CHECK(j["row"] == 1);
  CHECK(j["lens"] == json({{"p", 9}, {"q", 7}}));
  CHECK(j["knot"] == json({{"p", 9}, {"q", 7}, {"l", 7}, {"u", 3}, {"v", 1}, {"mirrored", false}}));

  CliResult cand = cli({"surgery-magic", "3", "1", "5", "2", "1", "1"});
  REQUIRE(cand.code == 0);
  json cj = json::parse(cand.out);
  CHECK(cj["kind"] == "Candidates");
  CHECK(cj["row"] == 10);
  CHECK(cj["p"] == 3);
  CHECK(cj["q_candidates"] == json::array({1, 2}));
  CHECK(cj["l_candidates"] == json::array({2, 3}));

  CliResult no = cli({"surgery-magic", "3", "1", "1", "1", "1", "1"});
  REQUIRE(no.code == 0);
  json nj = json::parse(no.out);
  CHECK(nj["kind"] == "Unknown");
  CHECK(nj["lens"].is_null());
}

TEST_CASE("surgery-braid normalizes, classifies the interval, and fills") {
  CliResult r = cli({"surgery-braid", "4", "2", "5", "--fill", "7", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["w"] == 4);
  CHECK(j["b"] == 2);
  CHECK(j["t"] == 1);
  CHECK(j["interval"]["class"] == "Cable");
  CHECK(j["interval"]["cable_d"] == 2);
  CHECK(j["interval"]["cable_side"] == 1);
  CHECK(j["interval"]["f_minus"] == json({{"num", 1}, {"den", 3}}));
  CHECK(j["interval"]["f_plus"] == json({{"num", 1}, {"den", 2}}));
  CHECK(j["fill"] == json({{"p", 7}, {"q", 3}, {"k", 5}}));

  // A slope outside the closed interval yields no filled simple knot.
  CliResult miss = cli({"surgery-braid", "4", "2", "5", "--fill", "7", "2"});
  REQUIRE(miss.code == 0);
  CHECK(json::parse(miss.out)["fill"].is_null());

  // Farey vertices bound no interval; torus endpoints cover a full gap.
  CliResult vertex = cli({"surgery-braid", "4", "1", "3"});
  REQUIRE(vertex.code == 0);
  CHECK(json::parse(vertex.out)["interval"].is_null());
  CliResult torus = cli({"surgery-braid", "2", "1", "2"});
  REQUIRE(torus.code == 0);
  json tj = json::parse(torus.out);
  CHECK(tj["interval"]["class"] == "Torus");
  CHECK(tj["interval"]["f_minus"] == json({{"num", 0}, {"den", 1}}));
  CHECK(tj["interval"]["f_plus"] == json({{"num", 1}, {"den", 1}}));
}

TEST_CASE("census classifies records from stdin and flags malformed lines") {
  const std::string m004 =
      R"({"name":"m004","p":1,"q":0,"d":1,"alexander":[[-1,1],[0,-3],[1,1]],"meridian_exponent":1})";

  CliResult ok = cli({"census"}, m004 + "\n");
  REQUIRE(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["name"] == "m004");
  CHECK(j["verdict"] == "ConstrainedFilling");
  CHECK(j["n_forms"] == 1);
  CHECK(j["virtual_l"] == json::array({1}));
  CHECK(j["virtual_u"] == 5);
  CHECK(j["virtual_v"] == 2);
  CHECK(j["residues"][0] == json::array({{-1, 1}, {0, -3}, {1, 1}}));

  // A bad line is diagnosed on stderr, the rest of the stream is still done.
  CliResult bad = cli({"census"}, m004 + "\nnot json\n" + m004 + "\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(lines_of(bad.out).size() == 2);

  // Optional fields fall back to an empty name and meridian exponent p.
  CliResult defaults = cli({"census"}, R"({"p":5,"q":1,"d":1,"alexander":[[0,1]]})" "\n");
  REQUIRE(defaults.code == 0);
  json dj = json::parse(defaults.out);
  CHECK(dj["name"] == "");
  CHECK(dj["verdict"] == "SimpleFilling");

  CliResult empty = cli({"census"}, "");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
}

TEST_CASE("verify-iso checks one tuple or sweeps a parameter box") {
  CliResult one = cli({"verify-iso", "7", "3", "2", "3", "1"});
  REQUIRE(one.code == 0);
  json j = json::parse(one.out);
  CHECK(j["verified"] == true);

  CliResult sweep = cli({"verify-iso", "--sweep", "3", "3"});
  REQUIRE(sweep.code == 0);
  std::vector<json> rows = lines_of(sweep.out);
  // p = 2 gives one tuple (l = 2 only), p = 3 gives q in {1,2} x l in {2,3}.
  REQUIRE(rows.size() == 5);
  for (const json& row : rows) CHECK(row["verified"] == true);

  CHECK(cli({"verify-iso"}).code == 1);
  CHECK(cli({"verify-iso", "7", "3", "2", "3", "1", "--sweep", "3", "3"}).code == 1);
}

TEST_CASE("usage problems and invalid tuples exit with code one") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"convert", "5", "3", "2", "3", "1", "--to", "nonsense"}).code == 1);
  CliResult bad = cli({"invariants", "4", "2", "1", "1", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(cli({"surgery-braid", "4", "2", "5", "--fill", "4", "2"}).code == 1);

  CliResult help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("SUBCOMMAND") != std::string::npos);
}

TEST_CASE("output is deterministic and table format stays human readable") {
  CliResult a = cli({"invariants", "9", "2", "4", "5", "2"});
  CliResult b = cli({"invariants", "9", "2", "4", "5", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  CliResult t = cli({"invariants", "5", "3", "2", "3", "1", "--format", "table"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("C(5,3,2,3,1)") != std::string::npos);
  CHECK(t.out.find("rank 13") != std::string::npos);
  CHECK(t.out.find("genus 5") != std::string::npos);
}
