#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multipack/cli.hpp"
#include "multipack/serialize.hpp"

using namespace multipack;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = "cli_test_tmp_" + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("compute bounds is deterministic") {
  auto a = cli({"compute", "bounds", "--gen", "cycle 6"});
  auto b = cli({"compute", "bounds", "--gen", "cycle 6"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j["mp"] == 2);
  CHECK(j["gamma_b"] == 2);
  CHECK(j["mp_equals_gamma_b"] == true);
  CHECK(j["chain_ok"] == true);
}

TEST_CASE("compute parameters") {
  auto gamma = cli({"compute", "gamma", "--gen", "complete 5"});
  CHECK(gamma.code == 0);
  CHECK(Json::parse(gamma.out)["value"] == 1);

  auto mpf = cli({"compute", "mpf", "--gen", "petersen"});
  CHECK(Json::parse(mpf.out)["value"] == "2/1");

  auto gbf = cli({"compute", "gammabf", "--gen", "petersen"});
  CHECK(Json::parse(gbf.out)["value"] == "2/1");

  auto mp1 = cli({"compute", "mp", "--gen", "petersen", "--k", "1"});
  CHECK(Json::parse(mp1.out)["value"] == 1);

  CHECK(cli({"compute", "nonsense", "--gen", "petersen"}).code == 2);
  CHECK(cli({"compute", "gamma"}).code == 2);               // no input source
  CHECK(cli({"compute", "gamma", "--file", "nope"}).code == 2);

  // --output diverts the report to a file
  auto out = cli({"compute", "rho", "--gen", "cycle 9", "--output", "cli_test_out.json"});
  CHECK(out.code == 0);
  CHECK(out.out.empty());
  std::ifstream f("cli_test_out.json");
  auto j = Json::parse(f);
  CHECK(j["value"] == 3);
  f.close();
  std::remove("cli_test_out.json");
}

TEST_CASE("generate and read back") {
  auto gen = cli({"generate", "petersen"});
  CHECK(gen.code == 0);
  TempFile f(gen.out);
  auto bounds = cli({"compute", "gammab", "--file", f.path});
  CHECK(bounds.code == 0);
  CHECK(Json::parse(bounds.out)["value"] == 2);

  auto dot = cli({"generate", "tree10", "--dot"});
  CHECK(dot.out.find("graph G {") == 0);
  CHECK(dot.out.find("label=\"v7\"") != std::string::npos);

  CHECK(cli({"generate", "nonsense"}).code == 2);
  CHECK(cli({"generate", "cycle", "2"}).code == 2);
}

TEST_CASE("verify certificates end to end") {
  auto mp = cli({"compute", "mp", "--gen", "cycle 9"});
  TempFile cert(Json::parse(mp.out)["certificate"].dump());
  CHECK(cli({"verify", cert.path, "--gen", "cycle 9"}).code == 0);
  // a certificate carries the graph hash and refuses foreign graphs
  CHECK(cli({"verify", cert.path, "--gen", "cycle 8"}).code == 2);

  // two adjacent members violate the unit-radius constraint
  auto g = cycle_graph(9);
  TempFile bad(multipacking_certificate(g, {{0, 1}, 4}).dump());
  auto r = cli({"verify", bad.path, "--gen", "cycle 9"});
  CHECK(r.code == 1);
  auto j = Json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["witness"]["radius"] == 1);

  auto gb = cli({"compute", "gammab", "--gen", "teshima"});
  TempFile bcert(Json::parse(gb.out)["certificate"].dump());
  CHECK(cli({"verify", bcert.path, "--gen", "teshima"}).code == 0);

  auto chordal = cli({"chordal", "--gen", "tree10"});
  TempFile scert(Json::parse(chordal.out)["certificate"].dump());
  CHECK(cli({"verify", scert.path, "--gen", "tree10"}).code == 0);

  // split-set certificates: P_8 with the edge (2,3) cut splits into two
  // even-diameter pieces; cutting (3,4) does not
  auto p8 = path_graph(8);
  std::vector<int> spine = {0, 1, 2, 3, 4, 5, 6, 7};
  TempFile good(splitset_certificate(p8, spine, {{2, 3}}).dump());
  CHECK(cli({"verify", good.path, "--gen", "path 8"}).code == 0);
  TempFile odd(splitset_certificate(p8, spine, {{3, 4}}).dump());
  CHECK(cli({"verify", odd.path, "--gen", "path 8"}).code == 1);

  // a fractional certificate round trip
  auto mpf = cli({"compute", "mpf", "--gen", "petersen"});
  TempFile fcert(Json::parse(mpf.out)["certificate"].dump());
  auto fr = cli({"verify", fcert.path, "--gen", "petersen"});
  CHECK(fr.code == 0);
  CHECK(Json::parse(fr.out)["total"] == "2/1");
}

TEST_CASE("chordal subcommand") {
  auto yes = cli({"chordal", "--gen", "tree10"});
  CHECK(yes.code == 0);
  CHECK(Json::parse(yes.out)["verdict"] == "strongly-chordal");

  auto no = cli({"chordal", "--gen", "trampoline 3"});
  CHECK(no.code == 0);
  CHECK(Json::parse(no.out)["verdict"] == "not-strongly-chordal");
  CHECK(Json::parse(no.out)["witness"].size() == 6);
}

TEST_CASE("farber subcommands") {
  auto dom = cli({"farber", "--gen", "tree10", "--trace"});
  CHECK(dom.code == 0);
  auto j = Json::parse(dom.out);
  CHECK(j["dominating"] == Json::array({3, 4, 5, 9}));
  CHECK(j["packing_total"] == 4);
  CHECK(j["trace"].size() == 20);

  auto bc = cli({"farber", "--gen", "tree10", "--broadcast"});
  auto jb = Json::parse(bc.out);
  CHECK(jb["cost"] == 3);
  CHECK(jb["matrix"]["cols"] == 17);

  CHECK(cli({"farber", "--gen", "cycle 6"}).code == 2);  // not strongly chordal
  CHECK(cli({"farber", "--gen", "petersen", "--broadcast"}).code == 2);  // not a tree

  // weighted run through a weights file
  TempFile w("2 1 1 1 1 1 1 1 1 3\n");
  auto weighted = cli({"farber", "--gen", "tree10", "--weights", w.path});
  CHECK(weighted.code == 0);
  auto jw = Json::parse(weighted.out);
  CHECK(jw["packing_total"] == jw["dominating_weight"]);
}

TEST_CASE("treemp subcommand") {
  auto r = cli({"treemp", "--gen", "tree24", "--trace"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["size"] == 6);
  CHECK(j["split_edges"].size() == 4);
  CHECK(j["trace"].back()["op"] == "end_swap");
  CHECK(cli({"treemp", "--gen", "cycle 6"}).code == 2);
}

TEST_CASE("facts subcommand") {
  auto r = cli({"facts", "--gen", "path 9", "--alpha", "0"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["facts"].size() == 7);
  CHECK(j["facts"][3]["pass"] == false);
  CHECK(cli({"facts", "--gen", "path 9", "--alpha", "4"}).code == 2);  // not peripheral
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("serialization shapes are stable") {
  // graph hash regression: certificates must keep matching old runs
  CHECK(graph_hash(petersen()) == "4b8d19307ae4e306");

  auto r = cli({"farber", "--gen", "tree10", "--broadcast"});
  auto m = Json::parse(r.out)["matrix"];
  CHECK(m["rows"] == 10);
  CHECK(m["cols"] == 17);
  CHECK(m["bits"].get<std::string>().size() == 170);
  CHECK(m["col_index"].size() == 17);
  CHECK(m["col_cost"].size() == 17);
  CHECK(m["row_index"].size() == 10);

  // rationals travel as "p/q" strings end to end
  auto mpf = cli({"compute", "mpf", "--gen", "cycle 4"});
  auto j = Json::parse(mpf.out);
  auto w = j["certificate"]["payload"]["weights"];
  for (const auto& entry : w) {
    auto parsed = rat_from_string(entry[1].get<std::string>());
    CHECK(parsed >= 0);
  }
}
