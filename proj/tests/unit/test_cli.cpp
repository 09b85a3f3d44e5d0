#include <nlohmann/json.hpp>
#include <sstream>

#include "combicheck/cli.hpp"
#include "doctest.h"

using namespace combicheck;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COMBICHECK_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("load_poset") {
  const Poset chain = load_poset(data("chain2.json"));
  CHECK(chain.size() == 2);
  CHECK(chain.less(0, 1));
  const Poset diamond = load_poset(data("diamond.json"));
  CHECK(diamond.leq(0, 3));
  CHECK_FALSE(diamond.comparable(1, 2));
  CHECK_THROWS_AS(load_poset(data("cyclic.json")), PosetError);
  CHECK_THROWS_AS(load_poset(data("missing.json")), PosetError);
  CHECK_THROWS_AS(poset_from_json_text("{\"n\": 2"), PosetError);
  CHECK_THROWS_AS(poset_from_json_text("{\"n\": 2, \"covers\": [[0]]}"), PosetError);
  try {
    poset_from_json_text("{\"n\": 2, \"covers\": [[0, 1], [1, 0]]}");
    FAIL("expected a cyclic-covers error");
  } catch (const PosetError& e) {
    CHECK(e.kind() == PosetError::Kind::cyclic);
  }
}

TEST_CASE("echelon map on the diamond") {
  const auto r = run({"echelon", "map", "--poset", data("diamond.json"), "--sigma", "0,1,2,3", "--json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ech"] == nlohmann::json({3, 2, 1, 0}));
  CHECK(run({"echelon", "map", "--poset", data("diamond.json"), "--sigma", "3,2,1,0"}).code == kExitUsage);
}

TEST_CASE("echelon verify") {
  CHECK(run({"echelon", "verify", "--poset", data("diamond.json")}).code == kExitOk);
  const auto pent = run({"--json", "echelon", "verify", "--poset", data("pentagon.json")});
  CHECK(pent.code == kExitOk);
  CHECK(nlohmann::json::parse(pent.out)[0]["status"] == "skipped");
  const auto cyc = run({"echelon", "verify", "--poset", data("cyclic.json")});
  CHECK(cyc.code == kExitUsage);
  CHECK(cyc.err.find("cyclic") != std::string::npos);
}

TEST_CASE("usage errors") {
  const auto r = run({"genfun", "i-poly", "--n", "3", "--bogus"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"genfun", "i-poly", "--n", "99"}).code == kExitUsage);
  CHECK(run({"genfun", "itilde", "--n", "3", "--stat", "nope"}).code == kExitUsage);
  CHECK(run({"parking", "insert", "--b", "1,1", "--rooks", "1-2"}).code == kExitUsage);
  CHECK(run({"plactic", "centralizer", "--u", "1", "--alphabet", "5", "--max-len", "12"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parking commands reproduce the worked example") {
  const auto phi = run({"--json", "parking", "phi", "--b", "1,1,2,4,5,6", "--w", "6,3,2,5,4,1", "--A", "1,2,4"});
  CHECK(phi.code == kExitOk);
  CHECK(nlohmann::json::parse(phi.out)["rooks"] == nlohmann::json({{1, 3}, {2, 6}, {4, 5}}));
  const auto ins = run({"--json", "parking", "insert", "--b", "1,1,2,4,5,6", "--rooks", "1:3,2:6,4:5", "--u0", "2,4,1"});
  CHECK(ins.code == kExitOk);
  const auto j = nlohmann::json::parse(ins.out);
  CHECK(j["w"] == nlohmann::json({6, 3, 2, 5, 4, 1}));
  CHECK(j["A"] == nlohmann::json({1, 2, 4}));
  CHECK(run({"parking", "verify-fixed-content", "--n", "4"}).code == kExitOk);
}

TEST_CASE("genfun commands") {
  const auto ip = run({"genfun", "i-poly", "--n", "2", "--method", "trees"});
  CHECK(ip.code == kExitOk);
  CHECK(ip.out == "I_2 = 1 + t + q\n");
  const auto it = run({"--json", "genfun", "itilde", "--n", "2", "--stat", "exced"});
  CHECK(nlohmann::json::parse(it.out)["text"] == "1 + t + q");
  CHECK(run({"genfun", "verify-simsun", "--n", "6"}).code == kExitOk);
  CHECK(run({"genfun", "verify-alternating", "--n", "5"}).code == kExitOk);
  CHECK(run({"genfun", "verify-alternating", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("plactic commands") {
  const auto p = run({"--json", "plactic", "p", "--word", "2,1,3,2"});
  CHECK(nlohmann::json::parse(p.out) == nlohmann::json({{1, 2}, {2, 3}}));
  CHECK(run({"plactic", "verify-first-rows", "--u", "2,1", "--alphabet", "4", "--max-len", "5"}).code == kExitOk);
  CHECK(run({"plactic", "verify-rc", "--u", "1,1,2", "--m", "3", "--alphabet", "5", "--max-len", "4"}).code == kExitOk);
  CHECK(run({"plactic", "verify-rc", "--u", "1,3", "--m", "2"}).code == kExitUsage);
}

TEST_CASE("verify criterion is deterministic across worker counts") {
  const auto a = run({"--json", "--seed", "7", "--threads", "1", "verify", "criterion", "--id", "4", "--quick"});
  const auto b = run({"--json", "--seed", "7", "--threads", "3", "verify", "criterion", "--id", "4", "--quick"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto c = run({"--json", "--seed", "8", "verify", "criterion", "--id", "4", "--quick"});
  CHECK(nlohmann::json::parse(c.out)["seed"] == 8);
  CHECK(run({"verify", "criterion", "--id", "13"}).code == kExitUsage);
}

TEST_CASE("verify all --quick") {
  const auto r = run({"--threads", "2", "verify", "all", "--quick"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("criterion 12: PASS") != std::string::npos);
}
