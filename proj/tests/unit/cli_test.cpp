#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <premet/json_io.hpp>
#include <premet/verify.hpp>
#include <premet_cli/cli.hpp>

using namespace premet;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
  Json diagnostic() const { return Json::parse(err); }
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "premet_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const Json& j) {
  const auto path = scratch() / name;
  std::ofstream(path) << j.dump(2);
  return path.string();
}

std::string data(const std::string& name) { return std::string(PREMET_TEST_DATA) + "/" + name; }

Json square_lattice() {
  return Json::parse(R"({"kind": "finite", "elements": ["00", "01", "10", "11"],
                         "leq": [["00", "01"], ["00", "10"], ["01", "11"], ["10", "11"]]})");
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("topology of the four-point space") {
    const auto r = invoke({"space", "topology", data("counterexample.json")});
    REQUIRE(r.code == cli::kSuccess);
    const auto t = topology_from_json(r.json());
    const auto& pts = t.points();
    Bitset ball(4);
    for (const auto* id : {"a", "b", "d"}) ball.set(*pts.find(id));
    CHECK(members(t.interior(ball)) == std::vector<std::size_t>{*pts.find("d")});
  }

  TEST_CASE("topology counts") {
    CHECK(invoke({"enum", "topologies", "-n", "3", "--count"}).out == "29\n");
    CHECK(invoke({"enum", "topologies", "-n", "4", "--count"}).out == "355\n");
    const auto listed = invoke({"enum", "topologies", "-n", "2"});
    CHECK(listed.json().size() == 4);
    const auto too_many = invoke({"enum", "topologies", "-n", "5", "--count"});
    CHECK(too_many.code == cli::kInputError);
    CHECK(too_many.diagnostic()["error"] == "NTooLarge");
  }

  TEST_CASE("round trip of one point passes") {
    const auto r = invoke({"verify", "round-trip", "-n", "1"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.json()["verdict"] == "pass");
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> commands{
        {"space", "topology", data("counterexample.json")},
        {"limit", "product", data("counterexample.json"), data("counterexample.json")},
        {"colimit", "coequalise", data("counterexample.json"), data("glue_ab.json")},
        {"verify", "gap", data("counterexample.json"), data("counterexample.json")},
    };
    for (const auto& args : commands) {
      const auto a = invoke(args);
      const auto b = invoke(args);
      CHECK(a.code == cli::kSuccess);
      CHECK(a.out == b.out);
      CHECK(a.out == dump_canonical(a.json()));
    }
  }

  TEST_CASE("argument errors exit 2 with a diagnostic") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"space", "topology", "--bogus", "x"},
             {"nonsense"},
             {},
             {"verify", "round-trip"},
             {"space", "topology", data("counterexample.json"), "--format", "svg"}}) {
      const auto r = invoke(args);
      CHECK(r.code == cli::kInputError);
      CHECK(r.diagnostic().contains("error"));
      CHECK(r.out.empty());
    }
  }

  TEST_CASE("input errors name file and field") {
    auto bad = space_to_json(*counterexample_space());
    bad["d"][4][1] = "z";
    const auto path = write("bad_space.json", bad);
    const auto r = invoke({"space", "topology", path});
    CHECK(r.code == cli::kInputError);
    const auto d = r.diagnostic();
    CHECK(d["error"] == "PointNotInSpace");
    CHECK(d["file"] == path);
    CHECK(d["field"] == "/d/4/1");

    const auto missing = invoke({"space", "topology", (scratch() / "absent.json").string()});
    CHECK(missing.code == cli::kInputError);
    const auto garbled = (scratch() / "garbled.json").string();
    std::ofstream(garbled) << "{";
    CHECK(invoke({"space", "topology", garbled}).code == cli::kInputError);
  }

  TEST_CASE("lattice check reports the meet witness") {
    const auto path = write("square.json", square_lattice());
    const auto r = invoke({"lattice", "check", path});
    CHECK(r.code == cli::kCheckFailed);
    const auto j = r.json();
    CHECK(j["value_distributive"] == false);
    CHECK(j["meet_witness"] == Json({"01", "10"}));

    const auto chain_path = write("chain3.json", lattice_to_json(chain(3)));
    const auto ok = invoke({"lattice", "check", chain_path});
    CHECK(ok.code == cli::kSuccess);
    CHECK(ok.json()["well_above_zero"] == Json({"0", "1", "2"}));

    const auto dot = invoke({"lattice", "check", chain_path, "--format", "dot"});
    CHECK(dot.out.rfind("digraph", 0) == 0);

    const auto omega = write("omega2.json", Json::parse(R"({"kind": "omega", "ground": ["u", "v"]})"));
    const auto om = invoke({"lattice", "check", omega});
    CHECK(om.code == cli::kSuccess);
    CHECK(om.json()["elements"] == 6);
  }

  TEST_CASE("map check") {
    const auto s = counterexample_space();
    const auto swap = write("swap.json", map_to_json(make_map(s, s, {0, 1, 2, 3})));
    CHECK(invoke({"map", "check", swap}).code == cli::kSuccess);
    const auto into = std::make_shared<const ContinuitySpace>(
        premetrize(FiniteTopology::discrete(IdSet({"u", "v"}))));
    const auto zero = std::make_shared<const ContinuitySpace>(
        premetrize(FiniteTopology::indiscrete(IdSet({"x", "y"}))));
    const auto split = write("split.json", map_to_json(make_map(zero, into, {0, 1})));
    const auto r = invoke({"map", "check", split});
    CHECK(r.code == cli::kCheckFailed);
    CHECK(r.json()["eps_delta_continuous"] == false);
    CHECK(r.json()["top_continuous"] == false);
    CHECK_FALSE(r.json()["violation"].is_null());
  }

  TEST_CASE("constructions") {
    const auto product = invoke({"limit", "product", data("counterexample.json"), data("counterexample.json")});
    REQUIRE(product.code == cli::kSuccess);
    CHECK(product.json()["space"]["points"].size() == 16);
    CHECK(product.json()["legs"].size() == 2);

    const auto quotient = invoke({"colimit", "coequalise", data("counterexample.json"), data("glue_ab.json")});
    REQUIRE(quotient.code == cli::kSuccess);
    CHECK(quotient.json()["space"]["points"].size() == 3);

    const auto paths = invoke({"colimit", "coequalise", data("counterexample.json"), data("glue_ab.json"),
                               "--admission", "paths"});
    CHECK(paths.code == cli::kSuccess);

    const auto capped = invoke({"limit", "product", data("counterexample.json"), data("counterexample.json"),
                                "--max-ground", "2"});
    CHECK(capped.code == cli::kInputError);
    CHECK(capped.diagnostic()["error"] == "SizeLimitExceeded");

    const auto topology = write("sierpinski.json", Json::parse(R"({"points": ["x", "y"], "opens": [[], ["x"], ["x", "y"]]})"));
    const auto flagg_space = invoke({"space", "flagg", topology});
    REQUIRE(flagg_space.code == cli::kSuccess);
    CHECK(flagg_space.json()["lattice"]["kind"] == "omega");
    const auto back = write("sierpinski_flagg.json", flagg_space.json());
    CHECK(invoke({"space", "topology", back}).json() == Json::parse(R"({"points": ["x", "y"], "opens": [[], ["x"], ["x", "y"]]})"));
    CHECK(invoke({"space", "premetrize", topology}).code == cli::kSuccess);
  }

  TEST_CASE("universal property verification and replay") {
    const auto two = std::make_shared<const ContinuitySpace>(premetrize(FiniteTopology::discrete(IdSet({"u", "v"}))));
    const Json request{{"kind", "product"}, {"spaces", {space_to_json(*two), space_to_json(*two)}}};
    const auto path = write("product_request.json", request);
    const auto pass = invoke({"verify", "limit", path});
    CHECK(pass.code == cli::kSuccess);
    CHECK(pass.json()["verdict"] == "pass");

    const std::vector<SpacePtr> pair{two, two};
    const auto broken = mutants(product_instance(pair)).front().second;
    const auto broken_path = write("broken_product.json", instance_to_json(broken));
    const auto fail = invoke({"verify", "limit", broken_path});
    CHECK(fail.code == cli::kCheckFailed);
    CHECK(fail.json()["verdict"] == "fail");

    const auto report_path = write("report.json", fail.json());
    const auto replayed = invoke({"verify", "replay", report_path});
    CHECK(replayed.code == cli::kSuccess);
    CHECK(replayed.json()["reproduces"] == true);

    const Json coeq{{"kind", "coequaliser"},
                    {"space", space_to_json(*counterexample_space())},
                    {"relation", Json::parse(R"([["a", "c"]])")}};
    const auto coeq_path = write("coeq_request.json", coeq);
    CHECK(invoke({"verify", "colimit", coeq_path}).code == cli::kSuccess);
    CHECK(invoke({"verify", "preserve", coeq_path}).code == cli::kSuccess);
    CHECK(invoke({"verify", "limit", coeq_path}).code == cli::kInputError);

    const auto probes = write("probes.json", Json::array({space_to_json(*two)}));
    CHECK(invoke({"verify", "limit", path, "--probes", probes}).code == cli::kSuccess);
  }

  TEST_CASE("adjunction and gap") {
    const auto topology = write("sierpinski2.json", Json::parse(R"({"points": ["x", "y"], "opens": [[], ["x"], ["x", "y"]]})"));
    const auto r = invoke({"verify", "adjunction", topology});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.json()["verdict"] == "pass");
    const auto gap = invoke({"verify", "gap", data("counterexample.json"), data("counterexample.json")});
    CHECK(gap.code == cli::kSuccess);
    CHECK(gap.json()["details"]["balls_open"] == false);
  }

  TEST_CASE("output file") {
    const auto target = (scratch() / "out.json").string();
    fs::remove(target);
    const auto r = invoke({"enum", "topologies", "-n", "2", "--count", "-o", target});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.empty());
    std::ifstream in(target);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "4\n");
  }

  TEST_CASE("formats without a DOT form are refused") {
    const auto r = invoke({"verify", "round-trip", "-n", "1", "--format", "dot"});
    CHECK(r.code == cli::kInputError);
    CHECK(r.diagnostic()["field"] == "--format");
  }
}
