#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mechsynth/cli.hpp"
#include "mechsynth/netlist.hpp"

namespace mechsynth {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mechsynth");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> records(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("mechsynth_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, Resistive3Synth) {
  Outcome r = run({"resistive3-synth", "--matrix", "[[1,1,0],[1,2,-1],[0,-1,1]]", "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = records(r.out).at(0);
  EXPECT_TRUE(j["result"]["verified"].get<bool>());
  EXPECT_EQ(j["result"]["netlist"]["elements"].size(), 2u);

  r = run({"resistive3-synth", "--matrix", "[[1,2,0],[2,1,0],[0,0,1]]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("reject"), std::string::npos);
}

TEST(Cli, ParamountCheck) {
  EXPECT_EQ(run({"paramount-check", "--matrix", "[[1,1,0],[1,2,-1],[0,-1,1]]"}).code, 0);
  EXPECT_EQ(run({"paramount-check", "--matrix", "[[1,2,0],[2,1,0],[0,0,1]]"}).code, 1);
  EXPECT_EQ(run({"paramount-check", "--matrix", "[[1,2],[2,1]]"}).code, 2);
}

TEST(Cli, OneportClassify) {
  Outcome r = run({"oneport-classify", "--num", "1,2,2,3", "--den", "0,1,1,2", "--mode", "scale-search"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Theorem 6 Condition 5, λ=1\n");

  r = run({"oneport-classify", "--num", "1,1,2,2", "--den", "1,2,3,5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Theorem 5 Condition 1 (alpha3-W/(2W3)=0)\n");

  r = run({"oneport-classify", "--num", "1,1,2,2", "--den", "1,2,3,1"});
  EXPECT_EQ(r.code, 1);

  // Rescaled Condition 5: accepted only up to scale.
  EXPECT_EQ(run({"oneport-classify", "--num", "2,4,4,6", "--den", "0,2,2,4", "--mode", "as-written"}).code, 1);
  r = run({"oneport-classify", "--num", "2,4,4,6", "--den", "0,2,2,4", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0)["theorem6"]["lambda"], "1/2");
}

TEST(Cli, OneportSynthReverifies) {
  Outcome r = run({"oneport-synth", "--num", "1,1,2,2", "--den", "1,2,3,5", "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = records(r.out).at(0)["result"];
  EXPECT_TRUE(j["verified"].get<bool>());
  MechNetwork net = netlist_from_json(j["netlist"]);
  EXPECT_EQ(driving_point(net), parse_rational_function("(s^3+s^2+2s+2)/(s^4+2s^3+3s^2+5s)"));

  r = run({"oneport-synth", "--num", "0,2,2,2", "--den", "0,1,1,2", "--mode", "as-written"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("IrrationalElement"), std::string::npos);
  r = run({"oneport-synth", "--num", "0,2,2,2", "--den", "0,1,1,2", "--mode", "as-written", "--allow-surd"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sqrt(2)"), std::string::npos);
}

TEST(Cli, OneportSynthMissingCatalog) {
  // Case (a) instance: G = [[2,1,-1],[1,2,1],[-1,1,2]] gives (2,3,3,0;2,2,3).
  std::string empty = temp_file("empty_catalog.json", "{}");
  Outcome r = run({"oneport-synth", "--num", "2,3,3,0", "--den", "1,2,2,3", "--catalog", empty});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"oneport-synth", "--num", "2,3,3,0", "--den", "1,2,2,3"}).code, 0);
}

TEST(Cli, Verify) {
  std::string fig3e = temp_file("fig3e.netlist", R"({"nodes":[0,1,2],"elements":[
    {"kind":"spring","value":"1","nodes":[1,0]},{"kind":"inerter","value":"1","nodes":[1,2]},
    {"kind":"spring","value":"1","nodes":[1,2]},{"kind":"damper","value":"1","nodes":[2,0]},
    {"kind":"spring","value":"1","nodes":[2,0]}],"ports":[{"plus":1,"minus":0}]})");
  Outcome r = run({"verify", "--netlist", fig3e, "--admittance", "(s^3+2s^2+2s+3)/(s^3+s^2+2s)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exact match\n");
  r = run({"verify", "--netlist", fig3e, "--admittance", "(s^3+2s^2+2s+3)/(s^3+s^2+3s)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("mismatch"), std::string::npos);
  EXPECT_EQ(run({"verify", "--netlist", fig3e}).code, 2);

  std::string three = temp_file("three.netlist", R"({"nodes":[0,1,2,3],"elements":[
    {"kind":"conductance","value":"1","nodes":[1,2]},{"kind":"conductance","value":"1","nodes":[2,3]}],
    "ports":[{"plus":1,"minus":0},{"plus":0,"minus":2},{"plus":0,"minus":3}]})");
  r = run({"verify", "--netlist", three, "--matrix", "[[1,1,0],[1,2,-1],[0,-1,1]]"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;

  std::string floaty = temp_file("float.netlist", R"({"nodes":[0,1],"elements":[
    {"kind":"spring","value":0.5,"nodes":[1,0]}],"ports":[{"plus":1,"minus":0}]})");
  EXPECT_EQ(run({"verify", "--netlist", floaty, "--admittance", "1/(2s)"}).code, 2);
}

TEST(Cli, FloatsAreUsageErrors) {
  EXPECT_EQ(run({"oneport-classify", "--num", "1,2,2,3.0", "--den", "0,1,1,2"}).code, 2);
  EXPECT_EQ(run({"resistive3-synth", "--matrix", "[[1.5,0,0],[0,1,0],[0,0,1]]"}).code, 2);
  EXPECT_EQ(run({"region-map", "--g4", "0.5", "--grid", "3"}).code, 2);
  EXPECT_EQ(run({"region-map", "--grid", "2.5"}).code, 2);
  EXPECT_EQ(run({"verify", "--netlist", "x", "--admittance", "1.5/s"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"oneport-classify", "--num", "1,2,2", "--den", "0,1,1,2"}).code, 2);
  EXPECT_EQ(run({"oneport-classify", "--num", "1,2,2,3", "--den", "2,1,1,2"}).code, 2);
  EXPECT_EQ(run({"oneport-classify", "--num", "1,2,2,3", "--den", "0,1,1,2", "--mode", "loose"}).code, 2);
  EXPECT_EQ(run({"oneport-classify", "--num", "1,-2,2,3", "--den", "0,1,1,2"}).code, 2);
  EXPECT_EQ(run({"region-map", "--grid", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, RegionMapSmallGrid) {
  Outcome r = run({"region-map", "--grid", "5"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "g5,g6,class,witness");
  int rows = 0;
  bool saw_m1dag = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line == "0,1/2,at-most-three-interior-segment,m1dag") saw_m1dag = true;
  }
  EXPECT_EQ(rows, 25);
  EXPECT_TRUE(saw_m1dag);

  r = run({"region-map", "--grid", "3", "--lo", "0", "--hi", "1", "--format", "structured"});
  auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 9u);
  EXPECT_EQ(recs[0]["g5"], "0");
  EXPECT_EQ(recs[5]["g6"], "1");
}

TEST(Cli, RegionMapMirrorSymmetry) {
  Outcome r = run({"region-map", "--grid", "41"});
  std::map<std::pair<std::string, std::string>, std::string> cls;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string g5, g6, c, w;
    std::getline(ss, g5, ',');
    std::getline(ss, g6, ',');
    std::getline(ss, c, ',');
    std::getline(ss, w);
    cls[{g5, g6}] = c + "/" + w;
  }
  auto neg = [](const std::string& s) { return s == "0" ? s : (s[0] == '-' ? s.substr(1) : "-" + s); };
  for (const auto& [pt, v] : cls) EXPECT_EQ(cls.at({neg(pt.first), neg(pt.second)}), v) << pt.first << "," << pt.second;
}

TEST(Cli, RegenCatalogMatchesFrozen) {
  std::string out = (std::filesystem::temp_directory_path() / "mechsynth_cli_catalog.json").string();
  Outcome r = run({"regen-fig2-catalog", "--output", out, "--check", MECHSYNTH_FIG2_CATALOG_PATH, "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = records(r.out).at(0);
  EXPECT_EQ(j["topologies"], 4);
  EXPECT_TRUE(j["matches_frozen"].get<bool>());
  std::ifstream a(out), b(MECHSYNTH_FIG2_CATALOG_PATH);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
}

TEST(Cli, EnumerateOracleSmall) {
  Outcome r = run({"enumerate-oracle", "--max-elements", "2", "--max-vertices", "5", "--valuations", "3", "--format",
               "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = records(r.out).at(0);
  EXPECT_GT(j["networks"].get<long>(), 0);
  EXPECT_EQ(j["counterexamples"], 0);
}

}  // namespace
}  // namespace mechsynth
