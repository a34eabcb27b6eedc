// Copyright 2026 The mcusynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mcusynth/circuit_io.hpp"
#include "mcusynth/cli.hpp"

using namespace mcusynth;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mcusynth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "mcusynth_cli_test") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify-identity") {
  const auto r4 = run_cli({"verify-identity", "--n", "4"});
  CHECK(r4.code == 0);
  CHECK(contains(r4.out, "prop-a n=4: PASS (16 assignments)\n"));
  CHECK(contains(r4.out, "prop-b n=4: PASS"));
  CHECK(contains(r4.out, "lemma3 n=4: PASS (lhs=-1 rhs=-1)"));
  CHECK(contains(r4.out, "lemma1 range=[-8,8]: PASS (4913 triples)"));
  CHECK(contains(r4.out, "all checks passed"));

  const auto r1 = run_cli({"verify-identity", "--n", "1"});
  CHECK(r1.code == 0);
  CHECK(contains(r1.out, "prop-a n=1: PASS (2 assignments)"));

  CHECK(run_cli({"verify-identity", "--n", "12", "--samples", "200"}).code == 0);

  CHECK(run_cli({"verify-identity", "--n", "0"}).code == 2);
  CHECK(run_cli({"verify-identity", "--n", "15"}).code == 2);
  CHECK(run_cli({"verify-identity", "--n", "25", "--recurrent-only"}).code == 2);

  const auto rec = run_cli({"verify-identity", "--n", "20", "--recurrent-only", "--samples", "50"});
  CHECK(rec.code == 0);
  CHECK(contains(rec.out, "prop-a n=20 (recurrent, sampled): PASS (52 assignments)"));
}

TEST_CASE("synth writes a parseable circuit and reports counts") {
  TempDir tmp;
  const auto r = run_cli({"synth", "--controls", "2", "--gate", "X", "--out", tmp.file("ccx.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "cnot=2 cv=2 cvdg=1"));
  const auto c = load_circuit(tmp.file("ccx.txt"));
  CHECK(c.size() == 5);

  const auto r3 = run_cli({"synth", "--controls", "3", "--gate", "X", "--out", tmp.file("c3x.txt")});
  CHECK(contains(r3.out, "total=17"));
  CHECK(load_circuit(tmp.file("c3x.txt")).size() == 17);

  const auto opt = run_cli({"synth", "--controls", "3", "--gate", "H", "--optimize", "--out", tmp.file("o.txt")});
  CHECK(opt.code == 0);
  CHECK(contains(opt.out, "before: cnot=10"));
  CHECK(contains(opt.out, "after: "));

  const auto id = run_cli({"synth", "--controls", "1", "--gate", "I", "--out", tmp.file("ci.txt")});
  CHECK(id.code == 0);
  CHECK(load_circuit(tmp.file("ci.txt")).size() == 1);
  CHECK(run_cli({"check", "--circuit", tmp.file("ci.txt"), "--controls", "1", "--gate", "I"}).code == 0);
}

TEST_CASE("synth usage errors") {
  TempDir tmp;
  CHECK(run_cli({"synth", "--controls", "0", "--gate", "X", "--out", tmp.file("a.txt")}).code == 2);
  CHECK(run_cli({"synth", "--controls", "2", "--gate", "Q", "--out", tmp.file("a.txt")}).code == 2);
  CHECK(run_cli({"synth", "--controls", "2", "--gate", "X", "--out", tmp.file("nodir/a.txt")}).code == 2);
  CHECK(run_cli({"synth", "--controls", "2", "--gate", "X"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);

  std::ofstream(tmp.file("bad.json")) << R"({"matrix": [[[1,0],[1,0]],[[0,0],[1,0]]]})";
  CHECK(run_cli({"synth", "--controls", "2", "--gate", "@" + tmp.file("bad.json"), "--out", tmp.file("a.txt")}).code ==
        2);
}

TEST_CASE("synth with an explicit JSON matrix") {
  TempDir tmp;
  std::ofstream(tmp.file("y.json")) << R"({"matrix": [[[0,0],[0,-1]],[[0,1],[0,0]]]})";
  const std::string gate = "@" + tmp.file("y.json");
  CHECK(run_cli({"synth", "--controls", "3", "--gate", gate, "--out", tmp.file("y.txt")}).code == 0);
  CHECK(run_cli({"check", "--circuit", tmp.file("y.txt"), "--controls", "3", "--gate", gate}).code == 0);
  CHECK(run_cli({"check", "--circuit", tmp.file("y.txt"), "--controls", "3", "--gate", "X"}).code == 1);
}

TEST_CASE("check detects mutations") {
  TempDir tmp;
  REQUIRE(run_cli({"synth", "--controls", "2", "--gate", "X", "--out", tmp.file("ccx.txt")}).code == 0);
  const auto ok = run_cli({"check", "--circuit", tmp.file("ccx.txt"), "--controls", "2", "--gate", "X"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "PASS"));

  // Delete the first CNOT.
  std::ifstream in(tmp.file("ccx.txt"));
  std::ostringstream mutated;
  std::string line;
  bool dropped = false;
  while (std::getline(in, line)) {
    if (!dropped && line.rfind("cnot", 0) == 0) {
      dropped = true;
      continue;
    }
    mutated << line << '\n';
  }
  REQUIRE(dropped);
  std::ofstream(tmp.file("mut.txt")) << mutated.str();
  const auto bad = run_cli({"check", "--circuit", tmp.file("mut.txt"), "--controls", "2", "--gate", "X"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "FAIL"));
  const double d = std::stod(bad.out.substr(bad.out.find('=') + 1));
  CHECK(d >= 0.5);

  const auto cnot = run_cli({"synth", "--controls", "1", "--gate", "X", "--out", tmp.file("cx.txt")});
  REQUIRE(cnot.code == 0);
  const auto exact = run_cli({"check", "--circuit", tmp.file("cx.txt"), "--controls", "1", "--gate", "X"});
  CHECK(exact.code == 0);
  CHECK(contains(exact.out, "distance=0 PASS"));
}

TEST_CASE("check usage errors") {
  TempDir tmp;
  REQUIRE(run_cli({"synth", "--controls", "2", "--gate", "X", "--out", tmp.file("ccx.txt")}).code == 0);
  CHECK(run_cli({"check", "--circuit", tmp.file("ccx.txt"), "--controls", "3", "--gate", "X"}).code == 2);
  CHECK(run_cli({"check", "--circuit", tmp.file("none.txt"), "--controls", "2", "--gate", "X"}).code == 2);
  std::ofstream(tmp.file("garbage.txt")) << "qubits 3\nfoo 1 2\n";
  CHECK(run_cli({"check", "--circuit", tmp.file("garbage.txt"), "--controls", "2", "--gate", "X"}).code == 2);
}

TEST_CASE("simulate") {
  TempDir tmp;
  std::ofstream(tmp.file("cnot.txt")) << "qubits 2\ncnot 0 1\n";
  const auto r = run_cli({"simulate", "--circuit", tmp.file("cnot.txt"), "--input", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "|11⟩: 1.0\n");

  std::ofstream(tmp.file("empty.txt")) << "qubits 4\n";
  CHECK(run_cli({"simulate", "--circuit", tmp.file("empty.txt"), "--input", "0110"}).out == "|0110⟩: 1.0\n");

  REQUIRE(run_cli({"synth", "--controls", "2", "--gate", "X", "--out", tmp.file("ccx.txt")}).code == 0);
  CHECK(run_cli({"simulate", "--circuit", tmp.file("ccx.txt"), "--input", "110"}).out == "|111⟩: 1.0\n");

  REQUIRE(run_cli({"synth", "--controls", "1", "--gate", "H", "--out", tmp.file("ch.txt")}).code == 0);
  CHECK(run_cli({"simulate", "--circuit", tmp.file("ch.txt"), "--input", "11"}).out ==
        "|10⟩: 0.707106781187\n|11⟩: -0.707106781187\n");

  CHECK(run_cli({"simulate", "--circuit", tmp.file("cnot.txt"), "--input", "101"}).code == 2);
  CHECK(run_cli({"simulate", "--circuit", tmp.file("cnot.txt"), "--input", "1x"}).code == 2);
  std::ofstream(tmp.file("unbound.txt")) << "qubits 2\ncv 0 1\n";
  CHECK(run_cli({"simulate", "--circuit", tmp.file("unbound.txt"), "--input", "10"}).code == 2);
}

TEST_CASE("format_amplitude") {
  CHECK(cli::format_amplitude({1.0, 0.0}) == "1.0");
  CHECK(cli::format_amplitude({-1.0, 1e-15}) == "-1.0");
  CHECK(cli::format_amplitude({0.0, 1.0}) == "1.0i");
  CHECK(cli::format_amplitude({0.5, -0.5}) == "0.5-0.5i");
  CHECK(cli::format_amplitude({0.5, 0.25}) == "0.5+0.25i");
}
