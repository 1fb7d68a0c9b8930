// Copyright 2026 The polyred Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(POLYRED_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(POLYRED_TEST_DATA) + "/" + name; }

const std::string kF = data("ex1_f.txt");
const std::string kG = data("ex1_g.txt");
const std::string kPair = kF + " " + kG;

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("polyred_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("multiply prints the canonical product") {
  const std::string h =
      "x1^15*x2^15*x3^15 + x1^9*x2^15*x3^25 + x1^7*x2^10*x3^41 + x1*x2^10*x3^51\n";
  for (const char* m : {"sks", "iks", "crt", "hybrid", "direct"}) {
    CAPTURE(m);
    auto r = run("multiply " + kPair + " --method " + m);
    CHECK(r.status == 0);
    CHECK(r.out == h);
  }
  auto stats = run("multiply " + kPair + " --method crt --bases 17,31,52 --stats");
  CHECK(stats.status == 0);
  CHECK(stats.out.find("\"d_hx\":103") != std::string::npos);
  CHECK(run("multiply " + kPair + " --backend ntt").out == h);
}

TEST_CASE("reduce, unimul and recover compose") {
  Scratch tmp;
  auto r = run("reduce " + kPair + " --method iks --fx-out " + tmp.path("fx") + " --gx-out " +
               tmp.path("gx") + " --plan-out " + tmp.path("plan"));
  CHECK(r.status == 0);
  CHECK(r.out == "x^4465 + x^1911\nx^8752 + x^2184\niks n=3 exponents=1,16,256\n");
  CHECK(slurp(tmp.path("plan")) == "iks n=3 exponents=1,16,256\n");

  auto hx = run("unimul " + tmp.path("fx") + " " + tmp.path("gx"));
  CHECK(hx.status == 0);
  CHECK(hx.out == "x^13217 + x^10663 + x^6649 + x^4095\n");
  std::string hx_file = tmp.write("hx", hx.out);

  auto back = run("recover " + hx_file + " --plan " + tmp.path("plan"));
  CHECK(back.status == 0);
  CHECK(back.out == run("multiply " + kPair + " --method direct").out);
}

TEST_CASE("verify reports every method") {
  auto r = run("verify " + kPair);
  CHECK(r.status == 0);
  CHECK(r.out == "sks: ok\niks: ok\ncrt: ok\nhybrid: ok\n");
  CHECK(run("verify " + kPair + " --method hybrid").out == "hybrid: ok\n");
}

TEST_CASE("exit codes") {
  Scratch tmp;
  std::string bad = tmp.write("bad", "x1 +\n");
  CHECK(run("multiply " + bad + " " + kG).status == 2);
  CHECK(run("multiply " + kF + " " + tmp.path("missing")).status == 2);
  CHECK(run("multiply " + kPair + " --modulus 12").status == 2);
  CHECK(run("multiply " + kPair + " --method fft").status == 2);
  CHECK(run("reduce " + kPair + " --method direct").status == 2);
  CHECK(run("multiply " + kPair + " --method crt --bases 4,6,52").status == 3);
  CHECK(run("bench sweep --tuple 10,40,5 --L 5 --terms 5 --trials 1").status == 2);

  std::string hx = tmp.write("hx", "x^140608\n");
  std::string sks = tmp.write("sks", "sks n=3 base=52\n");
  CHECK(run("recover " + hx + " --plan " + sks).status == 4);
  std::string junk = tmp.write("junk", "sks n=3 base=banana\n");
  CHECK(run("recover " + hx + " --plan " + junk).status == 2);
  std::string hybrid = tmp.write("hybrid", "hybrid n=2 steps=2:1:2:crt:17:2:3\n");
  std::string low = tmp.write("low", "x^3\n");
  CHECK(run("recover " + low + " --plan " + hybrid).status == 4);
}

TEST_CASE("bench output is reproducible") {
  const std::string args = "bench table3 --tuple 3,4,5 --terms 20 --trials 2 --seed 5";
  auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,d1,d2,d3,L,T,trial,seed,", 0) == 0);

  Scratch tmp;
  auto json = run("bench sweep --tuple 6,6,6 --L 1..3 --terms 20 --trials 1 --format json --out " +
                  tmp.path("sweep.json"));
  CHECK(json.status == 0);
  std::string text = slurp(tmp.path("sweep.json"));
  CHECK(text.find("\"L\": 3") != std::string::npos);
}
