// Copyright 2026 The mzent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path kTmp = "cli_test_tmp";

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_mzent(const std::string& args) {
    static int counter = 0;
    fs::create_directories(kTmp);
    const fs::path outfile = kTmp / ("stdout_" + std::to_string(counter++) + ".txt");
    const std::string cmd = std::string(MZENT_BIN) + " " + args + " > " + outfile.string() + " 2> /dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = raw == -1 ? -1 : WEXITSTATUS(raw);
    std::ifstream f(outfile);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        if (c == '\n') {
            ++n;
        }
    }
    return n;
}

const std::string kHalfPiText = "1.5707963267948966";

}  // namespace

TEST_CASE("demo reports the strong-coupling scenario") {
    RunResult r = run_mzent("demo --theta1 " + kHalfPiText + " --theta2 " + kHalfPiText);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P_R = 0.5\n") != std::string::npos);
    CHECK(r.out.find("P_U = 0.5\n") != std::string::npos);
    CHECK(r.out.find("R entropy = 1\n") != std::string::npos);
    CHECK(r.out.find("U entropy = 1\n") != std::string::npos);
    CHECK(r.out.find("negativity") == std::string::npos);  // gamma defaults to 1
}

TEST_CASE("demo marks the dark port") {
    RunResult r = run_mzent("demo --theta1 0 --theta2 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("P_R = 0\n") != std::string::npos);
    CHECK(r.out.find("dark port") != std::string::npos);
    CHECK(r.out.find("P_U = 1\n") != std::string::npos);
}

TEST_CASE("demo shows cancelled entanglement at gamma = 0") {
    RunResult r = run_mzent("demo --theta1 " + kHalfPiText + " --theta2 " + kHalfPiText + " --gamma 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("R concurrence = 0\n") != std::string::npos);
    CHECK(r.out.find("U concurrence = 0\n") != std::string::npos);
}

TEST_CASE("degrees mode matches radians byte for byte") {
    RunResult deg = run_mzent("--degrees demo --theta1 90 --theta2 45");
    RunResult rad = run_mzent("demo --theta1 " + kHalfPiText + " --theta2 0.7853981633974483");
    CHECK(deg.exit_code == 0);
    CHECK(deg.out == rad.out);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run_mzent("demo --theta1 1").exit_code == 2);           // missing required
    CHECK(run_mzent("demo --theta1 1 --theta2 1 --bogus").exit_code == 2);
    CHECK(run_mzent("demo --theta1 2.5 --theta2 0.5").exit_code == 2);  // out of range
    CHECK(run_mzent("demo --theta1 0.5 --theta2 0.5 --gamma 2").exit_code == 2);
    CHECK(run_mzent("").exit_code == 2);  // missing subcommand
    CHECK(run_mzent("--help").exit_code == 0);
}

TEST_CASE("runtime I/O failures exit with status 1") {
    CHECK(run_mzent("heatmap --grid 4 --out /nonexistent-dir/x.csv").exit_code == 1);
}

TEST_CASE("heatmap writes the grid CSV and optional SVG") {
    fs::create_directories(kTmp);
    const fs::path csv = kTmp / "hm.csv";
    const fs::path svg = kTmp / "hm.svg";
    RunResult r = run_mzent("heatmap --grid 7 --out " + csv.string() + " --svg " + svg.string());
    CHECK(r.exit_code == 0);
    const std::string data = slurp(csv);
    CHECK(count_lines(data) == 50);  // header + 49 cells
    CHECK(data.rfind("x1,x2,S\n", 0) == 0);
    const std::string picture = slurp(svg);
    CHECK(picture.rfind("<?xml", 0) == 0);
    CHECK(picture.find("</svg>") != std::string::npos);
}

TEST_CASE("decohere writes both ports per gamma sample") {
    fs::create_directories(kTmp);
    const fs::path csv = kTmp / "dc.csv";
    RunResult r = run_mzent("decohere --theta " + kHalfPiText + " --grid 5 --out " + csv.string());
    CHECK(r.exit_code == 0);
    const std::string data = slurp(csv);
    CHECK(count_lines(data) == 11);
    CHECK(data.find("0,R,0,0\n") != std::string::npos);
    CHECK(data.find("1,R,1,1\n") != std::string::npos);
}

TEST_CASE("optimize writes the profile and prints the summary") {
    fs::create_directories(kTmp);
    const fs::path csv = kTmp / "opt.csv";
    RunResult r = run_mzent("optimize --theta " + kHalfPiText +
                            " --gain 1 --loss 1 --w-grid 5 --u-grid 5 --refine 1 --out " + csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("w_star = 1\n") != std::string::npos);
    const std::size_t pos = r.out.find("N_star = ");
    REQUIRE(pos != std::string::npos);
    const double n_star = std::stod(r.out.substr(pos + 9));
    CHECK(n_star >= 0.999);
    const std::string data = slurp(csv);
    CHECK(data.rfind("w,best_N_over_U\n", 0) == 0);
    CHECK(count_lines(data) == 6);
}

TEST_CASE("identical invocations are byte-identical") {
    fs::create_directories(kTmp);
    const std::string opt_args = "optimize --theta 1.1 --gain 1 --loss 0.5 --w-grid 5 --u-grid 5 --refine 1";
    RunResult o1 = run_mzent(opt_args + " --out " + (kTmp / "o1.csv").string());
    RunResult o2 = run_mzent(opt_args + " --out " + (kTmp / "o2.csv").string());
    CHECK(o1.exit_code == 0);
    CHECK(o1.out == o2.out);
    CHECK(slurp(kTmp / "o1.csv") == slurp(kTmp / "o2.csv"));

    RunResult h1 = run_mzent("heatmap --grid 9 --out " + (kTmp / "h1.csv").string() + " --svg " +
                             (kTmp / "h1.svg").string());
    RunResult h2 = run_mzent("heatmap --grid 9 --out " + (kTmp / "h2.csv").string() + " --svg " +
                             (kTmp / "h2.svg").string());
    CHECK(h1.exit_code == 0);
    CHECK(h2.exit_code == 0);
    CHECK(slurp(kTmp / "h1.csv") == slurp(kTmp / "h2.csv"));
    CHECK(slurp(kTmp / "h1.svg") == slurp(kTmp / "h2.svg"));

    RunResult d1 = run_mzent("demo --theta1 0.8 --theta2 0.3 --gamma 0.5,0.2");
    RunResult d2 = run_mzent("demo --theta1 0.8 --theta2 0.3 --gamma 0.5,0.2");
    CHECK(d1.out == d2.out);
}

TEST_CASE("config file supplies defaults and flags override them") {
    fs::create_directories(kTmp);
    const fs::path cfg = kTmp / "run.cfg";
    std::ofstream f(cfg);
    f << "# demo settings\n[demo]\ntheta1 = 0.6\ntheta2 = 0.6\n";
    f.close();

    RunResult from_config = run_mzent("--config " + cfg.string() + " demo");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.out.find("theta1 = 0.6\n") != std::string::npos);
    CHECK(from_config.out.find("theta2 = 0.6\n") != std::string::npos);

    RunResult overridden = run_mzent("--config " + cfg.string() + " demo --theta1 1.2");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("theta1 = 1.2\n") != std::string::npos);
    CHECK(overridden.out.find("theta2 = 0.6\n") != std::string::npos);

    CHECK(run_mzent("--config " + (kTmp / "missing.cfg").string() + " demo --theta1 1 --theta2 1")
              .exit_code == 2);
}
