/*
   Copyright 2026 The gft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Runs the command-line tool as a subprocess.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "gft/io.hpp"
#include "gft/omega.hpp"

#ifndef GFT_CLI_PATH
#error "GFT_CLI_PATH must point at the gft executable"
#endif

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GFT_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string write(const std::string& name, const gft::TaylorSeries& f) {
    const auto p = tmp(name);
    gft::write_series_file(p, f);
    return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("roots") {
    Run r = run("roots --eq convexity_2_1");
    CHECK(r.status == 0);
    CHECK(r.out.find("0.3181") != std::string::npos);
    r = run("roots --eq ctc_2_5 --json");
    CHECK(r.status == 0);
    CHECK(std::abs(nlohmann::json::parse(r.out)["root"].get<double>() - 0.5471) < 5e-4);
    CHECK(run("roots --eq nonsense").status == 2);
    CHECK(nlohmann::json::parse(run("roots --all --json").out).size() == 7);
    CHECK(run("roots").status == 2);
}

TEST_CASE("member") {
    const std::string id = write("gft_cli_id.json", gft::TaylorSeries::identity());
    const std::string fmu = write("gft_cli_fmu.json", gft::family_f_mu(0.5, 128));
    const std::string bad = write("gft_cli_bad.json", gft::make_series({1.0, 1.0}));
    Run r = run("member --input " + id + " --lambda 0.1");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["defect"] == 0.0);
    CHECK(run("member --input " + fmu + " --lambda 0.5").status == 0);
    CHECK(run("member --input " + bad + " --lambda 0.5").status == 1);
    CHECK(run("member --input " + id + " --lambda 0").status == 2);
    CHECK(run("member --input /nonexistent.json --lambda 0.5").status == 2);
}

TEST_CASE("radius") {
    const std::string half = write("gft_cli_half.json", gft::make_series({1.0, 0.5}));
    const std::string one = write("gft_cli_one.json", gft::make_series({1.0, 1.0}));
    const std::string f09 = write("gft_cli_f09.json", gft::family_f_mu(0.9, 64));
    Run r = run("radius --property convex --input " + half);
    CHECK(r.status == 0);
    CHECK(std::abs(nlohmann::json::parse(r.out)["radius"].get<double>() - 0.5) < 1e-6);
    r = run("radius --property starlike --input " + one);
    CHECK(std::abs(nlohmann::json::parse(r.out)["radius"].get<double>() - 0.5) < 1e-6);
    r = run("radius --property convex --input " + f09 + " --partial-sum 3");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["radius"].get<double>() >= 0.4969);
    CHECK(run("radius --property round --input " + half).status == 2);
    // f' vanishes at z = -1/2, which is the first grid radius.
    r = run("radius --property convex --input " + one + " --r-step 0.5");
    CHECK(r.status == 3);
    CHECK(nlohmann::json::parse(r.out)["partial"] == true);
}

TEST_CASE("family") {
    const auto out = tmp("gft_cli_family.json");
    CHECK(run("family --name fmu --mu 0 --degree 3 --out " + out.string()).status == 0);
    CHECK(gft::read_series_file(out) == gft::make_series({1.0, 0.0, 0.25}));
    CHECK(run("family --name fmu --mu 1 --degree 2 --out " + out.string()).status == 0);
    CHECK(gft::read_series_file(out) == gft::make_series({1.0, 0.5}));
    CHECK(run("family --name eq16 --lambda 1 --out " + out.string()).status == 0);
    CHECK(gft::read_series_file(out) == gft::make_series({1.0, 0.5, 0.25}));
    CHECK(run("family --name extremal --k 5 --lambda 0.5 --out " + out.string()).status == 0);
    CHECK(gft::read_series_file(out) == gft::extremal_k(5, 0.5));
    CHECK(run("family --name fmu --mu 2").status == 2);
    CHECK(run("family --name nope").status == 2);
}

TEST_CASE("figure1") {
    const auto out = tmp("gft_cli_fig.csv");
    Run r = run("figure1 --nmax 40 --format csv --out " + out.string());
    CHECK(r.status == 0);
    CHECK(r.out.find("plateau from n = 1") != std::string::npos);
    r = run("figure1 --nmax 5 --format json");
    CHECK(nlohmann::json::parse(r.out).size() == 4);
    CHECK(run("figure1 --nmax 10 --out /nonexistent/dir/fig.csv").status == 2);
    CHECK(run("figure1 --nmax 1").status == 2);
}

TEST_CASE("verify") {
    Run a = run("verify --suite thm33 --json");
    CHECK(a.status == 0);
    CHECK(a.out.find("minimal n = 12") != std::string::npos);
    Run b = run("verify --suite thm45 --seed 7 --samples 20 --json");
    Run c = run("verify --suite thm45 --seed 7 --samples 20 --json");
    CHECK(b.status == 0);
    CHECK(b.out == c.out);
    CHECK(run("verify --suite lemma1 --samples 20").status == 0);
    CHECK(run("verify --suite nope").status == 2);
}

}
