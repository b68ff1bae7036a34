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

#include <doctest.h>

#include <chrono>
#include <cmath>

#include "gft/errors.hpp"
#include "gft/geometry.hpp"
#include "gft/roots.hpp"

using namespace gft;

TEST_SUITE("roots") {

TEST_CASE("bracketed solver") {
    const RootResult r = solve_bracketed([](double x) { return x * x - 2.0; }, 1.0, 2.0);
    CHECK(std::abs(r.root - std::sqrt(2.0)) < 1e-10);
    CHECK(r.residual < 1e-10);
    CHECK(r.bracket_width < 1e-12);
    CHECK(solve_bracketed([](double x) { return x; }, 0.0, 1.0).root == 0.0);
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoSignChange);
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x; }, 1.0, -1.0), DomainError);
}

TEST_CASE("hand-written counterexample polynomials") {
    const RootResult a = solve_bracketed([](double r) { return 1 - 2 * 0.9 * r - 2.25 * (1 - 0.81) * r * r; }, 0, 1);
    CHECK(std::abs(a.root - 0.4969) < 5e-4);
    const RootResult b = solve_bracketed([](double r) { return 4 - 2.8 * r - 1.53 * r * r; }, 0, 1);
    CHECK(std::abs(b.root - 0.9428) < 5e-4);
    for (Property p : {Property::convex, Property::starlike, Property::ctc}) {
        const NamedEquation e = s3_counterexample_equation(p, 0.7);
        const RootResult c = solve_bracketed(e.F, e.lo, e.hi);
        CHECK(std::abs(e.F(c.root)) < 1e-12);
    }
    CHECK(std::abs(solve_bracketed(s3_counterexample_equation(Property::convex, 0.9).F, 0, 1).root - a.root) < 1e-12);
    CHECK(std::abs(solve_bracketed(s3_counterexample_equation(Property::starlike, 0.7).F, 0, 1).root - b.root) < 1e-12);
}

TEST_CASE("named radii") {
    const auto t0 = std::chrono::steady_clock::now();
    CHECK(std::abs(named_radius("convexity_2_1").root - 0.3181) < 5e-4);
    CHECK(std::abs(named_radius("starlike_2_2").root - 0.4899) < 5e-4);
    CHECK(std::abs(named_radius("ctc_2_5").root - 0.5471) < 5e-4);
    CHECK(std::abs(named_radius("aux_9r2_8r_4").root - 0.3568) < 5e-4);
    CHECK(std::abs(named_radius("aux_3r2_4r_4").root - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(named_radius("tail_dominance_f").root - (1 - std::exp(-2.0))) < 1e-10);
    CHECK(std::abs(named_radius("tail_dominance_fprime").root - named_radius("ctc_2_5").root) < 1e-10);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(elapsed < 0.1);
    // Closed form of the quadratic: (-8 + sqrt(64 + 144)) / 18.
    CHECK(std::abs(named_radius("aux_9r2_8r_4").root - (-8 + std::sqrt(208.0)) / 18) < 1e-12);
    CHECK_THROWS_AS(named_radius("nonsense"), UnknownEquation);
}

TEST_CASE("catalog invariants") {
    CHECK(equation_catalog().size() == 7);
    for (const NamedEquation& e : equation_catalog()) {
        const RootResult r = named_radius(e.name);
        CHECK(r.residual < 1e-10);
        CHECK(r.root > e.lo);
        CHECK(r.root < e.hi);
    }
    const double rc = named_radius("convexity_2_1").root;
    CHECK(rc < (std::sqrt(5.0) - 1) / 2);
}

TEST_CASE("partial-sum positivity polynomial") {
    CHECK(partial_sum_positivity_radius(2).root == 1.0);
    CHECK(std::abs(partial_sum_positivity_radius(3).root - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(partial_sum_positivity_radius(60).root - 0.5471) < 1e-3);
    CHECK(positivity_polynomial(3, 0.0) == 1.0);
    // P_3(r) = 1 - r - (3/4) r^2.
    CHECK(positivity_polynomial(3, 0.4) == doctest::Approx(1 - 0.4 - 0.75 * 0.16));
    double prev = 1.0;
    for (int n = 2; n <= 40; ++n) {
        const double r = partial_sum_positivity_radius(n).root;
        CHECK(r <= prev);
        prev = r;
    }
    CHECK_THROWS_AS(partial_sum_positivity_radius(1), DomainError);
}

TEST_CASE("cubic example thresholds") {
    auto root = [](std::string_view w) {
        const NamedEquation e = cubic_lambda_threshold_equation(w);
        return solve_bracketed(e.F, e.lo, e.hi).root;
    };
    CHECK(std::abs(root("starlike") - 4.0 / 7.0) < 1e-10);
    CHECK(std::abs(root("univalent") - 4.0 / 7.0) < 1e-10);
    CHECK(std::abs(root("convex") - 4.0 / 17.0) < 1e-10);
    CHECK_THROWS_AS(cubic_lambda_threshold_equation("round"), UnknownEquation);
}

}
