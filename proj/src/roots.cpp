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

#include "gft/roots.hpp"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>

#include "gft/errors.hpp"

namespace gft {

RootResult solve_bracketed(const std::function<double(double)>& F, double a, double b, double tol) {
    if (!(a < b)) throw DomainError("bracket must satisfy a < b");
    const double fa = F(a);
    const double fb = F(b);
    if (fa == 0.0) return {a, 0.0, 0.0, 0};
    if (fb == 0.0) return {b, 0.0, 0.0, 0};
    if (!(fa * fb < 0.0)) {
        throw NoSignChange("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    std::uintmax_t iters = kRootMaxIterations;
    auto done = [tol](double x, double y) { return std::abs(y - x) < tol; };
    const auto [lo, hi] = boost::math::tools::toms748_solve(F, a, b, fa, fb, done, iters);
    const double width = hi - lo;
    if (!(width < tol) && lo != hi) {
        throw MaxIterations("root bracket still " + std::to_string(width) + " wide after " +
                            std::to_string(kRootMaxIterations) + " iterations");
    }
    const double root = 0.5 * (lo + hi);
    return {root, std::abs(F(root)), width, static_cast<int>(iters)};
}

namespace {

// ln(1 - r), kept finite at the bracket ends.
double log1m(double r) { return std::log1p(-std::min(r, 1.0 - 1e-15)); }

std::vector<NamedEquation> build_catalog() {
    return {
        {"convexity_2_1", "(1-r)^2 ln(1-r) + 2 - 7r + 4r^2",
         [](double r) { return (1 - r) * (1 - r) * log1m(r) + 2 - 7 * r + 4 * r * r; }, 0.05, 0.6},
        {"starlike_2_2", "3(1-r)(2-r) ln(1-r) + 4 - 4r - 3r^2 + 2r^3",
         [](double r) { return 3 * (1 - r) * (2 - r) * log1m(r) + 4 - 4 * r - 3 * r * r + 2 * r * r * r; }, 0.05,
         0.8},
        {"ctc_2_5", "(1-r) ln(1-r) + 2 - 3r", [](double r) { return (1 - r) * log1m(r) + 2 - 3 * r; }, 0.05, 0.9},
        {"aux_9r2_8r_4", "9r^2 + 8r - 4", [](double r) { return 9 * r * r + 8 * r - 4; }, 0.0, 1.0},
        {"aux_3r2_4r_4", "3r^2 + 4r - 4", [](double r) { return 3 * r * r + 4 * r - 4; }, 0.0, 1.0},
        {"tail_dominance_fprime", "(2-3r)/(2(1-r)) + ln(1-r)/2",
         [](double r) { return (2 - 3 * r) / (2 * (1 - r)) + log1m(r) / 2; }, 0.05, 0.9},
        {"tail_dominance_f", "1 + ln(1-r)/2", [](double r) { return 1 + log1m(r) / 2; }, 0.05, 0.999999},
    };
}

}  // namespace

const std::vector<NamedEquation>& equation_catalog() {
    static const std::vector<NamedEquation> catalog = build_catalog();
    return catalog;
}

const NamedEquation& find_equation(std::string_view name) {
    for (const NamedEquation& eq : equation_catalog()) {
        if (eq.name == name) return eq;
    }
    throw UnknownEquation("unknown equation '" + std::string(name) + "'");
}

RootResult named_radius(std::string_view name) {
    const NamedEquation& eq = find_equation(name);
    return solve_bracketed(eq.F, eq.lo, eq.hi);
}

double positivity_polynomial(int n, double r) {
    if (n < 2) throw DomainError("n must be >= 2");
    double sum = 0.0;
    double power = 1.0;  // r^{k-1}
    for (int k = 2; k <= n; ++k) {
        power *= r;
        sum += k * power / (2.0 * (k - 1));
    }
    return 1.0 - sum;
}

RootResult partial_sum_positivity_radius(int n) {
    if (n < 2) throw DomainError("n must be >= 2");
    if (n == 2) return {1.0, 0.0, 0.0, 0};  // P_2(r) = 1 - r
    return solve_bracketed([n](double r) { return positivity_polynomial(n, r); }, 0.0, 1.0);
}

NamedEquation s3_counterexample_equation(Property kind, double mu) {
    if (!(std::abs(mu) <= 1.0)) throw DomainError("mu must lie in [-1, 1]");
    const double m = std::abs(mu);
    const double q = 1.0 - mu * mu;
    NamedEquation eq;
    eq.lo = 0.0;
    eq.hi = 1.0;
    switch (kind) {
        case Property::convex:
            eq.name = "s3_convex_bound";
            eq.expression = "1 - 2|mu| r - (9/4)(1-mu^2) r^2";
            eq.F = [m, q](double r) { return 1 - 2 * m * r - 2.25 * q * r * r; };
            break;
        case Property::starlike:
            eq.name = "s3_starlike_bound";
            eq.expression = "4 - 4|mu| r - 3(1-mu^2) r^2";
            eq.F = [m, q](double r) { return 4 - 4 * m * r - 3 * q * r * r; };
            break;
        case Property::ctc:
            eq.name = "s3_ctc_bound";
            eq.expression = "1 - |mu| r - (3/4)(1-mu^2) r^2";
            eq.F = [m, q](double r) { return 1 - m * r - 0.75 * q * r * r; };
            break;
    }
    return eq;
}

NamedEquation cubic_lambda_threshold_equation(std::string_view which) {
    if (which == "starlike") {
        return {"cubic_starlike_lambda", "1 - 4 lambda / (4 - 3 lambda)",
                [](double l) { return 1 - 4 * l / (4 - 3 * l); }, 0.01, 1.0};
    }
    if (which == "univalent") {
        return {"cubic_univalent_lambda", "1 - 7 lambda / 4", [](double l) { return 1 - 7 * l / 4; }, 0.01, 1.0};
    }
    if (which == "convex") {
        return {"cubic_convex_lambda", "1 - (5 lambda/2) / (1 - 7 lambda / 4)",
                [](double l) { return 1 - 2.5 * l / (1 - 1.75 * l); }, 0.01, 0.5};
    }
    throw UnknownEquation("unknown threshold '" + std::string(which) + "'");
}

}  // namespace gft
