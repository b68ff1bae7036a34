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

#include "gft/bounds.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <json.hpp>

#include "gft/circle.hpp"
#include "gft/errors.hpp"
#include "gft/geometry.hpp"
#include "gft/omega.hpp"
#include "gft/roots.hpp"

namespace gft {

namespace {

void require_n(int n) {
    if (n < 2) throw DomainError("n must be >= 2");
}

void require_radius(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
}

void require_omega(const TaylorSeries& f) {
    const MembershipCertificate cert = is_member(f, kOmegaLambda);
    if (!cert.member) {
        throw NotCertified(fmt::format("function is not in Omega (defect {:.12g} > 0.5)", cert.defect));
    }
}

// sqrt(2r - r^2) / (2(1-r)), i.e. sqrt(M^2 - 1)/2 with M = 1/(1-r).
double inverse_derivative_scale(double r) { return std::sqrt(2.0 * r - r * r) / (2.0 * (1.0 - r)); }

struct RatioGap {
    double value;
    double theta;
};

RatioGap max_ratio_gap(const TaylorSeries& f, int n, double r, int samples) {
    const RawSeries rho1 = derivative(tail(f, n));
    const RawSeries df = derivative(f);
    const CircleGrid grid = make_circle_grid(r, samples);
    const GridValues nv = evaluate_on(rho1, grid);
    const GridValues dv = evaluate_on(df, grid);
    std::size_t best = 0;
    double best_v = -1.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double d = std::abs(dv[j]);
        if (d < kPoleThreshold) throw PoleEncountered("f' vanishes on the circle", r, grid.theta(j), 0.0);
        const double v = std::abs(nv[j]) / d;
        if (v > best_v) {
            best_v = v;
            best = j;
        }
    }
    auto objective = [&](double t) {
        const Complex z = std::polar(r, t);
        return -std::abs(evaluate(rho1, z)) / std::abs(evaluate(df, z));
    };
    const Extremum e = refine_min(objective, grid.theta(best), -best_v, 2.0 * std::numbers::pi / samples, 1e-12);
    return {-e.value, e.theta};
}

BoundReport gap_report(std::string label, double measured, double bound, ApproxMode mode, int n, double r) {
    const double allowed = mode == ApproxMode::asymptotic ? 1.02 * bound : bound;
    BoundReport rep = upper_report(std::move(label), measured, allowed);
    rep.index = n;
    rep.radius = r;
    return rep;
}

}  // namespace

double harmonic_number(int n) {
    double h = 0.0;
    for (int k = n; k >= 1; --k) h += 1.0 / k;
    return h;
}

TailBounds tail_bounds(int n, double r) {
    require_n(n);
    require_radius(r);
    const double l = std::log1p(-r);
    TailBounds t;
    t.n = n;
    t.r = r;
    t.rho_bound = -(r / 2.0) * l - r * r / 2.0;
    t.rho_prime_bound = (2.0 * r * r - r) / (2.0 * (1.0 - r)) - l / 2.0;
    t.z_rho_double_prime_bound = r * r * (3.0 - 2.0 * r) / (2.0 * (1.0 - r) * (1.0 - r));
    return t;
}

TailDominationReport tail_domination_check(const TaylorSeries& f, int n, double r, int samples) {
    const TailBounds b = tail_bounds(n, r);
    require_omega(f);
    const RawSeries rho = tail(f, n);
    const RawSeries rho1 = derivative(rho);
    const RawSeries zrho2 = times_z(derivative(rho1));
    TailDominationReport rep{
        upper_report("|rho_n|", max_modulus_on_circle(rho, r, samples).value, b.rho_bound),
        upper_report("|rho_n'|", max_modulus_on_circle(rho1, r, samples).value, b.rho_prime_bound),
        upper_report("|z rho_n''|", max_modulus_on_circle(zrho2, r, samples).value, b.z_rho_double_prime_bound),
    };
    for (BoundReport* x : {&rep.rho, &rep.rho_prime, &rep.z_rho_double_prime}) {
        x->index = n;
        x->radius = r;
    }
    return rep;
}

std::string_view mode_name(ApproxMode m) noexcept {
    return m == ApproxMode::asymptotic ? "asymptotic" : "exact-harmonic";
}

ApproxMode parse_mode(std::string_view name) {
    if (name == "asymptotic") return ApproxMode::asymptotic;
    if (name == "exact-harmonic") return ApproxMode::exact_harmonic;
    throw DomainError("unknown mode '" + std::string(name) + "' (expected asymptotic or exact-harmonic)");
}

double harmonic_factor(int n, ApproxMode mode) {
    require_n(n);
    const double base = n + 1.0;
    if (mode == ApproxMode::asymptotic) return base + std::log(n - 1.0) + kEulerGamma;
    return base + harmonic_number(n - 1);
}

ApproximationConstants approx_constants(int n, double r, std::optional<double> r_outer, ApproxMode mode) {
    require_n(n);
    require_radius(r);
    if (r_outer && !(*r_outer > r && *r_outer < 1.0)) throw DomainError("outer radius must satisfy r < R < 1");
    ApproximationConstants c;
    c.n = n;
    c.r = r;
    c.r_outer = r_outer;
    c.mode = mode;
    c.factor = harmonic_factor(n, mode);
    c.A_n = inverse_derivative_scale(r) * c.factor;
    c.B_n = std::numeric_limits<double>::quiet_NaN();
    c.C_n = std::numeric_limits<double>::quiet_NaN();
    if (r_outer) {
        const double R = *r_outer;
        c.B_n = inverse_derivative_scale(R) * c.factor / std::pow(R, n);
        c.C_n = std::pow(r, n) * ((n + 1.0) / (2.0 * n) + c.B_n * r / (R - r));
    }
    return c;
}

double cn_constant_reconstructed() {
    return inverse_derivative_scale(kCnOuterRadius) * kCnRadius / (kCnOuterRadius - kCnRadius);
}

namespace {

double c_n_with(int n, double constant) {
    require_n(n);
    return std::pow(kCnRadius, n) * ((n + 1.0) / (2.0 * n) +
                                     constant / std::pow(kCnOuterRadius, n) * harmonic_factor(n, ApproxMode::asymptotic));
}

}  // namespace

double c_n(int n) { return c_n_with(n, kCnConstant); }

double c_n_reconstructed(int n) { return c_n_with(n, cn_constant_reconstructed()); }

int minimal_n(double threshold_degrees) {
    if (!(threshold_degrees > 0.0 && threshold_degrees <= 90.0)) {
        throw DomainError("threshold must lie in (0, 90] degrees");
    }
    const double target = std::sin(threshold_degrees * std::numbers::pi / 180.0);
    for (int n = 2; n <= 100000; ++n) {
        if (c_n(n) <= target) return n;
    }
    throw DomainError("no n <= 100000 satisfies the threshold");
}

double ratio_gap(const TaylorSeries& f, int n, Complex z) {
    const Complex d = evaluate(derivative(f), z);
    if (std::abs(d) < kPoleThreshold) throw PoleEncountered("f' vanishes", std::abs(z), std::arg(z), 0.0);
    return std::abs(evaluate(derivative(tail(f, n)), z)) / std::abs(d);
}

BoundReport ratio_gap_check(const TaylorSeries& f, int n, double r, int samples, ApproxMode mode) {
    const ApproximationConstants c = approx_constants(n, r, std::nullopt, mode);
    require_omega(f);
    const RatioGap gap = max_ratio_gap(f, n, r, samples);
    const double bound = std::pow(r, n) * ((n + 1.0) / (2.0 * n) + c.A_n * r / (1.0 - r));
    return gap_report(fmt::format("|s_n'/f' - 1| (A_n, {})", mode_name(mode)), gap.value, bound, mode, n, r);
}

BoundReport ratio_gap_outer_check(const TaylorSeries& f, int n, double r, double r_outer, int samples,
                                  ApproxMode mode) {
    const ApproximationConstants c = approx_constants(n, r, r_outer, mode);
    require_omega(f);
    const RatioGap gap = max_ratio_gap(f, n, r, samples);
    return gap_report(fmt::format("|s_n'/f' - 1| (B_n, {})", mode_name(mode)), gap.value, c.C_n, mode, n, r);
}

std::vector<PositivityRow> positivity_table(int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min) throw DomainError("table rows need 2 <= n_min <= n_max");
    std::vector<PositivityRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (int n = n_min; n <= n_max; ++n) rows.push_back({n, partial_sum_positivity_radius(n).root});
    return rows;
}

std::optional<int> positivity_plateau_start(const std::vector<PositivityRow>& rows, double tol) {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        if (std::abs(rows[i].radius - rows[i + 1].radius) < tol) return rows[i].n;
    }
    return std::nullopt;
}

std::string positivity_csv(const std::vector<PositivityRow>& rows) {
    std::string out = "n,radius\n";
    for (const PositivityRow& row : rows) out += fmt::format("{},{:.10g}\n", row.n, row.radius);
    return out;
}

std::string positivity_json(const std::vector<PositivityRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PositivityRow& row : rows) arr.push_back({{"n", row.n}, {"radius", row.radius}});
    return arr.dump(2);
}

}  // namespace gft
