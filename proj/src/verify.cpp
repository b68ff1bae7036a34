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

#include "gft/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "gft/bounds.hpp"
#include "gft/circle.hpp"
#include "gft/errors.hpp"
#include "gft/geometry.hpp"
#include "gft/omega.hpp"
#include "gft/random_members.hpp"
#include "gft/roots.hpp"
#include "gft/series_algebra.hpp"

namespace gft {

namespace {

// Worst slack over many comparisons of the same bound.
class Worst {
public:
    Worst(std::string label, double tol) : label_(std::move(label)), tol_(tol) {}

    void add(double measured, double bound, double slack) {
        ++count_;
        if (slack < worst_.slack || count_ == 1) worst_ = {label_, false, measured, bound, slack, 0};
    }
    void add(const BoundReport& r) { add(r.measured, r.bound, r.slack); }
    void add_upper(double measured, double bound) { add(measured, bound, bound - measured); }
    void add_lower(double measured, double bound) { add(measured, bound, measured - bound); }

    Check finish() const {
        Check c = worst_;
        c.label = label_;
        c.count = count_;
        c.pass = count_ > 0 && c.slack >= -tol_;
        return c;
    }

private:
    std::string label_;
    double tol_;
    long count_ = 0;
    Check worst_;
};

Check near(std::string label, double measured, double expected, double tol) {
    const double slack = tol - std::abs(measured - expected);
    return {std::move(label), slack >= 0.0, measured, expected, slack, 1};
}

Check holds(std::string label, bool ok, double measured = 0.0, double expected = 0.0) {
    return {std::move(label), ok, measured, expected, ok ? 0.0 : -1.0, 1};
}

// Cheaper scan for randomized sweeps over low-degree partial sums.
ScanConfig sweep_config() {
    ScanConfig cfg;
    cfg.theta_samples = 1024;
    cfg.r_step = 5e-3;
    return cfg;
}

constexpr int kSweepSamples = 1024;

const std::vector<double> kRadiiTenths = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

std::vector<TaylorSeries> members(Rng& rng, double lambda, int count) {
    std::vector<TaylorSeries> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_member(rng, lambda));
    return out;
}

void add_root_check(SuiteReport& rep, std::string_view name, double expected, double tol) {
    const RootResult r = named_radius(name);
    rep.checks.push_back(near(fmt::format("{} root ~ {}", name, expected), r.root, expected, tol));
    rep.checks.push_back(holds(fmt::format("{} residual < 1e-10", name), r.residual < 1e-10, r.residual, 1e-10));
}

void add_partial_sum_sweep(SuiteReport& rep, Property kind, double bound, const std::vector<TaylorSeries>& fs) {
    Worst w(fmt::format("{} radius of s_n >= {} - 1e-4 (n = 2,3,5,8)", property_name(kind), bound), 1e-4);
    const ScanConfig cfg = sweep_config();
    for (const TaylorSeries& f : fs) {
        for (int n : {2, 3, 5, 8}) w.add_lower(partial_sum_radius(kind, f, n, cfg).radius, bound);
    }
    rep.checks.push_back(w.finish());
}

SuiteReport suite_lemma1(const VerifyOptions& o) {
    SuiteReport rep{"lemma1", {}, {}};
    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);

    Worst coeff("|a_k| <= 1/(2(k-1)) on random members", 1e-12);
    Worst gd("growth/distortion bounds on |z| in {0.3, 0.6, 0.9}", 1e-9);
    for (const TaylorSeries& f : fs) {
        for (const BoundReport& b : coefficient_bounds_check(f, kOmegaLambda)) coeff.add(b);
        for (double r : {0.3, 0.6, 0.9}) {
            const GrowthDistortionReport g = growth_distortion_check(f, kOmegaLambda, r, kSweepSamples);
            for (const BoundReport* b : {&g.growth_lower, &g.growth_upper, &g.distortion_lower, &g.distortion_upper}) {
                gd.add(*b);
            }
        }
    }
    rep.checks.push_back(coeff.finish());
    rep.checks.push_back(gd.finish());

    Worst eq("extremal z + z^k/(2(k-1)) attains |a_k| exactly (k = 2..12)", 0.0);
    for (int k = 2; k <= 12; ++k) {
        const TaylorSeries f = extremal_k(k, kOmegaLambda);
        const double a = std::abs(f.coeff(k));
        const double b = 1.0 / (2.0 * (k - 1));
        eq.add(a, b, -std::abs(a - b));
    }
    rep.checks.push_back(eq.finish());

    const TaylorSeries q = TaylorSeries({1.0, 0.5});
    Worst equality("z + z^2/2 attains growth/distortion bounds at real z", 1e-9);
    for (double r : {0.3, 0.6, 0.9}) {
        const double fp = std::abs(evaluate(q, r));
        const double fm = std::abs(evaluate(q, -r));
        const double dp = std::abs(evaluate(derivative(q), r));
        const double dm = std::abs(evaluate(derivative(q), -r));
        equality.add(fp, r + r * r / 2, -std::abs(fp - (r + r * r / 2)));
        equality.add(fm, r - r * r / 2, -std::abs(fm - (r - r * r / 2)));
        equality.add(dp, 1 + r, -std::abs(dp - (1 + r)));
        equality.add(dm, 1 - r, -std::abs(dm - (1 - r)));
    }
    rep.checks.push_back(equality.finish());
    return rep;
}

SuiteReport suite_lemma12(const VerifyOptions& o) {
    SuiteReport rep{"lemma12", {}, {}};
    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    Worst w("max |z f'/f - 1| <= r/(2-r), r = 0.1..0.9", 1e-9);
    for (const TaylorSeries& f : fs) {
        for (double r : kRadiiTenths) w.add_upper(starlike_deviation_max(f, r, kSweepSamples), r / (2 - r));
    }
    rep.checks.push_back(w.finish());
    Worst eq("z + z^2/2 attains r/(2-r)", 1e-9);
    for (double r : kRadiiTenths) {
        const double m = starlike_deviation_max(TaylorSeries({1.0, 0.5}), r);
        eq.add(m, r / (2 - r), -std::abs(m - r / (2 - r)));
    }
    rep.checks.push_back(eq.finish());
    return rep;
}

SuiteReport suite_lemma14(const VerifyOptions& o) {
    SuiteReport rep{"lemma14", {}, {}};
    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    Worst rho("|rho_n| bound", 1e-9);
    Worst rho1("|rho_n'| bound", 1e-9);
    Worst rho2("|z rho_n''| bound", 1e-9);
    for (const TaylorSeries& f : fs) {
        for (int n = 2; n <= 10; ++n) {
            for (double r : {0.1, 0.3, 0.5, 0.7, 0.8}) {
                const TailDominationReport t = tail_domination_check(f, n, r, kSweepSamples);
                rho.add(t.rho);
                rho1.add(t.rho_prime);
                rho2.add(t.z_rho_double_prime);
            }
        }
    }
    rep.checks.push_back(rho.finish());
    rep.checks.push_back(rho1.finish());
    rep.checks.push_back(rho2.finish());

    Worst mono("tail bounds increase in r on (0, 0.999)", 0.0);
    TailBounds prev = tail_bounds(2, 1e-3);
    for (int i = 2; i < 999; ++i) {
        const TailBounds t = tail_bounds(2, i * 1e-3);
        mono.add(t.rho_bound, prev.rho_bound, t.rho_bound - prev.rho_bound > 0 ? 0.0 : -1.0);
        mono.add(t.rho_prime_bound, prev.rho_prime_bound, t.rho_prime_bound - prev.rho_prime_bound > 0 ? 0.0 : -1.0);
        mono.add(t.z_rho_double_prime_bound, prev.z_rho_double_prime_bound,
                 t.z_rho_double_prime_bound - prev.z_rho_double_prime_bound > 0 ? 0.0 : -1.0);
        prev = t;
    }
    rep.checks.push_back(mono.finish());

    const TaylorSeries e = extremal_k(4, kOmegaLambda);
    const double single = max_modulus_on_circle(tail(e, 3), 0.5, 4096).value;
    rep.checks.push_back(near("single-term tail |rho_3| = r^4/6 at r = 0.5", single, std::pow(0.5, 4) / 6.0, 1e-12));
    return rep;
}

SuiteReport suite_thm21(const VerifyOptions& o) {
    SuiteReport rep{"thm21", {}, {}};
    add_root_check(rep, "convexity_2_1", 0.3181, 5e-4);
    add_root_check(rep, "aux_9r2_8r_4", 0.3568, 5e-4);
    add_root_check(rep, "tail_dominance_fprime", 0.5471, 5e-4);
    const double rk = named_radius("convexity_2_1").root;
    rep.checks.push_back(holds("convexity_2_1 root lies in (0, (sqrt5-1)/2)", rk > 0 && rk < (std::sqrt(5.0) - 1) / 2, rk,
                               (std::sqrt(5.0) - 1) / 2));

    const NamedEquation ce = s3_counterexample_equation(Property::convex, 0.9);
    const RootResult cr = solve_bracketed(ce.F, ce.lo, ce.hi);
    rep.checks.push_back(near("s_3(f_0.9) convexity bound root ~ 0.4969", cr.root, 0.4969, 5e-4));
    const RadiusResult direct = partial_sum_radius(Property::convex, family_f_mu(0.9, 64), 3);
    rep.checks.push_back(holds("direct convex radius of s_3(f_0.9) >= bound root", direct.radius >= cr.root - 1e-7,
                               direct.radius, cr.root));
    rep.notes.push_back(fmt::format("s_3(f_0.9): bound root {:.6f}, direct convex radius {:.6f}", cr.root, direct.radius));

    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    add_partial_sum_sweep(rep, Property::convex, 0.3181, fs);

    Worst w("max |z f''/f'| <= r/(1-r) for r <= (sqrt5-1)/2", 1e-9);
    for (const TaylorSeries& f : fs) {
        for (double r : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, (std::sqrt(5.0) - 1) / 2}) {
            w.add_upper(convex_ratio_max(f, r, kSweepSamples), r / (1 - r));
        }
    }
    rep.checks.push_back(w.finish());
    return rep;
}

SuiteReport suite_thm22(const VerifyOptions& o) {
    SuiteReport rep{"thm22", {}, {}};
    add_root_check(rep, "starlike_2_2", 0.4899, 5e-4);
    add_root_check(rep, "aux_3r2_4r_4", 2.0 / 3.0, 1e-10);
    add_root_check(rep, "tail_dominance_f", 1.0 - std::exp(-2.0), 1e-10);

    const NamedEquation ce = s3_counterexample_equation(Property::starlike, 0.7);
    const RootResult cr = solve_bracketed(ce.F, ce.lo, ce.hi);
    rep.checks.push_back(near("s_3(f_0.7) starlike bound root ~ 0.9428", cr.root, 0.9428, 5e-4));
    const RadiusResult direct = partial_sum_radius(Property::starlike, family_f_mu(0.7, 64), 3);
    rep.checks.push_back(holds("direct starlike radius of s_3(f_0.7) >= bound root", direct.radius >= cr.root - 1e-7,
                               direct.radius, cr.root));
    rep.notes.push_back(fmt::format("s_3(f_0.7): bound root {:.6f}, direct starlike radius {:.6f}{}", cr.root,
                                    direct.radius, direct.reached_scan_limit ? " (scan limit)" : ""));

    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    add_partial_sum_sweep(rep, Property::starlike, 0.4899, fs);

    Worst w("min Re(z f'/f) >= 2(1-r)/(2-r), r = 0.1..0.9", 1e-9);
    ScanConfig cfg;
    cfg.theta_samples = kSweepSamples;
    for (const TaylorSeries& f : fs) {
        for (double r : kRadiiTenths) w.add_lower(min_on_circle(Property::starlike, f, r, cfg).min_value, 2 * (1 - r) / (2 - r));
    }
    rep.checks.push_back(w.finish());
    return rep;
}

SuiteReport suite_thm23(const VerifyOptions& o) {
    SuiteReport rep{"thm23", {}, {}};
    add_root_check(rep, "ctc_2_5", 0.5471, 5e-4);
    const double a = named_radius("ctc_2_5").root;
    const double b = named_radius("tail_dominance_fprime").root;
    rep.checks.push_back(near("ctc_2_5 and tail_dominance_fprime share a root", a, b, 1e-10));
    rep.checks.push_back(near("positivity radius n = 2 is 1", partial_sum_positivity_radius(2).root, 1.0, 0.0));
    rep.checks.push_back(near("positivity radius n = 3 is 2/3", partial_sum_positivity_radius(3).root, 2.0 / 3.0, 1e-10));

    const NamedEquation ce = s3_counterexample_equation(Property::ctc, 0.7);
    const RootResult cr = solve_bracketed(ce.F, ce.lo, ce.hi);
    rep.checks.push_back(near("s_3(f_0.7) close-to-convex bound root ~ 0.9428", cr.root, 0.9428, 5e-4));
    const RadiusResult direct = partial_sum_radius(Property::ctc, family_f_mu(0.7, 64), 3);
    rep.checks.push_back(holds("direct ctc radius of s_3(f_0.7) >= bound root", direct.radius >= cr.root - 1e-7,
                               direct.radius, cr.root));
    rep.notes.push_back(fmt::format("s_3(f_0.7): bound root {:.6f}, direct ctc radius {:.6f}{}", cr.root, direct.radius,
                                    direct.reached_scan_limit ? " (scan limit)" : ""));

    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    add_partial_sum_sweep(rep, Property::ctc, 0.5471, fs);

    Worst w("min Re f' >= 1 - r, r = 0.1..0.9", 1e-9);
    ScanConfig cfg;
    cfg.theta_samples = kSweepSamples;
    for (const TaylorSeries& f : fs) {
        for (double r : kRadiiTenths) w.add_lower(min_on_circle(Property::ctc, f, r, cfg).min_value, 1 - r);
    }
    rep.checks.push_back(w.finish());
    return rep;
}

SuiteReport suite_thm31(const VerifyOptions& o) {
    SuiteReport rep{"thm31", {}, {}};
    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    Worst exact("|s_n'/f' - 1| <= exact-harmonic A_n bound (n = 2..10, r = 0.1..0.5)", 1e-9);
    Worst asym("|s_n'/f' - 1| <= 1.02 x asymptotic A_n bound (n = 5..10)", 0.0);
    for (const TaylorSeries& f : fs) {
        for (int n = 2; n <= 10; ++n) {
            for (double r : {0.1, 0.2, 0.3, 0.4, 0.5}) {
                exact.add(ratio_gap_check(f, n, r, kSweepSamples, ApproxMode::exact_harmonic));
                if (n >= 5) asym.add(ratio_gap_check(f, n, r, kSweepSamples, ApproxMode::asymptotic));
            }
        }
    }
    rep.checks.push_back(exact.finish());
    rep.checks.push_back(asym.finish());

    Worst factor("asymptotic factor within 2% of exact-harmonic factor (n = 5..60)", 0.0);
    Worst order("exact-harmonic factor >= asymptotic factor (n = 2..60)", 0.0);
    for (int n = 2; n <= 60; ++n) {
        const double e = harmonic_factor(n, ApproxMode::exact_harmonic);
        const double p = harmonic_factor(n, ApproxMode::asymptotic);
        order.add(e, p, e - p);
        if (n >= 5) factor.add((e - p) / e, 0.02, 0.02 - (e - p) / e);
    }
    rep.checks.push_back(factor.finish());
    rep.checks.push_back(order.finish());

    // c_n = -(n+1) a_{n+1}: coefficient of z^n in s_n'/f'.
    Worst cn("coefficient of z^n in s_n'/f' equals -(n+1) a_{n+1} (f_0.5, n = 2..8)", 1e-14);
    const TaylorSeries f = family_f_mu(0.5, 32);
    const RawSeries inv = reciprocal_series(derivative(f), 32);
    for (int n = 2; n <= 8; ++n) {
        const RawSeries q = multiply(derivative(partial_sum(f, n)), inv, 32);
        const Complex expect = -static_cast<double>(n + 1) * f.coeff(n + 1);
        cn.add(std::abs(q[n]), std::abs(expect), -std::abs(q[n] - expect));
        for (int k = 1; k < n; ++k) cn.add(std::abs(q[k]), 0.0, -std::abs(q[k]));
    }
    rep.checks.push_back(cn.finish());
    return rep;
}

SuiteReport suite_thm32(const VerifyOptions& o) {
    SuiteReport rep{"thm32", {}, {}};
    Worst ident("B_n = A_n(R) R^-n", 1e-12);
    for (int n = 2; n <= 20; ++n) {
        for (double R : {0.6, 0.9, 0.99}) {
            const ApproximationConstants c = approx_constants(n, R / 2, R, ApproxMode::asymptotic);
            const double a = approx_constants(n, R, std::nullopt, ApproxMode::asymptotic).A_n;
            const double want = a / std::pow(R, n);
            ident.add(c.B_n, want, -std::abs(c.B_n - want) / want);
        }
    }
    rep.checks.push_back(ident.finish());

    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    Worst w("|s_n'/f' - 1| <= B_n bound for |z| < R (R = 0.6, 0.99)", 1e-9);
    for (const TaylorSeries& f : fs) {
        for (int n = 2; n <= 10; ++n) {
            for (double r : {0.1, 0.3, 0.5}) {
                for (double R : {0.6, 0.99}) w.add(ratio_gap_outer_check(f, n, r, R, kSweepSamples, ApproxMode::exact_harmonic));
            }
        }
    }
    rep.checks.push_back(w.finish());
    rep.notes.push_back("A_n and B_n substitute 1/(1-r) for a uniform bound on 1/|f'|; the closed forms are evaluated unchanged.");
    return rep;
}

SuiteReport suite_thm33(const VerifyOptions& o) {
    SuiteReport rep{"thm33", {}, {}};
    const double k = cn_constant_reconstructed();
    rep.checks.push_back(near("reconstructed constant ~ 61.735", k, kCnConstant, 0.01));
    rep.checks.push_back(holds("C_11 > 1", c_n(11) > 1.0, c_n(11), 1.0));
    const double target = std::sin(kCnThresholdDegrees * std::numbers::pi / 180.0);
    rep.checks.push_back(holds("C_12 < sin(56.84 deg)", c_n(12) < target, c_n(12), target));
    const int nmin = minimal_n();
    rep.checks.push_back(holds("minimal n = 12", nmin == 12, nmin, 12));
    rep.checks.push_back(holds("minimal n at 90 deg = 12", minimal_n(90.0) == 12, minimal_n(90.0), 12));
    Worst dec("C_n strictly decreasing for n = 12..60", 0.0);
    for (int n = 12; n < 60; ++n) dec.add(c_n(n + 1), c_n(n), c_n(n + 1) < c_n(n) ? 0.0 : -1.0);
    rep.checks.push_back(dec.finish());

    const auto rows = positivity_table(2, 40);
    const auto plateau = positivity_plateau_start(rows);
    rep.checks.push_back(holds("positivity radius plateau begins at n <= 14", plateau && *plateau <= 14, plateau.value_or(-1), 14));
    rep.notes.push_back(fmt::format("C_11 = {:.6f}, C_12 = {:.6f}, minimal n = {}, plateau from n = {}", c_n(11), c_n(12),
                                    nmin, plateau.value_or(-1)));

    Rng rng(o.seed);
    const auto fs = members(rng, kOmegaLambda, o.samples);
    Worst w("min Re s_12' on |z| = 0.547 is positive", 0.0);
    ScanConfig cfg;
    cfg.theta_samples = kSweepSamples;
    for (const TaylorSeries& f : fs) {
        w.add_lower(min_on_circle(Property::ctc, partial_sum(f, 12), kCnRadius, cfg).min_value, 0.0);
    }
    rep.checks.push_back(w.finish());
    return rep;
}

SuiteReport suite_thm41(const VerifyOptions& o) {
    SuiteReport rep{"thm41", {}, {}};
    for (double lambda : {0.6, 1.0, 2.0}) {
        const RadiusResult r = radius_of_positivity(Property::starlike, TaylorSeries({1.0, lambda}));
        rep.checks.push_back(near(fmt::format("starlike radius of z + {} z^2 = 1/(2 lambda)", lambda), r.radius,
                                  1.0 / (2.0 * lambda), 1e-6));
    }
    Rng rng(o.seed);
    Worst gd("growth/distortion with lambda in {0.5, 1, 2}, r in {0.3, 0.6, 0.9}", 1e-9);
    Worst star("starlike radius of random Omega_lambda members >= 1/(2 lambda)", 1e-6);
    ScanConfig cfg = sweep_config();
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (const TaylorSeries& f : members(rng, lambda, o.samples)) {
            for (double r : {0.3, 0.6, 0.9}) {
                const GrowthDistortionReport g = growth_distortion_check(f, lambda, r, kSweepSamples);
                for (const BoundReport* b : {&g.growth_lower, &g.growth_upper, &g.distortion_lower, &g.distortion_upper}) {
                    gd.add(*b);
                }
            }
            if (lambda > 0.5) star.add_lower(radius_of_positivity(Property::starlike, f, cfg).radius, 1.0 / (2.0 * lambda));
        }
    }
    rep.checks.push_back(gd.finish());
    rep.checks.push_back(star.finish());

    Worst eq("z + lambda z^2 attains the growth bound at z = r", 1e-12);
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double r : {0.3, 0.6, 0.9}) {
            const double m = std::abs(evaluate(TaylorSeries({1.0, lambda}), r));
            eq.add(m, r + lambda * r * r, -std::abs(m - (r + lambda * r * r)));
        }
    }
    rep.checks.push_back(eq.finish());

    const NamedEquation th = cubic_lambda_threshold_equation("starlike");
    const RootResult root = solve_bracketed(th.F, th.lo, th.hi);
    rep.checks.push_back(near("cubic example starlike bound changes sign at lambda = 4/7", root.root, 4.0 / 7.0, 1e-10));
    for (double lambda : {0.55, 0.6, 1.0}) {
        const RadiusResult r = radius_of_positivity(Property::starlike, example_cubic(lambda));
        rep.notes.push_back(fmt::format("z + {0} z^2/2 + {0} z^3/4: direct starlike radius {1:.6f}{2}", lambda, r.radius,
                                        r.reached_scan_limit ? " (no sign change up to scan limit)" : ""));
    }
    return rep;
}

SuiteReport suite_thm42(const VerifyOptions& o) {
    SuiteReport rep{"thm42", {}, {}};
    for (double lambda : {0.5, 1.0, 2.0}) {
        const RadiusResult r = radius_of_positivity(Property::convex, TaylorSeries({1.0, lambda}));
        rep.checks.push_back(near(fmt::format("convex radius of z + {} z^2 = 1/(4 lambda)", lambda), r.radius,
                                  1.0 / (4.0 * lambda), 1e-6));
    }
    Rng rng(o.seed);
    Worst conv("convex radius of random Omega_lambda members >= 1/(4 lambda)", 1e-6);
    Worst univ("max |f' - 1| <= 2 lambda r on |z| = r", 1e-9);
    ScanConfig cfg = sweep_config();
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (const TaylorSeries& f : members(rng, lambda, o.samples)) {
            conv.add_lower(radius_of_positivity(Property::convex, f, cfg).radius, std::min(1.0 / (4.0 * lambda), cfg.r_max));
            const RawSeries d = derivative(f) - RawSeries::constant(1.0);
            for (double r : {0.2, 0.4, 0.6, 0.8}) {
                univ.add_upper(max_modulus_on_circle(d, r, kSweepSamples).value, 2.0 * lambda * r);
            }
        }
    }
    rep.checks.push_back(conv.finish());
    rep.checks.push_back(univ.finish());

    const RootResult u = [] {
        const NamedEquation e = cubic_lambda_threshold_equation("univalent");
        return solve_bracketed(e.F, e.lo, e.hi);
    }();
    const RootResult c = [] {
        const NamedEquation e = cubic_lambda_threshold_equation("convex");
        return solve_bracketed(e.F, e.lo, e.hi);
    }();
    rep.checks.push_back(near("cubic example univalence bound changes sign at lambda = 4/7", u.root, 4.0 / 7.0, 1e-10));
    rep.checks.push_back(near("cubic example convexity bound changes sign at lambda = 4/17", c.root, 4.0 / 17.0, 1e-10));
    for (double lambda : {0.25, 0.3, 0.6}) {
        const RadiusResult r = radius_of_positivity(Property::convex, example_cubic(lambda));
        rep.notes.push_back(fmt::format("z + {0} z^2/2 + {0} z^3/4: direct convex radius {1:.6f}{2}", lambda, r.radius,
                                        r.reached_scan_limit ? " (no sign change up to scan limit)" : ""));
    }
    return rep;
}

template <class Test, class Sup>
SuiteReport sufficient_suite(std::string name, const VerifyOptions& o, Test test, Sup sup, double factor,
                             SharpnessWitness (*witness)(double, double), const char* what) {
    SuiteReport rep{std::move(name), {}, {}};
    Rng rng(o.seed);
    long false_pos = 0;
    long sufficient = 0;
    long total = 0;
    for (double lambda : {0.5, 1.0}) {
        for (int i = 0; i < o.samples * 5 / 2; ++i) {
            const TaylorSeries f = random_test_function(rng, lambda);
            ++total;
            if (test(f, lambda) == Sufficiency::sufficient) {
                ++sufficient;
                if (!is_member(f, lambda).member) ++false_pos;
            }
        }
    }
    rep.checks.push_back(holds(fmt::format("{}: no false positives against the boundary scan", what), false_pos == 0,
                               static_cast<double>(false_pos), 0.0));
    rep.notes.push_back(fmt::format("{} of {} inputs passed the sufficient test", sufficient, total));
    for (double lambda : {0.5, 1.0}) {
        const TaylorSeries edge({1.0, lambda});
        rep.checks.push_back(holds(fmt::format("z + {} z^2 meets the bound with equality (sup = {} lambda)", lambda, factor),
                                   test(edge, lambda) == Sufficiency::sufficient, sup(edge), factor * lambda));
        const SharpnessWitness w = witness(lambda, factor * lambda + 0.1);
        rep.checks.push_back(holds(fmt::format("constant exceeded (eta = {}): f' vanishes inside |z| < 1/(2 lambda)", w.eta),
                                   w.inside && std::abs(evaluate(derivative(w.f), w.critical_point)) < 1e-14 &&
                                       test(w.f, lambda) == Sufficiency::inconclusive,
                                   w.critical_modulus, w.disk_radius));
    }
    return rep;
}

SuiteReport suite_thm43(const VerifyOptions& o) {
    return sufficient_suite(
        "thm43", o, [](const TaylorSeries& f, double l) { return second_deriv_sufficient(f, l); },
        [](const TaylorSeries& f) { return second_derivative_sup(f); }, 2.0, &second_deriv_witness, "|f''| <= 2 lambda");
}

SuiteReport suite_thm44(const VerifyOptions& o) {
    return sufficient_suite(
        "thm44", o, [](const TaylorSeries& f, double l) { return operator_sufficient(f, l); },
        [](const TaylorSeries& f) { return operator_sup(f); }, 3.0, &operator_witness,
        "|z^2 f'' + z f' - f| <= 3 lambda");
}

SuiteReport suite_thm45(const VerifyOptions& o) {
    SuiteReport rep{"thm45", {}, {}};
    Rng rng(o.seed);
    for (double lambda : {0.5, 1.0}) {
        Worst w(fmt::format("convolution of members stays in Omega_{}", lambda), 1e-9);
        for (int i = 0; i < o.samples; ++i) {
            const TaylorSeries f = random_member(rng, lambda);
            const TaylorSeries g = random_member(rng, lambda);
            const MembershipCertificate c = is_member(convolve(f, g), lambda);
            w.add(c.defect, lambda, c.margin);
        }
        rep.checks.push_back(w.finish());
        const TaylorSeries q({1.0, lambda});
        rep.checks.push_back(holds(fmt::format("(z + {0} z^2) * (z + {0} z^2) = z + {0}^2 z^2", lambda),
                                   convolve(q, q) == TaylorSeries({1.0, lambda * lambda})));
    }
    return rep;
}

SuiteReport suite_thm46(const VerifyOptions& o) {
    SuiteReport rep{"thm46", {}, {}};
    Rng rng(o.seed);
    long false_pos = 0;
    long total = 0;
    for (double lambda : {0.5, 1.0}) {
        for (int i = 0; i < o.samples * 5 / 2; ++i) {
            const TaylorSeries f = random_test_function(rng, lambda);
            ++total;
            if (coeff_sum_sufficient(f, lambda) == Sufficiency::sufficient && !is_member(f, lambda).member) ++false_pos;
        }
    }
    rep.checks.push_back(holds("sum (k-1)|a_k| < lambda: no false positives", false_pos == 0,
                               static_cast<double>(false_pos), 0.0));
    rep.notes.push_back(fmt::format("{} inputs checked", total));

    for (double lambda : {0.3, 0.5, 1.0}) {
        Worst w(fmt::format("|a_k| <= {}/(k-1) on random members", lambda), 1e-12);
        for (const TaylorSeries& f : members(rng, lambda, o.samples)) {
            for (const BoundReport& b : coefficient_bounds_check(f, lambda)) w.add(b);
        }
        rep.checks.push_back(w.finish());
    }
    const TaylorSeries e = extremal_k(5, 0.5);
    rep.checks.push_back(holds("extremal z + z^5/8: coefficient test inconclusive yet member",
                               coeff_sum_sufficient(e, 0.5) == Sufficiency::inconclusive && is_member(e, 0.5).member));
    return rep;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"lemma1", &suite_lemma1}, {"lemma12", &suite_lemma12}, {"lemma14", &suite_lemma14},
        {"thm21", &suite_thm21},   {"thm22", &suite_thm22},     {"thm23", &suite_thm23},
        {"thm31", &suite_thm31},   {"thm32", &suite_thm32},     {"thm33", &suite_thm33},
        {"thm41", &suite_thm41},   {"thm42", &suite_thm42},     {"thm43", &suite_thm43},
        {"thm44", &suite_thm44},   {"thm45", &suite_thm45},     {"thm46", &suite_thm46},
    };
    return r;
}

}  // namespace

long SuiteReport::passed() const noexcept {
    return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

long SuiteReport::failed() const noexcept { return static_cast<long>(checks.size()) - passed(); }

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) n.push_back(name);
        return n;
    }();
    return names;
}

bool is_suite_name(std::string_view name) {
    return std::any_of(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
    if (opts.samples < 1) throw DomainError("samples must be >= 1");
    for (const auto& [n, fn] : registry()) {
        if (n == name) return fn(opts);
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& opts) {
    std::vector<SuiteReport> out;
    if (name == "all") {
        for (const std::string& n : suite_names()) out.push_back(run_suite(n, opts));
    } else {
        out.push_back(run_suite(name, opts));
    }
    return out;
}

nlohmann::json to_json(const SuiteReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : r.checks) {
        checks.push_back({{"label", c.label},
                          {"pass", c.pass},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"slack", c.slack},
                          {"count", c.count}});
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"failed", r.failed()}, {"checks", checks}, {"notes", r.notes}};
}

std::string to_text(const SuiteReport& r) {
    std::string out = fmt::format("[{}] {} passed, {} failed\n", r.suite, r.passed(), r.failed());
    for (const Check& c : r.checks) {
        out += fmt::format("  {} {}  (measured {:.10g}, expected {:.10g}, slack {:.3g}{})\n", c.pass ? "PASS" : "FAIL",
                           c.label, c.measured, c.expected, c.slack,
                           c.count > 1 ? fmt::format(", n = {}", c.count) : std::string());
    }
    for (const std::string& note : r.notes) out += "  note: " + note + "\n";
    return out;
}

}  // namespace gft
