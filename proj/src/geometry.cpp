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

#include "gft/geometry.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "gft/circle.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

// value = offset + Re(num / den), or offset + Re(num) when there is no den.
struct Functional {
    RawSeries num;
    std::optional<RawSeries> den;
    double offset = 0.0;

    static Functional make(Property kind, const TaylorSeries& f) {
        switch (kind) {
            case Property::starlike: return {derivative(f), divide_by_z(f), 0.0};
            case Property::convex: {
                const RawSeries df = derivative(f);
                return {times_z(derivative(df)), df, 1.0};
            }
            case Property::ctc: return {derivative(f), std::nullopt, 0.0};
        }
        throw DomainError("unknown property");
    }

    double at(Complex z, double r) const {
        const Complex n = evaluate(num, z);
        if (!den) return offset + n.real();
        const Complex d = evaluate(*den, z);
        if (std::abs(d) < kPoleThreshold) {
            throw PoleEncountered("functional denominator vanishes", r, std::arg(z), 0.0);
        }
        return offset + (n / d).real();
    }
};

MinResult min_of(const Functional& fn, double r, const ScanConfig& cfg) {
    const CircleGrid grid = make_circle_grid(r, cfg.theta_samples);
    const GridValues nv = evaluate_on(fn.num, grid);
    std::optional<GridValues> dv;
    if (fn.den) dv = evaluate_on(*fn.den, grid);

    std::size_t best = 0;
    double best_v = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double v = fn.offset;
        if (dv) {
            const Complex d = (*dv)[j];
            if (std::abs(d) < kPoleThreshold) {
                throw PoleEncountered("functional denominator vanishes on |z| = " + std::to_string(r), r,
                                      grid.theta(j), 0.0);
            }
            v += (nv[j] / d).real();
        } else {
            v += nv.re[j];
        }
        if (j == 0 || v < best_v) {
            best_v = v;
            best = j;
        }
    }
    auto objective = [&](double t) {
        const Complex z = std::polar(r, t);
        try {
            return fn.at(z, r);
        } catch (const PoleEncountered&) {
            return -HUGE_VAL;
        }
    };
    const double h = 2.0 * std::numbers::pi / cfg.theta_samples;
    const Extremum e = refine_min(objective, grid.theta(best), best_v, h, cfg.refine_tol);
    return {r, e.value, e.theta, cfg.theta_samples};
}

}  // namespace

std::string_view property_name(Property p) noexcept {
    switch (p) {
        case Property::starlike: return "starlike";
        case Property::convex: return "convex";
        case Property::ctc: return "ctc";
    }
    return "unknown";
}

Property parse_property(std::string_view name) {
    if (name == "starlike") return Property::starlike;
    if (name == "convex") return Property::convex;
    if (name == "ctc") return Property::ctc;
    throw DomainError("unknown property '" + std::string(name) + "' (expected convex, starlike or ctc)");
}

std::string_view method_name(RadiusMethod m) noexcept {
    switch (m) {
        case RadiusMethod::sign_bisection: return "sign-bisection";
        case RadiusMethod::analytic: return "analytic";
        case RadiusMethod::scan_limit: return "scan-limit";
    }
    return "unknown";
}

void ScanConfig::validate() const {
    if (theta_samples < 256) throw DomainError("theta_samples must be >= 256");
    if (!(r_step > 0.0) || !(bisection_tol > 0.0) || !(refine_tol > 0.0) || !(r_max > 0.0)) {
        throw DomainError("scan parameters must be positive");
    }
    if (!(r_max < 1.0)) throw DomainError("r_max must be < 1");
}

double eval_functional(Property kind, const TaylorSeries& f, Complex z) {
    return Functional::make(kind, f).at(z, std::abs(z));
}

MinResult min_on_circle(Property kind, const TaylorSeries& f, double r, const ScanConfig& cfg) {
    cfg.validate();
    if (!(r > 0.0 && r < 1.0)) throw DomainError("circle radius must lie in (0, 1)");
    return min_of(Functional::make(kind, f), r, cfg);
}

RadiusResult radius_of_positivity(Property kind, const TaylorSeries& f, const ScanConfig& cfg) {
    cfg.validate();
    RadiusResult out;
    out.property = kind;
    if (f.degree() == 1) {
        // Identity: every functional is identically 1.
        out.radius = 1.0;
        out.residual = 0.0;
        out.method = RadiusMethod::analytic;
        out.reached_scan_limit = false;
        return out;
    }

    const Functional fn = Functional::make(kind, f);
    double good_r = 0.0;
    MinResult good{0.0, 1.0, 0.0, cfg.theta_samples};
    std::optional<double> bad_r;
    for (long i = 1; !bad_r; ++i) {
        const double r = std::min(static_cast<double>(i) * cfg.r_step, cfg.r_max);
        MinResult m;
        try {
            m = min_of(fn, r, cfg);
        } catch (const PoleEncountered& e) {
            throw PoleEncountered(e.what(), e.radius(), e.theta(), good_r);
        }
        if (m.min_value <= 0.0) {
            bad_r = r;
            break;
        }
        good_r = r;
        good = m;
        if (r >= cfg.r_max) break;
    }

    if (!bad_r) {
        out.radius = good_r;
        out.residual = std::abs(good.min_value);
        out.argmin_theta = good.argmin_theta;
        out.method = RadiusMethod::scan_limit;
        out.reached_scan_limit = true;
        return out;
    }

    double lo = good_r;
    double hi = *bad_r;
    while (hi - lo > cfg.bisection_tol) {
        const double mid = 0.5 * (lo + hi);
        try {
            const MinResult m = min_of(fn, mid, cfg);
            if (m.min_value > 0.0) {
                lo = mid;
                good = m;
            } else {
                hi = mid;
            }
        } catch (const PoleEncountered&) {
            hi = mid;
        }
    }
    out.radius = lo;
    out.residual = std::abs(good.min_value);
    out.argmin_theta = good.argmin_theta;
    out.method = RadiusMethod::sign_bisection;
    return out;
}

RadiusResult partial_sum_radius(Property kind, const TaylorSeries& f, int n, const ScanConfig& cfg) {
    return radius_of_positivity(kind, partial_sum(f, n), cfg);
}

double convex_ratio_max(const TaylorSeries& f, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("circle radius must lie in (0, 1)");
    const RawSeries df = derivative(f);
    const RawSeries num = times_z(derivative(df));
    const CircleGrid grid = make_circle_grid(r, samples);
    const GridValues nv = evaluate_on(num, grid);
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
        return -std::abs(evaluate(num, z) / evaluate(df, z));
    };
    const Extremum e = refine_min(objective, grid.theta(best), -best_v, 2.0 * std::numbers::pi / samples, 1e-12);
    return -e.value;
}

}  // namespace gft
