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

#include "gft/omega.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "gft/circle.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

void require_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidLambda("lambda must be a positive real");
}

void require_samples(int samples) {
    if (samples < 256) throw DomainError("boundary scans need at least 256 samples");
}

void require_member(const TaylorSeries& f, double lambda) {
    const MembershipCertificate cert = is_member(f, lambda);
    if (!cert.member) {
        throw NotCertified("function is not a certified member of Omega_lambda (defect " +
                           std::to_string(cert.defect) + " > lambda " + std::to_string(lambda) + ")");
    }
}

// Operator z^2 f'' + z f' - f has coefficients (k^2 - 1) a_k.
RawSeries operator_series(const TaylorSeries& f) {
    std::vector<Complex> c(static_cast<std::size_t>(f.degree()) + 1);
    for (int k = 2; k <= f.degree(); ++k) c[static_cast<std::size_t>(k)] = static_cast<double>(k * k - 1) * f.coeff(k);
    return RawSeries(std::move(c));
}

// Tolerance for the sup-norm comparisons of the sufficient conditions; far
// below the membership tolerance, so a verdict never rests on float noise.
double sup_tolerance(double bound) { return 1e-12 * (1.0 + bound); }

}  // namespace

BoundReport upper_report(std::string label, double measured, double bound) {
    BoundReport r;
    r.label = std::move(label);
    r.measured = measured;
    r.bound = bound;
    r.slack = bound - measured;
    r.upper = true;
    return r;
}

BoundReport lower_report(std::string label, double measured, double bound) {
    BoundReport r;
    r.label = std::move(label);
    r.measured = measured;
    r.bound = bound;
    r.slack = measured - bound;
    r.upper = false;
    return r;
}

PhiSpec::PhiSpec(std::vector<Complex> coeffs) : b_(std::move(coeffs)) {
    if (b_.empty()) throw EmptyInput("phi needs at least a constant term");
    for (const Complex& b : b_) sup_bound_ += std::abs(b);
}

TaylorSeries from_phi(const PhiSpec& phi, double lambda, int degree) {
    require_lambda(lambda);
    if (degree < 1) throw DomainError("degree must be >= 1");
    std::vector<Complex> a(static_cast<std::size_t>(degree));
    a[0] = 1.0;
    auto b = phi.coeffs();
    for (std::size_t j = 0; j < b.size() && j + 2 <= static_cast<std::size_t>(degree); ++j) {
        a[j + 1] = lambda * b[j] / static_cast<double>(j + 1);
    }
    return TaylorSeries(std::move(a));
}

TaylorSeries from_phi(const PhiSpec& phi, double lambda) { return from_phi(phi, lambda, phi.degree() + 2); }

TaylorSeries family_f_mu(double mu, int degree) {
    if (!(std::abs(mu) <= 1.0)) throw DomainError("f_mu requires |mu| <= 1");
    if (degree < 1) throw DomainError("degree must be >= 1");
    std::vector<Complex> a(static_cast<std::size_t>(degree));
    a[0] = 1.0;
    if (degree >= 2) a[1] = mu / 2.0;
    const double scale = (1.0 - mu * mu) / 2.0;
    double power = 1.0;  // (-mu)^{k-1}
    for (int k = 1; k + 2 <= degree; ++k) {
        a[static_cast<std::size_t>(k + 1)] = scale * power / static_cast<double>(k + 1) + 0.0;
        power *= -mu;
    }
    return TaylorSeries(std::move(a));
}

TaylorSeries example_cubic(double lambda) {
    require_lambda(lambda);
    return TaylorSeries({1.0, lambda / 2.0, lambda / 4.0});
}

TaylorSeries extremal_k(int k, double lambda) {
    if (k < 2) throw DomainError("extremal_k requires k >= 2");
    require_lambda(lambda);
    std::vector<Complex> a(static_cast<std::size_t>(k));
    a[0] = 1.0;
    a[static_cast<std::size_t>(k - 1)] = lambda / static_cast<double>(k - 1);
    return TaylorSeries(std::move(a));
}

double boundary_defect(const TaylorSeries& f, int samples) {
    require_samples(samples);
    return max_modulus_on_circle(defect_series(f), 1.0, samples).value;
}

std::string_view method_name(MembershipMethod m) noexcept {
    switch (m) {
        case MembershipMethod::boundary_scan: return "boundary-scan";
        case MembershipMethod::coefficient_sum: return "coefficient-sum";
    }
    return "unknown";
}

MembershipCertificate is_member(const TaylorSeries& f, double lambda, double tol, int samples) {
    require_lambda(lambda);
    MembershipCertificate cert;
    cert.lambda = lambda;
    cert.defect = boundary_defect(f, samples);
    cert.method = MembershipMethod::boundary_scan;
    cert.margin = lambda - cert.defect;
    cert.samples = samples;
    cert.member = cert.defect <= lambda + tol;
    return cert;
}

double weighted_coefficient_sum(const TaylorSeries& f) {
    double sum = 0.0;
    for (int k = 2; k <= f.degree(); ++k) sum += static_cast<double>(k - 1) * std::abs(f.coeff(k));
    return sum;
}

MembershipCertificate certify_by_coefficients(const TaylorSeries& f, double lambda) {
    require_lambda(lambda);
    MembershipCertificate cert;
    cert.lambda = lambda;
    cert.defect = weighted_coefficient_sum(f);
    cert.method = MembershipMethod::coefficient_sum;
    cert.margin = lambda - cert.defect;
    cert.samples = 0;
    cert.member = cert.defect < lambda;
    return cert;
}

Sufficiency coeff_sum_sufficient(const TaylorSeries& f, double lambda) {
    require_lambda(lambda);
    return weighted_coefficient_sum(f) < lambda ? Sufficiency::sufficient : Sufficiency::inconclusive;
}

double second_derivative_sup(const TaylorSeries& f, int samples) {
    require_samples(samples);
    return max_modulus_on_circle(derivative(derivative(f)), 1.0, samples).value;
}

Sufficiency second_deriv_sufficient(const TaylorSeries& f, double lambda, int samples) {
    require_lambda(lambda);
    const double bound = 2.0 * lambda;
    return second_derivative_sup(f, samples) <= bound + sup_tolerance(bound) ? Sufficiency::sufficient
                                                                              : Sufficiency::inconclusive;
}

double operator_sup(const TaylorSeries& f, int samples) {
    require_samples(samples);
    return max_modulus_on_circle(operator_series(f), 1.0, samples).value;
}

Sufficiency operator_sufficient(const TaylorSeries& f, double lambda, int samples) {
    require_lambda(lambda);
    const double bound = 3.0 * lambda;
    return operator_sup(f, samples) <= bound + sup_tolerance(bound) ? Sufficiency::sufficient
                                                                     : Sufficiency::inconclusive;
}

namespace {

SharpnessWitness quadratic_witness(double lambda, double eta, double c) {
    require_lambda(lambda);
    if (!(eta > 0.0)) throw DomainError("eta must be positive");
    SharpnessWitness w{TaylorSeries({1.0, c}), eta, Complex{-1.0 / (2.0 * c), 0.0}, 0.0, 0.0, false};
    w.critical_modulus = std::abs(w.critical_point);
    w.disk_radius = 1.0 / (2.0 * lambda);
    w.inside = w.critical_modulus < w.disk_radius;
    return w;
}

}  // namespace

SharpnessWitness second_deriv_witness(double lambda, double eta) { return quadratic_witness(lambda, eta, eta / 2.0); }

SharpnessWitness operator_witness(double lambda, double eta) { return quadratic_witness(lambda, eta, eta / 3.0); }

std::vector<BoundReport> coefficient_bounds_check(const TaylorSeries& f, double lambda) {
    require_lambda(lambda);
    require_member(f, lambda);
    std::vector<BoundReport> out;
    out.reserve(static_cast<std::size_t>(std::max(0, f.degree() - 1)));
    for (int k = 2; k <= f.degree(); ++k) {
        BoundReport r = upper_report("|a_" + std::to_string(k) + "|", std::abs(f.coeff(k)),
                                     lambda / static_cast<double>(k - 1));
        r.index = k;
        out.push_back(std::move(r));
    }
    return out;
}

GrowthDistortionReport growth_distortion_check(const TaylorSeries& f, double lambda, double r, int samples) {
    require_lambda(lambda);
    if (!(r > 0.0 && r < 1.0)) throw DomainError("growth/distortion radius must lie in (0, 1)");
    require_member(f, lambda);
    const RawSeries fr = f.as_raw();
    const RawSeries df = derivative(f);
    GrowthDistortionReport rep{
        lower_report("|f| lower", min_modulus_on_circle(fr, r, samples).value, r - lambda * r * r),
        upper_report("|f| upper", max_modulus_on_circle(fr, r, samples).value, r + lambda * r * r),
        lower_report("|f'| lower", min_modulus_on_circle(df, r, samples).value, 1.0 - 2.0 * lambda * r),
        upper_report("|f'| upper", max_modulus_on_circle(df, r, samples).value, 1.0 + 2.0 * lambda * r),
    };
    for (BoundReport* b : {&rep.growth_lower, &rep.growth_upper, &rep.distortion_lower, &rep.distortion_upper}) {
        b->radius = r;
    }
    return rep;
}

double starlike_deviation_max(const TaylorSeries& f, double r, int samples) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("radius must lie in (0, 1)");
    // z f'/f - 1 = (g/z) / (f/z) with g = z f' - f; dividing by z avoids cancellation.
    std::vector<Complex> gz(static_cast<std::size_t>(f.degree()));
    for (int k = 2; k <= f.degree(); ++k) gz[static_cast<std::size_t>(k - 1)] = static_cast<double>(k - 1) * f.coeff(k);
    const RawSeries num(gz);
    const RawSeries den = divide_by_z(f);
    const CircleGrid grid = make_circle_grid(r, samples);
    const GridValues nv = evaluate_on(num, grid);
    const GridValues dv = evaluate_on(den, grid);
    std::size_t best = 0;
    double best_v = -1.0;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double v = std::abs(nv[j]) / std::abs(dv[j]);
        if (v > best_v) {
            best_v = v;
            best = j;
        }
    }
    auto objective = [&](double t) {
        const Complex z = std::polar(r, t);
        return -std::abs(evaluate(num, z) / evaluate(den, z));
    };
    const Extremum e = refine_min(objective, grid.theta(best), -best_v, 2.0 * std::numbers::pi / samples, 1e-12);
    return -e.value;
}

}  // namespace gft
