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

#ifndef GFT_BOUNDS_HPP
#define GFT_BOUNDS_HPP

// Tail estimates for members of Omega and the approximation constants for
// |s_n'(z)/f'(z) - 1|.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/report.hpp"
#include "gft/series.hpp"

namespace gft {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// H_n = 1 + 1/2 + ... + 1/n (H_0 = 0).
double harmonic_number(int n);

/// Closed-form majorants of the tail rho_n = f - s_n on |z| = r, valid for
/// every f in Omega and n >= 2 (they do not depend on n):
///   |rho_n|      <= -(r/2) ln(1-r) - r^2/2
///   |rho_n'|     <= (2r^2 - r)/(2(1-r)) - ln(1-r)/2
///   |z rho_n''|  <= r^2 (3 - 2r) / (2(1-r)^2)
struct TailBounds {
    int n = 2;
    double r = 0.0;
    double rho_bound = 0.0;
    double rho_prime_bound = 0.0;
    double z_rho_double_prime_bound = 0.0;
};

TailBounds tail_bounds(int n, double r);

struct TailDominationReport {
    BoundReport rho;
    BoundReport rho_prime;
    BoundReport z_rho_double_prime;

    bool passes(double tol) const noexcept {
        return rho.passes(tol) && rho_prime.passes(tol) && z_rho_double_prime.passes(tol);
    }
};

/// Circle maxima of |rho_n|, |rho_n'|, |z rho_n''| against tail_bounds.
/// Throws NotCertified unless f is a member of Omega.
TailDominationReport tail_domination_check(const TaylorSeries& f, int n, double r, int samples = 4096);

/// asymptotic: n + 1 + ln(n-1) + gamma; exact_harmonic: n + 1 + H_{n-1}.
enum class ApproxMode { asymptotic, exact_harmonic };

std::string_view mode_name(ApproxMode m) noexcept;
ApproxMode parse_mode(std::string_view name);

/// n + 1 + ln(n-1) + gamma, or n + 1 + H_{n-1}.
double harmonic_factor(int n, ApproxMode mode);

struct ApproximationConstants {
    int n = 2;
    double r = 0.0;
    std::optional<double> r_outer;
    ApproxMode mode = ApproxMode::asymptotic;
    double gamma = kEulerGamma;
    double factor = 0.0;  // harmonic_factor(n, mode)
    /// sqrt(2r - r^2) / (2(1-r)) * factor
    double A_n = 0.0;
    /// sqrt(2R - R^2) / (2(1-R) R^n) * factor with R = r_outer; NaN without r_outer.
    double B_n = 0.0;
    /// r^n ((n+1)/(2n) + B_n r / (R - r)): the outer-radius bound at |z| = r.
    /// NaN without r_outer.
    double C_n = 0.0;
};

/// Throws DomainError unless n >= 2, 0 < r < 1 and (if given) r < r_outer < 1.
ApproximationConstants approx_constants(int n, double r, std::optional<double> r_outer, ApproxMode mode);

inline constexpr double kCnRadius = 0.547;
inline constexpr double kCnOuterRadius = 0.99;
inline constexpr double kCnConstant = 61.735;
inline constexpr double kCnThresholdDegrees = 56.84;

/// sqrt(2R - R^2) / (2(1-R)) * r0 / (R - r0) with R = 0.99, r0 = 0.547.
double cn_constant_reconstructed();

/// C_n = 0.547^n ((n+1)/(2n) + (61.735 / 0.99^n)(n + 1 + ln(n-1) + gamma)).
double c_n(int n);

/// Same formula with the reconstructed constant in place of 61.735.
double c_n_reconstructed(int n);

/// Smallest n >= 2 with C_n <= sin(threshold). Requires threshold in (0, 90].
int minimal_n(double threshold_degrees = kCnThresholdDegrees);

/// |s_n'(z)/f'(z) - 1|, evaluated as |rho_n'(z)| / |f'(z)|.
double ratio_gap(const TaylorSeries& f, int n, Complex z);

/// Circle maximum of ratio_gap on |z| = r against
/// r^n ((n+1)/(2n) + A_n r/(1-r)). In asymptotic mode the allowed value is the
/// bound times 1.02, recorded in the report's bound field.
/// Throws NotCertified unless f is in Omega, PoleEncountered if f' vanishes.
BoundReport ratio_gap_check(const TaylorSeries& f, int n, double r, int samples, ApproxMode mode);

/// Same measurement against r^n ((n+1)/(2n) + B_n r/(R - r)) for r < R = r_outer.
BoundReport ratio_gap_outer_check(const TaylorSeries& f, int n, double r, double r_outer, int samples,
                                  ApproxMode mode);

struct PositivityRow {
    int n = 0;
    double radius = 0.0;
};

/// Rows (n, partial_sum_positivity_radius(n)) for n_min..n_max.
std::vector<PositivityRow> positivity_table(int n_min = 2, int n_max = 40);

/// First n whose successor differs by less than `tol`; nullopt if none.
std::optional<int> positivity_plateau_start(const std::vector<PositivityRow>& rows, double tol = 1e-4);

/// "n,radius" header then one row per line, 10 significant digits.
std::string positivity_csv(const std::vector<PositivityRow>& rows);
/// JSON array of {"n": .., "radius": ..}.
std::string positivity_json(const std::vector<PositivityRow>& rows);

}  // namespace gft

#endif  // GFT_BOUNDS_HPP
