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

#ifndef GFT_GEOMETRY_HPP
#define GFT_GEOMETRY_HPP

// Geometric functionals on circles and the radius up to which each stays
// positive:
//   starlike  Re(z f'/f)
//   convex    Re(1 + z f''/f')
//   ctc       Re(f')   (close-to-convex with respect to the identity)

#include <string_view>

#include "gft/series.hpp"

namespace gft {

enum class Property { starlike, convex, ctc };

std::string_view property_name(Property p) noexcept;
/// Accepts "starlike", "convex", "ctc". Throws DomainError otherwise.
Property parse_property(std::string_view name);

struct ScanConfig {
    int theta_samples = 4096;
    double r_step = 1e-3;
    double bisection_tol = 1e-7;
    double refine_tol = 1e-12;
    double r_max = 0.999;

    /// Throws DomainError on non-positive fields, theta_samples < 256 or r_max >= 1.
    void validate() const;
};

/// Denominator moduli below this raise PoleEncountered.
inline constexpr double kPoleThreshold = 1e-14;

/// Functional value at z; equals 1 at z = 0 for every kind.
double eval_functional(Property kind, const TaylorSeries& f, Complex z);

struct MinResult {
    double r = 0.0;
    double min_value = 0.0;
    double argmin_theta = 0.0;
    int samples = 0;
};

/// Minimum of the functional over |z| = r: uniform grid, then golden-section
/// refinement around the grid argmin.
MinResult min_on_circle(Property kind, const TaylorSeries& f, double r, const ScanConfig& cfg = {});

enum class RadiusMethod { sign_bisection, analytic, scan_limit };

std::string_view method_name(RadiusMethod m) noexcept;

struct RadiusResult {
    Property property = Property::starlike;
    /// Largest radius at which the circle minimum was confirmed positive.
    double radius = 0.0;
    /// |min on circle| at `radius`.
    double residual = 0.0;
    RadiusMethod method = RadiusMethod::sign_bisection;
    double argmin_theta = 0.0;
    /// True when no sign change occurred up to cfg.r_max.
    bool reached_scan_limit = false;
};

/// Scans r = r_step, 2 r_step, ... up to r_max for the first circle whose
/// minimum is <= 0, then bisects that bracket. A pole hit during the grid
/// scan throws PoleEncountered carrying the last radius with positive minimum;
/// a pole hit during bisection is treated like a non-positive minimum.
RadiusResult radius_of_positivity(Property kind, const TaylorSeries& f, const ScanConfig& cfg = {});

/// radius_of_positivity applied to s_n(z; f).
RadiusResult partial_sum_radius(Property kind, const TaylorSeries& f, int n, const ScanConfig& cfg = {});

/// max over |z| = r of |z f''(z) / f'(z)|.
double convex_ratio_max(const TaylorSeries& f, double r, int samples = 4096);

}  // namespace gft

#endif  // GFT_GEOMETRY_HPP
