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

#ifndef GFT_CIRCLE_HPP
#define GFT_CIRCLE_HPP

// Sampling of analytic functions on circles |z| = r and local refinement of
// extrema in the angle.

#include <cmath>
#include <numbers>
#include <vector>

#include "gft/series.hpp"

namespace gft {

/// Uniform grid z_j = r exp(2 pi i j / samples), split into real/imag arrays.
struct CircleGrid {
    double radius = 0.0;
    std::vector<double> re;
    std::vector<double> im;

    std::size_t size() const noexcept { return re.size(); }
    double theta(std::size_t j) const noexcept {
        return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(re.size());
    }
};

CircleGrid make_circle_grid(double radius, int samples);

/// Values of a series at every grid point.
struct GridValues {
    std::vector<double> re;
    std::vector<double> im;

    Complex operator[](std::size_t j) const noexcept { return {re[j], im[j]}; }
};

GridValues evaluate_on(const RawSeries& s, const CircleGrid& grid);

struct Extremum {
    double theta = 0.0;
    double value = 0.0;
};

/// Golden-section search for the minimum of a unimodal function on [a, b],
/// stopping when the bracket is narrower than `tol`.
template <class F>
Extremum golden_section_min(F&& fn, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = fn(c);
    double fd = fn(d);
    for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return fc <= fd ? Extremum{c, fc} : Extremum{d, fd};
}

/// Refines a grid minimum at `theta0` inside [theta0 - half_width, theta0 + half_width].
/// Never returns a value above `value0`.
template <class F>
Extremum refine_min(F&& fn, double theta0, double value0, double half_width, double tol) {
    Extremum best = golden_section_min(fn, theta0 - half_width, theta0 + half_width, tol);
    if (!(best.value < value0)) return {theta0, value0};
    best.theta = std::remainder(best.theta, 2.0 * std::numbers::pi);
    if (best.theta < 0.0) best.theta += 2.0 * std::numbers::pi;
    return best;
}

/// max over |z| = r of |s(z)|: grid maximum refined by golden-section search.
Extremum max_modulus_on_circle(const RawSeries& s, double radius, int samples, double theta_tol = 1e-12);

/// min over |z| = r of |s(z)|, same scheme.
Extremum min_modulus_on_circle(const RawSeries& s, double radius, int samples, double theta_tol = 1e-12);

}  // namespace gft

#endif  // GFT_CIRCLE_HPP
