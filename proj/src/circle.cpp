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

#include "gft/circle.hpp"

#include <map>

#include "gft/errors.hpp"
#include "gft/kernels.hpp"

namespace gft {

namespace {

struct UnitCircle {
    std::vector<double> cos;
    std::vector<double> sin;
};

const UnitCircle& unit_circle(int samples) {
    thread_local std::map<int, UnitCircle> cache;
    auto it = cache.find(samples);
    if (it != cache.end()) return it->second;
    UnitCircle u;
    u.cos.resize(static_cast<std::size_t>(samples));
    u.sin.resize(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / samples;
        u.cos[static_cast<std::size_t>(j)] = std::cos(t);
        u.sin[static_cast<std::size_t>(j)] = std::sin(t);
    }
    if (cache.size() > 16) cache.clear();
    return cache.emplace(samples, std::move(u)).first->second;
}

template <bool Maximize>
Extremum modulus_extremum(const RawSeries& s, double radius, int samples, double theta_tol) {
    const CircleGrid grid = make_circle_grid(radius, samples);
    const GridValues v = evaluate_on(s, grid);
    std::size_t best = 0;
    double best_sq = std::norm(v[0]);
    for (std::size_t j = 1; j < grid.size(); ++j) {
        const double sq = std::norm(v[j]);
        if (Maximize ? sq > best_sq : sq < best_sq) {
            best = j;
            best_sq = sq;
        }
    }
    const double sign = Maximize ? -1.0 : 1.0;
    auto objective = [&](double t) { return sign * std::norm(evaluate(s, std::polar(radius, t))); };
    const double h = 2.0 * std::numbers::pi / samples;
    const Extremum e = refine_min(objective, grid.theta(best), sign * best_sq, h, theta_tol);
    return {e.theta, std::sqrt(sign * e.value)};
}

}  // namespace

CircleGrid make_circle_grid(double radius, int samples) {
    if (samples < 1) throw DomainError("circle grid needs at least one sample");
    const UnitCircle& u = unit_circle(samples);
    CircleGrid g;
    g.radius = radius;
    g.re.resize(u.cos.size());
    g.im.resize(u.sin.size());
    for (std::size_t j = 0; j < u.cos.size(); ++j) {
        g.re[j] = radius * u.cos[j];
        g.im[j] = radius * u.sin[j];
    }
    return g;
}

GridValues evaluate_on(const RawSeries& s, const CircleGrid& grid) {
    GridValues v;
    v.re.resize(grid.size());
    v.im.resize(grid.size());
    kernels::horner_batch(s.coeffs(), grid.re, grid.im, v.re, v.im);
    return v;
}

Extremum max_modulus_on_circle(const RawSeries& s, double radius, int samples, double theta_tol) {
    return modulus_extremum<true>(s, radius, samples, theta_tol);
}

Extremum min_modulus_on_circle(const RawSeries& s, double radius, int samples, double theta_tol) {
    return modulus_extremum<false>(s, radius, samples, theta_tol);
}

}  // namespace gft
