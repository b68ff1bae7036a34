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

#ifndef GFT_TESTS_ORACLES_HPP
#define GFT_TESTS_ORACLES_HPP

// Independent reference computations used as test oracles. Nothing here
// calls into the library's evaluation or scanning code.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "gft/series.hpp"

namespace oracle {

using gft::Complex;

// sum_k c_k z^k with explicit powers.
inline Complex naive_poly(const std::vector<Complex>& c, Complex z) {
    Complex acc{};
    Complex p{1.0};
    for (const Complex& ck : c) {
        acc += ck * p;
        p *= z;
    }
    return acc;
}

inline std::vector<Complex> raw_coeffs(const gft::TaylorSeries& f) {
    std::vector<Complex> c{Complex{}};
    for (const Complex& a : f.coeffs()) c.push_back(a);
    return c;
}

inline Complex naive_f(const gft::TaylorSeries& f, Complex z) { return naive_poly(raw_coeffs(f), z); }

// Five-point central difference along the real direction (valid for analytic g).
template <class G>
Complex diff(G&& g, Complex z, double h = 1e-3) {
    return (-g(z + 2.0 * h) + 8.0 * g(z + h) - 8.0 * g(z - h) + g(z - 2.0 * h)) / (12.0 * h);
}

// Plain uniform-grid minimum of fn(theta), no refinement.
template <class F>
double dense_min(F&& fn, int samples) {
    double best = fn(0.0);
    for (int j = 1; j < samples; ++j) best = std::min(best, fn(2.0 * std::numbers::pi * j / samples));
    return best;
}

template <class F>
double dense_max(F&& fn, int samples) {
    return -dense_min([&](double t) { return -fn(t); }, samples);
}

inline Complex on_circle(double r, double theta) { return std::polar(r, theta); }

// Starlike, convex and close-to-convex functionals computed from naive values
// of f, f', f''.
inline std::vector<Complex> deriv_coeffs(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    if (d.empty()) d.push_back(Complex{});
    return d;
}

struct Functionals {
    std::vector<Complex> f, fp, fpp;

    explicit Functionals(const gft::TaylorSeries& s)
        : f(raw_coeffs(s)), fp(deriv_coeffs(f)), fpp(deriv_coeffs(fp)) {}

    double starlike(Complex z) const { return std::real(z * naive_poly(fp, z) / naive_poly(f, z)); }
    double convex(Complex z) const { return 1.0 + std::real(z * naive_poly(fpp, z) / naive_poly(fp, z)); }
    double ctc(Complex z) const { return std::real(naive_poly(fp, z)); }
};

inline gft::TaylorSeries random_series(std::mt19937_64& rng, int degree, double scale) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Complex> a{Complex{1.0}};
    for (int k = 2; k <= degree; ++k) a.emplace_back(scale * n(rng) / k, scale * n(rng) / k);
    return gft::TaylorSeries(std::move(a));
}

}  // namespace oracle

#endif  // GFT_TESTS_ORACLES_HPP
