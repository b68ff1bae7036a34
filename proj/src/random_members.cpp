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

#include "gft/random_members.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

namespace {

Complex random_phase(Rng& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

}  // namespace

PhiSpec random_phi(Rng& rng, int degree, double mass) {
    if (degree < 0) throw DomainError("phi degree must be >= 0");
    if (!(mass >= 0.0)) throw DomainError("phi mass must be >= 0");
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(static_cast<std::size_t>(degree) + 1);
    double total = 0.0;
    for (double& x : w) {
        x = expo(rng);
        total += x;
    }
    std::vector<Complex> b(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) b[j] = (mass * w[j] / total) * random_phase(rng);
    PhiSpec phi(std::move(b));
    // Rounding in the normalization may push the sum a hair above the mass.
    if (phi.sup_norm_bound() > mass && mass > 0.0) {
        std::vector<Complex> scaled(phi.coeffs().begin(), phi.coeffs().end());
        for (Complex& c : scaled) c *= (1.0 - 4e-16);
        return PhiSpec(std::move(scaled));
    }
    return phi;
}

PhiSpec random_certified_phi(Rng& rng, int max_degree) {
    const int degree = uniform_int(rng, 0, max_degree);
    const double mass = uniform_int(rng, 0, 3) == 0 ? 1.0 : uniform(rng, 0.0, 1.0);
    if (uniform_int(rng, 0, 7) == 0) {
        std::vector<Complex> b(static_cast<std::size_t>(degree) + 1);
        b.back() = mass * random_phase(rng);
        return PhiSpec(std::move(b));
    }
    return random_phi(rng, degree, mass);
}

TaylorSeries random_member(Rng& rng, double lambda, int max_phi_degree) {
    return from_phi(random_certified_phi(rng, max_phi_degree), lambda);
}

TaylorSeries random_test_function(Rng& rng, double lambda) {
    switch (uniform_int(rng, 0, 3)) {
        case 0: return random_member(rng, lambda);
        case 1: return from_phi(random_phi(rng, uniform_int(rng, 0, 12), uniform(rng, 1.0, 3.0)), lambda);
        case 2: {
            const double c = uniform(rng, 0.0, 2.0 * lambda);
            return TaylorSeries({1.0, c * random_phase(rng)});
        }
        default: {
            const int degree = uniform_int(rng, 2, 10);
            std::vector<Complex> a(static_cast<std::size_t>(degree));
            a[0] = 1.0;
            double weight = 0.0;  // sum k(k-1)|a_k|, an upper bound for sup |f''|
            for (int k = 2; k <= degree; ++k) {
                a[static_cast<std::size_t>(k - 1)] = uniform(rng, 0.0, 1.0) * random_phase(rng);
                weight += static_cast<double>(k * (k - 1)) * std::abs(a[static_cast<std::size_t>(k - 1)]);
            }
            const double target = uniform(rng, 0.5, 2.5) * 2.0 * lambda;
            for (int k = 2; k <= degree; ++k) a[static_cast<std::size_t>(k - 1)] *= target / weight;
            return TaylorSeries(std::move(a));
        }
    }
}

}  // namespace gft
