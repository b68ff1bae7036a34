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

#ifndef GFT_RANDOM_MEMBERS_HPP
#define GFT_RANDOM_MEMBERS_HPP

// Seeded generators for property checks. Members come from from_phi with
// sum |b_j| <= 1, so membership holds by construction without a scan.

#include <random>

#include "gft/omega.hpp"

namespace gft {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultMaxPhiDegree = 16;

/// phi with degree `degree` and sum |b_j| = mass: exponential weights
/// normalized to the mass (a flat Dirichlet split) with uniform phases.
PhiSpec random_phi(Rng& rng, int degree, double mass);

/// Random certified generator: mass 1 a quarter of the time, uniform in
/// (0, 1) otherwise; one time in eight only a single coefficient is nonzero.
PhiSpec random_certified_phi(Rng& rng, int max_degree = kDefaultMaxPhiDegree);

/// A member of Omega_lambda, of degree phi.degree() + 2.
TaylorSeries random_member(Rng& rng, double lambda, int max_phi_degree = kDefaultMaxPhiDegree);

/// Mixed inputs for the sufficient-condition cross checks: members, scaled
/// generators with sum |b_j| > 1, quadratics straddling the bounds, and
/// arbitrary polynomials sized around the second-derivative bound.
TaylorSeries random_test_function(Rng& rng, double lambda);

}  // namespace gft

#endif  // GFT_RANDOM_MEMBERS_HPP
