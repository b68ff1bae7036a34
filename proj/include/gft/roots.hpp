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

#ifndef GFT_ROOTS_HPP
#define GFT_ROOTS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/geometry.hpp"

namespace gft {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;       // |F(root)|
    double bracket_width = 0.0;  // final bracket, root is its midpoint
    int iterations = 0;
};

inline constexpr double kRootTol = 1e-12;
inline constexpr int kRootMaxIterations = 200;

/// Bracket-preserving root of F on [a, b]. Requires a < b and
/// F(a) F(b) < 0 (an exact zero at an endpoint is returned directly).
/// Throws NoSignChange or MaxIterations.
RootResult solve_bracketed(const std::function<double(double)>& F, double a, double b, double tol = kRootTol);

/// A radius equation F(r) = 0 with a bracket known to contain a sign change.
struct NamedEquation {
    std::string name;
    std::string expression;
    std::function<double(double)> F;
    double lo = 0.0;
    double hi = 1.0;
};

/// Catalog, in display order:
///   convexity_2_1         (1-r)^2 ln(1-r) + 2 - 7r + 4r^2
///   starlike_2_2          3(1-r)(2-r) ln(1-r) + 4 - 4r - 3r^2 + 2r^3
///   ctc_2_5               (1-r) ln(1-r) + 2 - 3r
///   aux_9r2_8r_4          9r^2 + 8r - 4
///   aux_3r2_4r_4          3r^2 + 4r - 4
///   tail_dominance_fprime (2-3r)/(2(1-r)) + ln(1-r)/2
///   tail_dominance_f      1 + ln(1-r)/2
const std::vector<NamedEquation>& equation_catalog();

/// Throws UnknownEquation.
const NamedEquation& find_equation(std::string_view name);

RootResult named_radius(std::string_view name);

/// P_n(r) = 1 - sum_{k=2}^{n} k r^{k-1} / (2(k-1)): Re s_n' > 0 on |z| < r for
/// every member of Omega given only |a_k| <= 1/(2(k-1)).
double positivity_polynomial(int n, double r);

/// Root of P_n on (0, 1]; exactly 1 for n = 2. Throws DomainError for n < 2.
RootResult partial_sum_positivity_radius(int n);

/// Numerator of the lower bound for the functional of s_3(f_mu) obtained
/// from the triangle inequality:
///   convex    1 - 2|mu| r - (9/4)(1-mu^2) r^2
///   starlike  4 - 4|mu| r - 3(1-mu^2) r^2
///   ctc       1 - |mu| r - (3/4)(1-mu^2) r^2
/// The root on [0, 1] is where the bound stops certifying the property.
NamedEquation s3_counterexample_equation(Property kind, double mu);

/// Lower bounds on the open disk for z + lambda z^2/2 + lambda z^3/4 as
/// functions of lambda, each vanishing at its threshold:
///   starlike   1 - 4 lambda / (4 - 3 lambda)          (4/7)
///   univalent  1 - 7 lambda / 4                        (4/7)
///   convex     1 - (5 lambda/2) / (1 - 7 lambda / 4)   (4/17)
NamedEquation cubic_lambda_threshold_equation(std::string_view which);

}  // namespace gft

#endif  // GFT_ROOTS_HPP
