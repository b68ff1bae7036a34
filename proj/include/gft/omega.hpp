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

#ifndef GFT_OMEGA_HPP
#define GFT_OMEGA_HPP

// Members of the classes Omega_lambda: normalized f with
// |z f'(z) - f(z)| < lambda on the unit disk (Omega = Omega_{1/2}).

#include <string>
#include <string_view>
#include <vector>

#include "gft/report.hpp"
#include "gft/series.hpp"

namespace gft {

inline constexpr double kOmegaLambda = 0.5;
inline constexpr int kBoundarySamples = 4096;
inline constexpr double kMembershipTol = 1e-9;

/// phi(z) = sum_j b_j z^j, the multiplier in z f' - f = lambda z^2 phi.
class PhiSpec {
public:
    explicit PhiSpec(std::vector<Complex> coeffs);

    int degree() const noexcept { return static_cast<int>(b_.size()) - 1; }
    std::span<const Complex> coeffs() const noexcept { return b_; }
    /// sum_j |b_j|, an upper bound for sup |phi| on the closed disk.
    double sup_norm_bound() const noexcept { return sup_bound_; }
    /// sum_j |b_j| <= 1, which guarantees |phi| <= 1.
    bool certified() const noexcept { return sup_bound_ <= 1.0; }

private:
    std::vector<Complex> b_;
    double sup_bound_ = 0.0;
};

/// f(z) = z + lambda z^2 int_0^1 phi(zt) dt, i.e. a_{j+2} = lambda b_j / (j+1),
/// truncated at `degree`.
TaylorSeries from_phi(const PhiSpec& phi, double lambda, int degree);

/// Same, with degree just large enough to hold every phi coefficient.
TaylorSeries from_phi(const PhiSpec& phi, double lambda);

/// f_mu: a_2 = mu/2, a_{k+2} = (1 - mu^2)(-mu)^{k-1} / (2(k+1)), |mu| <= 1.
TaylorSeries family_f_mu(double mu, int degree);

/// z + lambda z^2 / 2 + lambda z^3 / 4.
TaylorSeries example_cubic(double lambda);

/// z + lambda/(k-1) z^k. With lambda = 1/2 this is the coefficient extremal.
TaylorSeries extremal_k(int k, double lambda);

/// max over |z| = 1 of |z f'(z) - f(z)| for the polynomial f.
double boundary_defect(const TaylorSeries& f, int samples = kBoundarySamples);

enum class MembershipMethod { boundary_scan, coefficient_sum };

std::string_view method_name(MembershipMethod m) noexcept;

/// Outcome of a membership test. For boundary_scan, `defect` is the boundary
/// maximum of g = z f' - f; since g(0) = 0, |g| < lambda on the open disk
/// exactly when that maximum is <= lambda (maximum modulus principle).
/// For coefficient_sum, `defect` is sum (k-1)|a_k|, an upper bound.
struct MembershipCertificate {
    double lambda = 0.0;
    double defect = 0.0;
    MembershipMethod method = MembershipMethod::boundary_scan;
    double margin = 0.0;  // lambda - defect
    int samples = 0;
    bool member = false;
};

MembershipCertificate is_member(const TaylorSeries& f, double lambda, double tol = kMembershipTol,
                                int samples = kBoundarySamples);

/// Certificate from the coefficient sum alone; `member` is true only when
/// the sum is strictly below lambda.
MembershipCertificate certify_by_coefficients(const TaylorSeries& f, double lambda);

enum class Sufficiency { sufficient, inconclusive };

/// sum_{k>=2} (k-1)|a_k|.
double weighted_coefficient_sum(const TaylorSeries& f);

/// sum (k-1)|a_k| < lambda implies f in Omega_lambda.
Sufficiency coeff_sum_sufficient(const TaylorSeries& f, double lambda);

/// max over |z| = 1 of |f''|.
double second_derivative_sup(const TaylorSeries& f, int samples = kBoundarySamples);

/// max |f''| <= 2 lambda on the unit circle implies f in Omega_lambda.
Sufficiency second_deriv_sufficient(const TaylorSeries& f, double lambda, int samples = kBoundarySamples);

/// max over |z| = 1 of |z^2 f'' + z f' - f|.
double operator_sup(const TaylorSeries& f, int samples = kBoundarySamples);

/// max |z^2 f'' + z f' - f| <= 3 lambda on the unit circle implies f in Omega_lambda.
Sufficiency operator_sufficient(const TaylorSeries& f, double lambda, int samples = kBoundarySamples);

/// f = z + c z^2 whose critical point -1/(2c) lies inside |z| < 1/(2 lambda)
/// once the sufficient-condition constant is exceeded.
struct SharpnessWitness {
    TaylorSeries f;
    double eta = 0.0;
    Complex critical_point;       // zero of f'
    double critical_modulus = 0.0;
    double disk_radius = 0.0;     // 1/(2 lambda)
    bool inside = false;          // critical_modulus < disk_radius
};

/// z + (eta/2) z^2: |f''| = eta.
SharpnessWitness second_deriv_witness(double lambda, double eta);
/// z + (eta/3) z^2: |z^2 f'' + z f' - f| = eta |z|^2.
SharpnessWitness operator_witness(double lambda, double eta);

/// |a_k| <= lambda/(k-1) for k = 2..degree. Throws NotCertified unless f is a member.
std::vector<BoundReport> coefficient_bounds_check(const TaylorSeries& f, double lambda);

/// Growth |z| - lambda|z|^2 <= |f| <= |z| + lambda|z|^2 and distortion
/// 1 - 2 lambda|z| <= |f'| <= 1 + 2 lambda|z| on |z| = r.
struct GrowthDistortionReport {
    BoundReport growth_lower;
    BoundReport growth_upper;
    BoundReport distortion_lower;
    BoundReport distortion_upper;

    bool passes(double tol) const noexcept {
        return growth_lower.passes(tol) && growth_upper.passes(tol) && distortion_lower.passes(tol) &&
               distortion_upper.passes(tol);
    }
};

GrowthDistortionReport growth_distortion_check(const TaylorSeries& f, double lambda, double r,
                                               int samples = kBoundarySamples);

/// max over |z| = r of |z f'/f - 1| (compared against r/(2-r) for Omega).
double starlike_deviation_max(const TaylorSeries& f, double r, int samples = kBoundarySamples);

}  // namespace gft

#endif  // GFT_OMEGA_HPP
