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

#include <doctest.h>

#include <random>

#include "gft/errors.hpp"
#include "gft/omega.hpp"
#include "gft/random_members.hpp"
#include "oracles.hpp"

using namespace gft;

namespace {

// Dense-scan defect max |z f' - f| on |z| = 1 from naive values.
double dense_defect(const TaylorSeries& f, int samples = 1 << 16) {
    const auto c = oracle::raw_coeffs(f);
    const auto d = oracle::deriv_coeffs(c);
    return oracle::dense_max(
        [&](double t) {
            const Complex z = oracle::on_circle(1.0, t);
            return std::abs(z * oracle::naive_poly(d, z) - oracle::naive_poly(c, z));
        },
        samples);
}

}  // namespace

TEST_SUITE("omega") {

TEST_CASE("from_phi") {
    for (double lambda : {0.3, 0.5, 1.0}) {
        CHECK(from_phi(PhiSpec({1.0}), lambda) == make_series({1.0, lambda}));
        CHECK(from_phi(PhiSpec({0.0, 1.0}), lambda) == make_series({1.0, 0.0, lambda / 2}));
    }
    // phi = (mu + z)/(1 + mu z) truncated gives f_mu.
    for (double mu : {-0.6, 0.2, 0.8}) {
        std::vector<Complex> b{mu};
        double p = 1.0;
        for (int j = 1; j <= 30; ++j) {
            b.emplace_back((1 - mu * mu) * p);
            p *= -mu;
        }
        const TaylorSeries f = from_phi(PhiSpec(b), 0.5);
        const TaylorSeries g = family_f_mu(mu, f.degree());
        for (int k = 1; k <= f.degree(); ++k) CHECK(std::abs(f.coeff(k) - g.coeff(k)) < 1e-12);
    }
    CHECK_THROWS_AS(from_phi(PhiSpec({1.0}), 0.0), InvalidLambda);
    CHECK_THROWS_AS(PhiSpec({}), EmptyInput);
    CHECK(PhiSpec({0.5, 0.5}).certified());
    CHECK_FALSE(PhiSpec({0.5, 0.6}).certified());
}

TEST_CASE("families") {
    CHECK(family_f_mu(1.0, 10) == make_series({1.0, 0.5, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(family_f_mu(0.0, 3) == make_series({1.0, 0.0, 0.25}));
    CHECK(family_f_mu(0.5, 6).coeff(4) == Complex{-0.0625});
    CHECK_THROWS_AS(family_f_mu(1.5, 10), DomainError);
    CHECK(extremal_k(2, 0.5) == make_series({1.0, 0.5}));
    CHECK(extremal_k(5, 0.5) == make_series({1.0, 0, 0, 0, 0.125}));
    CHECK(example_cubic(1.0) == make_series({1.0, 0.5, 0.25}));
    CHECK_THROWS_AS(extremal_k(1, 0.5), DomainError);
}

TEST_CASE("boundary defect") {
    CHECK(boundary_defect(make_series({1.0, 0.5})) == doctest::Approx(0.5).epsilon(1e-15));
    for (double lambda : {0.25, 0.5, 1.0}) CHECK(std::abs(boundary_defect(example_cubic(lambda)) - lambda) < 1e-9);
    for (int k = 2; k <= 9; ++k) CHECK(std::abs(boundary_defect(extremal_k(k, 0.5)) - 0.5) < 1e-15);
    for (int i = -10; i <= 10; ++i) {
        const double mu = i / 10.0;
        CHECK(boundary_defect(family_f_mu(mu, 256)) <= 0.5 + 1e-9);
    }
    std::mt19937_64 rng(41);
    for (int i = 0; i < 10; ++i) {
        const TaylorSeries f = oracle::random_series(rng, 12, 0.5);
        const double d = boundary_defect(f);
        CHECK(d >= dense_defect(f) - 1e-12);
        CHECK(d <= dense_defect(f) + 1e-7);
    }
    CHECK_THROWS_AS(boundary_defect(make_series({1.0}), 16), DomainError);
}

TEST_CASE("membership") {
    const MembershipCertificate id = is_member(TaylorSeries::identity(), 0.1);
    CHECK(id.member);
    CHECK(id.defect == 0.0);
    const MembershipCertificate cubic = is_member(example_cubic(0.5), 0.5);
    CHECK(cubic.member);
    CHECK(std::abs(cubic.margin) < 1e-9);
    const MembershipCertificate no = is_member(make_series({1.0, 1.0}), 0.5);
    CHECK_FALSE(no.member);
    CHECK(no.defect == doctest::Approx(1.0));
    CHECK_THROWS_AS(is_member(TaylorSeries::identity(), -1.0), InvalidLambda);

    const MembershipCertificate coef = certify_by_coefficients(make_series({1.0, 0.1, 0.1}), 0.5);
    CHECK(coef.member);
    CHECK(coef.method == MembershipMethod::coefficient_sum);
    CHECK(coef.defect == doctest::Approx(0.3));
}

TEST_CASE("random members are members") {
    Rng rng(kDefaultSeed);
    for (double lambda : {0.3, 0.5, 1.0}) {
        for (int i = 0; i < 50; ++i) {
            const TaylorSeries f = random_member(rng, lambda);
            CHECK(is_member(f, lambda).member);
        }
    }
    Rng a(7), b(7);
    CHECK(random_member(a, 0.5) == random_member(b, 0.5));
}

TEST_CASE("coefficient-sum test") {
    CHECK(coeff_sum_sufficient(make_series({1.0, 0.25}), 0.5) == Sufficiency::sufficient);
    const TaylorSeries e = extremal_k(4, 0.5);
    CHECK(coeff_sum_sufficient(e, 0.5) == Sufficiency::inconclusive);
    CHECK(is_member(e, 0.5).member);
    // f_0.5: 1/4 + sum_{k>=1} (3/8)(1/2)^{k-1} -> 1, so the test cannot certify it.
    const TaylorSeries f = family_f_mu(0.5, 200);
    double sum = 0.0;
    for (int k = 2; k <= 200; ++k) sum += (k - 1) * std::abs(f.coeff(k));
    CHECK(weighted_coefficient_sum(f) == doctest::Approx(sum).epsilon(1e-14));
    CHECK(sum == doctest::Approx(0.25 + 0.75 * (1.0 - std::pow(0.5, 198))).epsilon(1e-12));
    CHECK(coeff_sum_sufficient(f, 0.5) == Sufficiency::inconclusive);
}

TEST_CASE("second-derivative and operator tests") {
    for (double lambda : {0.5, 1.0}) {
        const TaylorSeries q = make_series({1.0, lambda});
        CHECK(second_deriv_sufficient(q, lambda) == Sufficiency::sufficient);
        CHECK(operator_sufficient(q, lambda) == Sufficiency::sufficient);
        CHECK(second_derivative_sup(q) == doctest::Approx(2 * lambda));
        CHECK(operator_sup(q) == doctest::Approx(3 * lambda));
        CHECK(second_deriv_sufficient(TaylorSeries::identity(), lambda) == Sufficiency::sufficient);
        CHECK(operator_sufficient(TaylorSeries::identity(), lambda) == Sufficiency::sufficient);

        const SharpnessWitness w2 = second_deriv_witness(lambda, 2 * lambda + 0.1);
        CHECK(second_deriv_sufficient(w2.f, lambda) == Sufficiency::inconclusive);
        CHECK(w2.inside);
        CHECK(w2.critical_modulus == doctest::Approx(1.0 / (2 * lambda + 0.1)));
        CHECK(std::abs(evaluate(derivative(w2.f), w2.critical_point)) < 1e-15);

        for (double eta : {0.5 * lambda, 3 * lambda, 3 * lambda + 0.1}) {
            const SharpnessWitness w3 = operator_witness(lambda, eta);
            CHECK(operator_sup(w3.f) == doctest::Approx(eta));
            CHECK((operator_sufficient(w3.f, lambda) == Sufficiency::sufficient) == (eta <= 3 * lambda));
        }
        CHECK(operator_witness(lambda, 3 * lambda + 0.1).inside);
    }
}

TEST_CASE("coefficient bounds") {
    for (const BoundReport& b : coefficient_bounds_check(family_f_mu(0.6, 64), 0.5)) CHECK(b.passes(1e-15));
    for (int k = 2; k <= 8; ++k) {
        const auto reps = coefficient_bounds_check(extremal_k(k, 0.7), 0.7);
        bool equal = false;
        for (const BoundReport& b : reps) equal = equal || (b.index == k && b.slack == doctest::Approx(0.0));
        CHECK(equal);
    }
    CHECK_THROWS_AS(coefficient_bounds_check(make_series({1.0, 2.0}), 0.5), NotCertified);
}

TEST_CASE("growth and distortion") {
    for (double lambda : {0.5, 2.0}) {
        const GrowthDistortionReport r = growth_distortion_check(make_series({1.0, lambda}), lambda, 0.4);
        CHECK(r.passes(1e-12));
        CHECK(r.growth_upper.slack == doctest::Approx(0.0));
    }
    const GrowthDistortionReport id = growth_distortion_check(TaylorSeries::identity(), 0.5, 0.5);
    CHECK(id.growth_lower.slack > 0);
    CHECK(id.growth_upper.slack > 0);
    const GrowthDistortionReport f = growth_distortion_check(family_f_mu(0.5, 128), 0.5, 0.7);
    CHECK(f.growth_lower.slack > 0);
    CHECK(f.growth_upper.slack > 0);
    CHECK(f.distortion_lower.slack > 0);
    CHECK(f.distortion_upper.slack > 0);
}

TEST_CASE("starlike deviation") {
    for (double r : {0.2, 0.6, 0.9}) {
        CHECK(starlike_deviation_max(make_series({1.0, 0.5}), r) == doctest::Approx(r / (2 - r)).epsilon(1e-12));
    }
    CHECK(starlike_deviation_max(TaylorSeries::identity(), 0.5) == 0.0);
}

}
