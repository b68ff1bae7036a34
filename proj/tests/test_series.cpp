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

#include <cstdlib>
#include <random>

#include "gft/errors.hpp"
#include "gft/omega.hpp"
#include "gft/random_members.hpp"
#include "gft/series.hpp"
#include "oracles.hpp"

using namespace gft;

TEST_SUITE("series") {

TEST_CASE("construction and normalization") {
    CHECK(make_series({1.0}) == TaylorSeries::identity());
    const TaylorSeries f = make_series({1.0, 0.0, 0.25});
    CHECK(f == family_f_mu(0.0, 3));
    CHECK(f.degree() == 3);
    CHECK(f.coeff(3) == Complex{0.25});
    CHECK(f.coeff(7) == Complex{});
    CHECK_THROWS_AS(make_series({0.5, 1.0}), NormalizationError);
    CHECK_THROWS_AS(make_series({Complex{1.0, 1e-300}}), NormalizationError);
    CHECK_THROWS_AS(make_series({}), EmptyInput);
    CHECK_THROWS_AS(RawSeries({}), EmptyInput);
}

TEST_CASE("evaluate simple values") {
    CHECK(evaluate(TaylorSeries::identity(), 0.3) == Complex{0.3});
    for (double r : {0.1, 0.5, 0.9}) {
        CHECK(std::real(evaluate(make_series({1.0, 0.5}), r)) == doctest::Approx(r + r * r / 2).epsilon(1e-15));
    }
}

TEST_CASE("evaluate matches naive summation on random degree-30 series") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const TaylorSeries f = oracle::random_series(rng, 30, 1.0);
        for (int i = 0; i < 100; ++i) {
            const Complex z = std::polar(0.9 * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
            const Complex want = oracle::naive_f(f, z);
            CHECK(std::abs(evaluate(f, z) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("derivative agrees with finite differences") {
    std::mt19937_64 rng(12);
    const TaylorSeries f = oracle::random_series(rng, 12, 1.0);
    const RawSeries d = derivative(f);
    const RawSeries d2 = derivative(d);
    for (Complex z : {Complex{0.2, 0.1}, Complex{-0.5, 0.3}, Complex{0.0, -0.7}}) {
        const Complex fd = oracle::diff([&](Complex w) { return oracle::naive_f(f, w); }, z);
        CHECK(std::abs(evaluate(d, z) - fd) < 1e-9);
        const Complex fd2 = oracle::diff([&](Complex w) { return evaluate(d, w); }, z);
        CHECK(std::abs(evaluate(d2, z) - fd2) < 1e-8);
    }
    CHECK(derivative(TaylorSeries::identity()) == RawSeries::constant(1.0));
}

TEST_CASE("defect series") {
    CHECK(defect_series(TaylorSeries::identity()) == RawSeries::zero(1));
    const RawSeries g = defect_series(make_series({1.0, 0.5}));
    CHECK(g[2] == Complex{0.5});
    CHECK(g[0] == Complex{});
    CHECK(g[1] == Complex{});
    for (double lambda : {0.25, 0.5, 1.0}) {
        const RawSeries h = defect_series(example_cubic(lambda));
        CHECK(h[2] == Complex{lambda / 2});
        CHECK(h[3] == Complex{lambda / 2});
    }
    std::mt19937_64 rng(13);
    const TaylorSeries f = oracle::random_series(rng, 9, 1.0);
    const Complex z{0.3, -0.4};
    const Complex want = z * evaluate(derivative(f), z) - oracle::naive_f(f, z);
    CHECK(std::abs(evaluate(defect_series(f), z) - want) < 1e-14);
}

TEST_CASE("partial sums and tails") {
    for (double mu : {-0.8, 0.0, 0.3, 1.0}) CHECK(partial_sum(family_f_mu(mu, 20), 2) == make_series({1.0, mu / 2}));
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorSeries f = oracle::random_series(rng, 15, 1.0);
        for (int n = 2; n <= 17; ++n) {
            const RawSeries sum = partial_sum(f, n).as_raw() + tail(f, n);
            CHECK(sum == f.as_raw());
        }
    }
    const TaylorSeries f5 = oracle::random_series(rng, 5, 1.0);
    CHECK(partial_sum(f5, 10) == f5);
    CHECK_THROWS_AS(partial_sum(f5, 1), DomainError);
    CHECK_THROWS_AS(tail(f5, 0), DomainError);
}

TEST_CASE("convolution") {
    std::mt19937_64 rng(15);
    const TaylorSeries f = oracle::random_series(rng, 8, 1.0);
    CHECK(convolve(TaylorSeries::identity(), f) == TaylorSeries::identity());
    CHECK(convolve(make_series({1.0, 0.7}), make_series({1.0, 0.7})) == make_series({1.0, 0.7 * 0.7}));
    CHECK(convolve(family_f_mu(0.0, 3), family_f_mu(0.0, 3)) == make_series({1.0, 0.0, 1.0 / 16}));
    const TaylorSeries g = oracle::random_series(rng, 5, 1.0);
    const TaylorSeries fg = convolve(f, g);
    CHECK(fg == convolve(g, f));
    for (int k = 1; k <= 8; ++k) CHECK(fg.coeff(k) == f.coeff(k) * g.coeff(k));
}

TEST_CASE("reciprocal series") {
    const RawSeries one = reciprocal_series(RawSeries::constant(1.0), 6);
    for (int k = 1; k <= 6; ++k) CHECK(one[k] == Complex{});
    CHECK(one[0] == Complex{1.0});
    const RawSeries geo = reciprocal_series(RawSeries({1.0, 1.0}), 20);
    for (int k = 0; k <= 20; ++k) CHECK(geo[k] == Complex{k % 2 == 0 ? 1.0 : -1.0});
    CHECK_THROWS_AS(reciprocal_series(RawSeries({0.0, 1.0}), 4), ZeroConstantTerm);

    Rng rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const RawSeries p = derivative(random_member(rng, 0.5));
        const RawSeries back = multiply(p, reciprocal_series(p, 30), 30);
        CHECK(std::abs(back[0] - 1.0) <= 1e-12);
        for (int k = 1; k <= 30; ++k) CHECK(std::abs(back[k]) <= 1e-12);
    }
}

TEST_CASE("c_n coefficient identity in double precision") {
    for (double mu : {-0.9, 0.5, 0.7}) {
        const TaylorSeries f = family_f_mu(mu, 24);
        const RawSeries inv = reciprocal_series(derivative(f), 24);
        for (int n = 2; n <= 8; ++n) {
            const RawSeries q = multiply(derivative(partial_sum(f, n)), inv, 24);
            CHECK(std::abs(q[n] + static_cast<double>(n + 1) * f.coeff(n + 1)) < 1e-14);
        }
    }
}

TEST_CASE("default degree from the environment") {
    unsetenv("GFT_DEFAULT_DEGREE");
    CHECK(default_degree() == kDefaultDegree);
    setenv("GFT_DEFAULT_DEGREE", "96", 1);
    CHECK(default_degree() == 96);
    setenv("GFT_DEFAULT_DEGREE", "abc", 1);
    CHECK_THROWS_AS(default_degree(), DomainError);
    setenv("GFT_DEFAULT_DEGREE", "0", 1);
    CHECK_THROWS_AS(default_degree(), DomainError);
    unsetenv("GFT_DEFAULT_DEGREE");
}

}
