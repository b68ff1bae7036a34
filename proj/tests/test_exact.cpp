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

// Rational-arithmetic checks of the series recurrences.

#include <doctest.h>
#include <gmpxx.h>

#include <vector>

#include "exact_series.hpp"
#include "gft/series_algebra.hpp"

using gft::algebra::cauchy_product;
using gft::algebra::reciprocal_coefficients;

TEST_SUITE("exact") {

TEST_CASE("reciprocal recurrence is exact over the rationals") {
    const std::vector<mpq_class> p = {1, mpq_class(1, 3), mpq_class(-2, 7), mpq_class(5, 11)};
    const auto d = reciprocal_coefficients<mpq_class>(p, 25);
    const auto back = cauchy_product<mpq_class>(p, d, 25);
    CHECK(back[0] == 1);
    for (std::size_t k = 1; k < back.size(); ++k) CHECK(back[k] == 0);
}

TEST_CASE("c_n = -(n+1) a_{n+1} exactly") {
    for (const mpq_class mu : {mpq_class(1, 2), mpq_class(-7, 10), mpq_class(9, 10), mpq_class(1, 3)}) {
        const auto a = exact::f_mu(mu, 12);
        for (int n = 2; n <= 8; ++n) CHECK(exact::c_n_identity_holds(a, n));
    }
    // The identity does not depend on the family.
    std::vector<mpq_class> b = {0, 1};
    for (int k = 2; k <= 12; ++k) b.emplace_back((k % 3) - 1, k * k + 1);
    for (int n = 2; n <= 8; ++n) CHECK(exact::c_n_identity_holds(b, n));
}

TEST_CASE("zero constant term is rejected") {
    const std::vector<mpq_class> p = {0, 1};
    CHECK_THROWS(reciprocal_coefficients<mpq_class>(p, 3));
}

}
