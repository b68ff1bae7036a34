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

#ifndef GFT_SERIES_ALGEBRA_HPP
#define GFT_SERIES_ALGEBRA_HPP

// Coefficient recurrences shared by the double-precision series type and
// exact-arithmetic checks. T needs +, -, *, / and construction from int.

#include <cstddef>
#include <span>
#include <vector>

#include "gft/errors.hpp"

namespace gft::algebra {

/// First `n_terms` coefficients of the Cauchy product p*q.
template <class T>
std::vector<T> cauchy_product(std::span<const T> p, std::span<const T> q, std::size_t n_terms) {
    std::vector<T> out(n_terms, T(0));
    for (std::size_t m = 0; m < n_terms; ++m) {
        T acc(0);
        for (std::size_t k = 0; k <= m && k < p.size(); ++k) {
            if (m - k < q.size()) acc += p[k] * q[m - k];
        }
        out[m] = acc;
    }
    return out;
}

/// First `n_terms` coefficients d_0, d_1, ... of 1/p, from
/// p_0 d_m + sum_{k=1}^{m} p_k d_{m-k} = 0 (m >= 1), d_0 = 1/p_0.
template <class T>
std::vector<T> reciprocal_coefficients(std::span<const T> p, std::size_t n_terms) {
    if (p.empty() || p[0] == T(0)) throw ZeroConstantTerm("reciprocal of a series with zero constant term");
    std::vector<T> d(n_terms, T(0));
    if (n_terms == 0) return d;
    d[0] = T(1) / p[0];
    for (std::size_t m = 1; m < n_terms; ++m) {
        T acc(0);
        for (std::size_t k = 1; k <= m && k < p.size(); ++k) acc += p[k] * d[m - k];
        d[m] = -(acc / p[0]);
    }
    return d;
}

}  // namespace gft::algebra

#endif  // GFT_SERIES_ALGEBRA_HPP
