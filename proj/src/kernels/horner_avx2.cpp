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

// Compiled with -mavx2 only; callers must check isa_available(Isa::avx2).
// No FMA: the multiply/add sequence mirrors horner_batch_scalar exactly.

#include <immintrin.h>

#include "gft/kernels.hpp"

namespace gft::kernels::detail {

void horner_batch_avx2(const double* coeffs, std::size_t n_coeffs, const double* xr, const double* xi,
                       double* yr, double* yi, std::size_t n_points) noexcept {
    const std::size_t top = n_coeffs - 1;
    std::size_t j = 0;
    for (; j + 4 <= n_points; j += 4) {
        const __m256d zr = _mm256_loadu_pd(xr + j);
        const __m256d zi = _mm256_loadu_pd(xi + j);
        __m256d ar = _mm256_set1_pd(coeffs[2 * top]);
        __m256d ai = _mm256_set1_pd(coeffs[2 * top + 1]);
        for (std::size_t k = top; k-- > 0;) {
            const __m256d pr = _mm256_sub_pd(_mm256_mul_pd(ar, zr), _mm256_mul_pd(ai, zi));
            const __m256d pi = _mm256_add_pd(_mm256_mul_pd(ar, zi), _mm256_mul_pd(ai, zr));
            ar = _mm256_add_pd(pr, _mm256_set1_pd(coeffs[2 * k]));
            ai = _mm256_add_pd(pi, _mm256_set1_pd(coeffs[2 * k + 1]));
        }
        _mm256_storeu_pd(yr + j, ar);
        _mm256_storeu_pd(yi + j, ai);
    }
    if (j < n_points) {
        horner_batch_scalar(coeffs, n_coeffs, xr + j, xi + j, yr + j, yi + j, n_points - j);
    }
}

}  // namespace gft::kernels::detail
