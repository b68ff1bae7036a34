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

#include "gft/kernels.hpp"

namespace gft::kernels::detail {

void horner_batch_scalar(const double* coeffs, std::size_t n_coeffs, const double* xr, const double* xi,
                         double* yr, double* yi, std::size_t n_points) noexcept {
    const std::size_t top = n_coeffs - 1;
    for (std::size_t j = 0; j < n_points; ++j) {
        const double zr = xr[j];
        const double zi = xi[j];
        double ar = coeffs[2 * top];
        double ai = coeffs[2 * top + 1];
        for (std::size_t k = top; k-- > 0;) {
            const double pr = ar * zr - ai * zi;
            const double pi = ar * zi + ai * zr;
            ar = pr + coeffs[2 * k];
            ai = pi + coeffs[2 * k + 1];
        }
        yr[j] = ar;
        yi[j] = ai;
    }
}

}  // namespace gft::kernels::detail
