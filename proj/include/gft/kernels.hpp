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

#ifndef GFT_KERNELS_HPP
#define GFT_KERNELS_HPP

// Batched polynomial evaluation over many points (circle scans). Points and
// results use split real/imaginary arrays. Every variant performs the same
// IEEE operations in the same order, so results are bit-identical across
// instruction sets.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gft::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// The variant used by horner_batch(). Defaults to the widest available one;
/// GFT_SIMD=scalar in the environment forces the reference kernel.
Isa active_isa() noexcept;

/// Throws std::invalid_argument if `isa` is unavailable.
void set_active_isa(Isa isa);

/// y_j = sum_k c_k x_j^k for every j. Trailing zero coefficients are skipped.
/// All four point arrays must have the same length.
void horner_batch(std::span<const std::complex<double>> coeffs, std::span<const double> xr,
                  std::span<const double> xi, std::span<double> yr, std::span<double> yi);

void horner_batch(Isa isa, std::span<const std::complex<double>> coeffs, std::span<const double> xr,
                  std::span<const double> xi, std::span<double> yr, std::span<double> yi);

namespace detail {

// coeffs: interleaved (re, im) pairs, n_coeffs >= 1.
void horner_batch_scalar(const double* coeffs, std::size_t n_coeffs, const double* xr, const double* xi,
                         double* yr, double* yi, std::size_t n_points) noexcept;

#if defined(GFT_HAVE_AVX2)
void horner_batch_avx2(const double* coeffs, std::size_t n_coeffs, const double* xr, const double* xi,
                       double* yr, double* yi, std::size_t n_points) noexcept;
#endif

}  // namespace detail

}  // namespace gft::kernels

#endif  // GFT_KERNELS_HPP
