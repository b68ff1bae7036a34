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

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "gft/kernels.hpp"

namespace gft::kernels {

namespace {

Isa detect_default() noexcept {
    const char* forced = std::getenv("GFT_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Isa::scalar;
    if (isa_available(Isa::avx2)) return Isa::avx2;
    return Isa::scalar;
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{detect_default()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(GFT_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa)) {
        throw std::invalid_argument("kernel variant '" + std::string(isa_name(isa)) + "' is not available");
    }
    active().store(isa, std::memory_order_relaxed);
}

void horner_batch(std::span<const std::complex<double>> coeffs, std::span<const double> xr,
                  std::span<const double> xi, std::span<double> yr, std::span<double> yi) {
    horner_batch(active_isa(), coeffs, xr, xi, yr, yi);
}

void horner_batch(Isa isa, std::span<const std::complex<double>> coeffs, std::span<const double> xr,
                  std::span<const double> xi, std::span<double> yr, std::span<double> yi) {
    const std::size_t n = xr.size();
    if (xi.size() != n || yr.size() != n || yi.size() != n) {
        throw std::invalid_argument("horner_batch: point and result arrays differ in length");
    }
    std::size_t nc = coeffs.size();
    while (nc > 1 && coeffs[nc - 1] == std::complex<double>{}) --nc;
    if (nc == 0 || n == 0) {
        for (std::size_t j = 0; j < n; ++j) yr[j] = yi[j] = 0.0;
        return;
    }
    // std::complex<double> is layout-compatible with double[2].
    const double* c = reinterpret_cast<const double*>(coeffs.data());
    switch (isa) {
#if defined(GFT_HAVE_AVX2)
        case Isa::avx2:
            if (isa_available(Isa::avx2)) {
                detail::horner_batch_avx2(c, nc, xr.data(), xi.data(), yr.data(), yi.data(), n);
                return;
            }
            break;
#endif
        default: break;
    }
    detail::horner_batch_scalar(c, nc, xr.data(), xi.data(), yr.data(), yi.data(), n);
}

}  // namespace gft::kernels
