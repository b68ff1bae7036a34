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

#ifndef GFT_SERIES_HPP
#define GFT_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

/// Working degree used when none is given. Overridden by GFT_DEFAULT_DEGREE.
inline constexpr int kDefaultDegree = 64;
int default_degree();

/// Power series b_0 + b_1 z + ... + b_N z^N with arbitrary constant term.
/// Holds derived objects: derivatives, zf' - f, tails, 1/f'.
class RawSeries {
public:
    /// Coefficients b_0..b_N. Throws EmptyInput if empty.
    explicit RawSeries(std::vector<Complex> coeffs);
    static RawSeries zero(int degree);
    static RawSeries constant(Complex c) { return RawSeries({c}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of z^k; zero past the stored degree.
    Complex operator[](int k) const noexcept {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Complex{};
    }
    std::span<const Complex> coeffs() const noexcept { return c_; }

    friend bool operator==(const RawSeries&, const RawSeries&) = default;

private:
    std::vector<Complex> c_;
};

/// Normalized series z + a_2 z^2 + ... + a_N z^N (f(0) = 0, f'(0) = 1).
/// Storage starts at a_1, which is exactly 1.
class TaylorSeries {
public:
    /// Coefficients a_1..a_N. Throws EmptyInput if empty and
    /// NormalizationError unless a_1 == 1 exactly.
    explicit TaylorSeries(std::vector<Complex> coeffs);
    static TaylorSeries identity() { return TaylorSeries({Complex{1.0}}); }

    int degree() const noexcept { return static_cast<int>(a_.size()); }
    /// a_k for k >= 1; zero past the stored degree.
    Complex coeff(int k) const noexcept {
        return (k >= 1 && k <= degree()) ? a_[static_cast<std::size_t>(k - 1)] : Complex{};
    }
    std::span<const Complex> coeffs() const noexcept { return a_; }

    /// Same function as a RawSeries (b_0 = 0).
    RawSeries as_raw() const;

    friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

private:
    std::vector<Complex> a_;
};

TaylorSeries make_series(std::vector<Complex> coeffs);

/// Converts a raw series with b_0 = 0, b_1 = 1 back to normalized form.
TaylorSeries to_taylor(const RawSeries& s);

// Horner evaluation.
Complex evaluate(const TaylorSeries& f, Complex z);
Complex evaluate(const RawSeries& s, Complex z);

RawSeries derivative(const TaylorSeries& f);
RawSeries derivative(const RawSeries& s);

/// g(z) = z f'(z) - f(z), i.e. coefficients (k-1) a_k.
RawSeries defect_series(const TaylorSeries& f);

/// f(z)/z = 1 + a_2 z + a_3 z^2 + ...
RawSeries divide_by_z(const TaylorSeries& f);
RawSeries times_z(const RawSeries& s);

/// s_n(z; f) = z + a_2 z^2 + ... + a_n z^n. Requires n >= 2.
TaylorSeries partial_sum(const TaylorSeries& f, int n);
/// rho_n(z; f) = f - s_n, stored at the degree of f. Requires n >= 2.
RawSeries tail(const TaylorSeries& f, int n);

/// Hadamard product: coefficients a_k b_k, truncated to the smaller degree.
TaylorSeries convolve(const TaylorSeries& f, const TaylorSeries& g);

RawSeries operator+(const RawSeries& a, const RawSeries& b);
RawSeries operator-(const RawSeries& a, const RawSeries& b);

/// Cauchy product truncated at z^degree.
RawSeries multiply(const RawSeries& a, const RawSeries& b, int degree);

/// Coefficients d_0..d_degree of 1/p. Throws ZeroConstantTerm if p(0) = 0.
RawSeries reciprocal_series(const RawSeries& p, int degree);

}  // namespace gft

#endif  // GFT_SERIES_HPP
