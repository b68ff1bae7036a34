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

#include "gft/series.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "gft/errors.hpp"
#include "gft/series_algebra.hpp"

namespace gft {

int default_degree() {
    const char* env = std::getenv("GFT_DEFAULT_DEGREE");
    if (env == nullptr || *env == '\0') return kDefaultDegree;
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1) {
        throw DomainError(std::string("GFT_DEFAULT_DEGREE must be a positive integer, got '") + env + "'");
    }
    return value;
}

RawSeries::RawSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw EmptyInput("raw series needs at least a constant term");
}

RawSeries RawSeries::zero(int degree) {
    if (degree < 0) throw DomainError("negative degree");
    return RawSeries(std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

TaylorSeries::TaylorSeries(std::vector<Complex> coeffs) : a_(std::move(coeffs)) {
    if (a_.empty()) throw EmptyInput("series needs at least the linear coefficient");
    if (a_.front() != Complex{1.0, 0.0}) {
        throw NormalizationError("first coefficient must be exactly 1 (f'(0) = 1)");
    }
}

RawSeries TaylorSeries::as_raw() const {
    std::vector<Complex> b(a_.size() + 1);
    std::copy(a_.begin(), a_.end(), b.begin() + 1);
    return RawSeries(std::move(b));
}

TaylorSeries make_series(std::vector<Complex> coeffs) { return TaylorSeries(std::move(coeffs)); }

TaylorSeries to_taylor(const RawSeries& s) {
    if (s[0] != Complex{} || s.degree() < 1) {
        throw NormalizationError("raw series does not vanish at the origin");
    }
    auto c = s.coeffs();
    return TaylorSeries(std::vector<Complex>(c.begin() + 1, c.end()));
}

namespace {

Complex horner(std::span<const Complex> c, Complex z) {
    Complex acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

Complex evaluate(const TaylorSeries& f, Complex z) { return z * horner(f.coeffs(), z); }

Complex evaluate(const RawSeries& s, Complex z) { return horner(s.coeffs(), z); }

RawSeries derivative(const TaylorSeries& f) {
    const int n = f.degree();
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * f.coeff(k);
    return RawSeries(std::move(d));
}

RawSeries derivative(const RawSeries& s) {
    const int n = s.degree();
    if (n == 0) return RawSeries::zero(0);
    std::vector<Complex> d(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) d[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * s[k];
    return RawSeries(std::move(d));
}

RawSeries defect_series(const TaylorSeries& f) {
    const int n = f.degree();
    std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
    for (int k = 2; k <= n; ++k) g[static_cast<std::size_t>(k)] = static_cast<double>(k - 1) * f.coeff(k);
    return RawSeries(std::move(g));
}

RawSeries divide_by_z(const TaylorSeries& f) {
    auto a = f.coeffs();
    return RawSeries(std::vector<Complex>(a.begin(), a.end()));
}

RawSeries times_z(const RawSeries& s) {
    std::vector<Complex> b(s.coeffs().size() + 1);
    std::copy(s.coeffs().begin(), s.coeffs().end(), b.begin() + 1);
    return RawSeries(std::move(b));
}

TaylorSeries partial_sum(const TaylorSeries& f, int n) {
    if (n < 2) throw DomainError("partial sums are defined for n >= 2");
    auto a = f.coeffs();
    const auto keep = static_cast<std::size_t>(std::min(n, f.degree()));
    return TaylorSeries(std::vector<Complex>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(keep)));
}

RawSeries tail(const TaylorSeries& f, int n) {
    if (n < 2) throw DomainError("tails are defined for n >= 2");
    std::vector<Complex> t(static_cast<std::size_t>(f.degree()) + 1);
    for (int k = n + 1; k <= f.degree(); ++k) t[static_cast<std::size_t>(k)] = f.coeff(k);
    return RawSeries(std::move(t));
}

TaylorSeries convolve(const TaylorSeries& f, const TaylorSeries& g) {
    const int n = std::min(f.degree(), g.degree());
    std::vector<Complex> c(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k - 1)] = f.coeff(k) * g.coeff(k);
    return TaylorSeries(std::move(c));
}

RawSeries operator+(const RawSeries& a, const RawSeries& b) {
    const int n = std::max(a.degree(), b.degree());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] + b[k];
    return RawSeries(std::move(c));
}

RawSeries operator-(const RawSeries& a, const RawSeries& b) {
    const int n = std::max(a.degree(), b.degree());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = a[k] - b[k];
    return RawSeries(std::move(c));
}

RawSeries multiply(const RawSeries& a, const RawSeries& b, int degree) {
    if (degree < 0) throw DomainError("negative degree");
    return RawSeries(algebra::cauchy_product(a.coeffs(), b.coeffs(), static_cast<std::size_t>(degree) + 1));
}

RawSeries reciprocal_series(const RawSeries& p, int degree) {
    if (degree < 0) throw DomainError("negative degree");
    return RawSeries(algebra::reciprocal_coefficients(p.coeffs(), static_cast<std::size_t>(degree) + 1));
}

}  // namespace gft
