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

#ifndef GFT_IO_HPP
#define GFT_IO_HPP

// JSON encodings.
//   coefficient file: {"degree": N, "coeffs": [[re, im], ...]}, coeffs[0] = a_1
//   certificate:      {lambda, defect, method, margin, samples, member}

#include <filesystem>
#include <json.hpp>

#include "gft/geometry.hpp"
#include "gft/omega.hpp"
#include "gft/roots.hpp"
#include "gft/series.hpp"

namespace gft {

nlohmann::json series_to_json(const TaylorSeries& f);
/// Throws FormatError on a malformed document (missing keys, degree mismatch,
/// non-numeric entries) and NormalizationError if a_1 != 1.
TaylorSeries series_from_json(const nlohmann::json& j);

/// Full double precision (shortest round-trip representation).
void write_series_file(const std::filesystem::path& path, const TaylorSeries& f);
TaylorSeries read_series_file(const std::filesystem::path& path);

nlohmann::json to_json(const MembershipCertificate& c);
nlohmann::json to_json(const RadiusResult& r);
nlohmann::json to_json(const RootResult& r);
nlohmann::json to_json(const BoundReport& r);

}  // namespace gft

#endif  // GFT_IO_HPP
