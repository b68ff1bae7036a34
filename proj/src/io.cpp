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

#include "gft/io.hpp"

#include <fstream>

#include "gft/errors.hpp"

namespace gft {

nlohmann::json series_to_json(const TaylorSeries& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Complex& a : f.coeffs()) coeffs.push_back({a.real(), a.imag()});
    return {{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

TaylorSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs")) {
        throw FormatError("coefficient document needs \"degree\" and \"coeffs\"");
    }
    const auto& deg = j.at("degree");
    const auto& arr = j.at("coeffs");
    if (!deg.is_number_integer() || !arr.is_array()) throw FormatError("\"degree\" must be an integer and \"coeffs\" an array");
    if (arr.empty()) throw EmptyInput("coefficient list is empty");
    if (deg.get<long long>() != static_cast<long long>(arr.size())) {
        throw FormatError("\"degree\" does not match the number of coefficients");
    }
    std::vector<Complex> a;
    a.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
            throw FormatError("each coefficient must be a [re, im] pair of numbers");
        }
        a.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
    return TaylorSeries(std::move(a));
}

void write_series_file(const std::filesystem::path& path, const TaylorSeries& f) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    out << series_to_json(f).dump(2) << '\n';
    if (!out) throw FormatError("failed writing '" + path.string() + "'");
}

TaylorSeries read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return series_from_json(j);
}

nlohmann::json to_json(const MembershipCertificate& c) {
    return {{"lambda", c.lambda},   {"defect", c.defect},   {"method", method_name(c.method)},
            {"margin", c.margin},   {"samples", c.samples}, {"member", c.member}};
}

nlohmann::json to_json(const RadiusResult& r) {
    return {{"property", property_name(r.property)},
            {"radius", r.radius},
            {"residual", r.residual},
            {"method", method_name(r.method)},
            {"argmin_theta", r.argmin_theta},
            {"reached_scan_limit", r.reached_scan_limit}};
}

nlohmann::json to_json(const RootResult& r) {
    return {{"root", r.root}, {"residual", r.residual}, {"bracket_width", r.bracket_width}, {"iterations", r.iterations}};
}

nlohmann::json to_json(const BoundReport& r) {
    return {{"label", r.label}, {"measured", r.measured}, {"bound", r.bound}, {"slack", r.slack},
            {"upper", r.upper}, {"index", r.index},       {"radius", r.radius}};
}

}  // namespace gft
