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

#ifndef GFT_VERIFY_HPP
#define GFT_VERIFY_HPP

// Named verification suites, one per result family. Each suite is
// deterministic for a given seed and sample count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gft {

struct Check {
    std::string label;
    bool pass = false;
    double measured = 0.0;
    double expected = 0.0;  // bound or expected value
    double slack = 0.0;     // worst signed distance to the bound (>= -tol passes)
    long count = 1;         // number of individual comparisons aggregated
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    long passed() const noexcept;
    long failed() const noexcept;
    bool ok() const noexcept { return failed() == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int samples = 100;  // random functions per randomized check
};

/// lemma1, lemma12, lemma14, thm21, thm22, thm23, thm31, thm32, thm33,
/// thm41, thm42, thm43, thm44, thm45, thm46.
const std::vector<std::string>& suite_names();

bool is_suite_name(std::string_view name);

/// Throws DomainError for unknown names.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts);

/// "all" or a single suite name.
std::vector<SuiteReport> run_suites(std::string_view name, const VerifyOptions& opts);

nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

}  // namespace gft

#endif  // GFT_VERIFY_HPP
