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

#include <doctest.h>

#include "gft/errors.hpp"
#include "gft/verify.hpp"

using namespace gft;

TEST_SUITE("verify") {

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 15);
    CHECK(is_suite_name("thm46"));
    CHECK_FALSE(is_suite_name("all"));
    CHECK_THROWS_AS(run_suite("thm99", {}), DomainError);
    CHECK_THROWS_AS(run_suite("thm33", {42, 0}), DomainError);
}

TEST_CASE("every suite passes with a small sample") {
    const VerifyOptions opts{42, 10};
    for (const SuiteReport& r : run_suites("all", opts)) {
        INFO(to_text(r));
        CHECK(r.ok());
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("reports are deterministic for a seed") {
    const VerifyOptions opts{7, 10};
    CHECK(to_json(run_suite("lemma14", opts)).dump() == to_json(run_suite("lemma14", opts)).dump());
    CHECK(to_json(run_suite("lemma14", opts)).dump() != to_json(run_suite("lemma14", {8, 10})).dump());
}

}
