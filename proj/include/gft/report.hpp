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

#ifndef GFT_REPORT_HPP
#define GFT_REPORT_HPP

#include <string>

namespace gft {

/// A measured quantity against a closed-form bound.
struct BoundReport {
    std::string label;
    double measured = 0.0;
    double bound = 0.0;
    /// Signed distance to the bound: bound - measured for upper bounds,
    /// measured - bound for lower bounds. Non-negative means satisfied.
    double slack = 0.0;
    bool upper = true;
    int index = 0;     // coefficient index or n, when meaningful
    double radius = 0.0;

    bool passes(double tol) const noexcept { return slack >= -tol; }
};

BoundReport upper_report(std::string label, double measured, double bound);
BoundReport lower_report(std::string label, double measured, double bound);

}  // namespace gft

#endif  // GFT_REPORT_HPP
