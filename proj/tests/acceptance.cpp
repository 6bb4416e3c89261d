/* Copyright (c) 2026 The unitheta authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <iomanip>
#include <iostream>

#include "unitheta/selftest.hpp"

// Gate binary: one line per criterion, nonzero exit if any fails.
int main() {
    std::vector<unitheta::CheckResult> results = unitheta::run_acceptance_battery();
    int failures = 0;
    for (const auto& r : results) {
        std::cout << "[AC" << std::setw(2) << std::setfill('0') << r.id << "] "
                  << (r.pass ? "PASS" : "FAIL") << " (" << r.battery << ") " << r.name
                  << " - " << r.detail << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << (results.size() - failures) << "/" << results.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
