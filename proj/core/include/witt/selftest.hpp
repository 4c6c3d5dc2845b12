/*
   Copyright 2026 The wittkit authors

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

#ifndef WITT_SELFTEST_HPP
#define WITT_SELFTEST_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace witt {

struct SelftestOptions {
    bool full = false;
    /// When set and the directory exists, cached law files are verified
    /// against freshly generated polynomials (corruption is reported per
    /// (p, n, kind) key). The selftest itself never writes the cache.
    std::optional<std::filesystem::path> cache_dir;
    /// Needed by the canonical-lift batteries of the full level.
    std::optional<std::string> cm_table_path;
};

/// Runs the invariant batteries; one deterministic line per battery.
/// Returns 0 when everything passes.
int run_selftest(const SelftestOptions& options, std::ostream& out);

}  // namespace witt

#endif
