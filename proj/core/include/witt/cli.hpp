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

#ifndef WITT_CLI_HPP
#define WITT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace witt::cli {

/// Dispatch a command line (without the program name). Output is a pure
/// function of the arguments plus cache/data files; errors go to `err`
/// with a nonzero return (1 = domain error, 2 = usage error).
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// main()-style entry point writing to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace witt::cli

#endif
