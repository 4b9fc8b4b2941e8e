// Copyright 2026 The detpoly authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DETPOLY_CLI_HPP
#define DETPOLY_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace detpoly::cli {

/// Exit codes: 0 decided, 2 unknown verdict, 3 precondition failure,
/// 4 resource exhausted, 5 parse error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// Test entry point: argv without the program name.
int run_query(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace detpoly::cli

#endif  // DETPOLY_CLI_HPP
