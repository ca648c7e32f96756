// Copyright 2026 The graphdft Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdft {

/// Runs one command-line invocation; args holds everything after the program
/// name. Results go to out, diagnostics to err. Returns the process exit
/// code: 0 on success, 2 for unusable input or options, 3 when an algorithm
/// fails to converge.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gdft
