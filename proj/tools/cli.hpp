#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dyckperm/bijection.hpp"

namespace dyckperm::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2 };

// Line-delimited JSON objects: {"steps": "...", "weights": [...]} and
// {"perm": [...]}.
std::string wd_record(const WeightedDyckPath& wd);
std::string perm_record(const Permutation& p);

// Staircase drawing: one row per height level, '/' and '\' in one column per
// step, then a row of weights aligned under the steps.
std::string render_ascii(const WeightedDyckPath& wd);

// One line per insertion step of both runs of every factor.
std::vector<std::string> trace_lines(const BetaResult& traced);

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace dyckperm::cli
