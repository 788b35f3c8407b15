#pragma once

// Internal: the weight-independent part of an insertion run, so one path can
// be swept over many weightings without recomputing its shape.

#include <span>
#include <vector>

#include "dyckperm/bijection.hpp"

namespace dyckperm::detail {

struct InsertionPlan {
  DyckPath path;
  std::vector<int> h;
  std::vector<Slope> up;
  std::vector<Membership> membership;  // per up-slope
  std::vector<int> shift;              // per up-slope

  InsertionPlan(DyckPath p, SplitRule rule);
};

// Bound for Up step u; `w` holds 0-based weights.
int bound_at(const DyckPath& p, const std::vector<int>& h, std::span<const int> w, int u,
             Membership membership);

// Runs the insertion into `word` (cleared first). When `trace` is non-null
// every step is recorded. Throws InsertionOverflow.
void run_insertion(const InsertionPlan& plan, std::span<const int> w, std::vector<int>& word,
                   InsertionTrace* trace);

}  // namespace dyckperm::detail
