#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dyckperm/error.hpp"
#include "dyckperm/lattice_paths.hpp"
#include "dyckperm/permutations.hpp"

namespace dyckperm {

// How the up-slopes are divided between the left half L and the right half
// R. CeilHalf puts the first ceil(k/2) of k up-slopes in L and is the rule
// under which the map is a bijection. FloorHalf is kept for comparison.
enum class SplitRule { CeilHalf, FloorHalf };
enum class Membership { L, R };

std::string to_string(SplitRule rule);
std::string to_string(Membership m);

struct SplitAssignment {
  std::vector<Membership> membership;  // one entry per up-slope, left to right
  SplitRule rule = SplitRule::CeilHalf;
  friend bool operator==(const SplitAssignment&, const SplitAssignment&) = default;
};

SplitAssignment split_LR(const SlopeDecomposition& decomp, SplitRule rule = SplitRule::CeilHalf);

// Extremal value an Up step's weight is compared against to decide a jump.
//
// In L (minimality):
//   not first of its slope  -> weight of the previous Up step
//   first of its slope      -> valley height minus the entering Down weight,
//                              or 0 for the slope starting at step 1
// In R (maximality), capped by the lower height:
//   not last of its slope   -> weight of the next Up step
//   last of its slope       -> peak height minus the leaving Down weight
//
// Throws DomainError if step u is not an Up step.
int jump_bounds(const WeightedDyckPath& wd, int u, Membership membership);
bool jumps(const WeightedDyckPath& wd, int u, Membership membership);

struct InsertionStep {
  int position = 0;  // u
  int weight = 0;
  int slope = 0;  // 1-based up-slope index
  Membership membership = Membership::L;
  int shift = 0;  // Down steps strictly before the slope
  int bound = 0;
  bool jumped = false;
  std::optional<int> distance_from_right;  // set only when not jumped
  std::vector<int> word_after;
};

struct InsertionTrace {
  std::vector<InsertionStep> steps;
};

struct InsertionResult {
  std::vector<int> word;
  InsertionTrace trace;
};

// A non-jump insertion distance fell outside [0, current word length].
// Valid irreducible input never triggers it.
class InsertionOverflow : public DomainError {
 public:
  InsertionOverflow(const std::string& what, InsertionTrace trace)
      : DomainError(what), trace_(std::move(trace)) {}
  const InsertionTrace& trace() const noexcept { return trace_; }

 private:
  InsertionTrace trace_;
};

// Builds the bottom word by inserting the Up-step positions slope by slope.
InsertionResult ins(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);
// Same word, no trace.
std::vector<int> ins_word(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

// Bot = ins(wd); Top = S_2n(ins(reflect(wd))). Throws DomainError if wd is
// not irreducible.
AlternatingPermutation beta_irreducible(const WeightedDyckPath& wd,
                                        SplitRule rule = SplitRule::CeilHalf);

// Factors f_1..f_m left to right map to beta'(f_m) . ... . beta'(f_1).
AlternatingPermutation beta(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

struct FactorTrace {
  WeightedDyckPath factor;
  InsertionTrace bottom;
  InsertionTrace top;  // run on reflect(factor); positions are in the mirror
  AlternatingPermutation image;
};

struct BetaResult {
  AlternatingPermutation image;
  std::vector<FactorTrace> factors;
};

BetaResult beta_traced(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

// Weakly increasing v_1..v_n with 0 <= v_i <= i-1.
class ParkingFunction {
 public:
  ParkingFunction() = default;
  // Throws DomainError when the sequence is not a non-decreasing parking
  // function starting from 0.
  explicit ParkingFunction(std::vector<int> values);

  std::span<const int> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;
  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  std::vector<int> values_;
};

// All non-decreasing parking functions of length n, lexicographically.
std::vector<ParkingFunction> parking_functions(int n);

// Flattens the up-slopes of an irreducible path into one slope: a jumping
// step repeats the previous image value, any other step maps to
// weight + shift (+1 in R).
ParkingFunction to_single_slope(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

// Insertion along a single all-L slope: step i jumps iff v_i == v_{i-1}
// (always for i = 1), otherwise lands at distance v_i - 1 from the right.
Permutation parking_to_123avoiding(const ParkingFunction& pf);

enum class NotInImageReason { NotUpDown, Contains1234, BotNotDyck, FactorMismatch, SearchExhausted };

std::string to_string(NotInImageReason r);

class NotInImage : public DomainError {
 public:
  NotInImage(NotInImageReason reason, const std::string& detail);
  NotInImageReason reason() const noexcept { return reason_; }

 private:
  NotInImageReason reason_;
};

// Several weightings map to sigma. Only possible under a split rule for
// which the map is not injective; under CeilHalf it is an InternalError.
class AmbiguousPreimage : public DomainError {
 public:
  AmbiguousPreimage(const std::string& what, std::vector<WeightedDyckPath> candidates)
      : DomainError(what), candidates_(std::move(candidates)) {}
  const std::vector<WeightedDyckPath>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<WeightedDyckPath> candidates_;
};

// Preimage under beta by pruned search: weights are assigned left to right
// and every Up (Down) step is checked against the target bottom (top) word
// as soon as the weights deciding its insertion are known. Throws
// NotInImage when sigma has no preimage; two preimages raise
// AmbiguousPreimage or, under CeilHalf, InternalError.
WeightedDyckPath invert(const Permutation& sigma, SplitRule rule = SplitRule::CeilHalf);
WeightedDyckPath invert(const AlternatingPermutation& sigma,
                        SplitRule rule = SplitRule::CeilHalf);

// Oracle for invert: tries every valid weighting of the path read off the
// bottom letters. Throws DomainError when the semilength exceeds max_n.
WeightedDyckPath invert_brute(const Permutation& sigma, int max_n = 7,
                              SplitRule rule = SplitRule::CeilHalf);

}  // namespace dyckperm
