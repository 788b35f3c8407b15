#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckperm/bijection.hpp"

namespace dyckperm {

// Each suite checks one family of properties exhaustively up to a size.
enum class SuiteId {
  Counts,
  Bijectivity,
  Roundtrip,
  Schutzenberger,
  Product,
  Statistic,
  Criteria,
  InsertionLemma,
  Transformation,
  Parking,
  TopwordEquivalence,
};

inline constexpr SuiteId kAllSuites[] = {
    SuiteId::Counts,         SuiteId::Bijectivity,    SuiteId::Roundtrip,
    SuiteId::Schutzenberger, SuiteId::Product,        SuiteId::Statistic,
    SuiteId::Criteria,       SuiteId::InsertionLemma, SuiteId::Transformation,
    SuiteId::Parking,        SuiteId::TopwordEquivalence,
};

std::string to_string(SuiteId id);
// Throws DomainError for an unknown name.
SuiteId parse_suite(std::string_view name);
// Size cap each suite uses under run_all.
int default_max_n(SuiteId id);

enum class Verdict { Pass, Fail, Aborted };
std::string to_string(Verdict v);

// Inputs and outputs use the canonical text forms, so a failure can be
// pasted straight back into the CLI.
struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
  friend auto operator<=>(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  SuiteId suite = SuiteId::Counts;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t checked = 0;
  std::vector<std::pair<int, std::uint64_t>> checked_by_size;
  std::vector<Failure> failures;  // first kMaxRecordedFailures, sorted
  std::uint64_t failure_count = 0;
  std::vector<std::string> details;
  std::chrono::milliseconds elapsed{0};
  Verdict verdict = Verdict::Pass;

  static constexpr std::size_t kMaxRecordedFailures = 25;
};

struct RunOptions {
  SplitRule rule = SplitRule::CeilHalf;
  unsigned threads = 1;
  // Enables the n = 7 permutation-side count.
  bool stretch = false;
  // Polled between instances; a set flag yields an Aborted report.
  const std::atomic<bool>* cancel = nullptr;
};

VerificationReport run_suite(SuiteId id, int max_n, const RunOptions& options = {});

// Every suite at min(max_n, its default cap).
std::vector<VerificationReport> run_all(int max_n, const RunOptions& options = {});

// JSON object on one line: suite, nRange, checked, checkedBySize, failures,
// failureCount, details, elapsedMs, verdict.
std::string to_record(const VerificationReport& report);

// Top word scanned directly over the Down steps, right to left, with the
// mirrored jump rules: distances count from the left and jumps land at the
// right end. Agrees with S_2n(ins(reflect(wd))).
PartialWord topword_direct(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

// Per-instance checks behind the suites; nullopt means the property held.
std::optional<Failure> check_roundtrip(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);
std::optional<Failure> check_image(const WeightedDyckPath& wd, SplitRule rule = SplitRule::CeilHalf);

// The 42 permutations of A_6(1234), written out by hand, in
// lexicographic order.
const std::vector<std::string>& reference_a6();

// 1, 1, 5, 42, 462, 6006, 87516, 1385670.
const std::vector<std::uint64_t>& reference_counts();

}  // namespace dyckperm
