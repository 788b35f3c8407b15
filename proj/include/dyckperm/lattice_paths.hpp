#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyckperm/error.hpp"

namespace dyckperm {

using BigInt = boost::multiprecision::cpp_int;

// Up sorts before Down, so the default vector ordering of steps is the
// canonical enumeration order.
enum class Step : unsigned char { Up = 0, Down = 1 };

constexpr Step opposite(Step s) noexcept {
  return s == Step::Up ? Step::Down : Step::Up;
}

char to_char(Step s) noexcept;

// Sequence of Up/Down steps that starts and ends at height 0 and never dips
// below it. Step positions are 1-based throughout the public API.
class DyckPath {
 public:
  DyckPath() = default;
  // Throws DomainError if `steps` is not a Dyck path.
  explicit DyckPath(std::vector<Step> steps);

  // Parses a word over {U, D}.
  static DyckPath parse(std::string_view text);

  std::size_t size() const noexcept { return steps_.size(); }
  int semilength() const noexcept { return static_cast<int>(steps_.size() / 2); }
  bool empty() const noexcept { return steps_.empty(); }

  Step step(int u) const { return steps_.at(static_cast<std::size_t>(u - 1)); }
  bool is_up(int u) const { return step(u) == Step::Up; }
  std::span<const Step> steps() const noexcept { return steps_; }

  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<Step> steps_;
};

// A Dyck path with one integer weight per step. Construction only checks
// that the lengths agree; whether the weights form an element of WD is
// answered by validate_weighted().
class WeightedDyckPath {
 public:
  WeightedDyckPath() = default;
  WeightedDyckPath(DyckPath path, std::vector<int> weights);

  const DyckPath& path() const noexcept { return path_; }
  std::span<const int> weights() const noexcept { return weights_; }
  int weight(int u) const { return weights_.at(static_cast<std::size_t>(u - 1)); }
  std::size_t size() const noexcept { return weights_.size(); }
  int semilength() const noexcept { return path_.semilength(); }
  bool empty() const noexcept { return weights_.empty(); }

  friend bool operator==(const WeightedDyckPath&, const WeightedDyckPath&) = default;
  friend auto operator<=>(const WeightedDyckPath&, const WeightedDyckPath&) = default;

 private:
  DyckPath path_;
  std::vector<int> weights_;
};

// The five weight conditions.
//   C1  0 <= weight <= lower height
//   C2  weakly increasing along consecutive Up steps
//   C3  weakly decreasing along consecutive Down steps
//   C4  peak of height h: up weight + down weight <= h
//   C5  valley of height h: down weight + up weight >= h
enum class Constraint : int { C1 = 1, C2, C3, C4, C5 };

std::string to_string(Constraint c);

// Pair constraints (C2..C5) are reported at the second step of the pair.
struct Violation {
  Constraint constraint;
  int step;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationResult {
  std::vector<Violation> violations;  // sorted by (step, constraint)
  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

class ValidationError : public DomainError {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct Slope {
  Step kind;
  int start;   // 1-based position of the first step
  int length;
  int last() const noexcept { return start + length - 1; }
  friend bool operator==(const Slope&, const Slope&) = default;
};

// Junction between two slopes. `step` is the last step before the junction,
// `height` the height reached there. For weighted input, `weights` holds the
// weights of the two adjacent steps in reading order.
struct Boundary {
  int step;
  int height;
  std::optional<std::pair<int, int>> weights;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

// Maximal runs. Slopes alternate Up, Down, ... starting with Up and ending
// with Down, so up.size() == down.size() == peaks.size() and
// valleys.size() == k - 1 for k up-slopes (ground returns count as valleys).
struct SlopeDecomposition {
  std::vector<Slope> up;
  std::vector<Slope> down;
  std::vector<Boundary> peaks;
  std::vector<Boundary> valleys;
  std::size_t k() const noexcept { return up.size(); }
};

// Height profile h_0..h_{2n}.
std::vector<int> heights(const DyckPath& path);

// min(h_{u-1}, h_u). Throws std::out_of_range for u outside 1..2n.
int lower_height(const DyckPath& path, int u);

ValidationResult validate_weighted(const WeightedDyckPath& wd);

SlopeDecomposition slopes(const DyckPath& path);
SlopeDecomposition slopes(const WeightedDyckPath& wd);

// Vertical-axis mirror: step j becomes the opposite of step 2n+1-j and
// carries weight 2n+1-j.
WeightedDyckPath reflect(const WeightedDyckPath& wd);
DyckPath reflect(const DyckPath& path);

WeightedDyckPath concat(const WeightedDyckPath& p, const WeightedDyckPath& q);

bool is_irreducible(const DyckPath& path);
std::vector<WeightedDyckPath> factor_irreducible(const WeightedDyckPath& wd);

// All Dyck paths of semilength n in lexicographic order (U < D).
std::vector<DyckPath> dyck_paths(int n);

// Pull-style stream over every valid weighting of one fixed path, in
// lexicographic order of the weight vector. Weights are placed left to right
// and every constraint is checked as soon as both of its steps are placed.
class WeightingStream {
 public:
  explicit WeightingStream(DyckPath path);
  std::optional<WeightedDyckPath> next();

 private:
  bool advance();

  DyckPath path_;
  std::vector<int> heights_;
  std::vector<int> caps_;
  std::vector<int> weights_;
  bool started_ = false;
  bool done_ = false;
};

// WD_{2n} in canonical order: paths lexicographically, then weights.
class WdStream {
 public:
  explicit WdStream(int n);
  std::optional<WeightedDyckPath> next();

 private:
  std::vector<DyckPath> paths_;
  std::size_t index_ = 0;
  std::optional<WeightingStream> current_;
};

WdStream enumerate_wd(int n);
std::vector<WeightedDyckPath> collect_wd(int n);

// |WD_{2n}|, counted without materializing elements.
BigInt count_wd(int n);

// Text form "<steps>;<w1,w2,...>". The weight section may be omitted, in
// which case all-zero weights are tried. Throws ParseError on malformed or
// non-Dyck input and ValidationError when a constraint fails.
WeightedDyckPath parse_path(std::string_view text);
std::string serialize_path(const WeightedDyckPath& wd);

}  // namespace dyckperm
