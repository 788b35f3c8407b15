#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyckperm/error.hpp"

namespace dyckperm {

// One-line notation over {1..N}. Positions are 1-based.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless `one_line` is a rearrangement of 1..N.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int size);
  // Comma-separated one-line text, e.g. "3,6,4,5,1,2".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return one_line_.size(); }
  bool empty() const noexcept { return one_line_.empty(); }
  int at(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> values() const noexcept { return one_line_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// Distinct letters from {1..N} where not every letter has to appear.
class PartialWord {
 public:
  PartialWord() = default;
  // Throws DomainError on a repeated letter or one outside 1..ambient.
  PartialWord(std::vector<int> letters, int ambient);

  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  int ambient() const noexcept { return ambient_; }

  friend bool operator==(const PartialWord&, const PartialWord&) = default;

 private:
  std::vector<int> letters_;
  int ambient_ = 0;
};

std::string to_string(std::span<const int> letters, char sep = ',');

// Permutation of 1..2n with s1 < s2 > s3 < s4 > ... . Bottom letters sit at
// odd positions, top letters at even positions.
class AlternatingPermutation {
 public:
  AlternatingPermutation() = default;
  // Throws DomainError unless `perm` has even size and the up-down shape.
  explicit AlternatingPermutation(Permutation perm);

  const Permutation& perm() const noexcept { return perm_; }
  int semilength() const noexcept { return static_cast<int>(perm_.size() / 2); }
  PartialWord bot() const;
  PartialWord top() const;
  std::string to_string() const { return perm_.to_string(); }

  friend bool operator==(const AlternatingPermutation&, const AlternatingPermutation&) = default;
  friend auto operator<=>(const AlternatingPermutation&, const AlternatingPermutation&) = default;

 private:
  Permutation perm_;
};

// The four conditions characterising A_2n(1234), evaluated on an arbitrary
// permutation of even size.
//   c1  Top avoids 123
//   c2  Bot avoids 123
//   c3  every top value smaller than a bottom letter k lies to the right of k
//   c4  if a bottom letter k has a smaller bottom letter to its left, the top
//       values greater than k lying to its right appear in decreasing order
struct CriteriaBreakdown {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
  bool all() const noexcept { return c1 && c2 && c3 && c4; }
  friend bool operator==(const CriteriaBreakdown&, const CriteriaBreakdown&) = default;
};

std::vector<int> descent_set(const Permutation& p);
bool is_up_down(const Permutation& p);

// Longest strictly increasing subsequence, by patience sorting.
int lis_length(std::span<const int> word);
bool avoids_1234(const Permutation& p);
bool avoids_123_word(std::span<const int> word);
inline bool avoids_123_word(const PartialWord& w) { return avoids_123_word(w.letters()); }

// Reverse the alphabet, then the reading order.
Permutation schutzenberger(const Permutation& p);
// Same on a partial word over 1..ambient. Throws DomainError when a letter
// falls outside 1..ambient.
PartialWord schutzenberger_word(std::span<const int> letters, int ambient);
inline PartialWord schutzenberger_word(const PartialWord& w, int ambient) {
  return schutzenberger_word(w.letters(), ambient);
}

// sigma . tau = (sigma shifted up by |tau|) followed by tau.
Permutation shifted_concat(const Permutation& sigma, const Permutation& tau);

// Throws DomainError on odd size.
CriteriaBreakdown criteria_borie(const Permutation& sigma);

// Interleaves bot (odd positions) and top (even positions). Throws
// DomainError if the letters do not partition 1..2n or the result is not
// up-down.
AlternatingPermutation assemble(std::span<const int> bot, std::span<const int> top);

// Replaces letters by their ranks 1..|w|.
Permutation standardize(std::span<const int> word);

// A_2n(1234) in lexicographic one-line order. Backtracks over positions,
// pruning on the up-down shape and on the running LIS (never above 3).
class A2nStream {
 public:
  explicit A2nStream(int n);
  std::optional<AlternatingPermutation> next();

 private:
  struct Tails {
    std::array<int, 3> v{};
    int len = 0;
  };
  bool advance();
  bool admissible(int pos, int value) const;

  int size_;
  std::vector<int> values_;
  std::vector<bool> used_;
  std::vector<Tails> tails_;  // tails_[i]: patience piles after i letters
  bool started_ = false;
  bool done_ = false;
};

A2nStream enumerate_A2n(int n);
std::vector<AlternatingPermutation> collect_A2n(int n);

}  // namespace dyckperm
