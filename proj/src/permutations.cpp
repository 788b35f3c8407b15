#include "dyckperm/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dyckperm {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = static_cast<int>(one_line_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("not a permutation of 1.." + std::to_string(n) + ": " +
                        dyckperm::to_string(one_line_));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> v(size);
  for (int i = 0; i < size; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  std::vector<int> v;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int x = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw ParseError("malformed permutation entry '" + std::string(field) + "'");
    }
    v.push_back(x);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("trailing comma in permutation");
  }
  try {
    return Permutation(std::move(v));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string Permutation::to_string() const { return dyckperm::to_string(one_line_); }

std::string to_string(std::span<const int> letters, char sep) {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(letters[i]);
  }
  return s;
}

PartialWord::PartialWord(std::vector<int> letters, int ambient)
    : letters_(std::move(letters)), ambient_(ambient) {
  std::vector<bool> seen(std::max(ambient, 0) + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > ambient) {
      throw DomainError("letter " + std::to_string(v) + " outside 1.." + std::to_string(ambient));
    }
    if (seen[v]) throw DomainError("repeated letter " + std::to_string(v));
    seen[v] = true;
  }
}

AlternatingPermutation::AlternatingPermutation(Permutation perm) : perm_(std::move(perm)) {
  if (!is_up_down(perm_)) throw DomainError("not up-down: " + perm_.to_string());
}

PartialWord AlternatingPermutation::bot() const {
  std::vector<int> w;
  for (std::size_t i = 0; i < perm_.size(); i += 2) w.push_back(perm_.values()[i]);
  return PartialWord(std::move(w), static_cast<int>(perm_.size()));
}

PartialWord AlternatingPermutation::top() const {
  std::vector<int> w;
  for (std::size_t i = 1; i < perm_.size(); i += 2) w.push_back(perm_.values()[i]);
  return PartialWord(std::move(w), static_cast<int>(perm_.size()));
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  const auto v = p.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i + 1));
  }
  return d;
}

bool is_up_down(const Permutation& p) {
  const auto v = p.values();
  if (v.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    // position i+1 is a descent exactly when it is even
    if ((v[i] > v[i + 1]) != (i % 2 == 1)) return false;
  }
  return true;
}

int lis_length(std::span<const int> word) {
  std::vector<int> tails;
  for (int x : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

bool avoids_1234(const Permutation& p) { return lis_length(p.values()) <= 3; }

bool avoids_123_word(std::span<const int> word) { return lis_length(word) <= 2; }

Permutation schutzenberger(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n + 1 - p.values()[n - 1 - i];
  return Permutation(std::move(v));
}

PartialWord schutzenberger_word(std::span<const int> letters, int ambient) {
  std::vector<int> v(letters.size());
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int x = letters[n - 1 - i];
    if (x < 1 || x > ambient) {
      throw DomainError("letter " + std::to_string(x) + " outside 1.." + std::to_string(ambient));
    }
    v[i] = ambient + 1 - x;
  }
  return PartialWord(std::move(v), ambient);
}

Permutation shifted_concat(const Permutation& sigma, const Permutation& tau) {
  const int shift = static_cast<int>(tau.size());
  std::vector<int> v;
  v.reserve(sigma.size() + tau.size());
  for (int x : sigma.values()) v.push_back(x + shift);
  v.insert(v.end(), tau.values().begin(), tau.values().end());
  return Permutation(std::move(v));
}

CriteriaBreakdown criteria_borie(const Permutation& sigma) {
  const auto v = sigma.values();
  const std::size_t N = v.size();
  if (N % 2 != 0) throw DomainError("criteria need an even size, got " + std::to_string(N));
  std::vector<int> bot, top;
  for (std::size_t i = 0; i < N; ++i) (i % 2 == 0 ? bot : top).push_back(v[i]);

  CriteriaBreakdown c;
  c.c1 = avoids_123_word(top);
  c.c2 = avoids_123_word(bot);

  c.c3 = true;
  for (std::size_t k = 0; k < N && c.c3; k += 2) {
    for (std::size_t t = 1; t < k; t += 2) {
      if (v[t] < v[k]) {
        c.c3 = false;
        break;
      }
    }
  }

  c.c4 = true;
  int min_bot_left = static_cast<int>(N) + 1;
  for (std::size_t k = 0; k < N && c.c4; k += 2) {
    if (min_bot_left < v[k]) {
      int prev = static_cast<int>(N) + 1;
      for (std::size_t t = k + 1; t < N; t += 2) {
        if (v[t] <= v[k]) continue;
        if (v[t] > prev) {
          c.c4 = false;
          break;
        }
        prev = v[t];
      }
    }
    min_bot_left = std::min(min_bot_left, v[k]);
  }
  return c;
}

AlternatingPermutation assemble(std::span<const int> bot, std::span<const int> top) {
  if (bot.size() != top.size()) {
    throw DomainError("bot and top differ in length (" + std::to_string(bot.size()) + " vs " +
                      std::to_string(top.size()) + ")");
  }
  std::vector<int> v;
  v.reserve(2 * bot.size());
  for (std::size_t i = 0; i < bot.size(); ++i) {
    v.push_back(bot[i]);
    v.push_back(top[i]);
  }
  Permutation p;
  try {
    p = Permutation(std::move(v));
  } catch (const DomainError&) {
    throw DomainError("bot " + to_string(bot) + " and top " + to_string(top) +
                      " do not partition 1.." + std::to_string(2 * bot.size()));
  }
  return AlternatingPermutation(std::move(p));
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> order(word.begin(), word.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw DomainError("cannot standardize a word with repeated letters");
  }
  std::vector<int> v;
  v.reserve(word.size());
  for (int x : word) {
    v.push_back(static_cast<int>(std::lower_bound(order.begin(), order.end(), x) - order.begin()) + 1);
  }
  return Permutation(std::move(v));
}

A2nStream::A2nStream(int n)
    : size_(2 * n), values_(2 * n, 0), used_(2 * n + 1, false), tails_(2 * n + 1) {
  if (n < 0) throw DomainError("negative semilength");
}

bool A2nStream::admissible(int pos, int value) const {
  if (used_[value]) return false;
  if (pos > 0) {
    const bool want_rise = pos % 2 == 1;  // positions 2, 4, ... (1-based) are peaks
    if (want_rise != (value > values_[pos - 1])) return false;
  }
  const Tails& t = tails_[pos];
  // would extend the longest increasing subsequence to 4
  return !(t.len == 3 && value > t.v[2]);
}

bool A2nStream::advance() {
  int pos;
  if (!started_) {
    started_ = true;
    if (size_ == 0) return true;
    pos = 0;
  } else {
    if (size_ == 0) return false;
    pos = size_ - 1;
    used_[values_[pos]] = false;
  }
  while (pos >= 0) {
    int v = values_[pos] + 1;
    while (v <= size_ && !admissible(pos, v)) ++v;
    if (v > size_) {
      values_[pos] = 0;
      if (--pos >= 0) used_[values_[pos]] = false;
      continue;
    }
    values_[pos] = v;
    used_[v] = true;
    Tails t = tails_[pos];
    auto it = std::lower_bound(t.v.begin(), t.v.begin() + t.len, v);
    *it = v;
    if (it == t.v.begin() + t.len) ++t.len;
    tails_[pos + 1] = t;
    if (pos == size_ - 1) return true;
    ++pos;
  }
  return false;
}

std::optional<AlternatingPermutation> A2nStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return AlternatingPermutation(Permutation(values_));
}

A2nStream enumerate_A2n(int n) { return A2nStream(n); }

std::vector<AlternatingPermutation> collect_A2n(int n) {
  std::vector<AlternatingPermutation> out;
  A2nStream s(n);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace dyckperm
