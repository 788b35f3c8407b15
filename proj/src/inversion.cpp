#include <algorithm>

#include "dyckperm/bijection.hpp"
#include "insertion_plan.hpp"

namespace dyckperm {

std::string to_string(NotInImageReason r) {
  switch (r) {
    case NotInImageReason::NotUpDown: return "not up-down";
    case NotInImageReason::Contains1234: return "contains 1234";
    case NotInImageReason::BotNotDyck: return "bottom letters do not form a Dyck path";
    case NotInImageReason::FactorMismatch: return "blocks do not match the irreducible factors";
    case NotInImageReason::SearchExhausted: return "no weighting maps to it";
  }
  return "unknown";
}

NotInImage::NotInImage(NotInImageReason reason, const std::string& detail)
    : DomainError("not in image: " + to_string(reason) + (detail.empty() ? "" : ": " + detail)),
      reason_(reason) {}

namespace {

// Weight search for one irreducible factor. Positions and letters are local
// to the factor (1..m).
class FactorSearch {
 public:
  FactorSearch(const DyckPath& path, std::span<const int> bot, std::span<const int> top,
               SplitRule rule)
      : path_(path), m_(static_cast<int>(path.size())), h_(heights(path)) {
    const auto decomp = slopes(path);
    const auto split = split_LR(decomp, rule);
    const std::size_t k = decomp.k();
    up_mem_.assign(m_ + 2, Membership::L);
    down_mem_.assign(m_ + 2, Membership::L);
    shift_.assign(m_ + 2, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (int u = decomp.up[i].start; u <= decomp.up[i].last(); ++u) up_mem_[u] = split.membership[i];
      // The mirror numbers down-slopes from the right.
      for (int d = decomp.down[i].start; d <= decomp.down[i].last(); ++d) {
        down_mem_[d] = split.membership[k - 1 - i];
      }
    }
    int downs = 0;
    for (int j = 1; j <= m_; ++j) {
      if (path.is_up(j)) shift_[j] = downs;
      else ++downs;
    }
    int ups = 0;
    for (int j = m_; j >= 1; --j) {
      if (path.is_up(j)) ++ups;
      else shift_[j] = ups;
    }

    // Already-inserted letters that must sit on the far side of each new one.
    std::vector<int> pos(m_ + 1, -1);
    for (std::size_t i = 0; i < bot.size(); ++i) pos[bot[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < top.size(); ++i) pos[top[i]] = static_cast<int>(i);
    required_.assign(m_ + 1, 0);
    inserted_.assign(m_ + 1, 0);
    for (int j = 1; j <= m_; ++j) {
      if (path.is_up(j)) {
        for (int v = 1; v < j; ++v) {
          if (!path.is_up(v)) continue;
          ++inserted_[j];
          if (pos[v] > pos[j]) ++required_[j];
        }
      } else {
        for (int v = j + 1; v <= m_; ++v) {
          if (path.is_up(v)) continue;
          ++inserted_[j];
          if (pos[v] < pos[j]) ++required_[j];
        }
      }
    }
    w_.assign(m_ + 2, 0);
  }

  std::vector<std::vector<int>> solve(std::size_t limit) {
    solutions_.clear();
    limit_ = limit;
    descend(1);
    return solutions_;
  }

 private:
  bool is_up(int j) const { return path_.is_up(j); }

  bool check_up(int u) const {
    const Membership mem = up_mem_[u];
    int bound;
    if (mem == Membership::L) {
      if (u == 1) bound = 0;
      else if (is_up(u - 1)) bound = w_[u - 1];
      else bound = h_[u - 1] - w_[u - 1];
    } else {
      const int cap = h_[u - 1];
      bound = is_up(u + 1) ? std::min(cap, w_[u + 1]) : std::min(cap, h_[u] - w_[u + 1]);
    }
    if (w_[u] == bound) return required_[u] == inserted_[u];
    return w_[u] + shift_[u] - (mem == Membership::L ? 1 : 0) == required_[u];
  }

  // Mirror image of check_up: scanned right to left, distance from the left,
  // jumps land at the right end.
  bool check_down(int d) const {
    const Membership mem = down_mem_[d];
    int bound;
    if (mem == Membership::L) {
      if (d == m_) bound = 0;
      else if (!is_up(d + 1)) bound = w_[d + 1];
      else bound = h_[d] - w_[d + 1];
    } else {
      const int cap = h_[d];
      bound = !is_up(d - 1) ? std::min(cap, w_[d - 1]) : std::min(cap, h_[d - 1] - w_[d - 1]);
    }
    if (w_[d] == bound) return required_[d] == inserted_[d];
    return w_[d] + shift_[d] - (mem == Membership::L ? 1 : 0) == required_[d];
  }

  // Every check whose inputs became complete when step j was placed.
  bool placed_ok(int j) const {
    if (is_up(j)) {
      if (up_mem_[j] == Membership::L && !check_up(j)) return false;
    } else {
      if (down_mem_[j] == Membership::R && !check_down(j)) return false;
      if (j == m_ && down_mem_[j] == Membership::L && !check_down(j)) return false;
    }
    if (j > 1) {
      const int i = j - 1;
      if (is_up(i)) {
        if (up_mem_[i] == Membership::R && !check_up(i)) return false;
      } else if (down_mem_[i] == Membership::L && !check_down(i)) {
        return false;
      }
    }
    return true;
  }

  bool pair_ok(int j) const {
    if (j == 1) return true;
    const int a = w_[j - 1], b = w_[j];
    const bool ua = is_up(j - 1), ub = is_up(j);
    if (ua && ub) return a <= b;
    if (!ua && !ub) return a >= b;
    if (ua) return a + b <= h_[j - 1];
    return a + b >= h_[j - 1];
  }

  void descend(int j) {
    if (solutions_.size() >= limit_) return;
    if (j > m_) {
      solutions_.emplace_back(w_.begin() + 1, w_.begin() + 1 + m_);
      return;
    }
    const int cap = std::min(h_[j - 1], h_[j]);
    for (int v = 0; v <= cap; ++v) {
      w_[j] = v;
      if (pair_ok(j) && placed_ok(j)) descend(j + 1);
    }
    w_[j] = 0;
  }

  const DyckPath& path_;
  int m_;
  std::vector<int> h_;
  std::vector<Membership> up_mem_, down_mem_;
  std::vector<int> shift_;
  std::vector<int> required_, inserted_;
  std::vector<int> w_;  // 1-based
  std::vector<std::vector<int>> solutions_;
  std::size_t limit_ = 2;
};

struct FactorRange {
  int offset;
  int length;
};

std::vector<FactorRange> factor_ranges(const DyckPath& path) {
  std::vector<FactorRange> out;
  const auto h = heights(path);
  int start = 0;
  for (int i = 1; i < static_cast<int>(h.size()); ++i) {
    if (h[i] == 0) {
      out.push_back({start, i - start});
      start = i;
    }
  }
  return out;
}

// Reads the Up-step positions off the odd-position letters.
DyckPath path_from_bot(const Permutation& sigma) {
  const auto v = sigma.values();
  std::vector<bool> up(v.size() + 1, false);
  for (std::size_t i = 0; i < v.size(); i += 2) up[v[i]] = true;
  std::vector<Step> steps;
  for (std::size_t j = 1; j <= v.size(); ++j) steps.push_back(up[j] ? Step::Up : Step::Down);
  try {
    return DyckPath(std::move(steps));
  } catch (const DomainError&) {
    std::vector<int> bot;
    for (std::size_t i = 0; i < v.size(); i += 2) bot.push_back(v[i]);
    throw NotInImage(NotInImageReason::BotNotDyck, "bottom letters " + to_string(bot));
  }
}

}  // namespace

WeightedDyckPath invert(const Permutation& sigma, SplitRule rule) {
  if (!is_up_down(sigma)) throw NotInImage(NotInImageReason::NotUpDown, sigma.to_string());
  if (!avoids_1234(sigma)) throw NotInImage(NotInImageReason::Contains1234, sigma.to_string());
  const DyckPath path = path_from_bot(sigma);
  const auto v = sigma.values();
  const int N = static_cast<int>(v.size());

  std::vector<int> weights;
  weights.reserve(N);
  for (const FactorRange& f : factor_ranges(path)) {
    // beta places the leftmost factor's image rightmost, unshifted.
    const int begin = N - f.offset - f.length;
    std::vector<int> bot, top;
    for (int i = 0; i < f.length; ++i) {
      const int x = v[begin + i] - f.offset;
      if (x < 1 || x > f.length) {
        throw NotInImage(NotInImageReason::FactorMismatch, sigma.to_string());
      }
      (i % 2 == 0 ? bot : top).push_back(x);
    }
    const std::span<const Step> all = path.steps();
    const DyckPath local(std::vector<Step>(all.begin() + f.offset, all.begin() + f.offset + f.length));
    auto solutions = FactorSearch(local, bot, top, rule).solve(2);
    if (solutions.empty()) throw NotInImage(NotInImageReason::SearchExhausted, sigma.to_string());
    if (solutions.size() > 1) {
      const std::string msg = "two preimages for factor " + local.to_string() + " of " +
                              sigma.to_string() + ": " + to_string(solutions[0]) + " and " +
                              to_string(solutions[1]);
      if (rule == SplitRule::CeilHalf) throw InternalError(msg);
      throw AmbiguousPreimage(msg, {WeightedDyckPath(local, solutions[0]),
                                    WeightedDyckPath(local, solutions[1])});
    }
    weights.insert(weights.end(), solutions[0].begin(), solutions[0].end());
  }

  WeightedDyckPath wd(path, std::move(weights));
  if (beta(wd, rule).perm() != sigma) {
    throw InternalError("search result " + serialize_path(wd) + " does not map back to " +
                        sigma.to_string());
  }
  return wd;
}

WeightedDyckPath invert(const AlternatingPermutation& sigma, SplitRule rule) {
  return invert(sigma.perm(), rule);
}

WeightedDyckPath invert_brute(const Permutation& sigma, int max_n, SplitRule rule) {
  if (sigma.size() % 2 != 0) throw NotInImage(NotInImageReason::NotUpDown, sigma.to_string());
  const int n = static_cast<int>(sigma.size() / 2);
  if (n > max_n) {
    throw DomainError("semilength " + std::to_string(n) + " exceeds brute-force cap " +
                      std::to_string(max_n));
  }
  const DyckPath path = path_from_bot(sigma);
  const auto v = sigma.values();
  const int N = static_cast<int>(v.size());

  struct FactorPlans {
    FactorRange range;
    detail::InsertionPlan plan;
  };
  std::vector<FactorPlans> factors;
  for (const FactorRange& f : factor_ranges(path)) {
    const std::span<const Step> all = path.steps();
    factors.push_back(
        {f, detail::InsertionPlan(DyckPath(std::vector<Step>(all.begin() + f.offset,
                                                             all.begin() + f.offset + f.length)),
                                  rule)});
  }

  std::vector<WeightedDyckPath> matches;
  std::vector<int> word;
  WeightingStream stream(path);
  while (auto wd = stream.next()) {
    // Cheap reject on the bottom letters before building the full image.
    bool bot_ok = true;
    for (const auto& [f, plan] : factors) {
      detail::run_insertion(plan, wd->weights().subspan(f.offset, f.length), word, nullptr);
      const int begin = N - f.offset - f.length;
      for (std::size_t i = 0; i < word.size(); ++i) {
        if (v[begin + 2 * i] != word[i] + f.offset) {
          bot_ok = false;
          break;
        }
      }
      if (!bot_ok) break;
    }
    if (!bot_ok) continue;
    if (beta(*wd, rule).perm() == sigma) matches.push_back(std::move(*wd));
  }
  if (matches.empty()) throw NotInImage(NotInImageReason::SearchExhausted, sigma.to_string());
  if (matches.size() > 1) {
    const std::string msg = "several preimages of " + sigma.to_string() + ": " +
                            serialize_path(matches[0]) + " and " + serialize_path(matches[1]);
    if (rule == SplitRule::CeilHalf) throw InternalError(msg);
    throw AmbiguousPreimage(msg, std::move(matches));
  }
  return matches.front();
}

}  // namespace dyckperm
