#include "dyckperm/bijection.hpp"

#include <algorithm>

#include "insertion_plan.hpp"

namespace dyckperm {

std::string to_string(SplitRule rule) {
  return rule == SplitRule::CeilHalf ? "ceil" : "floor";
}

std::string to_string(Membership m) { return m == Membership::L ? "L" : "R"; }

SplitAssignment split_LR(const SlopeDecomposition& decomp, SplitRule rule) {
  const std::size_t k = decomp.k();
  const std::size_t left = rule == SplitRule::CeilHalf ? (k + 1) / 2 : k / 2;
  SplitAssignment s;
  s.rule = rule;
  s.membership.assign(k, Membership::R);
  std::fill_n(s.membership.begin(), left, Membership::L);
  return s;
}

namespace detail {

InsertionPlan::InsertionPlan(DyckPath p, SplitRule rule) : path(std::move(p)) {
  h = heights(path);
  const auto decomp = slopes(path);
  up = decomp.up;
  membership = split_LR(decomp, rule).membership;
  shift.reserve(up.size());
  int ups_seen = 0;
  for (const Slope& s : up) {
    shift.push_back((s.start - 1) - ups_seen);
    ups_seen += s.length;
  }
}

int bound_at(const DyckPath& p, const std::vector<int>& h, std::span<const int> w, int u,
             Membership membership) {
  const int m = static_cast<int>(p.size());
  if (membership == Membership::L) {
    if (u == 1) return 0;
    if (p.is_up(u - 1)) return w[u - 2];
    return h[u - 1] - w[u - 2];  // valley height minus entering Down weight
  }
  const int cap = h[u - 1];  // lower height of an Up step
  if (u < m && p.is_up(u + 1)) return std::min(cap, w[u]);
  return std::min(cap, h[u] - w[u]);  // peak height minus leaving Down weight
}

void run_insertion(const InsertionPlan& plan, std::span<const int> w, std::vector<int>& word,
                   InsertionTrace* trace) {
  word.clear();
  for (std::size_t si = 0; si < plan.up.size(); ++si) {
    const Slope& slope = plan.up[si];
    const Membership mem = plan.membership[si];
    const int shift = plan.shift[si];
    for (int u = slope.start; u <= slope.last(); ++u) {
      const int bound = bound_at(plan.path, plan.h, w, u, mem);
      const int weight = w[u - 1];
      const bool jumped = weight == bound;
      int dist = 0;
      if (jumped) {
        word.insert(word.begin(), u);
      } else {
        dist = weight + shift - (mem == Membership::L ? 1 : 0);
        if (dist < 0 || dist > static_cast<int>(word.size())) {
          InsertionTrace t = trace ? *trace : InsertionTrace{};
          t.steps.push_back({u, weight, static_cast<int>(si) + 1, mem, shift, bound, false, dist, word});
          throw InsertionOverflow("insertion overflow at step " + std::to_string(u) + ": distance " +
                                      std::to_string(dist) + " outside [0, " +
                                      std::to_string(word.size()) + "]",
                                  std::move(t));
        }
        word.insert(word.end() - dist, u);
      }
      if (trace) {
        trace->steps.push_back({u, weight, static_cast<int>(si) + 1, mem, shift, bound, jumped,
                                jumped ? std::nullopt : std::optional<int>(dist), word});
      }
    }
  }
}

}  // namespace detail

namespace {

std::vector<int> top_from_reflected(std::span<const int> reflected_word, int ambient) {
  const PartialWord top = schutzenberger_word(reflected_word, ambient);
  return std::vector<int>(top.letters().begin(), top.letters().end());
}

}  // namespace

int jump_bounds(const WeightedDyckPath& wd, int u, Membership membership) {
  if (u < 1 || static_cast<std::size_t>(u) > wd.size() || !wd.path().is_up(u)) {
    throw DomainError("step " + std::to_string(u) + " is not an Up step");
  }
  return detail::bound_at(wd.path(), heights(wd.path()), wd.weights(), u, membership);
}

bool jumps(const WeightedDyckPath& wd, int u, Membership membership) {
  return wd.weight(u) == jump_bounds(wd, u, membership);
}

InsertionResult ins(const WeightedDyckPath& wd, SplitRule rule) {
  InsertionResult r;
  detail::run_insertion(detail::InsertionPlan(wd.path(), rule), wd.weights(), r.word, &r.trace);
  return r;
}

std::vector<int> ins_word(const WeightedDyckPath& wd, SplitRule rule) {
  std::vector<int> word;
  word.reserve(wd.size() / 2);
  detail::run_insertion(detail::InsertionPlan(wd.path(), rule), wd.weights(), word, nullptr);
  return word;
}

namespace {

FactorTrace beta_factor(const WeightedDyckPath& wd, SplitRule rule, bool record) {
  if (!is_irreducible(wd.path())) {
    throw DomainError("not irreducible: " + serialize_path(wd));
  }
  const int ambient = static_cast<int>(wd.size());
  FactorTrace ft;
  std::vector<int> bot, reflected;
  if (record) {
    auto b = ins(wd, rule);
    auto t = ins(reflect(wd), rule);
    bot = std::move(b.word);
    reflected = std::move(t.word);
    ft.bottom = std::move(b.trace);
    ft.top = std::move(t.trace);
    ft.factor = wd;
  } else {
    bot = ins_word(wd, rule);
    reflected = ins_word(reflect(wd), rule);
  }
  const auto top = top_from_reflected(reflected, ambient);
  try {
    ft.image = assemble(bot, top);
  } catch (const DomainError& e) {
    throw InternalError("assembly failed for " + serialize_path(wd) + ": bot " + to_string(bot) +
                        ", top " + to_string(top) + " (" + e.what() + ")");
  }
  return ft;
}

}  // namespace

AlternatingPermutation beta_irreducible(const WeightedDyckPath& wd, SplitRule rule) {
  return beta_factor(wd, rule, false).image;
}

BetaResult beta_traced(const WeightedDyckPath& wd, SplitRule rule) {
  BetaResult r;
  Permutation acc;
  for (const auto& f : factor_irreducible(wd)) {
    r.factors.push_back(beta_factor(f, rule, true));
    acc = shifted_concat(r.factors.back().image.perm(), acc);
  }
  r.image = AlternatingPermutation(std::move(acc));
  return r;
}

AlternatingPermutation beta(const WeightedDyckPath& wd, SplitRule rule) {
  Permutation acc;
  for (const auto& f : factor_irreducible(wd)) {
    acc = shifted_concat(beta_irreducible(f, rule).perm(), acc);
  }
  return AlternatingPermutation(std::move(acc));
}

ParkingFunction::ParkingFunction(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const int v = values_[i];
    if (v < 0 || v > static_cast<int>(i) || (i > 0 && v < values_[i - 1])) {
      throw DomainError("not a non-decreasing parking function: " + to_string(values_));
    }
  }
}

std::vector<ParkingFunction> parking_functions(int n) {
  std::vector<ParkingFunction> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    const int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v <= i; ++v) {
      cur.push_back(v);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ParkingFunction to_single_slope(const WeightedDyckPath& wd, SplitRule rule) {
  if (!is_irreducible(wd.path())) throw DomainError("not irreducible: " + serialize_path(wd));
  const auto trace = ins(wd, rule).trace;
  std::vector<int> v;
  v.reserve(trace.steps.size());
  for (const auto& s : trace.steps) {
    if (s.jumped) {
      v.push_back(v.empty() ? 0 : v.back());
    } else {
      v.push_back(s.weight + s.shift + (s.membership == Membership::R ? 1 : 0));
    }
  }
  try {
    return ParkingFunction(std::move(v));
  } catch (const DomainError& e) {
    throw InternalError("single-slope image of " + serialize_path(wd) + " is invalid: " + e.what());
  }
}

Permutation parking_to_123avoiding(const ParkingFunction& pf) {
  const auto v = pf.values();
  std::vector<int> word;
  word.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int label = static_cast<int>(i) + 1;
    if (i == 0 || v[i] == v[i - 1]) {
      word.insert(word.begin(), label);
    } else {
      word.insert(word.end() - (v[i] - 1), label);
    }
  }
  return Permutation(std::move(word));
}

}  // namespace dyckperm
