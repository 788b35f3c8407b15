#include "dyckperm/lattice_paths.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace dyckperm {

namespace {

bool is_dyck(std::span<const Step> steps) {
  int h = 0;
  for (Step s : steps) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

// Pair condition between consecutive steps (a, wa) -> (b, wb), meeting at
// height `h`. Returns the violated constraint, if any.
std::optional<Constraint> pair_violation(Step a, int wa, Step b, int wb, int h) {
  if (a == Step::Up && b == Step::Up) {
    if (wa > wb) return Constraint::C2;
  } else if (a == Step::Down && b == Step::Down) {
    if (wa < wb) return Constraint::C3;
  } else if (a == Step::Up) {
    if (wa + wb > h) return Constraint::C4;
  } else {
    if (wa + wb < h) return Constraint::C5;
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

char to_char(Step s) noexcept { return s == Step::Up ? 'U' : 'D'; }

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (!is_dyck(steps_)) throw DomainError("not a Dyck path");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' at step " + std::to_string(i + 1));
    }
  }
  if (!is_dyck(steps)) throw ParseError("not a Dyck path");
  return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(to_char(st));
  return s;
}

WeightedDyckPath::WeightedDyckPath(DyckPath path, std::vector<int> weights)
    : path_(std::move(path)), weights_(std::move(weights)) {
  if (weights_.size() != path_.size()) {
    throw DomainError("length mismatch: " + std::to_string(path_.size()) + " steps, " +
                      std::to_string(weights_.size()) + " weights");
  }
}

std::string to_string(Constraint c) { return "C" + std::to_string(static_cast<int>(c)); }

namespace {
std::string violation_message(const std::vector<Violation>& v) {
  if (v.empty()) return "no violation";
  return to_string(v.front().constraint) + " violated at step " + std::to_string(v.front().step);
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : DomainError(violation_message(violations)), violations_(std::move(violations)) {}

std::vector<int> heights(const DyckPath& path) {
  std::vector<int> h;
  h.reserve(path.size() + 1);
  h.push_back(0);
  for (Step s : path.steps()) h.push_back(h.back() + (s == Step::Up ? 1 : -1));
  return h;
}

int lower_height(const DyckPath& path, int u) {
  if (u < 1 || static_cast<std::size_t>(u) > path.size()) {
    throw std::out_of_range("step index " + std::to_string(u) + " outside 1.." +
                            std::to_string(path.size()));
  }
  const auto h = heights(path);
  return std::min(h[u - 1], h[u]);
}

ValidationResult validate_weighted(const WeightedDyckPath& wd) {
  const DyckPath& p = wd.path();
  const auto h = heights(p);
  const int m = static_cast<int>(p.size());
  ValidationResult r;
  for (int u = 1; u <= m; ++u) {
    const int w = wd.weight(u);
    if (w < 0 || w > std::min(h[u - 1], h[u])) r.violations.push_back({Constraint::C1, u});
    if (u > 1) {
      if (auto c = pair_violation(p.step(u - 1), wd.weight(u - 1), p.step(u), w, h[u - 1])) {
        r.violations.push_back({*c, u});
      }
    }
  }
  // Per-step order already holds; C1 precedes the pair constraint at a step.
  return r;
}

SlopeDecomposition slopes(const DyckPath& path) {
  SlopeDecomposition d;
  const auto h = heights(path);
  const int m = static_cast<int>(path.size());
  int u = 1;
  while (u <= m) {
    const Step kind = path.step(u);
    int end = u;
    while (end < m && path.step(end + 1) == kind) ++end;
    (kind == Step::Up ? d.up : d.down).push_back({kind, u, end - u + 1});
    if (end < m) {
      (kind == Step::Up ? d.peaks : d.valleys).push_back({end, h[end], std::nullopt});
    }
    u = end + 1;
  }
  return d;
}

SlopeDecomposition slopes(const WeightedDyckPath& wd) {
  SlopeDecomposition d = slopes(wd.path());
  for (auto* list : {&d.peaks, &d.valleys}) {
    for (Boundary& b : *list) b.weights = std::pair{wd.weight(b.step), wd.weight(b.step + 1)};
  }
  return d;
}

DyckPath reflect(const DyckPath& path) {
  std::vector<Step> steps;
  steps.reserve(path.size());
  for (auto it = path.steps().rbegin(); it != path.steps().rend(); ++it) {
    steps.push_back(opposite(*it));
  }
  return DyckPath(std::move(steps));
}

WeightedDyckPath reflect(const WeightedDyckPath& wd) {
  std::vector<int> w(wd.weights().rbegin(), wd.weights().rend());
  return WeightedDyckPath(reflect(wd.path()), std::move(w));
}

WeightedDyckPath concat(const WeightedDyckPath& p, const WeightedDyckPath& q) {
  std::vector<Step> steps(p.path().steps().begin(), p.path().steps().end());
  steps.insert(steps.end(), q.path().steps().begin(), q.path().steps().end());
  std::vector<int> w(p.weights().begin(), p.weights().end());
  w.insert(w.end(), q.weights().begin(), q.weights().end());
  return WeightedDyckPath(DyckPath(std::move(steps)), std::move(w));
}

bool is_irreducible(const DyckPath& path) {
  if (path.empty()) return false;
  const auto h = heights(path);
  return std::find(h.begin() + 1, h.end() - 1, 0) == h.end() - 1;
}

std::vector<WeightedDyckPath> factor_irreducible(const WeightedDyckPath& wd) {
  std::vector<WeightedDyckPath> out;
  const auto h = heights(wd.path());
  const auto steps = wd.path().steps();
  const auto weights = wd.weights();
  std::size_t start = 0;
  for (std::size_t i = 1; i < h.size(); ++i) {
    if (h[i] != 0) continue;
    out.emplace_back(DyckPath(std::vector<Step>(steps.begin() + start, steps.begin() + i)),
                     std::vector<int>(weights.begin() + start, weights.begin() + i));
    start = i;
  }
  return out;
}

std::vector<DyckPath> dyck_paths(int n) {
  if (n < 0) throw std::invalid_argument("negative semilength");
  std::vector<DyckPath> out;
  std::vector<Step> cur;
  cur.reserve(2 * n);
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back(Step::Up);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(Step::Down);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

WeightingStream::WeightingStream(DyckPath path) : path_(std::move(path)) {
  heights_ = heights(path_);
  caps_.resize(path_.size());
  for (std::size_t i = 0; i < caps_.size(); ++i) caps_[i] = std::min(heights_[i], heights_[i + 1]);
  weights_.assign(path_.size(), -1);
}

bool WeightingStream::advance() {
  const int m = static_cast<int>(path_.size());
  int pos;
  if (!started_) {
    started_ = true;
    if (m == 0) return true;
    pos = 0;
  } else {
    if (m == 0) return false;
    pos = m - 1;
  }
  while (pos >= 0) {
    if (++weights_[pos] > caps_[pos]) {
      weights_[pos] = -1;
      --pos;
      continue;
    }
    if (pos > 0 && pair_violation(path_.steps()[pos - 1], weights_[pos - 1], path_.steps()[pos],
                                  weights_[pos], heights_[pos])) {
      continue;
    }
    if (pos == m - 1) return true;
    ++pos;
  }
  return false;
}

std::optional<WeightedDyckPath> WeightingStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return WeightedDyckPath(path_, weights_);
}

WdStream::WdStream(int n) : paths_(dyck_paths(n)) {}

std::optional<WeightedDyckPath> WdStream::next() {
  while (index_ < paths_.size()) {
    if (!current_) current_.emplace(paths_[index_]);
    if (auto wd = current_->next()) return wd;
    current_.reset();
    ++index_;
  }
  return std::nullopt;
}

WdStream enumerate_wd(int n) { return WdStream(n); }

std::vector<WeightedDyckPath> collect_wd(int n) {
  std::vector<WeightedDyckPath> out;
  WdStream s(n);
  while (auto wd = s.next()) out.push_back(std::move(*wd));
  return out;
}

BigInt count_wd(int n) {
  if (n < 0) throw std::invalid_argument("negative semilength");
  if (n == 0) return 1;
  // ways[h][dir][w]: prefixes ending at height h with a last step of
  // direction dir carrying weight w. Weights never exceed n.
  const int H = n + 1;
  using Table = std::vector<std::vector<std::vector<BigInt>>>;
  auto fresh = [&] {
    return Table(H + 1, std::vector<std::vector<BigInt>>(2, std::vector<BigInt>(H + 1)));
  };
  Table ways = fresh();
  ways[1][0][0] = 1;
  const int m = 2 * n;
  for (int j = 1; j < m; ++j) {
    Table next = fresh();
    const int remaining = m - j - 1;  // steps after the one being placed
    for (int h = 0; h <= H; ++h) {
      for (int dir = 0; dir < 2; ++dir) {
        for (int w = 0; w <= H; ++w) {
          const BigInt& c = ways[h][dir][w];
          if (c == 0) continue;
          for (int nd = 0; nd < 2; ++nd) {
            const int nh = h + (nd == 0 ? 1 : -1);
            if (nh < 0 || nh > H || nh > remaining) continue;
            const int cap = std::min(h, nh);
            for (int nw = 0; nw <= cap; ++nw) {
              if (pair_violation(static_cast<Step>(dir), w, static_cast<Step>(nd), nw, h)) continue;
              next[nh][nd][nw] += c;
            }
          }
        }
      }
    }
    ways = std::move(next);
  }
  BigInt total = 0;
  for (int w = 0; w <= H; ++w) total += ways[0][1][w];
  return total;
}

WeightedDyckPath parse_path(std::string_view text) {
  text = trim(text);
  const auto semi = text.find(';');
  const std::string_view steps_text = text.substr(0, semi);
  const DyckPath path = DyckPath::parse(steps_text);

  std::vector<int> weights;
  if (semi == std::string_view::npos) {
    weights.assign(path.size(), 0);
  } else {
    std::string_view rest = text.substr(semi + 1);
    if (!rest.empty()) {
      while (true) {
        const auto comma = rest.find(',');
        const std::string_view field = trim(rest.substr(0, comma));
        int v = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
          throw ParseError("malformed weight '" + std::string(field) + "'");
        }
        weights.push_back(v);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
    }
  }
  if (weights.size() != path.size()) {
    throw ParseError("length mismatch: " + std::to_string(path.size()) + " steps, " +
                     std::to_string(weights.size()) + " weights");
  }
  WeightedDyckPath wd(path, std::move(weights));
  if (auto r = validate_weighted(wd); !r.ok()) throw ValidationError(std::move(r.violations));
  return wd;
}

std::string serialize_path(const WeightedDyckPath& wd) {
  std::string s = wd.path().to_string();
  s.push_back(';');
  for (std::size_t i = 0; i < wd.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(wd.weights()[i]);
  }
  return s;
}

}  // namespace dyckperm
