#include "dyckperm/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "json.hpp"

namespace dyckperm {

namespace {

struct SuiteInfo {
  SuiteId id;
  const char* name;
  int cap;
};

constexpr SuiteInfo kSuiteInfo[] = {
    {SuiteId::Counts, "counts", 6},
    {SuiteId::Bijectivity, "bijectivity", 6},
    {SuiteId::Roundtrip, "roundtrip", 6},
    {SuiteId::Schutzenberger, "schutzenberger", 5},
    {SuiteId::Product, "product", 5},
    {SuiteId::Statistic, "statistic", 6},
    {SuiteId::Criteria, "criteria", 5},
    {SuiteId::InsertionLemma, "insertion_lemma", 6},
    {SuiteId::Transformation, "transformation", 6},
    {SuiteId::Parking, "parking", 8},
    {SuiteId::TopwordEquivalence, "topword_equivalence", 5},
};

const SuiteInfo& info(SuiteId id) {
  for (const auto& s : kSuiteInfo) {
    if (s.id == id) return s;
  }
  throw std::logic_error("unregistered suite");
}

// Accumulates results for one suite; failures beyond the cap are counted
// but not stored.
class Collector {
 public:
  void fail(Failure f) {
    ++count_;
    failures_.push_back(std::move(f));
  }
  void fail(std::string input, std::string expected, std::string actual) {
    fail(Failure{std::move(input), std::move(expected), std::move(actual)});
  }
  void merge(Collector&& other) {
    count_ += other.count_;
    for (auto& f : other.failures_) failures_.push_back(std::move(f));
  }
  std::uint64_t count() const { return count_; }

  void finish(VerificationReport& r) {
    std::sort(failures_.begin(), failures_.end());
    if (failures_.size() > VerificationReport::kMaxRecordedFailures) {
      failures_.resize(VerificationReport::kMaxRecordedFailures);
    }
    r.failures = std::move(failures_);
    r.failure_count = count_;
  }

 private:
  std::vector<Failure> failures_;
  std::uint64_t count_ = 0;
};

bool cancelled(const RunOptions& o) {
  return o.cancel && o.cancel->load(std::memory_order_relaxed);
}

// Runs `check` over every item, striped across worker threads. The merged
// failure list is sorted later, so the outcome does not depend on the
// thread count.
template <class T, class Check>
bool for_each_parallel(const std::vector<T>& items, const RunOptions& o, Collector& out,
                       Check check) {
  const unsigned threads = std::max(1u, std::min<unsigned>(o.threads, items.size() ? items.size() : 1));
  std::vector<Collector> partial(threads);
  std::atomic<bool> aborted{false};
  auto work = [&](unsigned t) {
    for (std::size_t i = t; i < items.size(); i += threads) {
      if ((i & 255) == 0 && cancelled(o)) {
        aborted = true;
        return;
      }
      check(items[i], partial[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& c : partial) out.merge(std::move(c));
  return !aborted;
}

std::string describe(const std::exception& e) { return std::string("exception: ") + e.what(); }

std::vector<int> up_positions(const DyckPath& p) {
  std::vector<int> out;
  for (int u = 1; u <= static_cast<int>(p.size()); ++u) {
    if (p.is_up(u)) out.push_back(u);
  }
  return out;
}

std::vector<WeightedDyckPath> irreducible_wd(int n) {
  std::vector<WeightedDyckPath> out;
  WdStream s(n);
  while (auto wd = s.next()) {
    if (is_irreducible(wd->path())) out.push_back(std::move(*wd));
  }
  return out;
}

// Every permutation of 1..size in lexicographic order.
template <class F>
void for_each_permutation(int size, F f) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

using SuiteBody = std::function<bool(int n, const RunOptions&, Collector&, VerificationReport&)>;

void suite_counts(int max_n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto& ref = reference_counts();
  for (int n = 0; n <= max_n; ++n) {
    const BigInt counted = count_wd(n);
    std::string line = "n=" + std::to_string(n) + ": count_wd=" + counted.str();
    if (n < static_cast<int>(ref.size())) {
      line += " (ref " + std::to_string(ref[n]) + ")";
      if (counted != ref[n]) {
        c.fail("count_wd(" + std::to_string(n) + ")", std::to_string(ref[n]), counted.str());
      }
    }
    if (n <= 7) {
      std::uint64_t streamed = 0;
      WdStream s(n);
      while (s.next()) ++streamed;
      line += ", enumerate_wd=" + std::to_string(streamed);
      if (counted != streamed) {
        c.fail("enumerate_wd(" + std::to_string(n) + ")", counted.str(), std::to_string(streamed));
      }
    }
    if (n <= 6 || (n == 7 && o.stretch)) {
      std::uint64_t perms = 0;
      A2nStream s(n);
      while (s.next()) ++perms;
      line += ", enumerate_A2n=" + std::to_string(perms);
      if (counted != perms) {
        c.fail("enumerate_A2n(" + std::to_string(n) + ")", counted.str(), std::to_string(perms));
      }
    }
    r.details.push_back(std::move(line));
    r.checked_by_size.emplace_back(n, 1);
    if (cancelled(o)) {
      r.verdict = Verdict::Aborted;
      return;
    }
  }
}

std::optional<Failure> image_failure(const WeightedDyckPath& wd, const Permutation& sigma) {
  if (!is_up_down(sigma)) return Failure{serialize_path(wd), "up-down", sigma.to_string()};
  if (!avoids_1234(sigma)) return Failure{serialize_path(wd), "1234-avoiding", sigma.to_string()};
  if (!criteria_borie(sigma).all()) {
    return Failure{serialize_path(wd), "four criteria hold", sigma.to_string()};
  }
  return std::nullopt;
}

bool suite_bijectivity(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = collect_wd(n);
  std::vector<std::optional<Permutation>> images(wds.size());
  std::vector<std::size_t> idx(wds.size());
  std::iota(idx.begin(), idx.end(), 0);
  const bool done = for_each_parallel(idx, o, c, [&](std::size_t i, Collector& local) {
    try {
      images[i] = beta(wds[i], o.rule).perm();
      if (auto f = image_failure(wds[i], *images[i])) local.fail(std::move(*f));
    } catch (const std::exception& e) {
      local.fail(serialize_path(wds[i]), "an image", describe(e));
    }
  });
  if (!done) return false;

  std::map<Permutation, std::size_t> seen;
  for (std::size_t i = 0; i < wds.size(); ++i) {
    if (!images[i]) continue;
    auto [it, fresh] = seen.emplace(*images[i], i);
    if (!fresh) {
      c.fail(serialize_path(wds[i]), "image distinct from " + serialize_path(wds[it->second]),
             images[i]->to_string());
    }
  }
  std::set<Permutation> target;
  A2nStream s(n);
  while (auto p = s.next()) target.insert(p->perm());
  for (const auto& p : target) {
    if (!seen.count(p)) c.fail(p.to_string(), "in the image", "missing");
  }
  for (const auto& [p, i] : seen) {
    if (!target.count(p)) c.fail(serialize_path(wds[i]), "image in A_2n(1234)", p.to_string());
  }
  if (n == 3) {
    std::set<std::string> literal(reference_a6().begin(), reference_a6().end());
    std::set<std::string> got;
    for (const auto& [p, i] : seen) got.insert(p.to_string());
    if (got != literal) {
      c.fail("n=3", "the 42 listed permutations", std::to_string(got.size()) + " images, differing");
    }
    r.details.push_back("n=3 image equals the 42-element reference list: " +
                        std::string(got == literal ? "yes" : "no"));
  }
  r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(seen.size()) +
                      " distinct images of " + std::to_string(wds.size()) + " paths, |A_2n(1234)| = " +
                      std::to_string(target.size()));
  r.checked_by_size.emplace_back(n, wds.size());
  return true;
}

bool suite_roundtrip(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = collect_wd(n);
  r.checked_by_size.emplace_back(n, wds.size());
  return for_each_parallel(wds, o, c, [&](const WeightedDyckPath& wd, Collector& local) {
    if (auto f = check_roundtrip(wd, o.rule)) local.fail(std::move(*f));
  });
}

bool suite_schutzenberger(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = collect_wd(n);
  const bool done = for_each_parallel(wds, o, c, [&](const WeightedDyckPath& wd, Collector& local) {
    try {
      const WeightedDyckPath mirrored = reflect(wd);
      if (!validate_weighted(mirrored).ok()) {
        local.fail(serialize_path(wd), "valid mirror", serialize_path(mirrored));
        return;
      }
      if (reflect(mirrored) != wd) {
        local.fail(serialize_path(wd), "reflect is an involution", serialize_path(reflect(mirrored)));
      }
      const Permutation lhs = beta(mirrored, o.rule).perm();
      const Permutation rhs = schutzenberger(beta(wd, o.rule).perm());
      if (lhs != rhs) local.fail(serialize_path(wd), rhs.to_string(), lhs.to_string());
    } catch (const std::exception& e) {
      local.fail(serialize_path(wd), "beta(reflect(wd)) = S(beta(wd))", describe(e));
    }
  });
  if (!done) return false;
  std::set<Permutation> members;
  A2nStream s(n);
  while (auto p = s.next()) members.insert(p->perm());
  for (const auto& p : members) {
    const Permutation sp = schutzenberger(p);
    if (!members.count(sp)) c.fail(p.to_string(), "S(sigma) in A_2n(1234)", sp.to_string());
  }
  r.checked_by_size.emplace_back(n, wds.size());
  return true;
}

bool suite_statistic(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = collect_wd(n);
  r.checked_by_size.emplace_back(n, wds.size());
  return for_each_parallel(wds, o, c, [&](const WeightedDyckPath& wd, Collector& local) {
    try {
      const auto bot = beta(wd, o.rule).bot();
      std::vector<int> sorted(bot.letters().begin(), bot.letters().end());
      std::sort(sorted.begin(), sorted.end());
      const auto ups = up_positions(wd.path());
      if (sorted != ups) local.fail(serialize_path(wd), to_string(ups), to_string(sorted));
    } catch (const std::exception& e) {
      local.fail(serialize_path(wd), "bottom letters = Up positions", describe(e));
    }
  });
}

bool suite_criteria(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  std::uint64_t checked = 0, rejected_members = 0, accepted_non_updown = 0, updown_mismatch = 0;
  bool aborted = false;
  for_each_permutation(2 * n, [&](const std::vector<int>& v) {
    if (aborted) return;
    if ((checked & 0xffff) == 0 && cancelled(o)) {
      aborted = true;
      return;
    }
    ++checked;
    const Permutation p(v);
    const bool verdict = criteria_borie(p).all();
    const bool updown = is_up_down(p);
    const bool expected = updown && avoids_1234(p);
    if (verdict == expected) return;
    if (expected) ++rejected_members;
    if (!updown) ++accepted_non_updown;
    if (updown) ++updown_mismatch;
    c.fail(p.to_string(), expected ? "criteria hold" : "criteria fail",
           verdict ? "criteria hold" : "criteria fail");
  });
  if (aborted) return false;
  r.details.push_back("size " + std::to_string(2 * n) + ": " + std::to_string(checked) +
                      " permutations, members rejected " + std::to_string(rejected_members) +
                      ", non-up-down accepted " + std::to_string(accepted_non_updown) +
                      ", up-down mismatches " + std::to_string(updown_mismatch));
  r.checked_by_size.emplace_back(n, checked);
  return true;
}

// Overflow and range checks on every insertion run, plus injectivity of
// weight -> distance among non-jumping weights sharing path and prefix.
bool suite_insertion_lemma(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  std::uint64_t checked = 0;
  std::map<std::string, std::map<int, std::pair<int, std::string>>> by_prefix;
  std::string current_path;
  auto record_run = [&](const WeightedDyckPath& wd, const std::string& label) {
    InsertionResult res;
    try {
      res = ins(wd, o.rule);
    } catch (const InsertionOverflow& e) {
      c.fail(label, "no insertion overflow", e.what());
      return;
    }
    std::size_t length = 0;
    for (const auto& st : res.trace.steps) {
      if (!st.jumped) {
        const int d = *st.distance_from_right;
        if (d < 0 || d > static_cast<int>(length)) {
          c.fail(label, "distance in [0, " + std::to_string(length) + "] at step " +
                            std::to_string(st.position),
                 std::to_string(d));
        }
        if (d < st.shift) {
          c.fail(label, "distance >= shift " + std::to_string(st.shift) + " at step " +
                            std::to_string(st.position),
                 std::to_string(d));
        }
        std::string key = wd.path().to_string() + ";";
        for (int u = 1; u < st.position; ++u) key += std::to_string(wd.weight(u)) + ",";
        key += "@" + std::to_string(st.position);
        auto& seen = by_prefix[key];
        for (const auto& [w, entry] : seen) {
          if (w != st.weight && entry.first == d) {
            c.fail(label, "distinct distances for weights " + std::to_string(w) + " and " +
                              std::to_string(st.weight) + " at step " + std::to_string(st.position),
                   "both " + std::to_string(d) + " (other: " + entry.second + ")");
          }
        }
        seen.emplace(st.weight, std::pair{d, label});
      }
      ++length;
    }
  };
  WdStream s(n);
  while (auto wd = s.next()) {
    if ((checked & 0xfff) == 0 && cancelled(o)) return false;
    ++checked;
    const std::string path = wd->path().to_string();
    if (path != current_path) {
      by_prefix.clear();
      current_path = path;
    }
    for (const auto& f : factor_irreducible(*wd)) {
      record_run(f, serialize_path(*wd));
      record_run(reflect(f), serialize_path(*wd) + " (mirror)");
    }
  }
  r.checked_by_size.emplace_back(n, checked);
  return true;
}

bool suite_transformation(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = irreducible_wd(n);
  r.checked_by_size.emplace_back(n, wds.size());
  return for_each_parallel(wds, o, c, [&](const WeightedDyckPath& wd, Collector& local) {
    try {
      const ParkingFunction pf = to_single_slope(wd, o.rule);
      const Permutation lhs = parking_to_123avoiding(pf);
      const Permutation rhs = standardize(ins_word(wd, o.rule));
      if (lhs != rhs) local.fail(serialize_path(wd), rhs.to_string(), lhs.to_string());
    } catch (const std::exception& e) {
      local.fail(serialize_path(wd), "valid single-slope image", describe(e));
    }
  });
}

bool suite_parking(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto pfs = parking_functions(n);
  std::map<Permutation, const ParkingFunction*> images;
  for (const auto& pf : pfs) {
    const Permutation p = parking_to_123avoiding(pf);
    const std::string in = to_string(pf.values());
    if (!avoids_123_word(p.values())) c.fail(in, "123-avoiding", p.to_string());
    auto [it, fresh] = images.emplace(p, &pf);
    if (!fresh) c.fail(in, "image distinct from " + to_string(it->second->values()), p.to_string());
  }
  std::uint64_t avoiders = 0;
  for_each_permutation(n, [&](const std::vector<int>& v) {
    if (lis_length(v) > 2) return;
    ++avoiders;
    if (!images.count(Permutation(v))) c.fail(to_string(v), "in the image", "missing");
  });
  if (avoiders != pfs.size()) {
    c.fail("n=" + std::to_string(n), std::to_string(avoiders) + " images", std::to_string(pfs.size()));
  }
  r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(pfs.size()) +
                      " parking functions, " + std::to_string(avoiders) + " 123-avoiders");
  r.checked_by_size.emplace_back(n, pfs.size());
  return !cancelled(o);
}

bool suite_topword(int n, const RunOptions& o, Collector& c, VerificationReport& r) {
  const auto wds = irreducible_wd(n);
  r.checked_by_size.emplace_back(n, wds.size());
  return for_each_parallel(wds, o, c, [&](const WeightedDyckPath& wd, Collector& local) {
    try {
      const PartialWord direct = topword_direct(wd, o.rule);
      const PartialWord via = schutzenberger_word(ins_word(reflect(wd), o.rule), static_cast<int>(wd.size()));
      if (direct != via) local.fail(serialize_path(wd), to_string(via.letters()), to_string(direct.letters()));
    } catch (const std::exception& e) {
      local.fail(serialize_path(wd), "matching top words", describe(e));
    }
  });
}

bool suite_product(int max_n, const RunOptions& o, Collector& c, VerificationReport& r) {
  std::vector<std::vector<std::pair<WeightedDyckPath, Permutation>>> by_size(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    for (auto& wd : collect_wd(n)) {
      Permutation p = beta(wd, o.rule).perm();
      by_size[n].emplace_back(std::move(wd), std::move(p));
    }
  }
  std::vector<std::uint64_t> per_total(max_n + 1, 0);
  for (int a = 0; a <= max_n; ++a) {
    for (int b = 0; a + b <= max_n; ++b) {
      for (const auto& [p, bp] : by_size[a]) {
        if (cancelled(o)) return false;
        for (const auto& [q, bq] : by_size[b]) {
          ++per_total[a + b];
          const WeightedDyckPath pq = concat(p, q);
          try {
            const Permutation lhs = beta(pq, o.rule).perm();
            const Permutation rhs = shifted_concat(bq, bp);
            if (lhs != rhs) c.fail(serialize_path(pq), rhs.to_string(), lhs.to_string());
          } catch (const std::exception& e) {
            c.fail(serialize_path(pq), "beta(p q) = beta(q) . beta(p)", describe(e));
          }
        }
      }
    }
  }
  for (int n = 0; n <= max_n; ++n) r.checked_by_size.emplace_back(n, per_total[n]);
  return true;
}

}  // namespace

std::string to_string(SuiteId id) { return info(id).name; }

SuiteId parse_suite(std::string_view name) {
  for (const auto& s : kSuiteInfo) {
    if (name == s.name) return s.id;
  }
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

int default_max_n(SuiteId id) { return info(id).cap; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Aborted: return "aborted";
  }
  return "unknown";
}

VerificationReport run_suite(SuiteId id, int max_n, const RunOptions& options) {
  if (max_n < 0) throw DomainError("max n must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.suite = id;
  r.n_min = 0;
  r.n_max = max_n;
  Collector c;
  bool completed = true;

  auto per_size = [&](auto body) {
    for (int n = 0; n <= max_n && completed; ++n) completed = body(n, options, c, r);
  };
  switch (id) {
    case SuiteId::Counts: suite_counts(max_n, options, c, r); completed = r.verdict != Verdict::Aborted; break;
    case SuiteId::Bijectivity: per_size(suite_bijectivity); break;
    case SuiteId::Roundtrip: per_size(suite_roundtrip); break;
    case SuiteId::Schutzenberger: per_size(suite_schutzenberger); break;
    case SuiteId::Product: completed = suite_product(max_n, options, c, r); break;
    case SuiteId::Statistic: per_size(suite_statistic); break;
    case SuiteId::Criteria: per_size(suite_criteria); break;
    case SuiteId::InsertionLemma: per_size(suite_insertion_lemma); break;
    case SuiteId::Transformation:
      per_size(suite_transformation);
      if (completed) {
        // Known single-slope image.
        const Permutation got = parking_to_123avoiding(ParkingFunction({0, 0, 2, 2, 4, 4, 5}));
        if (got.to_string() != "6,4,7,5,2,3,1") c.fail("0,0,2,2,4,4,5", "6,4,7,5,2,3,1", got.to_string());
      }
      break;
    case SuiteId::Parking: per_size(suite_parking); break;
    case SuiteId::TopwordEquivalence: per_size(suite_topword); break;
  }

  for (const auto& [n, k] : r.checked_by_size) r.checked += k;
  c.finish(r);
  if (!completed || cancelled(options)) {
    r.verdict = Verdict::Aborted;
  } else {
    r.verdict = r.failure_count == 0 ? Verdict::Pass : Verdict::Fail;
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

std::vector<VerificationReport> run_all(int max_n, const RunOptions& options) {
  std::vector<VerificationReport> out;
  for (SuiteId id : kAllSuites) {
    int cap = default_max_n(id);
    if (id == SuiteId::Counts && options.stretch) cap = 7;
    out.push_back(run_suite(id, std::min(max_n, cap), options));
  }
  return out;
}

std::string to_record(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = to_string(r.suite);
  j["nRange"] = {r.n_min, r.n_max};
  j["checked"] = r.checked;
  auto& by_size = j["checkedBySize"] = nlohmann::ordered_json::object();
  for (const auto& [n, k] : r.checked_by_size) by_size[std::to_string(n)] = k;
  auto& failures = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["failureCount"] = r.failure_count;
  j["details"] = r.details;
  j["elapsedMs"] = r.elapsed.count();
  j["verdict"] = to_string(r.verdict);
  return j.dump();
}

PartialWord topword_direct(const WeightedDyckPath& wd, SplitRule rule) {
  if (!is_irreducible(wd.path())) throw DomainError("not irreducible: " + serialize_path(wd));
  const DyckPath& p = wd.path();
  const int m = static_cast<int>(p.size());
  const auto h = heights(p);
  const auto decomp = slopes(p);
  const auto split = split_LR(decomp, rule);
  const std::size_t k = decomp.k();

  std::vector<int> word;
  int ups_after = 0;
  for (std::size_t i = k; i-- > 0;) {
    const Slope& s = decomp.down[i];
    const Membership mem = split.membership[k - 1 - i];
    const int shift = ups_after;
    for (int d = s.last(); d >= s.start; --d) {
      int bound;
      if (mem == Membership::L) {
        if (d == m) bound = 0;
        else if (d < s.last()) bound = wd.weight(d + 1);
        else bound = h[d] - wd.weight(d + 1);
      } else {
        const int cap = h[d];
        bound = d > s.start ? std::min(cap, wd.weight(d - 1)) : std::min(cap, h[d - 1] - wd.weight(d - 1));
      }
      if (wd.weight(d) == bound) {
        word.push_back(d);
        continue;
      }
      const int dist = wd.weight(d) + shift - (mem == Membership::L ? 1 : 0);
      if (dist < 0 || dist > static_cast<int>(word.size())) {
        throw DomainError("top insertion overflow at step " + std::to_string(d));
      }
      word.insert(word.begin() + dist, d);
    }
    ups_after += decomp.up[i].length;
  }
  return PartialWord(std::move(word), m);
}

std::optional<Failure> check_roundtrip(const WeightedDyckPath& wd, SplitRule rule) {
  const std::string in = serialize_path(wd);
  try {
    const Permutation sigma = beta(wd, rule).perm();
    const WeightedDyckPath back = invert(sigma, rule);
    if (back != wd) return Failure{in, in, "invert: " + serialize_path(back)};
    const WeightedDyckPath brute = invert_brute(sigma, 7, rule);
    if (brute != wd) return Failure{in, in, "invert_brute: " + serialize_path(brute)};
  } catch (const std::exception& e) {
    return Failure{in, in, describe(e)};
  }
  return std::nullopt;
}

std::optional<Failure> check_image(const WeightedDyckPath& wd, SplitRule rule) {
  try {
    return image_failure(wd, beta(wd, rule).perm());
  } catch (const std::exception& e) {
    return Failure{serialize_path(wd), "an image", describe(e)};
  }
}

const std::vector<std::string>& reference_a6() {
  static const std::vector<std::string> list = [] {
    const char* raw[] = {
        "143625", "153624", "154623", "163524", "164523", "241635", "243615",
        "251436", "251634", "253614", "254613", "261435", "261534", "263514",
        "264513", "341625", "342615", "351426", "351624", "352416", "352614",
        "354612", "361425", "361524", "362415", "362514", "364512", "451326",
        "451623", "452316", "452613", "453612", "461325", "461523", "462315",
        "462513", "463512", "561324", "561423", "562314", "562413", "563412",
    };
    std::vector<std::string> out;
    for (const char* s : raw) {
      std::string t;
      for (const char* q = s; *q; ++q) {
        if (!t.empty()) t.push_back(',');
        t.push_back(*q);
      }
      out.push_back(t);
    }
    return out;
  }();
  return list;
}

const std::vector<std::uint64_t>& reference_counts() {
  static const std::vector<std::uint64_t> v = {1, 1, 5, 42, 462, 6006, 87516, 1385670};
  return v;
}

}  // namespace dyckperm
