// Acceptance checks, one per criterion. Usage: acceptance [N ...] [--stretch]
// Prints one PASS/FAIL line per criterion; exit status 0 iff all selected pass.
// Everything is exact; the only tolerances are the wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <thread>

#include "dyckperm/verification.hpp"

using namespace dyckperm;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool g_stretch = false;

RunOptions options() {
  RunOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  o.stretch = g_stretch;
  return o;
}

std::string summary(const VerificationReport& r) {
  std::string s = to_string(r.suite) + " n<=" + std::to_string(r.n_max) + ": checked " +
                  std::to_string(r.checked) + ", failures " + std::to_string(r.failure_count);
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    s += " (first: " + f.input + " expected " + f.expected + ", got " + f.actual + ")";
  }
  return s;
}

Outcome suite(SuiteId id, int max_n) {
  const auto r = run_suite(id, max_n, options());
  return {r.verdict == Verdict::Pass, summary(r)};
}

Outcome counting() {
  const std::uint64_t ref[] = {1, 1, 5, 42, 462, 6006, 87516, 1385670};
  std::string got;
  bool ok = true;
  for (int n = 0; n <= 6; ++n) {
    const BigInt c = count_wd(n);
    ok = ok && c == ref[n];
    got += (n ? "," : "") + c.str();
  }
  std::string detail = "count_wd(0..6) = " + got;
  const auto r = run_suite(SuiteId::Counts, g_stretch ? 7 : 6, options());
  ok = ok && r.verdict == Verdict::Pass;
  detail += "; counts suite " + summary(r);
  return {ok, detail};
}

Outcome ground_truth_list() {
  std::set<std::string> images;
  for (const auto& wd : collect_wd(3)) images.insert(beta(wd).to_string());
  const std::set<std::string> listed(reference_a6().begin(), reference_a6().end());
  std::size_t common = 0;
  for (const auto& s : images) common += listed.count(s);
  return {images == listed && listed.size() == 42,
          std::to_string(images.size()) + " images, " + std::to_string(common) + " of 42 listed"};
}

Outcome worked_example() {
  const auto wd = parse_path("UUDUDUUUDDUDDD;0,0,1,1,1,1,1,2,2,2,0,2,1,0");
  const auto sigma = beta(wd);
  const PartialWord bot = sigma.bot(), top = sigma.top();
  const auto trace = ins(wd).trace;
  std::vector<int> jumps, distances;
  for (const auto& s : trace.steps) {
    if (s.jumped) jumps.push_back(s.position);
    else distances.push_back(*s.distance_from_right);
  }
  const bool ok = sigma.to_string() == "8,13,6,12,11,14,7,10,2,9,4,5,1,3" &&
                  to_string(bot.letters()) == "8,6,11,7,2,4,1" &&
                  to_string(top.letters()) == "13,12,14,10,9,5,3" &&
                  jumps == std::vector<int>{1, 2, 6, 8} && distances == std::vector<int>{1, 3, 4};
  return {ok, "sigma " + sigma.to_string() + ", jumps at " + to_string(jumps) + ", distances " +
                  to_string(distances)};
}

Outcome equivariance() {
  const auto a = run_suite(SuiteId::Schutzenberger, 5, options());
  const auto b = run_suite(SuiteId::Product, 5, options());
  return {a.verdict == Verdict::Pass && b.verdict == Verdict::Pass, summary(a) + "; " + summary(b)};
}

Outcome fixed_cases() {
  bool ok = beta(parse_path("UD;0,0")).to_string() == "1,2" &&
            beta(parse_path("UDUD;0,0,0,0")).to_string() == "3,4,1,2";
  std::set<std::string> uudd;
  for (const char* w : {"0,0,0,0", "0,0,1,0", "0,1,0,0", "0,1,1,0"}) {
    uudd.insert(beta(parse_path(std::string("UUDD;") + w)).to_string());
  }
  ok = ok && uudd == std::set<std::string>{"2,4,1,3", "2,3,1,4", "1,4,2,3", "1,3,2,4"};
  std::string detail = "UUDD images:";
  for (const auto& s : uudd) detail += " " + s;
  return {ok, detail};
}

struct Criterion {
  const char* title;
  double budget_seconds;  // 0: no budget stated
  std::function<Outcome()> run;
};

const Criterion kCriteria[] = {
    {"counting", 10, counting},
    {"ground-truth list of 42", 1, ground_truth_list},
    {"worked example", 0, worked_example},
    {"bijectivity n<=6", 300, [] { return suite(SuiteId::Bijectivity, 6); }},
    {"round trip n<=6", 0, [] { return suite(SuiteId::Roundtrip, 6); }},
    {"equivariance and product", 0, equivariance},
    {"bottom-letter statistic n<=6", 0, [] { return suite(SuiteId::Statistic, 6); }},
    {"criteria equivalence, sizes<=10", 120, [] { return suite(SuiteId::Criteria, 5); }},
    {"single-slope transformation n<=6", 0, [] { return suite(SuiteId::Transformation, 6); }},
    {"insertion lemma n<=6", 0, [] { return suite(SuiteId::InsertionLemma, 6); }},
    {"top-word equivalence n<=5", 0, [] { return suite(SuiteId::TopwordEquivalence, 5); }},
    {"fixed small cases", 0, fixed_cases},
};

bool run_one(int index) {
  const Criterion& c = kCriteria[index - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + "s";
  if (c.budget_seconds > 0) {
    timing += " (budget " + std::to_string(static_cast<int>(c.budget_seconds)) + "s)";
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget";
    }
  }
  std::cout << "criterion " << index << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << " - "
            << o.detail << " [" << timing << "]" << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--stretch") == 0) {
      g_stretch = true;
      continue;
    }
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > 12) {
      std::cerr << "usage: acceptance [1-12 ...] [--stretch]\n";
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty()) {
    for (int k = 1; k <= 12; ++k) selected.push_back(k);
  }
  bool all = true;
  for (int k : selected) all = run_one(k) && all;
  return all ? 0 : 1;
}
