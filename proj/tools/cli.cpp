#include "cli.hpp"

#include <istream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "dyckperm/verification.hpp"
#include "json.hpp"

namespace dyckperm::cli {

namespace {

const std::map<std::string, SplitRule> kRules = {{"ceil", SplitRule::CeilHalf},
                                                 {"floor", SplitRule::FloorHalf}};

// "-" means the first line of standard input. A blank line is a valid
// input: the empty path or the empty permutation.
std::string resolve_input(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("no input on standard input");
  return line;
}

nlohmann::ordered_json step_json(std::size_t factor, const char* side, const InsertionStep& s) {
  nlohmann::ordered_json j;
  j["factor"] = factor;
  j["side"] = side;
  j["position"] = s.position;
  j["weight"] = s.weight;
  j["slope"] = s.slope;
  j["membership"] = to_string(s.membership);
  j["shift"] = s.shift;
  j["bound"] = s.bound;
  j["jumped"] = s.jumped;
  j["distance"] = s.distance_from_right ? nlohmann::ordered_json(*s.distance_from_right) : nullptr;
  j["word"] = s.word_after;
  return j;
}

}  // namespace

std::vector<std::string> trace_lines(const BetaResult& traced) {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < traced.factors.size(); ++f) {
    for (const auto& s : traced.factors[f].bottom.steps) out.push_back(step_json(f + 1, "bot", s).dump());
    for (const auto& s : traced.factors[f].top.steps) out.push_back(step_json(f + 1, "top", s).dump());
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weighted Dyck paths and 1234-avoiding up-down permutations", "dyckperm"};
  app.require_subcommand(1, 1);

  std::string family = "wd", format = "text";
  int n = 0;
  std::optional<std::uint64_t> limit;
  auto* enumerate = app.add_subcommand("enumerate", "List WD_2n or A_2n(1234) in canonical order");
  enumerate->add_option("--family", family, "wd or perm")->check(CLI::IsMember({"wd", "perm"}));
  enumerate->add_option("--n", n, "Semilength")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  enumerate->add_option("--limit", limit, "Stop after this many objects");

  std::string input;
  bool trace = false;
  SplitRule rule = SplitRule::CeilHalf;
  auto* map = app.add_subcommand("map", "Image of a weighted path");
  map->add_option("input", input, "Weighted path text, or - for stdin")->required();
  map->add_flag("--trace", trace, "Print every insertion step");
  map->add_option("--split-rule", rule, "Split rule")->transform(CLI::CheckedTransformer(kRules))->option_text("ceil|floor");

  auto* invert_cmd = app.add_subcommand("invert", "Preimage of a permutation");
  invert_cmd->add_option("input", input, "Permutation text, or - for stdin")->required();
  invert_cmd->add_option("--split-rule", rule, "Split rule")->transform(CLI::CheckedTransformer(kRules))->option_text("ceil|floor");

  int max_n = -1;
  auto* count = app.add_subcommand("count", "Count WD_2n against the reference values");
  count->add_option("--max-n", max_n, "Largest semilength")->required()->check(CLI::NonNegativeNumber);

  std::string suite = "all";
  unsigned threads = 1;
  bool stretch = false;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--max-n", max_n, "Largest semilength (default: each suite's cap)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--split-rule", rule, "Split rule")->transform(CLI::CheckedTransformer(kRules))->option_text("ceil|floor");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--stretch", stretch, "Include the n = 7 permutation count");

  std::string style = "ascii";
  auto* render = app.add_subcommand("render", "Draw a weighted path");
  render->add_option("input", input, "Weighted path text, or - for stdin")->required();
  render->add_option("--style", style, "Drawing style")->check(CLI::IsMember({"ascii"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*enumerate) {
      std::uint64_t emitted = 0;
      auto emit = [&](const std::string& line) {
        out << line << '\n';
        return !limit || ++emitted < *limit;
      };
      if (limit && *limit == 0) return kOk;
      if (family == "wd") {
        WdStream s(n);
        while (auto wd = s.next()) {
          if (!emit(format == "text" ? serialize_path(*wd) : wd_record(*wd))) break;
        }
      } else {
        A2nStream s(n);
        while (auto p = s.next()) {
          if (!emit(format == "text" ? p->to_string() : perm_record(p->perm()))) break;
        }
      }
      return kOk;
    }

    if (*map) {
      const WeightedDyckPath wd = parse_path(resolve_input(input, in));
      if (!trace) {
        out << beta(wd, rule).to_string() << '\n';
        return kOk;
      }
      const BetaResult traced = beta_traced(wd, rule);
      out << traced.image.to_string() << '\n';
      for (const auto& line : trace_lines(traced)) out << line << '\n';
      return kOk;
    }

    if (*invert_cmd) {
      const Permutation sigma = Permutation::parse(resolve_input(input, in));
      out << serialize_path(invert(sigma, rule)) << '\n';
      return kOk;
    }

    if (*count) {
      const auto& ref = reference_counts();
      bool mismatch = false;
      for (int k = 0; k <= max_n; ++k) {
        const BigInt c = count_wd(k);
        out << k << ": " << c.str();
        if (k < static_cast<int>(ref.size())) {
          out << " (ref " << ref[k] << ")";
          if (c != ref[k]) {
            out << " MISMATCH";
            mismatch = true;
          }
        }
        out << '\n';
      }
      return mismatch ? kDomain : kOk;
    }

    if (*verify) {
      RunOptions options;
      options.rule = rule;
      options.threads = threads;
      options.stretch = stretch;
      std::vector<VerificationReport> reports;
      if (suite == "all") {
        reports = run_all(max_n < 0 ? 1 << 20 : max_n, options);
      } else {
        SuiteId id;
        try {
          id = parse_suite(suite);
        } catch (const DomainError& e) {
          err << "error: " << e.what() << "\n\n" << verify->help();
          return kUsage;
        }
        reports.push_back(run_suite(id, max_n < 0 ? default_max_n(id) : max_n, options));
      }
      bool all_pass = true;
      for (const auto& r : reports) {
        out << to_record(r) << '\n';
        all_pass = all_pass && r.verdict == Verdict::Pass;
      }
      return all_pass ? kOk : kDomain;
    }

    if (*render) {
      out << render_ascii(parse_path(resolve_input(input, in)));
      return kOk;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace dyckperm::cli
