#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "dyckperm/permutations.hpp"
#include "dyckperm/verification.hpp"

using namespace dyckperm;

namespace {

Permutation P(const std::string& digits) {
  std::vector<int> v;
  for (char c : digits) v.push_back(c - '0');
  return Permutation(v);
}

bool naive_contains_1234(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (v[a] < v[b])
        for (int c = b + 1; c < n; ++c)
          if (v[b] < v[c])
            for (int d = c + 1; d < n; ++d)
              if (v[c] < v[d]) return true;
  return false;
}

bool naive_contains_123(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (v[a] < v[b] && v[b] < v[c]) return true;
  return false;
}

bool naive_up_down(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if ((i % 2 == 0) != (v[i] < v[i + 1])) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST(Permutation, ParseAndPrint) {
  const auto p = Permutation::parse("8,13,6,12,11,14,7,10,2,9,4,5,1,3");
  EXPECT_EQ(p.size(), 14u);
  EXPECT_EQ(p.at(2), 13);
  EXPECT_EQ(p.to_string(), "8,13,6,12,11,14,7,10,2,9,4,5,1,3");
  EXPECT_EQ(Permutation::parse(" 1, 2 ").to_string(), "1,2");
  EXPECT_THROW(Permutation::parse("1,1"), DomainError);
  EXPECT_THROW(Permutation::parse("1,3"), DomainError);
  EXPECT_THROW(Permutation::parse("1,a"), ParseError);
  EXPECT_THROW(Permutation::parse("1,,2"), ParseError);
  EXPECT_TRUE(Permutation::parse("").empty());
}

TEST(DescentSet, Examples) {
  EXPECT_EQ(descent_set(P("364512")), (std::vector<int>{2, 4}));
  EXPECT_TRUE(descent_set(P("123456")).empty());
  EXPECT_EQ(descent_set(P("21")), (std::vector<int>{1}));
}

TEST(UpDown, Examples) {
  EXPECT_TRUE(is_up_down(P("143625")));
  EXPECT_TRUE(is_up_down(P("12")));
  EXPECT_FALSE(is_up_down(P("21")));
  EXPECT_TRUE(is_up_down(Permutation{}));
  // Only even sizes count as up-down here.
  EXPECT_FALSE(is_up_down(P("132")));
  for (int n = 0; n <= 8; n += 2) {
    for (const auto& v : all_perms(n)) ASSERT_EQ(is_up_down(Permutation(v)), naive_up_down(v));
  }
}

TEST(Avoidance, Examples) {
  EXPECT_TRUE(avoids_1234(P("562413")));
  EXPECT_FALSE(avoids_1234(P("123456")));
  EXPECT_EQ(lis_length(P("123456").values()), 6);
  EXPECT_TRUE(avoids_1234(P("143625")));
  EXPECT_TRUE(avoids_123_word(std::vector<int>{8, 6, 11, 7, 2, 4, 1}));
  EXPECT_FALSE(avoids_123_word(std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(avoids_123_word(std::vector<int>{}));
}

TEST(Avoidance, AgreesWithQuarticScanUpToEight) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& v : all_perms(n)) {
      ASSERT_EQ(avoids_1234(Permutation(v)), !naive_contains_1234(v)) << Permutation(v).to_string();
    }
  }
}

TEST(Avoidance, Word123AgreesWithCubicScan) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& v : all_perms(n)) {
      ASSERT_EQ(avoids_123_word(v), !naive_contains_123(v));
      // Gaps in the alphabet do not matter.
      std::vector<int> spread(v);
      for (int& x : spread) x = 3 * x + 1;
      ASSERT_EQ(avoids_123_word(spread), !naive_contains_123(v));
    }
  }
}

TEST(Schutzenberger, Examples) {
  EXPECT_EQ(schutzenberger(P("48271635")), P("46382715"));
  EXPECT_EQ(schutzenberger(P("12")), P("12"));
  EXPECT_EQ(schutzenberger(Permutation{}), Permutation{});
  EXPECT_EQ(schutzenberger_word(std::vector<int>{1, 6, 4}, 8).letters()[0], 5);
  const auto w = schutzenberger_word(std::vector<int>{1, 6, 4}, 8);
  EXPECT_EQ(std::vector<int>(w.letters().begin(), w.letters().end()), (std::vector<int>{5, 3, 8}));
  const auto one = schutzenberger_word(std::vector<int>{1}, 2);
  EXPECT_EQ(one.letters()[0], 2);
  EXPECT_THROW(schutzenberger_word(std::vector<int>{3}, 2), DomainError);
  for (const auto& v : all_perms(6)) {
    const Permutation p(v);
    ASSERT_EQ(schutzenberger(schutzenberger(p)), p);
  }
}

TEST(ShiftedConcat, Examples) {
  EXPECT_EQ(shifted_concat(P("12"), P("1423")), P("561423"));
  EXPECT_EQ(shifted_concat(Permutation{}, P("2413")), P("2413"));
  EXPECT_EQ(shifted_concat(P("12"), P("12")), P("3412"));
}

TEST(ShiftedConcat, PreservesTheClass) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      for (const auto& s : collect_A2n(a)) {
        for (const auto& t : collect_A2n(b)) {
          const Permutation c = shifted_concat(s.perm(), t.perm());
          ASSERT_TRUE(is_up_down(c) && avoids_1234(c)) << c.to_string();
        }
      }
    }
  }
}

TEST(Criteria, Examples) {
  EXPECT_TRUE(criteria_borie(P("143625")).all());
  EXPECT_TRUE(criteria_borie(P("562413")).all());
  const auto c = criteria_borie(P("123456"));
  EXPECT_FALSE(c.c1);
  EXPECT_THROW(criteria_borie(P("132")), DomainError);
}

// Among up-down permutations the four conditions pick out exactly the
// 1234-avoiders, through size 10.
TEST(Criteria, ExactOnUpDownPermutations) {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t up_down = 0;
    for (const auto& v : all_perms(2 * n)) {
      if (!naive_up_down(v)) continue;
      ++up_down;
      const Permutation p(v);
      ASSERT_EQ(criteria_borie(p).all(), !naive_contains_1234(v)) << p.to_string();
    }
    const std::uint64_t euler[] = {1, 1, 5, 61, 1385, 50521};
    EXPECT_EQ(up_down, euler[n]);
  }
}

// The conditions never reject a member of A_2n(1234); what they miss is the
// up-down shape itself. Counts of accepted non-alternating permutations.
TEST(Criteria, AcceptSomePermutationsThatAreNotUpDown) {
  const std::uint64_t expected[] = {0, 1, 7, 81, 1200};
  for (int n = 0; n <= 4; ++n) {
    std::uint64_t accepted = 0, rejected_members = 0;
    for (const auto& v : all_perms(2 * n)) {
      const Permutation p(v);
      const bool verdict = criteria_borie(p).all();
      const bool member = naive_up_down(v) && !naive_contains_1234(v);
      if (member && !verdict) ++rejected_members;
      if (!member && verdict) ++accepted;
    }
    EXPECT_EQ(rejected_members, 0u) << n;
    EXPECT_EQ(accepted, expected[n]) << n;
  }
  EXPECT_TRUE(criteria_borie(P("21")).all());
  EXPECT_TRUE(criteria_borie(P("1432")).all());
}

TEST(Assemble, Examples) {
  EXPECT_EQ(assemble(std::vector<int>{3, 4, 1}, std::vector<int>{6, 5, 2}).perm(), P("364512"));
  EXPECT_EQ(assemble(std::vector<int>{8, 6, 11, 7, 2, 4, 1}, std::vector<int>{13, 12, 14, 10, 9, 5, 3})
                .to_string(),
            "8,13,6,12,11,14,7,10,2,9,4,5,1,3");
  EXPECT_EQ(assemble(std::vector<int>{1}, std::vector<int>{2}).perm(), P("12"));
  EXPECT_THROW(assemble(std::vector<int>{2}, std::vector<int>{1}), DomainError);
  EXPECT_THROW(assemble(std::vector<int>{1, 2}, std::vector<int>{3}), DomainError);
  const auto a = AlternatingPermutation(P("364512"));
  const PartialWord bot = a.bot(), top = a.top();
  EXPECT_EQ(std::vector<int>(bot.letters().begin(), bot.letters().end()), (std::vector<int>{3, 4, 1}));
  EXPECT_EQ(std::vector<int>(top.letters().begin(), top.letters().end()), (std::vector<int>{6, 5, 2}));
  EXPECT_THROW(AlternatingPermutation(P("21")), DomainError);
  EXPECT_THROW(AlternatingPermutation(P("132")), DomainError);
}

TEST(Standardize, Examples) {
  EXPECT_EQ(standardize(std::vector<int>{8, 6, 11, 7, 2, 4, 1}), P("6475231"));
  EXPECT_EQ(standardize(std::vector<int>{1, 6, 4}), P("132"));
  EXPECT_EQ(standardize(std::vector<int>{2, 3, 1}), P("231"));
}

TEST(EnumerateA2n, MatchesBruteForceFilter) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<Permutation> oracle;
    for (const auto& v : all_perms(2 * n)) {
      if (naive_up_down(v) && !naive_contains_1234(v)) oracle.emplace_back(v);
    }
    std::vector<Permutation> got;
    for (const auto& a : collect_A2n(n)) got.push_back(a.perm());
    EXPECT_EQ(got, oracle) << "n=" << n;  // both lexicographic
  }
  std::vector<std::string> two;
  for (const auto& a : collect_A2n(2)) two.push_back(a.to_string());
  EXPECT_EQ(two, (std::vector<std::string>{"1,3,2,4", "1,4,2,3", "2,3,1,4", "2,4,1,3", "3,4,1,2"}));
}

TEST(EnumerateA2n, SixMatchesTheReferenceList) {
  std::vector<std::string> got;
  for (const auto& a : collect_A2n(3)) got.push_back(a.to_string());
  EXPECT_EQ(got, reference_a6());
  EXPECT_EQ(got.front(), "1,4,3,6,2,5");
  EXPECT_EQ(got.back(), "5,6,3,4,1,2");
}

TEST(EnumerateA2n, Counts) {
  const std::size_t ref[] = {1, 1, 5, 42, 462, 6006};
  for (int n = 0; n <= 5; ++n) {
    std::size_t c = 0;
    A2nStream s(n);
    while (s.next()) ++c;
    EXPECT_EQ(c, ref[n]) << n;
  }
}
