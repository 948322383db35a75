#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>
#include <vector>

#include "spinor/error.hpp"
#include "spinor/weyl.hpp"

using namespace spinor::weyl;

namespace {

RootVector e(int n, int i) { return RootVector::unit(n, i); }

// Breadth-first search over W(D_n) from the identity with right
// multiplication by simple reflections; the BFS depth is the word length.
std::map<WeylElement, int> bfs_lengths(int n) {
  std::map<WeylElement, int> depth;
  std::queue<WeylElement> frontier;
  depth.emplace(WeylElement::identity(n), 0);
  frontier.push(WeylElement::identity(n));
  while (!frontier.empty()) {
    auto w = frontier.front();
    frontier.pop();
    for (int u = 1; u <= n; ++u) {
      auto next = w * simple_reflection(n, u);
      if (depth.emplace(next, depth[w] + 1).second) frontier.push(next);
    }
  }
  return depth;
}

std::vector<WeylElement> parabolic_subgroup(int n, int excluded) {
  std::set<WeylElement> seen{WeylElement::identity(n)};
  std::vector<WeylElement> todo{WeylElement::identity(n)};
  while (!todo.empty()) {
    auto w = todo.back();
    todo.pop_back();
    for (int u = 1; u <= n; ++u) {
      if (u == excluded) continue;
      auto next = w * simple_reflection(n, u);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST(SimpleRoot, BourbakiConvention) {
  EXPECT_EQ(simple_root(5, 2), e(5, 2) - e(5, 3));
  EXPECT_EQ(simple_root(5, 5), e(5, 4) + e(5, 5));
  EXPECT_EQ(simple_root(4, 4), e(4, 3) + e(4, 4));
  for (int n = 3; n <= 8; ++n)
    for (int u = 1; u <= n; ++u) {
      EXPECT_TRUE(simple_root(n, u).is_root());
      EXPECT_EQ(simple_root(n, u).squared_length(), 2);
    }
}

TEST(SimpleRoot, RejectsBadArguments) {
  EXPECT_THROW(simple_root(2, 1), spinor::ArgumentError);
  EXPECT_THROW(simple_root(5, 0), spinor::ArgumentError);
  EXPECT_THROW(simple_root(5, 6), spinor::ArgumentError);
}

TEST(CorootPairing, DynkinAdjacency) {
  EXPECT_EQ(coroot_pairing(simple_root(5, 4), simple_root(5, 5)), 0);
  EXPECT_EQ(coroot_pairing(simple_root(5, 3), simple_root(5, 5)), -1);
  EXPECT_EQ(coroot_pairing(simple_root(5, 2), simple_root(5, 2)), 2);
  EXPECT_THROW(coroot_pairing(RootVector::zero(5), simple_root(5, 1)), spinor::ArgumentError);
}

TEST(Reflect, HandComputedImages) {
  EXPECT_EQ(reflect(simple_root(5, 5), simple_root(5, 3)), e(5, 3) + e(5, 5));
  EXPECT_EQ(reflect(simple_root(4, 4), simple_root(4, 2)), e(4, 2) + e(4, 4));
  const auto g = simple_root(6, 3);
  EXPECT_EQ(reflect(g, g), -g);
  EXPECT_THROW(reflect(RootVector::zero(4), g), spinor::ArgumentError);
}

TEST(Reflect, IsInvolutiveOnAllRootPairs) {
  for (int n = 3; n <= 6; ++n) {
    const auto roots = positive_roots(n);
    for (const auto& g : roots)
      for (const auto& d : roots) {
        EXPECT_EQ(reflect(g, reflect(g, d)), d);
        EXPECT_TRUE(reflect(g, d).is_root());
      }
  }
}

TEST(WeylElement, RejectsOddSignChanges) {
  EXPECT_THROW(WeylElement({0, 1, 2}, {-1, 1, 1}), spinor::ArgumentError);
  EXPECT_THROW(WeylElement({0, 0, 2}, {1, 1, 1}), spinor::ArgumentError);
  EXPECT_NO_THROW(WeylElement({1, 0, 2}, {-1, -1, 1}));
}

TEST(WeylFromWord, Basics) {
  const std::vector<int> empty;
  EXPECT_EQ(weyl_from_word(5, empty), WeylElement::identity(5));
  const std::vector<int> sn{5};
  EXPECT_EQ(weyl_from_word(5, sn).apply(e(5, 5)), -e(5, 4));
  EXPECT_EQ(weyl_from_word(5, sn).apply(e(5, 4)), -e(5, 5));
  const std::vector<int> twice{1, 1};
  EXPECT_EQ(weyl_from_word(5, twice), WeylElement::identity(5));
  const std::vector<int> bad{6};
  EXPECT_THROW(weyl_from_word(5, bad), spinor::ArgumentError);
}

TEST(WeylFromWord, AgreesWithIteratedReflection) {
  const std::vector<int> word{3, 1, 4, 2, 4, 3};
  const auto w = weyl_from_word(4, word);
  for (const auto& g : positive_roots(4)) {
    auto v = g;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(simple_root(4, *it), v);
    EXPECT_EQ(w.apply(g), v);
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length(WeylElement::identity(5)), 0);
  EXPECT_EQ(length(longest_element(5)), 20);
  EXPECT_EQ(length(simple_reflection(5, 1)), 1);
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(length(longest_element(n)), n * (n - 1));
}

TEST(LongestElement, Shape) {
  const auto w4 = longest_element(4);
  EXPECT_EQ(w4.signs(), (std::vector<int>{-1, -1, -1, -1}));
  EXPECT_EQ(w4.perm(), (std::vector<int>{0, 1, 2, 3}));
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(longest_element(n) * longest_element(n), WeylElement::identity(n));
}

TEST(Length, MatchesBfsOracleExhaustively) {
  for (int n = 3; n <= 4; ++n) {
    const auto depth = bfs_lengths(n);
    EXPECT_EQ(depth.size(), static_cast<std::size_t>(n == 3 ? 24 : 192));
    for (const auto& [w, d] : depth) EXPECT_EQ(length(w), d) << w.to_string();
  }
}

TEST(Length, PoincarePolynomialIsPalindromic) {
  for (int n = 3; n <= 4; ++n) {
    const int top = n * (n - 1);
    std::vector<int> counts(top + 1, 0);
    for (const auto& [w, d] : bfs_lengths(n)) ++counts[length(w)];
    for (int k = 0; k <= top; ++k) EXPECT_EQ(counts[k], counts[top - k]) << "n=" << n << " k=" << k;
    EXPECT_EQ(counts[top], 1);
  }
}

TEST(MinCosetRep, Examples) {
  const auto p5 = ParabolicDatum::spinor(5);
  EXPECT_EQ(min_coset_rep(WeylElement::identity(5), p5), WeylElement::identity(5));
  EXPECT_EQ(min_coset_rep(simple_reflection(5, 1), p5), WeylElement::identity(5));
  EXPECT_EQ(length(min_coset_rep(longest_element(5), p5)), 10);
}

TEST(MinCosetRep, MatchesExhaustiveCosetScan) {
  for (int n = 3; n <= 4; ++n) {
    const auto p = ParabolicDatum::spinor(n);
    const auto wp = parabolic_subgroup(n, n);
    for (const auto& [w, d] : bfs_lengths(n)) {
      const auto rep = min_coset_rep(w, p);
      WeylElement best = w;
      for (const auto& u : wp)
        if (length(w * u) < length(best)) best = w * u;
      EXPECT_EQ(rep, best);
      for (int u = 1; u < n; ++u) EXPECT_GT(length(rep * simple_reflection(n, u)), length(rep));
    }
  }
}

TEST(IsReduced, Examples) {
  const std::vector<int> twice{1, 1}, empty;
  EXPECT_FALSE(is_reduced(5, twice));
  EXPECT_TRUE(is_reduced(5, empty));
  const std::vector<int> spinor5{4, 3, 2, 1, 5, 3, 2, 4, 3, 5};
  EXPECT_TRUE(is_reduced(5, spinor5));
}

TEST(RootVector, Formatting) {
  EXPECT_EQ((e(5, 3) + e(5, 5)).to_string(), "e_3+e_5");
  EXPECT_EQ((e(5, 1) - e(5, 2)).to_string(), "e_1-e_2");
  EXPECT_EQ(RootVector::zero(3).to_string(), "0");
}
