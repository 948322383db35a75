#include <gtest/gtest.h>

#include "spinor/error.hpp"
#include "spinor/field.hpp"
#include "spinor/matrix.hpp"
#include "spinor/trials.hpp"

using namespace spinor;
using namespace spinor::iso;

TEST(Field, PrimeArithmetic) {
  const PrimeField f5(5);
  EXPECT_EQ(f5.add(3, 4), 2u);
  EXPECT_EQ(f5.sub(1, 3), 3u);
  EXPECT_EQ(f5.mul(3, 4), 2u);
  EXPECT_EQ(f5.from_int(-1), 4u);
  for (std::uint32_t a = 1; a < 5; ++a) EXPECT_EQ(f5.mul(a, f5.inv(a)), 1u);
  EXPECT_THROW(f5.inv(0), ArgumentError);
  EXPECT_THROW(PrimeField(4), ArgumentError);
  EXPECT_THROW(PrimeField(1), ArgumentError);
  EXPECT_NO_THROW(PrimeField(2147483647));
  EXPECT_EQ(PrimeField(7).name(), "7");
}

TEST(Field, Rationals) {
  const Rationals q;
  EXPECT_EQ(q.mul(q.from_int(3), q.inv(q.from_int(6))), mpq_class(1, 2));
  EXPECT_THROW(q.inv(q.zero()), ArgumentError);
  EXPECT_EQ(q.format(q.mul(q.from_int(-2), q.inv(q.from_int(4)))), "-1/2");
  EXPECT_EQ(q.name(), "Q");
}

TEST(Field, IsPrime) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(97));
}

TEST(Matrix, RankAndKernels) {
  const Rationals q;
  auto m = Matrix<Rationals>::from_rows(q, 3, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(m.rank(), 2);
  const auto k = m.right_kernel();
  ASSERT_EQ(k.size(), 1u);
  for (int i = 0; i < 3; ++i) {
    mpq_class s = 0;
    for (int j = 0; j < 3; ++j) s += m(i, j) * k[0][j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(m.left_kernel().size(), 1u);
  EXPECT_THROW(Matrix<Rationals>::from_rows(q, 3, {{1, 2}}), ArgumentError);
}

TEST(Matrix, SkewInCharacteristicTwo) {
  const PrimeField f2(2);
  // Symmetric equals skew mod 2, but a nonzero diagonal is not alternating.
  EXPECT_FALSE(Matrix<PrimeField>::from_rows(f2, 2, {{1, 0}, {0, 0}}).is_skew());
  EXPECT_TRUE(Matrix<PrimeField>::from_rows(f2, 2, {{0, 1}, {1, 0}}).is_skew());
}

TEST(Subspace, MeetAndJoinExamples) {
  const Rationals q;
  const auto s = Subspace<Rationals>::span(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto t = Subspace<Rationals>::span(q, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(meet(s, t), Subspace<Rationals>::span(q, 4, {{0, 1, 0, 0}}));
  EXPECT_EQ(join(s, t).dim(), 3);
  EXPECT_EQ(meet(s, Subspace<Rationals>::zero(q, 4)).dim(), 0);
  EXPECT_EQ(join(s, Subspace<Rationals>::whole(q, 4)).dim(), 4);
  // Canonical representatives: different spanning sets, same subspace.
  EXPECT_EQ(Subspace<Rationals>::span(q, 3, {{1, 1, 0}, {1, -1, 0}}),
            Subspace<Rationals>::span(q, 3, {{2, 0, 0}, {0, 3, 0}, {1, 1, 0}}));
  EXPECT_THROW(meet(s, Subspace<Rationals>::zero(q, 3)), ArgumentError);
}

namespace {

template <class F>
void modular_law(const F& field, int trials) {
  Rng rng(11);
  for (int t = 0; t < trials; ++t) {
    const int m = static_cast<int>(rng.uniform(1, 7));
    std::vector<Vec<F>> a, b;
    for (auto i = rng.uniform(0, m); i > 0; --i) a.push_back(random_vector(field, m, rng));
    for (auto i = rng.uniform(0, m); i > 0; --i) b.push_back(random_vector(field, m, rng));
    if (!a.empty() && !b.empty() && t % 2 == 0) b.front() = a.front();
    const auto s = Subspace<F>::span(field, m, a);
    const auto u = Subspace<F>::span(field, m, b);
    const auto cap = meet(s, u);
    const auto cup = join(s, u);
    EXPECT_EQ(cap.dim() + cup.dim(), s.dim() + u.dim());
    EXPECT_TRUE(s.contains(cap) && u.contains(cap));
    EXPECT_TRUE(cup.contains(s) && cup.contains(u));
    EXPECT_EQ(meet(s, u), meet(u, s));
  }
}

}  // namespace

TEST(Subspace, ModularLawOverSeveralFields) {
  modular_law(Rationals{}, 300);
  modular_law(PrimeField(2), 300);
  modular_law(PrimeField(3), 300);
  modular_law(PrimeField(5), 300);
}
