#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/exactmath.hpp"

using namespace umbrella;

namespace {

ZVector z(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Integer abs_det(const IntMatrix& m) { return abs(determinant(m)); }

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3");
  EXPECT_EQ(to_string(parse_rational("-2/4")), "-1/2");
  EXPECT_THROW(parse_rational("2/-4"), ValidationError);
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("x"), ValidationError);
  EXPECT_THROW(parse_rational(""), ValidationError);
}

TEST(Rational, StaysReduced) {
  Rational x = parse_rational("1/3") + parse_rational("1/6");
  EXPECT_EQ(x.get_num(), 1);
  EXPECT_EQ(x.get_den(), 2);
}

TEST(Hnf, PreservesDeterminant) {
  const IntMatrix m{{2, 1}, {0, 3}};
  const HermiteForm h = hnf(m);
  EXPECT_EQ(abs_det(h.h), 6);
  EXPECT_EQ(abs_det(h.u), 1);
  EXPECT_EQ(m * h.u, h.h);
}

TEST(Hnf, IdentityIsFixed) {
  EXPECT_EQ(hnf(IntMatrix::identity(3)).h, IntMatrix::identity(3));
}

TEST(Hnf, RunningColumns) {
  const HermiteForm h = hnf(IntMatrix{{0, 4}, {3, 1}});
  EXPECT_EQ(abs_det(h.h), 12);
  // Lower echelon with positive pivots.
  EXPECT_EQ(h.h(0, 1), 0);
  EXPECT_GT(h.h(0, 0), 0);
  EXPECT_GT(h.h(1, 1), 0);
  EXPECT_GE(h.h(1, 0), 0);
  EXPECT_LT(h.h(1, 0), h.h(1, 1));
}

TEST(Hnf, InvariantUnderUnimodularColumns) {
  oracles::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    IntMatrix m(2, 3);
    std::uniform_int_distribution<long> e(-6, 6);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = e(rng);
    const IntMatrix u = oracles::random_unimodular(rng, 3);
    EXPECT_EQ(hnf(m).h, hnf(m * u).h);
  }
}

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix::identity(2)), (std::vector<Integer>{1, 1}));
  EXPECT_EQ(snf(IntMatrix{{0, 4}, {3, 1}}), (std::vector<Integer>{1, 12}));
  EXPECT_EQ(snf(IntMatrix{{2, 0}, {0, 2}}), (std::vector<Integer>{2, 2}));
  EXPECT_EQ(snf(IntMatrix{{1, 2}, {2, 4}}), (std::vector<Integer>{1, 0}));
}

TEST(Snf, ProductIsDeterminantAndDivisibility) {
  oracles::Rng rng(11);
  std::uniform_int_distribution<long> e(-9, 9);
  for (int i = 0; i < 100; ++i) {
    IntMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = e(rng);
    const auto d = snf(m);
    Integer prod = 1;
    for (const auto& x : d) prod *= x;
    EXPECT_EQ(prod, abs_det(m));
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
      if (d[k] != 0) {
        EXPECT_EQ(d[k + 1] % d[k], 0);
      }
    const IntMatrix u = oracles::random_unimodular(rng, 3), w = oracles::random_unimodular(rng, 3);
    EXPECT_EQ(snf(u * m * w), d);
  }
}

TEST(IntegerKernel, RunningMatrix) {
  const IntMatrix a{{0, 1, 1, 4}, {3, 0, 2, 1}};
  const LatticeBasis k = integer_kernel(a);
  EXPECT_EQ(k.rank(), 2u);
  EXPECT_TRUE(k.contains(z({1, 12, 0, -3})));
  EXPECT_TRUE(k.contains(z({0, 7, 1, -2})));
  for (const auto& u : k.basis()) EXPECT_EQ(a * u, z({0, 0}));
  // Saturated, and every small kernel vector is a member.
  EXPECT_EQ(saturation(k, LatticeBasis::standard(4)), k);
  for (const auto& u : oracles::enumerate_kernel(a, 4)) EXPECT_TRUE(k.contains(u));
}

TEST(IntegerKernel, TrivialCases) {
  EXPECT_EQ(integer_kernel(IntMatrix::identity(3)).rank(), 0u);
  const LatticeBasis k = integer_kernel(IntMatrix{{1, 1}});
  EXPECT_EQ(k, LatticeBasis(2, {z({1, -1})}));
}

TEST(LatticeBasis, CanonicalRepresentation) {
  const LatticeBasis x(2, {z({2, 0}), z({0, 2})});
  const LatticeBasis y(2, {z({2, 2}), z({0, 2}), z({4, 6})});
  EXPECT_EQ(x, y);
}

TEST(LatticeIndex, Examples) {
  const LatticeBasis z2 = LatticeBasis::standard(2);
  EXPECT_EQ(lattice_index(LatticeBasis(2, {z({0, 3}), z({4, 1})}), z2).value, 12);
  EXPECT_EQ(lattice_index(z2, z2).value, 1);
  EXPECT_EQ(lattice_index(LatticeBasis(2, {z({2, 0}), z({0, 2})}), z2).value, 4);
  EXPECT_FALSE(lattice_index(LatticeBasis(2, {z({1, 2})}), z2).is_finite());
  EXPECT_THROW(lattice_index(z2, LatticeBasis(2, {z({2, 0}), z({0, 2})})), Error);
}

TEST(LatticeIndex, Multiplicative) {
  const LatticeBasis big = LatticeBasis::standard(2);
  const LatticeBasis mid(2, {z({2, 0}), z({0, 1})});
  const LatticeBasis sub(2, {z({6, 0}), z({2, 5})});
  EXPECT_EQ(lattice_index(sub, mid).value * lattice_index(mid, big).value, lattice_index(sub, big).value);
}

TEST(Saturation, Examples) {
  const LatticeBasis z2 = LatticeBasis::standard(2);
  EXPECT_EQ(saturation(LatticeBasis(2, {z({2, 4})}), z2), LatticeBasis(2, {z({1, 2})}));
  const LatticeBasis a13(2, {z({0, 3}), z({1, 2})});
  const LatticeBasis a3(2, {z({1, 2})});
  EXPECT_EQ(saturation(a3, a13), a3);
  const LatticeBasis s = saturation(LatticeBasis(2, {z({3, 3})}), z2);
  EXPECT_EQ(saturation(s, z2), s);
  EXPECT_THROW(saturation(z2, a13), Error);
}

TEST(QuotientCoordinates, Examples) {
  const LatticeBasis a13(2, {z({0, 3}), z({1, 2})});
  const LatticeBasis a3(2, {z({1, 2})});
  const QuotientMap q = quotient_coordinates(a13, a3);
  EXPECT_EQ(q.target_rank(), 1u);
  EXPECT_EQ(abs(q.apply(z({0, 3}))[0]), 1);
  EXPECT_EQ(q.apply(z({1, 2})), z({0}));

  const LatticeBasis z2 = LatticeBasis::standard(2);
  const QuotientMap id = quotient_coordinates(z2, LatticeBasis(2, {}));
  EXPECT_EQ(id.target_rank(), 2u);
  EXPECT_EQ(abs_det(id.projection()), 1);
  EXPECT_EQ(quotient_coordinates(z2, z2).target_rank(), 0u);
}

TEST(QuotientCoordinates, RejectsNonSaturated) {
  const LatticeBasis z2 = LatticeBasis::standard(2);
  try {
    quotient_coordinates(z2, LatticeBasis(2, {z({2, 0})}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonFreeQuotient);
  }
}

TEST(QuotientCoordinates, KernelIsExactlySub) {
  const LatticeBasis z3 = LatticeBasis::standard(3);
  const LatticeBasis sub(3, {z({1, 2, 3})});
  const QuotientMap q = quotient_coordinates(z3, sub);
  EXPECT_EQ(q.apply(z({1, 2, 3})), z({0, 0}));
  // Surjective: the 2x2 minors are coprime.
  Integer g = 0;
  for (auto [i, j] : {std::pair{0u, 1u}, {0u, 2u}, {1u, 2u}})
    g = gcd(g, determinant(q.projection().select_columns({i, j})));
  EXPECT_EQ(g, 1);
}
