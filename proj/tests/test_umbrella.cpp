#include <gtest/gtest.h>

#include "oracles.hpp"
#include "umbrella/errors.hpp"
#include "umbrella/umbrella.hpp"

using namespace umbrella;
using oracles::running_matrix;

namespace {

WeightVector w(const std::string& s) { return parse_weights(s); }

std::vector<IndexSet> sets(std::initializer_list<IndexSet> xs) { return xs; }

std::string reason_of(const IntMatrix& m) {
  try {
    ToricMatrix a(m);
  } catch (const ValidationError& e) {
    return e.reason();
  }
  return "";
}

// h . a_j = L_j exactly on members, < elsewhere.
bool witness_ok(const ToricMatrix& a, const WeightVector& l, const Face& f) {
  for (std::size_t j = 0; j < a.n(); ++j) {
    Rational v = 0;
    for (std::size_t r = 0; r < a.d(); ++r) v += f.witness[r] * a.matrix()(r, j);
    const bool member = std::binary_search(f.members.begin(), f.members.end(), j);
    if (member ? v != l[j] : v >= l[j]) return false;
  }
  return true;
}

}  // namespace

TEST(ToricMatrix, Validation) {
  EXPECT_EQ(reason_of(IntMatrix{{1, -1}}), "not-pointed");
  EXPECT_EQ(reason_of(IntMatrix{{1, 0}, {0, 0}}), "zero-column");
  EXPECT_EQ(reason_of(IntMatrix{{1, 2}, {2, 4}}), "rank-deficient");
  EXPECT_EQ(reason_of(IntMatrix{{2, 4}}), "lattice-not-full");
  EXPECT_EQ(reason_of(IntMatrix{{3, 1, 0}, {0, 1, 3}}), "lattice-not-full");
  EXPECT_EQ(reason_of(IntMatrix{{0, 1, 1, 4}, {3, 0, 2, 1}}), "");
  const ToricMatrix p(IntMatrix{{3, 1, 0}, {0, 1, 3}}, LatticePolicy::kAllowSublattice);
  EXPECT_FALSE(p.lattice_full());
}

TEST(ToricMatrix, PointednessWitness) {
  const ToricMatrix a = running_matrix();
  for (const auto& c : a.columns()) {
    Rational v = 0;
    Integer g = 0;
    for (std::size_t r = 0; r < 2; ++r) {
      v += a.pointedness_witness()[r] * c[r];
      g += a.positive_grading()[r] * c[r];
    }
    EXPECT_GE(v, 1);
    EXPECT_GT(g, 0);
  }
}

TEST(Weights, ParseFormat) {
  EXPECT_EQ(format_weights(w("1,1/2,-3,0")), "1,1/2,-3,0");
  EXPECT_THROW(w("1,,2"), ValidationError);
  EXPECT_THROW(w("a"), ValidationError);
}

TEST(IsFace, Examples) {
  const ToricMatrix a = running_matrix();
  const FaceTest t = is_face(a, w("1,1,1,0"), {0, 3});
  ASSERT_TRUE(t.is_face);
  EXPECT_EQ(t.witness, (QVector{Rational(-1, 12), Rational(1, 3)}));
  EXPECT_FALSE(is_face(a, w("1,1,1,0"), {2, 3}).is_face);
  EXPECT_TRUE(is_face(a, w("1,1,1,0"), {}).is_face);
  EXPECT_TRUE(is_face(a, w("-1,2,0,3"), {}).is_face);
}

TEST(ComputeUmbrella, RunningExample) {
  const ToricMatrix a = running_matrix();
  const Umbrella t0 = compute_umbrella(a, w("1,1,1,1"));
  EXPECT_EQ(t0.facet_sets(), sets({{0, 3}, {1, 3}}));
  EXPECT_EQ(t0.face_sets(), sets({{}, {0}, {1}, {3}, {0, 3}, {1, 3}}));
  const Umbrella t1 = compute_umbrella(a, w("1,1,1,2"));
  EXPECT_EQ(t1.facet_sets(), sets({{0, 2}, {1, 3}, {2, 3}}));
  EXPECT_TRUE(t1.contains({2}));
  EXPECT_EQ(compute_umbrella(a, w("1,1,1,5")).facet_sets(), sets({{0, 2}, {1, 2}}));
  EXPECT_EQ(compute_umbrella(a, w("1,1,1,0")).facet_sets(), sets({{0, 3}, {1, 3}}));
  EXPECT_EQ(compute_umbrella(ToricMatrix(IntMatrix::identity(2)), w("1,1")).face_sets(),
            sets({{}, {0}, {1}, {0, 1}}));
}

TEST(ComputeUmbrella, WitnessesAndDims) {
  const ToricMatrix a = running_matrix();
  for (const char* l : {"1,1,1,1", "1,1,1,2", "1,1,1,5", "1,1,1,0", "2,-1,1,0", "0,0,0,0"}) {
    const Umbrella u = compute_umbrella(a, w(l));
    for (const auto& f : u.faces()) {
      EXPECT_TRUE(witness_ok(a, w(l), f)) << l << " " << format_index_set(f.members);
      EXPECT_EQ(f.dim, f.members.empty() ? -1 : static_cast<int>(span_dim(a, f.members)) - 1);
    }
    EXPECT_EQ(oracles::sorted_sets(u.face_sets()), oracles::brute_force_faces(a, w(l))) << l;
  }
}

TEST(ComputeUmbrella, OrderingAndLookup) {
  const Umbrella u = compute_umbrella(running_matrix(), w("1,1,1,2"));
  EXPECT_EQ(u.faces().front().dim_label(), "empty");
  EXPECT_TRUE(u.is_facet({2, 3}));
  EXPECT_FALSE(u.is_facet({2}));
  EXPECT_EQ(u.facets_containing({2}), sets({{0, 2}, {2, 3}}));
  EXPECT_EQ(u.find({0, 1}), nullptr);
  for (std::size_t i = 1; i < u.faces().size(); ++i) {
    const auto& x = u.faces()[i - 1];
    const auto& y = u.faces()[i];
    EXPECT_TRUE(x.dim < y.dim || (x.dim == y.dim && x.members < y.members));
  }
}

TEST(ComputeUmbrella, MatchesHullOracle) {
  oracles::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const ToricMatrix a = oracles::random_toric_matrix(rng, 2, 5);
    const WeightVector l = oracles::random_weights(rng, 5, true);
    EXPECT_EQ(oracles::sorted_sets(compute_umbrella(a, l, {.witnesses = false}).face_sets()), oracles::hull_umbrella_d2(a, l));
  }
}

TEST(ZeroUmbrella, Examples) {
  EXPECT_EQ(zero_umbrella(running_matrix()).face_sets(), sets({{}, {0}, {1}, {0, 1, 2, 3}}));
  EXPECT_EQ(zero_umbrella(ToricMatrix(IntMatrix::identity(3))).face_sets(),
            sets({{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}));
  EXPECT_EQ(zero_umbrella(ToricMatrix(IntMatrix{{1}})).face_sets(), sets({{}, {0}}));
}

TEST(ConeFaces, SquarePyramid) {
  std::vector<ZVector> gens;
  for (auto [x, y] : {std::pair{0, 0}, {1, 0}, {1, 1}, {0, 1}}) gens.push_back(ZVector{x, y, 1});
  const auto f = cone_faces(gens);
  EXPECT_EQ(f.size(), 10u);  // apex, 4 rays, 4 walls, the cone
  EXPECT_NE(std::find(f.begin(), f.end(), IndexSet{0, 1}), f.end());
  EXPECT_EQ(std::find(f.begin(), f.end(), IndexSet{0, 2}), f.end());
}

TEST(Pyramid, Examples) {
  const ToricMatrix id(IntMatrix::identity(2));
  EXPECT_TRUE(is_pyramid(id, {0, 1}, 0));
  const ToricMatrix dep(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  EXPECT_FALSE(is_pyramid(dep, {0, 1, 2}, 2));
  EXPECT_TRUE(is_pyramid(dep, {1}, 1));
  EXPECT_THROW(is_pyramid(dep, {1}, 0), std::invalid_argument);
}

TEST(Homogeneity, Examples) {
  EXPECT_TRUE(is_L_homogeneous(ToricMatrix(IntMatrix{{1, 1, 1}, {0, 1, 2}}), w("1,1,1")));
  EXPECT_FALSE(is_L_homogeneous(running_matrix(), w("1,1,1,1")));
  EXPECT_TRUE(is_L_homogeneous(running_matrix(), w("0,0,0,0")));
}
