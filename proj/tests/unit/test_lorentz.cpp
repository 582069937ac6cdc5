#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "ruled4/errors.hpp"
#include "ruled4/lorentz.hpp"
#include "support/oracles.hpp"

using namespace ruled4;
using namespace ruled4::testing;

TEST(Vec4, RejectsNonFinite) {
  EXPECT_THROW(Vec4(std::nan(""), 0, 0, 0), DomainError);
  EXPECT_THROW(Vec4(0, std::numeric_limits<double>::infinity(), 0, 0), DomainError);
  EXPECT_THROW(Vec4(1, 2, 3, 4) / 0.0, DomainError);
}

TEST(LorentzDot, Examples) {
  EXPECT_EQ(lorentz_dot({1, 0, 0, 0}, {1, 0, 0, 0}), -1.0);
  EXPECT_EQ(lorentz_dot({0, 1, 0, 0}, {0, 1, 0, 0}), 1.0);
  EXPECT_EQ(lorentz_dot({3, 1, 2, 3}, {1, 2, 0, 1}), 2.0);
}

TEST(LorentzDot, SymmetricAndBilinear) {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const Vec4 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    const double s = uniform(rng, -3, 3);
    EXPECT_DOUBLE_EQ(lorentz_dot(x, y), lorentz_dot(y, x));
    EXPECT_NEAR(lorentz_dot(x + s * y, z), lorentz_dot(x, z) + s * lorentz_dot(y, z), 1e-12);
  }
}

TEST(Characterize, Examples) {
  const auto t = characterize({1, 0, 0, 0});
  EXPECT_EQ(t.norm, 1.0);
  EXPECT_EQ(t.character, CausalCharacter::Timelike);
  EXPECT_EQ(t.memberships, std::set<ModelSpace>{ModelSpace::Hyperbolic3});

  const auto l = characterize({1, 1, 0, 0});
  EXPECT_EQ(l.norm, 0.0);
  EXPECT_EQ(l.character, CausalCharacter::Lightlike);
  EXPECT_EQ(l.memberships, std::set<ModelSpace>{ModelSpace::LightCone});

  const auto s = characterize({3, 1, 2, 3});
  EXPECT_DOUBLE_EQ(s.norm, std::sqrt(5.0));
  EXPECT_EQ(s.character, CausalCharacter::Spacelike);
  EXPECT_TRUE(s.memberships.empty());

  EXPECT_EQ(characterize({0, 0, 0, 0}).character, CausalCharacter::Zero);
  EXPECT_EQ(characterize({-1, 0, 0, 0}).memberships, std::set<ModelSpace>{});
  EXPECT_EQ(characterize({0, 0, 1, 0}).memberships, std::set<ModelSpace>{ModelSpace::DeSitter3});
}

TEST(Characterize, LightlikeIsScaleInvariant) {
  for (double scale : {1e-8, 1.0, 1e8}) {
    EXPECT_EQ(characterize(Vec4(1, 0, 1, 0) * scale).character, CausalCharacter::Lightlike) << scale;
  }
}

TEST(Cross4, Examples) {
  EXPECT_EQ(cross4(Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}, Vec4{0, 0, 0, 1}), Vec4(-1, 0, 0, 0));
  EXPECT_EQ(cross4(Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}), Vec4(0, 0, 0, -1));
  const Vec4 x{1, 2, 3, 4}, z{-1, 0, 5, 2};
  EXPECT_EQ(cross4(x, x, z), Vec4(0, 0, 0, 0));
}

// <cross4(x, y, z), w> = det[w; x; y; z] against the permutation-sum oracle.
TEST(Cross4, DeterminantPairingAgainstLeibniz) {
  Rng rng(12);
  for (int n = 0; n < 1000; ++n) {
    const Vec4 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng), w = random_vec(rng);
    const double want = det4_leibniz(w, x, y, z);
    EXPECT_NEAR(lorentz_dot(cross4(x, y, z), w), want, 1e-12 * std::max(1.0, std::abs(want)));
    EXPECT_NEAR(det4(w, x, y, z), want, 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(Cross4, OrthogonalAlternatingAndLagrange) {
  Rng rng(13);
  for (int n = 0; n < 500; ++n) {
    const Vec4 x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    const Vec4 c = cross4(x, y, z);
    for (const Vec4& v : {x, y, z}) EXPECT_NEAR(lorentz_dot(c, v), 0.0, 1e-13);
    const Vec4 swapped = cross4(y, x, z);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(swapped[k], -c[k], 1e-14);

    Eigen::Matrix3d gram;
    const std::array<Vec4, 3> rows{x, y, z};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) gram(i, j) = lorentz_dot(rows[i], rows[j]);
    }
    EXPECT_LE(rel_err(lorentz_dot(c, c), -gram.determinant()), 1e-10);
  }
}
