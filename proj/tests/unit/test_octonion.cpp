#include <gtest/gtest.h>

#include <cmath>

#include "ruled4/errors.hpp"
#include "ruled4/octonion.hpp"
#include "support/oracles.hpp"

using namespace ruled4;
using namespace ruled4::testing;

namespace {

int wrap(int n) {
  const int m = ((n % 7) + 7) % 7;
  return m == 0 ? 7 : m;
}

Octonion random_octonion(Rng& rng) {
  std::array<double, 8> a{};
  for (double& v : a) v = uniform(rng, -1, 1);
  return Octonion(a);
}

double max_diff(const Octonion& p, const Octonion& q) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

}  // namespace

TEST(MulTable, SeedExamples) {
  const MulTable t = MulTable::build({1, 2, 4});
  EXPECT_EQ(t.product(1, 2).sign, 1);
  EXPECT_EQ(t.product(1, 2).index, 4);
  EXPECT_EQ(t.product(2, 3).sign, 1);
  EXPECT_EQ(t.product(2, 3).index, 5);
  EXPECT_EQ(t.product(2, 4).sign, 1);
  EXPECT_EQ(t.product(2, 4).index, 1);
}

TEST(MulTable, FourStructuralRulesExhaustive) {
  const MulTable& t = default_table();
  for (int i = 1; i <= 7; ++i) {
    EXPECT_EQ(t.product(i, i).sign, -1);
    EXPECT_EQ(t.product(i, i).index, 0);
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      const auto ij = t.product(i, j);
      const auto ji = t.product(j, i);
      EXPECT_EQ(ji.index, ij.index);
      EXPECT_EQ(ji.sign, -ij.sign);
      if (ij.sign > 0) {
        const int k = ij.index;
        const auto cyc = t.product(wrap(i + 1), wrap(j + 1));
        EXPECT_EQ(cyc.sign, 1);
        EXPECT_EQ(cyc.index, wrap(k + 1));
        const auto dbl = t.product(wrap(2 * i), wrap(2 * j));
        EXPECT_EQ(dbl.sign, 1);
        EXPECT_EQ(dbl.index, wrap(2 * k));
      }
    }
  }
}

TEST(MulTable, RejectsBadSeeds) {
  EXPECT_THROW(MulTable::build({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(MulTable::build({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(MulTable::build({1, 2, 8}), std::invalid_argument);
  EXPECT_THROW(MulTable::build({1, 2, 3}), InconsistentSeed);
  EXPECT_THROW(MulTable::build({1, 2, 5}), InconsistentSeed);
}

TEST(MulTable, EquivalentSeedsGiveSameTable) {
  // (1,3,7) lies on the closure of (1,2,4).
  EXPECT_EQ(MulTable::build({1, 3, 7}).to_csv(), MulTable::build({1, 2, 4}).to_csv());
  // (2,1,4) is the opposite orientation: every product flips sign.
  const MulTable a = MulTable::build({1, 2, 4}), b = MulTable::build({2, 1, 4});
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (i != j) EXPECT_EQ(b.product(i, j).sign, -a.product(i, j).sign);
    }
  }
}

TEST(MulTable, Csv) {
  const std::string csv = default_table().to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), ",e1,e2,e3,e4,e5,e6,e7");
  EXPECT_NE(csv.find("\ne1,-0,+4,"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
}

TEST(OctMul, Examples) {
  const auto e = [](int i) { return Octonion::unit(i); };
  EXPECT_EQ(oct_mul(e(1), e(1)), -1.0 * e(0));
  EXPECT_EQ(oct_mul(e(2), e(1)), -1.0 * e(4));
  EXPECT_EQ(oct_mul(oct_mul(e(1), e(2)), e(3)), -1.0 * e(6));
  EXPECT_EQ(oct_mul(e(1), oct_mul(e(2), e(3))), e(6));
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(oct_mul(e(0), e(i)), e(i));
    EXPECT_EQ(oct_mul(e(i), e(0)), e(i));
  }
}

TEST(OctMul, AlternativeAndNormed) {
  Rng rng(21);
  for (int n = 0; n < 1000; ++n) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_LE(max_diff(oct_mul(oct_mul(x, x), y), oct_mul(x, oct_mul(x, y))), 1e-12);
    EXPECT_LE(max_diff(oct_mul(oct_mul(y, x), x), oct_mul(y, oct_mul(x, x))), 1e-12);
    EXPECT_LE(rel_err(oct_mul(x, y).norm(), x.norm() * y.norm()), 1e-12);
  }
}

TEST(OctMul, OtherOrientationIsAlsoNormed) {
  const MulTable t = MulTable::build({1, 2, 6});
  Rng rng(22);
  for (int n = 0; n < 200; ++n) {
    const Octonion x = random_octonion(rng), y = random_octonion(rng);
    EXPECT_LE(rel_err(oct_mul(x, y, t).norm(), x.norm() * y.norm()), 1e-12);
    EXPECT_LE(max_diff(oct_mul(oct_mul(x, x, t), y, t), oct_mul(x, oct_mul(x, y, t), t)), 1e-12);
  }
}

TEST(ParticularProduct, Examples) {
  const Vec4 I{0, 0, 0, 1};
  const ParticularOctonion p{2.0, {1, -2, 3, 0.5}};
  EXPECT_EQ(particular_product({1.0, {}}, p, I), p);

  const Vec4 u{0, 1, 0, 0}, w{0, 0, 1, 0};
  ASSERT_EQ(lorentz_dot(u, w), 0.0);
  const double s = 1.5;
  const ParticularOctonion sw = particular_product({s, u}, {0.0, w}, I);
  EXPECT_EQ(sw.scalar, 0.0);
  EXPECT_EQ(sw.vector, s * w + cross4(u, w, I));

  Rng rng(23);
  for (int n = 0; n < 100; ++n) {
    const Vec4 a = random_vec(rng), b = random_vec(rng);
    const ParticularOctonion q = particular_product({0.0, a}, {0.0, b}, I);
    EXPECT_DOUBLE_EQ(q.scalar, -lorentz_dot(a, b));
    EXPECT_EQ(q.vector, cross4(a, b, I));
  }
}

TEST(ParticularProduct, Bilinear) {
  Rng rng(24);
  const Vec4 I{1, 0, 0, 0};
  for (int n = 0; n < 100; ++n) {
    const ParticularOctonion q1{uniform(rng, -1, 1), random_vec(rng)}, q2{uniform(rng, -1, 1), random_vec(rng)};
    const ParticularOctonion p{uniform(rng, -1, 1), random_vec(rng)};
    const double s = uniform(rng, -2, 2);
    const ParticularOctonion lhs = particular_product({q1.scalar + s * q2.scalar, q1.vector + s * q2.vector}, p, I);
    const ParticularOctonion a = particular_product(q1, p, I), b = particular_product(q2, p, I);
    EXPECT_NEAR(lhs.scalar, a.scalar + s * b.scalar, 1e-12);
    EXPECT_LE(max_abs(lhs.vector - (a.vector + s * b.vector)), 1e-12);
  }
}

TEST(ParticularProduct, RequiresUnitI) {
  EXPECT_THROW(particular_product({1.0, {}}, {1.0, {}}, Vec4(0, 0, 0, 2)), NonUnitI);
  EXPECT_THROW(particular_product({1.0, {}}, {1.0, {}}, Vec4(1, 1, 0, 0)), NonUnitI);
  EXPECT_NO_THROW(particular_product({1.0, {}}, {1.0, {}}, Vec4(1, 0, 0, 0)));
}

TEST(ParticularOctonion, ToOctonion) {
  const Octonion o = ParticularOctonion{2.0, {1, 2, 3, 4}}.to_octonion();
  EXPECT_EQ(o, Octonion({2, 1, 2, 3, 4, 0, 0, 0}));
}
