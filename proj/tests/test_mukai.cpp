#include <gtest/gtest.h>

#include "monlat/verify.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

MukaiVector random_mukai(Rng& rng, long span = 3) {
  return MukaiVector(Int(rnd(rng, -span, span)), sampling::random_vector(rng, kH2Rank, -span, span),
                     Int(rnd(rng, -span, span)));
}

IntVector ell() { return h2_basis(h2_e(1)) - h2_basis(h2_f(1)); }
IntVector fcls() { return h2_basis(h2_f(1)); }

}  // namespace

TEST(Mukai, SquareFormula) {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const MukaiVector v = random_mukai(rng), w = random_mukai(rng);
    ASSERT_EQ(mukai_square(v), h2_pair(v.xi, v.xi) - 2 * v.r * v.a);
    ASSERT_EQ(mukai_pair(v, w), h2_pair(v.xi, w.xi) - v.r * w.a - v.a * w.r);
  }
  EXPECT_EQ(mukai_square(MukaiVector(1, -1)), 2);
  EXPECT_EQ(mukai_square(MukaiVector(3, -6)), 36);
}

TEST(Mukai, CoordinateRoundTrip) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const MukaiVector v = random_mukai(rng);
    ASSERT_EQ(MukaiVector::from_coords(v.coords()), v);
  }
  EXPECT_EQ(MukaiVector(2, 5).coords()[1], -5);
  EXPECT_THROW(MukaiVector(Int(1), IntVector(3), Int(0)), InputError);
  EXPECT_THROW(MukaiVector::from_coords(IntVector(22)), InputError);
}

TEST(Mukai, Decompose) {
  const MKTriple t = mk_decompose(MukaiVector(3, -6));
  EXPECT_EQ(t.m, 3);
  EXPECT_EQ(t.w, MukaiVector(1, -2));
  EXPECT_EQ(t.k, 2);
  const MKTriple p = mk_decompose(mv(0, {{h2_e(1), 2}, {h2_f(1), 2}}, 0));
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.k, 1);
  EXPECT_THROW(mk_decompose(MukaiVector(1, 0)), InputError);  // isotropic
  EXPECT_THROW(mk_decompose(MukaiVector(1, 1)), InputError);  // negative
  EXPECT_THROW(mk_decompose(MukaiVector(0, 0)), InputError);
  for (long m = 1; m <= 6; ++m)
    for (long k = 1; k <= 6; ++k) {
      const MKTriple d = mk_decompose(standard_vectors(m, k).v);
      ASSERT_EQ(d.m, m);
      ASSERT_EQ(d.k, k);
    }
}

TEST(Mukai, FourierMukaiExamples) {
  const MukaiVector v = mv(2, {{h2_e(2), 1}, {h2_f(3), -4}}, 7);
  EXPECT_EQ(fm_delta(v), mv(7, {{h2_e(2), -1}, {h2_f(3), 4}}, 2));
  EXPECT_EQ(fm_dual(v), mv(7, {{h2_e(2), 1}, {h2_f(3), -4}}, 2));
  EXPECT_EQ(duality(v), mv(2, {{h2_e(2), -1}, {h2_f(3), 4}}, 7));
  EXPECT_EQ(fm_delta(MukaiVector(1, -1)), MukaiVector(-1, 1));
}

TEST(Mukai, FourierMukaiMapsAreIsometricInvolutions) {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const MukaiVector v = random_mukai(rng), w = random_mukai(rng);
    for (auto f : {fm_delta, fm_dual, duality}) {
      ASSERT_EQ(f(f(v)), v);
      ASSERT_EQ(mukai_pair(f(v), f(w)), mukai_pair(v, w));
    }
    ASSERT_EQ(mukai_pair(fm_poincare(v), fm_poincare(w)), mukai_pair(v, w));
  }
}

TEST(Tensor, ExponentialLaw) {
  Rng rng(44);
  for (int i = 0; i < 200; ++i) {
    const MukaiVector v = random_mukai(rng);
    const IntVector c = sampling::random_vector(rng, kH2Rank), d = sampling::random_vector(rng, kH2Rank);
    ASSERT_EQ(tensor(tensor(v, c), d), tensor(v, c + d));
    ASSERT_EQ(tensor(tensor(v, c), -c), v);
    ASSERT_EQ(mukai_square(tensor(v, c)), mukai_square(v));
  }
  EXPECT_EQ(tensor(MukaiVector(1, 0), fcls()), MukaiVector(Int(1), fcls(), Int(0)));
  // (1,0,0) * ch(O(e1 + f1)) = (1, e1 + f1, 1)
  const IntVector h = h2_basis(h2_e(1)) + h2_basis(h2_f(1));
  EXPECT_EQ(tensor(MukaiVector(1, 0), h), MukaiVector(Int(1), h, Int(1)));
  EXPECT_THROW(tensor(MukaiVector(1, 0), IntVector(3)), InputError);
}

TEST(Poincare, StandardFamilies) {
  for (long m = 1; m <= 8; ++m)
    for (long k = 1; k <= 8; ++k) {
      const auto sv = standard_vectors(m, k);
      ASSERT_EQ(fm_poincare(sv.v), MukaiVector(Int(0), Int(m) * (ell() + Int(k + 1) * fcls()), Int(m)));
      const MukaiVector img = fm_poincare(sv.u);
      ASSERT_EQ(img, MukaiVector(Int(0), ell() - Int(k - 1) * fcls() - sv.beta, Int(0)));
    }
}

TEST(Poincare, BasisImages) {
  EXPECT_EQ(fm_poincare(h2_class(fcls())), MukaiVector(0, 1));
  EXPECT_EQ(fm_poincare(MukaiVector(0, 1)), h2_class(-fcls()));
  for (std::size_t i = h2_e(2); i < kH2Rank; ++i)
    ASSERT_EQ(fm_poincare(h2_class(h2_basis(i))), h2_class(-h2_basis(i)));
}

TEST(Poincare, IndependentDerivationOfTheta) {
  const oracle::ThetaDerivation d = oracle::derive_theta();
  ASSERT_TRUE(d.ok) << d.note;
  const auto& th = poincare_theta();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(d.theta(i, j), th[i][j]) << i << "," << j;
}

TEST(Orientation, FourierMukaiCharacters) {
  const OrientationFrame fr = mukai_frame();
  EXPECT_EQ(orientation_character(fm_delta_isometry(), fr), 0);
  EXPECT_EQ(orientation_character(fm_poincare_isometry(), fr), 0);
  EXPECT_EQ(orientation_character(fm_dual_isometry(), fr), 1);
  EXPECT_EQ(orientation_character(duality_isometry(), fr), 1);
  Rng rng(45);
  for (int i = 0; i < 20; ++i)
    ASSERT_EQ(orientation_character(tensor_isometry(sampling::random_vector(rng, kH2Rank)), fr), 0);
}

TEST(Ample, EllipticClasses) {
  EXPECT_TRUE(ample_elliptic(1, 5));
  EXPECT_TRUE(ample_elliptic(2, 5));
  EXPECT_FALSE(ample_elliptic(1, 1));
  EXPECT_FALSE(ample_elliptic(0, 3));
  EXPECT_FALSE(ample_elliptic(-1, 5));
  EXPECT_THROW(ample_elliptic(0, 0), InputError);
  for (long r = 2; r <= 10; ++r) {
    const auto sv = standard_vectors(1, 1, r, 2, 5);
    EXPECT_TRUE(ample_elliptic(1, r));
    EXPECT_EQ(sv.h[0], sv.e + Int(r) * sv.f);
  }
}

TEST(StandardVectors, Arithmetic) {
  for (long m = 1; m <= 5; ++m)
    for (long k = 1; k <= 5; ++k) {
      const auto sv = standard_vectors(m, k);
      ASSERT_EQ(mukai_square(sv.v), 2 * m * m * k);
      ASSERT_EQ(mukai_square(sv.u), -2);
      ASSERT_EQ(mukai_pair(sv.u, sv.v), 0);
      ASSERT_EQ(h2_pair(sv.beta, sv.beta), 2 * k - 2);
      ASSERT_EQ(h2_pair(sv.beta, sv.ell), 0);
      ASSERT_EQ(h2_pair(sv.beta, sv.f), 0);
      ASSERT_EQ(h2_pair(sv.ell, sv.ell), -2);
      ASSERT_EQ(h2_pair(sv.ell, sv.f), 1);
    }
  EXPECT_THROW(standard_vectors(0, 1), InputError);
}

TEST(Tensor, FixesThePointClass) {
  Rng rng(46);
  for (int i = 0; i < 50; ++i)
    ASSERT_EQ(tensor(MukaiVector(0, 1), sampling::random_vector(rng, kH2Rank, -5, 5)), MukaiVector(0, 1));
}

TEST(Poincare, PreservesSquaresOfStandardVectors) {
  for (long m = 1; m <= 10; ++m)
    for (long k = 1; k <= 10; ++k) {
      const MukaiVector v = standard_vectors(m, k).v;
      ASSERT_EQ(mukai_square(fm_poincare(v)), 2 * m * m * k);
    }
}

TEST(Mukai, DecomposeRandomMultiples) {
  Rng rng(47);
  int tested = 0;
  while (tested < 100) {
    const MukaiVector w = random_mukai(rng, 2);
    if (is_zero(w.coords()) || !is_primitive(w.coords()) || mukai_square(w) <= 0) continue;
    const Int m = rnd(rng, 1, 7);
    const MKTriple t = mk_decompose(m * w);
    ASSERT_EQ(t.m, m);
    ASSERT_EQ(t.w, w);
    ASSERT_EQ(t.k, mukai_square(w) / 2);
    ++tested;
  }
}
