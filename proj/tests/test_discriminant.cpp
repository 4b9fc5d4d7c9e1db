#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace testing_support;

namespace {

/// Every element of A_L as a rational vector (small groups only).
std::vector<RatVector> enumerate(const DiscriminantGroup& a, std::size_t n) {
  std::vector<RatVector> out{RatVector(n)};
  for (std::size_t j = 0; j < a.invariant_factors().size(); ++j) {
    std::vector<RatVector> next;
    const long d = a.invariant_factors()[j].get_si();
    for (const auto& x : out)
      for (long c = 0; c < d; ++c) {
        RatVector y = x;
        for (std::size_t i = 0; i < n; ++i) y[i] += c * a.generator_lifts()[j][i];
        next.push_back(std::move(y));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Rat> q_multiset(const IntegralLattice& l) {
  const DiscriminantGroup a(l);
  std::vector<Rat> qs;
  for (const auto& x : enumerate(a, l.rank())) qs.push_back(a.quadratic(x));
  std::sort(qs.begin(), qs.end());
  return qs;
}

/// A random unimodular matrix as a product of elementary operations.
IntMatrix random_unimodular(Rng& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  for (int s = 0; s < 12; ++s) {
    const std::size_t i = static_cast<std::size_t>(rnd(rng, 0, static_cast<long>(n) - 1));
    const std::size_t j = static_cast<std::size_t>(rnd(rng, 0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const Int c = rnd(rng, -2, 2);
    for (std::size_t r = 0; r < n; ++r) p(r, j) += c * p(r, i);
  }
  return p;
}

}  // namespace

TEST(Discriminant, UnimodularIsTrivial) {
  EXPECT_TRUE(DiscriminantGroup(hyperbolic_plane()).trivial());
  EXPECT_TRUE(DiscriminantGroup(mukai_lattice()).trivial());
  EXPECT_EQ(DiscriminantGroup(e8_minus()).order(), 1);
}

TEST(Discriminant, RankOneMinusSix) {
  const DiscriminantGroup a(rank_one(-6));
  ASSERT_EQ(a.invariant_factors(), (std::vector<Int>{6}));
  // dual basis vector 1/6: q = -6 / 36 = -1/6 = 11/6 mod 2
  EXPECT_EQ(a.q_values()[0], Rat(11, 6));
  EXPECT_EQ(a.quadratic(RatVector{Rat(1, 6)}), Rat(11, 6));
}

TEST(Discriminant, LkIsCyclicOfOrder2k) {
  for (long k = 1; k <= 6; ++k) {
    const DiscriminantGroup a(lattice_lk(k));
    ASSERT_EQ(a.invariant_factors(), (std::vector<Int>{2 * k}));
    Rat q = Rat(-1, 2 * k) + 2;
    q.canonicalize();
    EXPECT_EQ(a.q_values()[0], q);
  }
}

TEST(Discriminant, StructuralInvariantsOnRandomEvenLattices) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = static_cast<std::size_t>(rnd(rng, 1, 4));
    IntMatrix g(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) g(r, c) = g(c, r) = r == c ? 2 * rnd(rng, -4, 4) : rnd(rng, -3, 3);
    if (determinant(g) == 0) continue;
    const IntegralLattice l(g);
    const DiscriminantGroup a(l);
    ASSERT_EQ(a.order(), abs(l.det()));
    for (std::size_t j = 0; j < a.invariant_factors().size(); ++j) {
      const RatVector& x = a.generator_lifts()[j];
      // x in L*: the pairing row G x is integral
      ASSERT_TRUE(to_integer(to_rational(g) * x).has_value());
      RatVector dx = x;
      for (auto& c : dx) c *= a.invariant_factors()[j];
      ASSERT_TRUE(to_integer(dx).has_value());
      if (j + 1 < a.invariant_factors().size())
        ASSERT_TRUE(mpz_divisible_p(a.invariant_factors()[j + 1].get_mpz_t(), a.invariant_factors()[j].get_mpz_t()));
      // q values lie in [0, 2) and do not depend on the lift
      const Rat q = a.q_values()[j];
      ASSERT_GE(q, 0);
      ASSERT_LT(q, 2);
      RatVector shifted = x;
      for (std::size_t c = 0; c < n; ++c) shifted[c] += rnd(rng, -3, 3);
      ASSERT_EQ(a.quadratic(shifted), q);
      ASSERT_EQ(a.coordinates(shifted), a.coordinates(x));
      ASSERT_TRUE(mpz_divisible_p(Int(2 * a.invariant_factors()[j]).get_mpz_t(), q.get_den_mpz_t()));
    }
    // the multiset of q over the whole group is a basis-independent invariant
    if (a.order() <= 64) {
      const IntMatrix p = random_unimodular(rng, n);
      ASSERT_EQ(q_multiset(l), q_multiset(IntegralLattice(p.transpose() * g * p)));
    }
  }
}

TEST(Discriminant, QMultisetUnderBasisChange) {
  Rng rng(22);
  const std::vector<IntegralLattice> pool = {rank_one(-6), direct_sum({rank_one(2), rank_one(-4)}),
                                             direct_sum({hyperbolic_plane(), rank_one(-12)}),
                                             IntegralLattice(IntMatrix{{2, 1}, {1, -4}})};
  for (const auto& l : pool) {
    for (int i = 0; i < 5; ++i) {
      const IntMatrix p = random_unimodular(rng, l.rank());
      EXPECT_EQ(q_multiset(l), q_multiset(IntegralLattice(p.transpose() * l.gram() * p)));
    }
  }
}

TEST(DiscAction, Examples) {
  const auto lk = share(lattice_lk(3));
  EXPECT_EQ(induced_disc_action(identity_isometry(lk)).sign_class, SignClass::plus_id);

  const auto l = share(direct_sum({hyperbolic_plane(), rank_one(-2)}));
  const Isometry r = reflection(l, unit(3, 2));
  EXPECT_EQ(r.matrix(), (IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}));
  EXPECT_EQ(induced_disc_action(r).sign_class, SignClass::minus_id);
  EXPECT_EQ(induced_disc_action(identity_isometry(l)).sign_class, SignClass::plus_id);

  Rng rng(23);
  const Isometry t = sampling::random_transvection(rng, lk, sampling::unit_pair(23, 0, 1));
  EXPECT_EQ(induced_disc_action(t).sign_class, SignClass::plus_id);
}

TEST(DiscAction, OtherClassForAUnitNotPlusMinusOne) {
  // on <-12> + U + U the reflection in t + 2e + 2f (square -4) acts by 7 on Z/12
  const auto l = share(direct_sum({rank_one(-12), hyperbolic_plane(), hyperbolic_plane()}));
  const Isometry r = reflection(l, make_vector({1, 2, 2, 0, 0}));
  const DiscriminantAction act = induced_disc_action(r);
  EXPECT_EQ(act.sign_class, SignClass::other);
  EXPECT_EQ(act.matrix, (IntMatrix{{7}}));
}

TEST(DiscAction, RejectsNonIsometry) {
  EXPECT_THROW(induced_disc_action(hyperbolic_plane(), IntMatrix{{1, 1}, {0, 1}}), CertificateError);
  EXPECT_THROW(induced_disc_action(hyperbolic_plane(), IntMatrix::identity(3)), InputError);
}

TEST(DiscAction, SignClassIsMultiplicative) {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const long k = 1 + i % 10;
    const auto l = share(lattice_lk(k));
    const DiscriminantGroup a(*l);
    auto sample = [&]() {
      if (rnd(rng, 0, 1) == 0) return sampling::random_transvection(rng, l, sampling::unit_pair(23, 0, 1), 1);
      return reflection(l, unit(23, 22));  // the <-2k> generator: -id on A_L
    };
    const Isometry g = sample(), h = sample();
    const int sg = sign_of(induced_disc_action(*l, a, g.matrix()).sign_class);
    const int sh = sign_of(induced_disc_action(*l, a, h.matrix()).sign_class);
    ASSERT_NE(sg, 0);
    ASSERT_NE(sh, 0);
    ASSERT_EQ(sign_of(induced_disc_action(*l, a, compose(g, h).matrix()).sign_class), sg * sh);
  }
}

TEST(OqUnitCount, Examples) {
  EXPECT_EQ(oq_unit_count(1), 1u);
  EXPECT_EQ(oq_unit_count(2), 2u);
  EXPECT_EQ(oq_unit_count(6), 4u);
  EXPECT_THROW(oq_unit_count(0), InputError);
}

TEST(OqUnitCount, MatchesPrimeCountUpTo500) {
  for (unsigned k = 2; k <= 500; ++k) ASSERT_EQ(oq_unit_count(k) / 2, 1u << (rho(k) - 1)) << "k = " << k;
}

TEST(Discriminant, DegenerateInputRejected) {
  EXPECT_THROW(DiscriminantGroup(perp_basis(hyperbolic_plane(), unit(2, 0)).lattice()), InputError);
}
