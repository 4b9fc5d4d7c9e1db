#include <gtest/gtest.h>

#include "monlat/verify.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

IntVector cls(std::size_t i, long c = 1) {
  IntVector x = h2_zero();
  x[i] = c;
  return x;
}

int dual_parity(const std::vector<Step>& steps) {
  int n = 0;
  for (const auto& s : steps)
    if (s.kind == StepKind::fm_dual) ++n;
  return n % 2;
}

}  // namespace

TEST(Word, StepNames) {
  for (auto k : {StepKind::tensor, StepKind::fm_delta, StepKind::fm_dual, StepKind::fm_poincare, StepKind::deform,
                 StepKind::chamber})
    EXPECT_EQ(step_kind_from_string(to_string(k)), k);
  EXPECT_THROW(step_kind_from_string("fm_q"), InputError);
}

TEST(Word, ValidateCancelsAdjacentInverses) {
  const MukaiVector v(1, -1);
  const ValidatedWord a = validate_word({v, {Step::fm_delta(), Step::fm_delta()}});
  EXPECT_TRUE(a.reduced.empty());
  ASSERT_EQ(a.chain.size(), 1u);
  EXPECT_EQ(a.chain[0], v);

  const ValidatedWord b = validate_word({v, {Step::tensor(cls(0)), Step::tensor(cls(0), true), Step::fm_dual()}});
  ASSERT_EQ(b.reduced.size(), 1u);
  EXPECT_EQ(b.reduced[0].kind, StepKind::fm_dual);
  EXPECT_EQ(b.chain.back(), MukaiVector(-1, 1));

  // same kind, different payload: no cancellation
  const ValidatedWord c = validate_word({v, {Step::tensor(cls(0)), Step::tensor(cls(1), true)}});
  EXPECT_EQ(c.reduced.size(), 2u);
}

TEST(Word, ValidateChecksDeformations) {
  const MukaiVector v(1, -1);
  // duality fixes (1,0,-1) but reverses orientation
  EXPECT_THROW(validate_word({v, {Step::deform(duality_isometry().matrix())}}), InputError);
  // a tensor product is orientation preserving but moves v
  EXPECT_THROW(validate_word({v, {Step::deform(tensor_isometry(cls(0)).matrix())}}), InputError);
  EXPECT_THROW(validate_word({v, {Step::deform(IntMatrix::identity(3))}}), InputError);
  IntMatrix bad = IntMatrix::identity(24);
  bad(0, 1) = 1;
  EXPECT_THROW(validate_word({v, {Step::deform(bad)}}), InputError);
  EXPECT_NO_THROW(validate_word({v, {Step::deform(IntMatrix::identity(24))}}));
}

TEST(Phi, SingleStepExamples) {
  const MukaiVector v(1, -1);
  const PhiResult d = eval_phi({v, {Step::fm_delta()}});
  EXPECT_EQ(d.target, MukaiVector(-1, 1));
  EXPECT_EQ(d.orientation, 0);
  EXPECT_EQ(d.sign, 1);
  ASSERT_TRUE(d.automorphism.has_value());

  const PhiResult u = eval_phi({v, {Step::fm_dual()}});
  EXPECT_EQ(u.orientation, 1);
  EXPECT_EQ(u.sign, -1);
  ASSERT_TRUE(u.automorphism.has_value());
  // sign twist: phi(fm_dual) = -fm_dual on v^perp
  const Restriction r = restrict_to_perp(fm_dual_isometry(), make_perp(*mukai_lattice_ptr(), v.coords()));
  EXPECT_EQ(u.automorphism->matrix(), -r.isometry.matrix());

  const PhiResult t = eval_phi({v, {Step::tensor(cls(0))}});
  EXPECT_FALSE(t.automorphism.has_value());
  EXPECT_EQ(t.target, tensor(v, cls(0)));
  EXPECT_THROW(eval_phi({v, {Step::tensor(cls(0))}}, v), InputError);
}

TEST(Phi, DualityLoopIsMinusOneOnTheDiscriminant) {
  for (long k = 2; k <= 5; ++k) {
    const MonodromyContext ctx(1, k);
    const PhiResult p = eval_phi({ctx.v(), {Step::fm_dual(), Step::fm_delta()}}, ctx.v());
    ASSERT_EQ(p.target, ctx.v());
    ASSERT_TRUE(p.automorphism.has_value());
    EXPECT_EQ(p.sign, -1);
    EXPECT_TRUE(mon_test(ctx, *p.automorphism));
    EXPECT_EQ(induced_disc_action(*p.automorphism).sign_class, SignClass::minus_id);
  }
}

TEST(Phi, TensorLoopIsTrivial) {
  const MukaiVector v(2, -6);
  const IntVector c = cls(h2_e(2), 3) + cls(h2_e8(0), -1);
  const PhiResult p = eval_phi({v, {Step::tensor(c), Step::fm_poincare(), Step::fm_poincare(true), Step::tensor(c, true)}});
  EXPECT_EQ(p.target, v);
  ASSERT_TRUE(p.automorphism.has_value());
  EXPECT_TRUE(p.automorphism->is_identity());
  EXPECT_TRUE(p.ambient.is_identity());
}

TEST(Phi, PtAgreesWithPhiOnRandomLoops) {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    const MonodromyContext ctx(1 + i % 3, 1 + (i / 3) % 3);
    const MorphismWord w = checks::random_loop(rng, ctx);
    const PhiResult a = eval_phi(w, ctx.v()), b = eval_pt(w, ctx.v());
    ASSERT_EQ(a.matrix, b.matrix);
    ASSERT_EQ(a.sign, b.sign);
    ASSERT_EQ(b.functor, "pt");
    ASSERT_EQ(a.target, ctx.v());
    ASSERT_TRUE(mon_test(ctx, *a.automorphism));
  }
}

TEST(PhiTilde, Functoriality) {
  Rng rng(62);
  for (int i = 0; i < 100; ++i) {
    const MukaiVector v(1 + i % 3, -(1 + i % 4));
    const auto s1 = checks::random_fm_steps(rng, 4), s2 = checks::random_fm_steps(rng, 4);
    const Isometry g1 = eval_phi_tilde({v, s1});
    const Isometry g2 = eval_phi_tilde({apply(g1, v), s2});
    std::vector<Step> both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    ASSERT_EQ(eval_phi_tilde({v, both}), compose(g2, g1));
    // the inverse word undoes the word
    const MorphismWord back = MorphismWord{v, s1}.inverse_from(apply(g1, v));
    ASSERT_EQ(eval_phi_tilde(back), inverse(g1));
  }
}

TEST(PhiTilde, OrientationCountsDualities) {
  Rng rng(63);
  const OrientationFrame fr = mukai_frame();
  for (int i = 0; i < 100; ++i) {
    const auto steps = checks::random_fm_steps(rng, 6);
    ASSERT_EQ(orientation_character(eval_phi_tilde({MukaiVector(1, -2), steps}), fr), dual_parity(steps));
  }
}
