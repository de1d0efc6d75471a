#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ifc/baire.hpp"
#include "ifc/cnd.hpp"

namespace ifc {
namespace {

using namespace fixtures;

const Domain kUnit{-1.0, 1.0};

// -1 on (-1, 0), +1 on (0, 1), an arbitrary 5 at 0.
PiecewiseIntervalFn jump() { return PiecewiseIntervalFn(kUnit, {0.0}, {band(-1, -1), band(1, 1)}, {ExtInterval(5.0)}); }

PiecewiseIntervalFn dip(double v) {
  return PiecewiseIntervalFn(kUnit, {0.0}, {band(0, 0), band(0, 0)}, {ExtInterval(v)});
}

TEST(LowerBaire, Examples) {
  const auto i = lower_baire(extfsi());
  EXPECT_EQ(i.eval(0.0), ExtInterval(-1.0));
  EXPECT_EQ(i.eval(0.5), ExtInterval(0.0));
  const auto c3 = PiecewiseIntervalFn::constant(kUnit, ExtReal(3.0));
  EXPECT_EQ(lower_baire(c3), c3);
  const CofiniteDense d(kUnit, {0.0});
  EXPECT_EQ(lower_baire(jump(), d).eval(0.0), ExtInterval(-1.0));
  EXPECT_EQ(lower_baire(jump()).eval(0.0), ExtInterval(-1.0));
}

TEST(LowerBaire, MismatchedDomain) {
  EXPECT_THROW(lower_baire(extfsi(), CofiniteDense::full(kUnit)), PreconditionError);
}

TEST(UpperBaire, Examples) {
  EXPECT_EQ(upper_baire(extfsi()).eval(0.0), ExtInterval(1.0));
  const auto c3 = PiecewiseIntervalFn::constant(kUnit, ExtReal(3.0));
  EXPECT_EQ(upper_baire(c3), c3);
  EXPECT_EQ(upper_baire(lower_baire(extfsi())), PiecewiseIntervalFn::constant(kWindow, ExtReal(0.0)));
  // The excluded point drops the value 5 from the max.
  EXPECT_EQ(upper_baire(jump(), CofiniteDense(kUnit, {0.0})).eval(0.0), ExtInterval(1.0));
  EXPECT_EQ(upper_baire(jump()).eval(0.0), ExtInterval(5.0));
}

TEST(GraphCompletion, Examples) {
  EXPECT_TRUE(fn_equal(graph_completion(extfsi()), extfsi()).holds);
  const auto g = PiecewiseIntervalFn::point({0.0, 1.0}, PieceExpr::affine(1.0, 0.0));
  EXPECT_EQ(graph_completion(g), g);
  EXPECT_EQ(graph_completion(jump(), CofiniteDense(kUnit, {0.0})).eval(0.0), ExtInterval(-1.0, 1.0));
}

TEST(NormalizeG, Examples) {
  EXPECT_TRUE(fn_equal(normalize_G(extfsi()), extfsi_G()).holds);
  const auto h = f0(cnd_step());
  EXPECT_TRUE(fn_equal(normalize_G(h), h).holds);
  EXPECT_TRUE(fn_equal(normalize_G(normalize_G(extfsi())), normalize_G(extfsi())).holds);
  EXPECT_TRUE(fn_subseteq(normalize_G(extfsi()), graph_completion(extfsi())));
}

TEST(HContCompletions, Examples) {
  EXPECT_TRUE(fn_equal(hcont_lower_completion(extfsi()), extfsi_FSI()).holds);
  EXPECT_TRUE(fn_equal(hcont_upper_completion(extfsi()), extfsi_FIS()).holds);
  const auto g = PiecewiseIntervalFn::point({0.0, 3.0}, PieceExpr::sigmoid(2.0));
  EXPECT_TRUE(fn_equal(hcont_lower_completion(g), g).holds);
  EXPECT_TRUE(fn_equal(hcont_upper_completion(g), g).holds);
}

TEST(Envelopes, Examples) {
  const auto zero = PiecewiseIntervalFn::constant(kUnit, ExtReal(0.0));
  EXPECT_TRUE(fn_equal(usc_envelope(dip(-1.0)), zero).holds);
  EXPECT_TRUE(fn_equal(lsc_envelope(dip(-1.0)), dip(-1.0)).holds);
  EXPECT_TRUE(fn_equal(lsc_envelope(dip(1.0)), zero).holds);
}

TEST(Normality, Examples) {
  const auto zero = PiecewiseIntervalFn::constant(kUnit, ExtReal(0.0));
  EXPECT_TRUE(is_normal_lsc(zero));
  EXPECT_TRUE(is_normal_usc(zero));
  EXPECT_TRUE(fn_equal(lower_baire(dip(-1.0)), dip(-1.0)).holds);
  EXPECT_FALSE(is_normal_lsc(dip(-1.0)));
  EXPECT_TRUE(is_normal_lsc(component_fn(normalize_G(extfsi()), Component::lower)));
  EXPECT_TRUE(is_normal_usc(component_fn(normalize_G(extfsi()), Component::upper)));
  EXPECT_THROW(is_normal_lsc(extfsi()), PreconditionError);
}

class BaireProperties : public ::testing::Test {
 protected:
  testgen::Generator gen{testgen::kSeed + 2};

  CofiniteDense random_dense(const PiecewiseIntervalFn& f) {
    auto pts = gen.points(f.domain(), gen.uniform_int(1, 3));
    // Prefer excluding existing breakpoints half of the time.
    if (!f.breakpoints().empty() && gen.chance(0.5)) {
      const double b = f.breakpoints()[static_cast<std::size_t>(gen.uniform_int(0, int(f.breakpoints().size()) - 1))];
      if (std::find(pts.begin(), pts.end(), b) == pts.end()) pts.push_back(b);
    }
    return CofiniteDense(f.domain(), pts);
  }
};

TEST_F(BaireProperties, Idempotence) {
  for (int i = 0; i < 120; ++i) {
    const auto f = gen.function();
    const auto fi = lower_baire(f);
    const auto fs = upper_baire(f);
    const auto ff = graph_completion(f);
    EXPECT_TRUE(fn_equal(lower_baire(fi), fi).holds);
    EXPECT_TRUE(fn_equal(upper_baire(fs), fs).holds);
    EXPECT_TRUE(fn_equal(graph_completion(ff), ff).holds);
    const auto d = random_dense(f);
    const auto fd = graph_completion(f, d);
    EXPECT_TRUE(fn_equal(graph_completion(fd), fd).holds);
    const auto is = lower_baire(fs);
    const auto si = upper_baire(fi);
    EXPECT_TRUE(fn_equal(lower_baire(upper_baire(is)), is).holds);
    EXPECT_TRUE(fn_equal(upper_baire(lower_baire(si)), si).holds);
  }
}

TEST_F(BaireProperties, Monotonicity) {
  for (int i = 0; i < 120; ++i) {
    const auto dom = gen.domain();
    const auto f = gen.function(dom);
    const std::vector<PiecewiseIntervalFn> pair{f, gen.function(dom)};
    const auto g = pointwise_max(pair);
    ASSERT_TRUE(fn_leq(f, g));
    EXPECT_TRUE(fn_leq(lower_baire(f), lower_baire(g)));
    EXPECT_TRUE(fn_leq(upper_baire(f), upper_baire(g)));
    EXPECT_TRUE(fn_leq(graph_completion(f), graph_completion(g)));
    EXPECT_TRUE(fn_leq(normalize_G(f), normalize_G(g)));
  }
}

TEST_F(BaireProperties, InclusionIsotonicity) {
  for (int i = 0; i < 120; ++i) {
    const auto dom = gen.domain();
    const auto f = gen.function(dom);
    const std::vector<PiecewiseIntervalFn> pair{f, gen.function(dom)};
    const auto g = pointwise_envelope(pair, Reduce::min, Reduce::max);
    ASSERT_TRUE(fn_subseteq(f, g));
    const auto d = random_dense(f);
    EXPECT_TRUE(fn_subseteq(graph_completion(f, d), graph_completion(g, d)));
    EXPECT_TRUE(fn_subseteq(normalize_G(f), normalize_G(g)));
  }
}

TEST_F(BaireProperties, DenseSetIsotonicity) {
  for (int i = 0; i < 120; ++i) {
    const auto f = gen.function();
    const auto small = random_dense(f);
    std::vector<double> fewer(small.excluded().begin(), small.excluded().end());
    fewer.pop_back();
    const CofiniteDense large(f.domain(), fewer);
    EXPECT_TRUE(fn_subseteq(graph_completion(f, small), graph_completion(f, large)));
    EXPECT_TRUE(fn_subseteq(graph_completion(f, small), graph_completion(f)));
    EXPECT_TRUE(fn_subseteq(f, graph_completion(f, small), kEqualityTolerance, small.excluded()));
  }
}

TEST_F(BaireProperties, CompletionOrderAndNormalizer) {
  for (int i = 0; i < 120; ++i) {
    const auto f = gen.function();
    EXPECT_TRUE(fn_leq(hcont_lower_completion(f), hcont_upper_completion(f)));
    const auto g = normalize_G(f);
    EXPECT_TRUE(fn_subseteq(g, graph_completion(f)));
    EXPECT_TRUE(fn_equal(normalize_G(g), g).holds);
  }
}

}  // namespace
}  // namespace ifc
