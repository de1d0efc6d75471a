#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ifc/baire.hpp"
#include "ifc/dense.hpp"
#include "ifc/roots.hpp"

namespace ifc {
namespace {

using namespace fixtures;

TEST(Eval, ExtFsiValues) {
  const auto f = extfsi();
  EXPECT_EQ(f.eval(0.0), ExtInterval(-1.0, 1.0));
  EXPECT_EQ(f.eval(0.5), ExtInterval(0.0, 1.0));
  EXPECT_EQ(f.eval(-0.5), ExtInterval(0.0));
}

TEST(Eval, OutOfDomain) {
  EXPECT_THROW(extfsi().eval(2.5), PreconditionError);
  EXPECT_THROW(extfsi().eval(-3.0), PreconditionError);
}

TEST(OneSidedLimits, ExtFsi) {
  const auto f = extfsi();
  EXPECT_EQ(one_sided_limits(f, 0.0, Side::right), ExtInterval(0.0, 1.0));
  EXPECT_EQ(one_sided_limits(f, 0.0, Side::left), ExtInterval(0.0));
  EXPECT_EQ(one_sided_limits(f, 1.0, Side::right), ExtInterval(0.0, 1.0));
}

TEST(OneSidedLimits, DomainEnds) {
  const auto f = extfsi();
  EXPECT_EQ(one_sided_limits(f, 2.5, Side::left), ExtInterval(0.0, 1.0));
  EXPECT_THROW(one_sided_limits(f, 2.5, Side::right), PreconditionError);
  EXPECT_THROW(one_sided_limits(f, -2.5, Side::left), PreconditionError);
}

TEST(Construction, Validation) {
  const Domain d{0.0, 1.0};
  EXPECT_THROW(PiecewiseIntervalFn(d, {0.5}, {band(0, 0)}, {ExtInterval(0.0)}), ValidationError);
  EXPECT_THROW(PiecewiseIntervalFn(d, {1.5}, {band(0, 0), band(0, 0)}, {ExtInterval(0.0)}), ValidationError);
  EXPECT_THROW(PiecewiseIntervalFn(d, {}, {band(1, 0)}, {}), ValidationError);
  EXPECT_THROW(PiecewiseIntervalFn({-1.0, 1.0}, {}, {point(PieceExpr::power(-1))}, {}), ValidationError);
  EXPECT_THROW(PiecewiseIntervalFn(d, {0.6, 0.4}, {band(0, 0), band(0, 0), band(0, 0)},
                                   {ExtInterval(0.0), ExtInterval(0.0)}),
               ValidationError);
  EXPECT_THROW(Domain(1.0, 1.0), ValidationError);
}

TEST(Construction, LowerAboveUpperInsidePiece) {
  // x and 1 - x cross at 0.5; only interior samples catch the violation.
  const Domain d{0.0, 1.0};
  const Piece p{PieceExpr::affine(1.0, 0.0), PieceExpr::affine(-1.0, 1.0)};
  EXPECT_THROW(PiecewiseIntervalFn(d, {}, {p}, {}), ValidationError);
}

TEST(PointwiseMax, SymmetricCrossing) {
  const Domain d{0.0, 1.0};
  const std::vector<PiecewiseIntervalFn> fs{PiecewiseIntervalFn::point(d, PieceExpr::affine(1.0, 0.0)),
                                            PiecewiseIntervalFn::point(d, PieceExpr::affine(-1.0, 1.0))};
  const auto m = pointwise_max(fs);
  ASSERT_EQ(m.breakpoints().size(), 1u);
  EXPECT_EQ(m.breakpoints()[0], 0.5);
  EXPECT_EQ(m.values()[0], ExtInterval(0.5));
  EXPECT_EQ(m.pieces()[0], point(PieceExpr::affine(-1.0, 1.0)));
  EXPECT_EQ(m.pieces()[1], point(PieceExpr::affine(1.0, 0.0)));
}

TEST(PointwiseMin, NestedHats) {
  const Domain d{-2.0, 2.0};
  const std::vector<PiecewiseIntervalFn> fs{hat(d, 1.0), hat(d, 0.5)};
  EXPECT_TRUE(fn_equal(pointwise_min(fs), hat(d, 0.5)).holds);
}

TEST(PointwiseMax, Idempotent) {
  const auto f = PiecewiseIntervalFn::constant(kWindow, ExtInterval(0.0, 2.0));
  const std::vector<PiecewiseIntervalFn> fs{f, f};
  EXPECT_EQ(pointwise_max(fs), f);
}

TEST(PointwiseMax, ErrorCases) {
  EXPECT_THROW(pointwise_max(std::vector<PiecewiseIntervalFn>{}), PreconditionError);
  const std::vector<PiecewiseIntervalFn> fs{extfsi(), hat({-2.0, 2.0}, 1.0)};
  EXPECT_THROW(pointwise_max(fs), PreconditionError);
}

TEST(FnEqual, Examples) {
  const auto f = extfsi();
  EXPECT_TRUE(fn_equal(f, f).holds);
  const Domain d{-2.0, 2.0};
  const PiecewiseIntervalFn split(d, {1.0}, {band(0, 0), band(0, 0)}, {ExtInterval(0.0)});
  const auto whole = PiecewiseIntervalFn::constant(d, ExtReal(0.0));
  const auto r = fn_equal(split, whole);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.mode, ComparisonMode::structural);
  EXPECT_FALSE(fn_equal(whole, PiecewiseIntervalFn::constant(d, ExtReal(1.0))).holds);
  EXPECT_THROW(fn_equal(whole, extfsi()), PreconditionError);
}

TEST(FnEqual, SampledModeForNearbyBreakpoints) {
  const Domain d{0.0, 1.0};
  const auto x = PieceExpr::affine(1.0, 0.0);
  const auto y = PieceExpr::affine(1.0, 1e-13);
  const PiecewiseIntervalFn f(d, {0.5}, {point(x), band(1, 1)}, {ExtInterval(0.5, 1.0)});
  const PiecewiseIntervalFn g(d, {0.5 + 1e-13}, {point(y), band(1, 1)}, {ExtInterval(0.5, 1.0)});
  const auto r = fn_equal(f, g);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.mode, ComparisonMode::sampled);
}

TEST(Normalize, NeverMergesPowerAcrossZero) {
  const Domain d{-1.0, 1.0};
  const auto sq = PieceExpr::power(2);
  const PiecewiseIntervalFn f(d, {0.0}, {point(sq), point(sq)}, {ExtInterval(0.0)});
  EXPECT_EQ(f.normalized().breakpoints().size(), 1u);
}

TEST(Orders, Examples) {
  const Domain d{-1.0, 1.0};
  EXPECT_TRUE(fn_leq(PiecewiseIntervalFn::constant(d, ExtReal(0.0)), PiecewiseIntervalFn::constant(d, ExtReal(1.0))));
  EXPECT_FALSE(fn_subseteq(extfsi(), extfsi_G()));
  EXPECT_TRUE(fn_subseteq(extfsi_FSI(), extfsi_G()));
  EXPECT_TRUE(fn_subseteq(hcont_lower_completion(extfsi()), normalize_G(extfsi())));
}

TEST(Orders, SkipIgnoresBreakpointValues) {
  const auto a = hat_infimum({-1.0, 1.0});
  const auto zero = PiecewiseIntervalFn::constant({-1.0, 1.0}, ExtReal(0.0));
  EXPECT_FALSE(fn_leq(a, zero));
  const std::vector<double> skip{0.0};
  EXPECT_TRUE(fn_leq(a, zero, kEqualityTolerance, skip));
  EXPECT_TRUE(fn_agree(a, zero, kEqualityTolerance, skip));
}

TEST(CofiniteDense, Validation) {
  EXPECT_THROW(CofiniteDense(kWindow, {3.0}), ValidationError);
  EXPECT_THROW(CofiniteDense(kWindow, {1.0, 1.0}), ValidationError);
  const CofiniteDense d(kWindow, {1.0, -1.0});
  EXPECT_FALSE(d.contains(1.0));
  EXPECT_TRUE(d.contains(0.0));
  EXPECT_EQ(d.excluded()[0], -1.0);
}

class PwfunProperties : public ::testing::Test {
 protected:
  testgen::Generator gen{testgen::kSeed + 1};
};

TEST_F(PwfunProperties, NormalizeIdempotent) {
  for (int i = 0; i < 200; ++i) {
    const auto f = gen.function();
    const auto n = f.normalized();
    EXPECT_EQ(n.normalized(), n);
    EXPECT_TRUE(fn_equal(f, n).holds);
  }
}

TEST_F(PwfunProperties, MergesAgreeWithPointwiseExtremes) {
  for (int i = 0; i < 60; ++i) {
    const auto d = gen.domain();
    const std::vector<PiecewiseIntervalFn> fs{gen.function(d), gen.function(d), gen.function(d)};
    const auto hi = pointwise_max(fs);
    const auto lo = pointwise_min(fs);
    std::vector<double> xs = interior_samples(d.left, d.right, 960);
    for (const auto& f : fs) xs.insert(xs.end(), f.breakpoints().begin(), f.breakpoints().end());
    for (double x : xs) {
      ExtReal mxl = ExtReal::neg_inf(), mxu = ExtReal::neg_inf();
      ExtReal mnl = ExtReal::pos_inf(), mnu = ExtReal::pos_inf();
      for (const auto& f : fs) {
        const auto v = f.eval(x);
        mxl = max(mxl, v.lower());
        mxu = max(mxu, v.upper());
        mnl = min(mnl, v.lower());
        mnu = min(mnu, v.upper());
      }
      EXPECT_TRUE(approx_equal(hi.eval(x), ExtInterval(mxl, mxu), 1e-9)) << "x=" << x;
      EXPECT_TRUE(approx_equal(lo.eval(x), ExtInterval(mnl, mnu), 1e-9)) << "x=" << x;
    }
  }
}

TEST_F(PwfunProperties, OrdersArePartialOrders) {
  for (int i = 0; i < 100; ++i) {
    const auto d = gen.domain();
    const auto f = gen.function(d);
    const auto g = gen.function(d);
    const std::vector<PiecewiseIntervalFn> pair{f, g};
    const auto hi = pointwise_max(pair);
    const auto wide = pointwise_envelope(pair, Reduce::min, Reduce::max);
    EXPECT_TRUE(fn_leq(f, f));
    EXPECT_TRUE(fn_subseteq(f, f));
    EXPECT_TRUE(fn_leq(f, hi));
    EXPECT_TRUE(fn_leq(g, hi));
    EXPECT_TRUE(fn_subseteq(f, wide));
    EXPECT_TRUE(fn_subseteq(g, wide));
    if (fn_leq(f, g) && fn_leq(g, f)) EXPECT_TRUE(fn_equal(f, g).holds);
    if (fn_subseteq(f, g) && fn_subseteq(g, f)) EXPECT_TRUE(fn_equal(f, g).holds);
    // transitivity through the envelope
    const std::vector<PiecewiseIntervalFn> triple{hi, gen.function(d)};
    EXPECT_TRUE(fn_leq(f, pointwise_max(triple)));
  }
}

}  // namespace
}  // namespace ifc
