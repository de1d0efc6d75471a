#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "generators.hpp"
#include "ifc/baire.hpp"
#include "ifc/classify.hpp"
#include "ifc/cnd.hpp"
#include "ifc/lattice.hpp"
#include "laws.hpp"

namespace ifc {
namespace {

using namespace fixtures;

const Domain kUnit{-1.0, 1.0};

PiecewiseIntervalFn bump() {
  return PiecewiseIntervalFn(kUnit, {0.0}, {band(0, 0), band(0, 0)}, {ExtInterval(1.0, 2.0)});
}

PiecewiseIntervalFn unit_band() { return PiecewiseIntervalFn::constant(kUnit, ExtInterval(0.0, 1.0)); }

PiecewiseIntervalFn identity() { return PiecewiseIntervalFn::point(kUnit, PieceExpr::affine(1.0, 0.0)); }

TEST(Continuity, SExamples) {
  EXPECT_TRUE(is_S_continuous(extfsi()));
  EXPECT_FALSE(is_S_continuous(bump()));
  EXPECT_TRUE(is_S_continuous(identity()));
  EXPECT_TRUE(is_S_continuous(PiecewiseIntervalFn::point(kUnit, PieceExpr::sigmoid(3.0))));
}

TEST(Continuity, DExamples) {
  EXPECT_TRUE(is_D_continuous(normalize_G(extfsi())));
  EXPECT_FALSE(is_D_continuous(extfsi()));
  EXPECT_TRUE(is_D_continuous(unit_band()));
}

TEST(Continuity, HExamples) {
  EXPECT_TRUE(is_H_continuous(hcont_upper_completion(extfsi())));
  EXPECT_FALSE(is_H_continuous(normalize_G(extfsi())));
  EXPECT_FALSE(is_H_continuous(unit_band()));
}

TEST(Continuity, ReportWitnesses) {
  const auto r = continuity_report(extfsi());
  EXPECT_TRUE(r.isS);
  EXPECT_FALSE(r.isD);
  EXPECT_FALSE(r.isH);
  EXPECT_FALSE(r.isContinuousInterval);
  ASSERT_FALSE(r.witnesses.empty());
  const auto b = continuity_report(bump());
  EXPECT_FALSE(b.isS);
  ASSERT_FALSE(b.witnesses.empty());
  EXPECT_EQ(b.witnesses.front().point, 0.0);
  const auto c = continuity_report(unit_band());
  EXPECT_TRUE(c.isContinuousInterval);
  EXPECT_FALSE(c.isH);
  EXPECT_EQ(c.witnesses.size(), 1u);
  EXPECT_TRUE(continuity_report(identity()).witnesses.empty());
}

TEST(ProperValues, Examples) {
  const auto w = proper_value_set(hcont_upper_completion(extfsi()));
  EXPECT_EQ(w.points, std::vector<double>{0.0});
  EXPECT_TRUE(w.pieces.empty());
  EXPECT_TRUE(proper_value_set(identity()).empty());
  const auto band_w = proper_value_set(unit_band());
  EXPECT_TRUE(band_w.points.empty());
  ASSERT_EQ(band_w.pieces.size(), 1u);
  EXPECT_EQ(band_w.pieces.front(), OpenPiece(-1.0, 1.0));
}

TEST(CommonPointSet, Examples) {
  const std::vector<PiecewiseIntervalFn> ext{hcont_upper_completion(extfsi()), hcont_lower_completion(extfsi())};
  const auto d = common_point_set(ext);
  EXPECT_EQ(std::vector<double>(d.excluded().begin(), d.excluded().end()), std::vector<double>{0.0});
  const std::vector<PiecewiseIntervalFn> g{identity()};
  EXPECT_TRUE(common_point_set(g).is_full());
  const Domain dom{-2.0, 2.0};
  const std::vector<PiecewiseIntervalFn> steps{f0(CndFunction(dom, {0.0}, {c(-1.0), c(1.0)})),
                                               f0(CndFunction(dom, {1.0}, {c(-1.0), c(1.0)}))};
  const auto ds = common_point_set(steps);
  EXPECT_EQ(std::vector<double>(ds.excluded().begin(), ds.excluded().end()), (std::vector<double>{0.0, 1.0}));
}

TEST(CommonPointSet, Errors) {
  EXPECT_THROW(common_point_set(std::vector<PiecewiseIntervalFn>{}), PreconditionError);
  const std::vector<PiecewiseIntervalFn> bad{unit_band()};
  EXPECT_THROW(common_point_set(bad), PreconditionError);
  const std::vector<PiecewiseIntervalFn> mixed{identity(), hcont_upper_completion(extfsi())};
  EXPECT_THROW(common_point_set(mixed), PreconditionError);
}

TEST(PointContinuity, Examples) {
  const auto h = hcont_upper_completion(extfsi());
  const auto at0 = point_continuity_report(h, 0.0);
  EXPECT_FALSE(at0.lowerContinuousAtA);
  EXPECT_FALSE(at0.upperContinuousAtA);
  EXPECT_FALSE(at0.degenerateAtA);
  const auto at_half = point_continuity_report(h, 0.5);
  EXPECT_TRUE(at_half.lowerContinuousAtA);
  EXPECT_TRUE(at_half.upperContinuousAtA);
  EXPECT_TRUE(at_half.degenerateAtA);
  const auto g = point_continuity_report(identity(), -0.25);
  EXPECT_TRUE(g.lowerContinuousAtA && g.upperContinuousAtA && g.degenerateAtA);
  EXPECT_THROW(point_continuity_report(extfsi(), 0.0), PreconditionError);
  EXPECT_THROW(point_continuity_report(identity(), 3.0), PreconditionError);
}

TEST(Finiteness, Examples) {
  const auto r = finiteness(f0(cnd_reciprocal()));
  EXPECT_TRUE(r.isNearlyFinite);
  EXPECT_FALSE(r.isFinite);
  EXPECT_FALSE(r.isBounded);
  EXPECT_EQ(r.gammaPoints, std::vector<double>{0.0});
  EXPECT_TRUE(r.gammaPieces.empty());

  const auto inf = finiteness(PiecewiseIntervalFn::constant(kUnit, ExtReal::pos_inf()));
  EXPECT_FALSE(inf.isNearlyFinite);
  ASSERT_EQ(inf.gammaPieces.size(), 1u);

  const auto sup = finiteness(fn_family_sup_expected());
  EXPECT_FALSE(sup.isNearlyFinite);
  ASSERT_EQ(sup.gammaPieces.size(), 1u);
  EXPECT_EQ(sup.gammaPieces.front(), OpenPiece(0.0, 1.0));

  const auto fin = finiteness(PiecewiseIntervalFn::point(Domain::real_line(), PieceExpr::affine(1.0, 0.0)));
  EXPECT_TRUE(fin.isFinite);
  EXPECT_FALSE(fin.isBounded);
  EXPECT_TRUE(finiteness(unit_band()).isBounded);
}

TEST(Selection, Examples) {
  const auto hull = has_continuous_selection(hull_expected());
  ASSERT_TRUE(hull.exists);
  for (const auto& [x, y] : hull.witness) EXPECT_TRUE(hull_expected().eval(x).contains(y));
  EXPECT_FALSE(has_continuous_selection(hcont_upper_completion(extfsi())).exists);
  const auto g = has_continuous_selection(identity());
  ASSERT_TRUE(g.exists);
  for (const auto& [x, y] : g.witness) EXPECT_NEAR(y.value(), x, 1e-12);
  EXPECT_THROW(has_continuous_selection(extfsi()), PreconditionError);
}

bool within(const ExtInterval& v, ExtReal y) { return approx_leq(v.lower(), y) && approx_leq(y, v.upper()); }

// The witness polyline stays in f(x) at its nodes and is continuous across breakpoints.
void expect_valid_selection(const PiecewiseIntervalFn& f, const SelectionResult& s) {
  ASSERT_FALSE(s.witness.empty());
  for (const auto& [x, y] : s.witness) {
    EXPECT_TRUE(within(f.eval(x), y)) << "x=" << x;
    if (f.breakpoint_index(x)) {
      EXPECT_TRUE(within(f.one_sided_limit(x, Side::left), y)) << "x=" << x;
      EXPECT_TRUE(within(f.one_sided_limit(x, Side::right), y)) << "x=" << x;
    }
  }
  EXPECT_TRUE(std::is_sorted(s.witness.begin(), s.witness.end(),
                             [](const auto& p, const auto& q) { return p.first < q.first; }));
}

class ClassifyProperties : public ::testing::Test {
 protected:
  testgen::Generator gen{testgen::kSeed + 3};
};

TEST_F(ClassifyProperties, ImplicationChain) {
  for (int i = 0; i < 200; ++i) {
    const auto f = i % 3 == 0 ? gen.d_continuous(gen.domain()) : (i % 3 == 1 ? gen.h_continuous(gen.domain()) : gen.function());
    const auto r = continuity_report(f);
    if (r.isH) EXPECT_TRUE(r.isD);
    if (r.isD) EXPECT_TRUE(r.isS);
    EXPECT_EQ(r.isS, is_S_continuous(f));
    EXPECT_EQ(r.isD, is_D_continuous(f));
    EXPECT_EQ(r.isH, is_H_continuous(f));
    EXPECT_EQ(r.isS && r.isD && r.isH && r.isContinuousInterval, r.witnesses.empty());
    const auto fr = finiteness(f);
    if (fr.isBounded) EXPECT_TRUE(fr.isFinite);
    if (fr.isFinite) EXPECT_TRUE(fr.isNearlyFinite);
  }
}

TEST_F(ClassifyProperties, DContinuityAgainstExcludedPoints) {
  for (int i = 0; i < 150; ++i) {
    const auto f = gen.d_continuous(gen.domain());
    ASSERT_TRUE(is_D_continuous(f));
    auto pts = gen.points(f.domain(), gen.uniform_int(1, 3));
    for (double b : f.breakpoints())
      if (gen.chance(0.5) && std::find(pts.begin(), pts.end(), b) == pts.end()) pts.push_back(b);
    const CofiniteDense d(f.domain(), pts);
    EXPECT_TRUE(fn_equal(graph_completion(f, d), f).holds);
  }
}

TEST_F(ClassifyProperties, PointSContinuousIsContinuous) {
  int seen = 0;
  for (int i = 0; i < 300; ++i) {
    const auto f = gen.finite_point_function(gen.domain());
    if (!is_S_continuous(f)) continue;
    ++seen;
    for (double b : f.breakpoints()) {
      const auto v = f.eval(b);
      EXPECT_TRUE(approx_equal(f.one_sided_limit(b, Side::left), v));
      EXPECT_TRUE(approx_equal(f.one_sided_limit(b, Side::right), v));
    }
  }
  EXPECT_GT(seen, 20);
}

TEST_F(ClassifyProperties, CompletionsAreHContinuous) {
  for (int i = 0; i < 150; ++i) {
    const auto f = gen.function();
    EXPECT_TRUE(is_H_continuous(hcont_lower_completion(f)));
    EXPECT_TRUE(is_H_continuous(hcont_upper_completion(f)));
    const auto w = proper_value_set(hcont_upper_completion(f));
    EXPECT_TRUE(w.pieces.empty());
  }
}

TEST_F(ClassifyProperties, DContinuityViaComponentCompletions) {
  int d_count = 0;
  for (int i = 0; i < 300; ++i) {
    const int mode = i % 3;
    const auto f = mode == 0 ? gen.d_continuous(gen.domain())
                             : (mode == 1 ? graph_completion(gen.function()) : gen.function());
    const bool d = is_D_continuous(f);
    d_count += d ? 1 : 0;
    EXPECT_EQ(d, testgen::component_completions_h_continuous(f)) << "case " << i;
    // With semicontinuous components the completions are F of each component.
    if (mode != 2) {
      const bool literal = is_H_continuous(graph_completion(component_fn(f, Component::lower))) &&
                           is_H_continuous(graph_completion(component_fn(f, Component::upper)));
      EXPECT_EQ(d, literal) << "case " << i;
    }
  }
  EXPECT_GT(d_count, 80);
}

TEST(DContinuityViaComponents, NonSemicontinuousLower) {
  // Lower component jumps down after its value at 0, so it is not lsc.
  const auto f = PiecewiseIntervalFn(kUnit, {0.0}, {band(1, 3), band(0, 3)}, {ExtInterval(1.0, 3.0)});
  EXPECT_FALSE(is_D_continuous(f));
  EXPECT_TRUE(is_H_continuous(graph_completion(component_fn(f, Component::lower))));
  EXPECT_TRUE(is_H_continuous(graph_completion(component_fn(f, Component::upper))));
  EXPECT_FALSE(testgen::component_completions_h_continuous(f));
}

TEST_F(ClassifyProperties, OrderOffFiniteSets) {
  for (int i = 0; i < 150; ++i) {
    const auto dom = gen.domain();
    const auto f = gen.h_continuous(dom);
    const std::vector<PiecewiseIntervalFn> pair{f, gen.h_continuous(dom)};
    const auto g = sup_H(pair);
    const auto h = pair[1];
    std::vector<double> skip(f.breakpoints().begin(), f.breakpoints().end());
    skip.insert(skip.end(), h.breakpoints().begin(), h.breakpoints().end());
    skip.insert(skip.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(skip.begin(), skip.end());
    skip.erase(std::unique(skip.begin(), skip.end()), skip.end());
    EXPECT_TRUE(fn_leq(f, g, kEqualityTolerance, skip));
    EXPECT_TRUE(fn_leq(f, g));
    if (fn_leq(f, h, kEqualityTolerance, skip)) EXPECT_TRUE(fn_leq(f, h));
    if (fn_agree(f, h, kEqualityTolerance, skip)) EXPECT_TRUE(fn_equal(f, h).holds);
    // Inclusion between H-continuous functions is equality.
    if (fn_subseteq(f, h)) EXPECT_TRUE(fn_equal(f, h).holds);
    EXPECT_TRUE(fn_subseteq(f, sup_H(std::vector<PiecewiseIntervalFn>{f, f})));
  }
}

TEST_F(ClassifyProperties, InclusionOffFiniteSetsForD) {
  for (int i = 0; i < 150; ++i) {
    const auto dom = gen.domain();
    const auto f = gen.d_continuous(dom);
    const std::vector<PiecewiseIntervalFn> pair{f, gen.d_continuous(dom)};
    const auto g = inclusion_join(pair);
    std::vector<double> skip(g.breakpoints().begin(), g.breakpoints().end());
    skip.insert(skip.end(), f.breakpoints().begin(), f.breakpoints().end());
    std::sort(skip.begin(), skip.end());
    skip.erase(std::unique(skip.begin(), skip.end()), skip.end());
    EXPECT_TRUE(fn_subseteq(f, g, kEqualityTolerance, skip));
    EXPECT_TRUE(fn_subseteq(f, g));
  }
}

TEST_F(ClassifyProperties, SelectionWitnesses) {
  int found = 0;
  for (int i = 0; i < 200; ++i) {
    const auto f = gen.d_continuous(gen.domain());
    const auto s = has_continuous_selection(f);
    if (!s.exists) {
      EXPECT_TRUE(s.witness.empty());
      continue;
    }
    ++found;
    expect_valid_selection(f, s);
  }
  EXPECT_GT(found, 10);
}

}  // namespace
}  // namespace ifc
