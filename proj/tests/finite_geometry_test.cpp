#include <chainlines/finite_geometry.hpp>
#include <chainlines/variety_io.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace chainlines;

namespace {

ProjPoint pt(const PrimeField& f, std::vector<std::int64_t> c) { return ProjPoint::from_integers(f, c); }

// Lines through x exactly as the definition reads: join x with every other
// point of P^N(F_p), deduplicate, keep those inside X.
std::vector<Line> lines_through_by_ambient_scan(const VarietySpec& spec, const ProjPoint& x) {
  std::set<Line> lines;
  for_each_point(spec.field(), spec.ambient(), [&](const std::vector<Element>& c) {
    ProjPoint y(spec.field(), c);
    if (y != x) lines.insert(line_through(spec.field(), x, y));
  });
  std::vector<Line> out;
  for (const auto& ln : lines)
    if (line_in_variety(spec, ln)) out.push_back(ln);
  return out;
}

}  // namespace

TEST(PrimeField, Validation) {
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(std::uint64_t{1} << 31), std::invalid_argument);
  const PrimeField f(2147483647);
  EXPECT_EQ(f.mul(f.inv(12345), 12345), 1u);
  EXPECT_EQ(PrimeField(7).reduce(-1), 6u);
}

TEST(ProjPoint, Normalization) {
  const PrimeField f(5);
  EXPECT_EQ(pt(f, {0, 2, 4, 1}).to_string(), "0:1:2:3");
  EXPECT_EQ(pt(f, {0, 2, 4, 1}), pt(f, {0, 3, 1, 4}));
  EXPECT_THROW(pt(f, {0, 5, 10, 0}), std::invalid_argument);
}

TEST(Eval, Examples) {
  const auto q5 = samples::split_quadric(5);
  EXPECT_EQ(eval(q5.field(), q5.polys()[0], pt(q5.field(), {1, 0, 0, 0})), 0u);
  const auto fc = samples::fermat_cubic_surface(7);
  EXPECT_EQ(eval(fc.field(), fc.polys()[0], pt(fc.field(), {1, 0, 0, 0})), 1u);
  const auto q3 = samples::split_quadric(3);
  EXPECT_EQ(eval(q3.field(), q3.polys()[0], pt(q3.field(), {1, 1, 1, 1})), 0u);
  EXPECT_THROW(eval(q3.field(), q3.polys()[0], pt(q3.field(), {1, 1, 1})), std::invalid_argument);
}

TEST(OnVariety, Examples) {
  const auto q3 = samples::split_quadric(3);
  EXPECT_TRUE(on_variety(q3, pt(q3.field(), {1, 0, 0, 0})));
  EXPECT_FALSE(on_variety(q3, pt(q3.field(), {1, 0, 0, 1})));
  for (const auto& x : enumerate_points(q3)) EXPECT_TRUE(on_variety(q3, x));
}

TEST(EnumeratePoints, QuadricCounts) {
  for (std::uint64_t q : {3, 5, 7}) {
    const auto pts = enumerate_points(samples::split_quadric(q));
    EXPECT_EQ(pts.size(), (q + 1) * (q + 1)) << q;
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    EXPECT_EQ(std::set<ProjPoint>(pts.begin(), pts.end()).size(), pts.size());
  }
}

TEST(EnumeratePoints, EmptyAndLinear) {
  EXPECT_TRUE(enumerate_points(samples::empty_linear_system(3, 3)).empty());
  // a plane in P^3 over F_3 has q^2 + q + 1 points
  EXPECT_EQ(enumerate_points(samples::coordinate_hyperplane(3, 3)).size(), 13u);
  std::size_t all = 0;
  for_each_point(PrimeField(3), 3, [&](const auto&) { ++all; });
  EXPECT_EQ(all, 40u);
}

TEST(EnumeratePoints, BudgetGuard) {
  EXPECT_THROW(enumerate_points(samples::split_quadric(10007)), budget_exceeded);
  EXPECT_NO_THROW(check_budget(PrimeField(463), 3));  // 463^3 < 1e8
  EXPECT_THROW(check_budget(PrimeField(467), 3), budget_exceeded);
}

TEST(LineThrough, Canonical) {
  const PrimeField f(5);
  const auto a = pt(f, {1, 0, 0, 0}), b = pt(f, {0, 0, 0, 1});
  const auto ln = line_through(f, a, b);
  EXPECT_EQ(ln.to_string(), "1:0:0:0,0:0:0:1");
  EXPECT_EQ(ln, line_through(f, b, a));
  const auto c = pt(f, {1, 0, 0, 3});
  EXPECT_EQ(line_through(f, a, c), ln);
  EXPECT_EQ(line_through(f, c, b), ln);
  EXPECT_THROW(line_through(f, a, a), std::invalid_argument);
  EXPECT_EQ(ln.points(f).size(), 6u);
}

TEST(LineThroughProperty, AnyTwoPointsGiveTheSameLine) {
  const PrimeField f(7);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> coord(0, 6);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::int64_t> ca(4), cb(4);
    for (auto& c : ca) c = coord(rng);
    for (auto& c : cb) c = coord(rng);
    if (std::all_of(ca.begin(), ca.end(), [](auto v) { return v == 0; })) ca[0] = 1;
    if (std::all_of(cb.begin(), cb.end(), [](auto v) { return v == 0; })) cb[3] = 1;
    const auto a = pt(f, ca), b = pt(f, cb);
    if (a == b) continue;
    const auto ln = line_through(f, a, b);
    const auto pts = ln.points(f);
    ASSERT_EQ(pts.size(), 8u);
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), a));
    EXPECT_TRUE(std::binary_search(pts.begin(), pts.end(), b));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int k = 0; k < 5; ++k) {
      const auto i = pick(rng), j = pick(rng);
      if (i != j) EXPECT_EQ(line_through(f, pts[i], pts[j]), ln);
    }
  }
}

TEST(LineInVariety, Examples) {
  const auto q3 = samples::split_quadric(3);
  const auto& f = q3.field();
  EXPECT_TRUE(line_in_variety(q3, line_through(f, pt(f, {1, 0, 0, 0}), pt(f, {0, 1, 0, 0}))));
  EXPECT_FALSE(line_in_variety(q3, line_through(f, pt(f, {1, 0, 0, 0}), pt(f, {0, 0, 0, 1}))));

  for (std::uint64_t p : {5, 7, 11}) {
    const auto fc = samples::fermat_cubic_surface(p);
    const auto& g = fc.field();
    EXPECT_TRUE(line_in_variety(fc, line_through(g, pt(g, {1, -1, 0, 0}), pt(g, {0, 0, 1, -1})))) << p;
  }
}

TEST(LineInVariety, SymbolicNotSampled) {
  // x0 x1 (x0 + x1) vanishes at every F_2-point of P^2 on the line x2 = 0,
  // but is not zero on that line.
  const PrimeField f(2);
  const VarietySpec spec(f, 2, {HomogPoly(f, 3, 3, {{1, {2, 1, 0}}, {1, {1, 2, 0}}})});
  const auto ln = line_through(f, pt(f, {1, 0, 0}), pt(f, {0, 1, 0}));
  for (const auto& q : ln.points(f)) EXPECT_TRUE(on_variety(spec, q));
  EXPECT_FALSE(line_in_variety(spec, ln));
}

TEST(LinesThrough, QuadricHasTwoRulings) {
  const auto q5 = samples::split_quadric(5);
  const auto pts = enumerate_points(q5);
  ASSERT_EQ(pts.size(), 36u);
  for (const auto& x : pts) EXPECT_EQ(lines_through(q5, x).size(), 2u) << x.to_string();
}

TEST(LinesThrough, PlaneHasAPencil) {
  const auto plane = samples::coordinate_hyperplane(3, 3);
  for (const auto& x : enumerate_points(plane)) EXPECT_EQ(lines_through(plane, x).size(), 4u);
}

TEST(LinesThrough, FermatCubicHasLinelessPoints) {
  // Over F_5 and F_11 (p = 2 mod 3) most F_p-points lie on no F_p-line.
  for (std::uint64_t p : {5, 11}) {
    const auto fc = samples::fermat_cubic_surface(p);
    const auto pts = enumerate_points(fc);
    std::size_t lineless = 0;
    for (const auto& x : pts) lineless += lines_through(fc, x, pts).empty();
    EXPECT_GT(lineless, 0u) << p;
  }
  // Over F_7 all 27 lines are rational and every point lies on 2 or 3 of them.
  const auto fc7 = samples::fermat_cubic_surface(7);
  const auto pts7 = enumerate_points(fc7);
  EXPECT_EQ(pts7.size(), 99u);
  std::set<Line> all_lines;
  for (const auto& x : pts7) {
    const auto ls = lines_through(fc7, x, pts7);
    EXPECT_GE(ls.size(), 2u);
    EXPECT_LE(ls.size(), 3u);
    all_lines.insert(ls.begin(), ls.end());
  }
  EXPECT_EQ(all_lines.size(), 27u);
}

TEST(LinesThrough, RejectsPointsOffTheVariety) {
  const auto q3 = samples::split_quadric(3);
  EXPECT_THROW(lines_through(q3, pt(q3.field(), {1, 0, 0, 1})), std::invalid_argument);
}

TEST(LinesThroughProperty, MatchesAmbientScanAndContainment) {
  for (const auto& spec : {samples::split_quadric(3), samples::fermat_cubic_surface(5), samples::fermat_cubic_surface(7),
                           samples::coordinate_hyperplane(3, 3)}) {
    for (const auto& x : enumerate_points(spec)) {
      const auto fast = lines_through(spec, x);
      EXPECT_EQ(fast, lines_through_by_ambient_scan(spec, x));
      for (const auto& ln : fast)
        for (const auto& q : ln.points(spec.field())) EXPECT_TRUE(on_variety(spec, q));
    }
  }
}

TEST(LineGraph, CacheMatchesRecomputation) {
  for (const auto& spec : {samples::split_quadric(5), samples::fermat_cubic_surface(7)}) {
    const LineGraph g(spec);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& x = g.points()[i];
      EXPECT_EQ(g.lines_at(i), lines_through(spec, x));
      std::set<std::size_t> expected;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && line_in_variety(spec, line_through(spec.field(), x, g.points()[j]))) expected.insert(j);
      EXPECT_EQ(std::vector<std::size_t>(expected.begin(), expected.end()), g.neighbors(i));
    }
  }
}

TEST(ChainSearch, QuadricNeedsTwoLines) {
  const auto q5 = samples::split_quadric(5);
  const auto& f = q5.field();
  const auto x = pt(f, {1, 0, 0, 0}), y = pt(f, {0, 0, 0, 1});
  const auto c = chain_search(q5, x, y, 4);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 2u);
  EXPECT_EQ(c->points.front(), x);
  EXPECT_EQ(c->points.back(), y);
  for (const auto& ln : c->lines) EXPECT_TRUE(line_in_variety(q5, ln));
  EXPECT_FALSE(chain_search(q5, x, y, 1).has_value());

  const auto self = chain_search(q5, x, x, 3);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->length(), 0u);
  EXPECT_EQ(self->points, std::vector<ProjPoint>{x});
}

TEST(ChainSearch, IsolatedPointHasNoChain) {
  const auto fc = samples::fermat_cubic_surface(5);
  const LineGraph g(fc);
  std::optional<std::size_t> isolated;
  for (std::size_t i = 0; i < g.size() && !isolated; ++i)
    if (g.lines_at(i).empty()) isolated = i;
  ASSERT_TRUE(isolated.has_value());
  const auto& x = g.points()[*isolated];
  for (std::size_t l = 1; l <= 5; ++l)
    for (const auto& y : g.points())
      if (y != x) EXPECT_FALSE(g.shortest_chain(x, y, l).has_value());
}

TEST(ChainSearch, RejectsEndpointsOffTheVariety) {
  const auto q3 = samples::split_quadric(3);
  const auto& f = q3.field();
  EXPECT_THROW(chain_search(q3, pt(f, {1, 0, 0, 0}), pt(f, {1, 0, 0, 1}), 2), std::invalid_argument);
}

TEST(ChainSearchProperty, Symmetric) {
  for (const auto& spec : {samples::split_quadric(3), samples::fermat_cubic_surface(5)}) {
    const LineGraph g(spec);
    for (const auto& x : g.points())
      for (const auto& y : g.points()) {
        const auto a = g.shortest_chain(x, y, 4), b = g.shortest_chain(y, x, 4);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) EXPECT_EQ(a->length(), b->length());
      }
  }
}

TEST(Locus, Quadric) {
  const auto q5 = samples::split_quadric(5);
  const auto x = pt(q5.field(), {1, 0, 0, 0});
  EXPECT_EQ(locus(q5, x, 1).size(), 11u);
  EXPECT_EQ(locus(q5, x, 2).size(), 36u);
  EXPECT_EQ(locus(q5, x, 5).size(), 36u);
  EXPECT_THROW(locus(q5, x, 0), std::invalid_argument);
}

TEST(LocusProperty, MonotoneAndStabilizes) {
  for (const auto& spec : {samples::split_quadric(5), samples::fermat_cubic_surface(5), samples::fermat_cubic_surface(7)}) {
    const LineGraph g(spec);
    for (const auto& x : g.points()) {
      auto prev = g.reachable(x, 1);
      bool stable = false;
      for (std::size_t l = 2; l <= 6; ++l) {
        const auto cur = g.reachable(x, l);
        EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        if (stable) EXPECT_EQ(cur, prev);
        stable = cur == prev;
        prev = cur;
      }
    }
  }
}

TEST(Connectivity, Examples) {
  const auto q3 = connectivity_report(samples::split_quadric(3), 3);
  EXPECT_EQ(q3.points, 16u);
  EXPECT_LT(q3.fraction(1), 1.0);
  EXPECT_EQ(q3.fraction(2), 1.0);
  EXPECT_EQ(q3.lines_histogram, (std::map<std::size_t, std::size_t>{{2, 16}}));

  const auto plane = connectivity_report(samples::coordinate_hyperplane(3, 3), 2);
  EXPECT_EQ(plane.fraction(1), 1.0);

  const auto fc5 = connectivity_report(samples::fermat_cubic_surface(5), 5);
  for (std::size_t l = 1; l <= 5; ++l) EXPECT_LT(fc5.fraction(l), 1.0);
  EXPECT_GT(fc5.lines_histogram.at(0), 0u);
}

TEST(CountChains, QuadricMatchesIntersectionNumber) {
  // chain_count([2], 3, 2) = 2: two points on no common line are joined
  // through exactly two intermediate points.
  for (std::uint64_t q : {3, 5, 7}) {
    const LineGraph g(samples::split_quadric(q));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j || std::binary_search(g.neighbors(i).begin(), g.neighbors(i).end(), j)) continue;
        EXPECT_EQ(g.count_chains(g.points()[i], g.points()[j], 2), 2u);
        ++pairs;
      }
    EXPECT_EQ(pairs, (q + 1) * (q + 1) * q * q) << q;
  }
}
