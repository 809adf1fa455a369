#include <gtest/gtest.h>

#include "infgon/classification.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {

const Window kWindow{-10, 10};

ArcConfiguration fan_with_ray(Int m) { return {{Fan{m}}, {m}}; }

}  // namespace

TEST(Classify, Examples) {
  const auto ct = classify(fan_with_ray(0), kWindow);
  EXPECT_EQ(ct.verdict, Verdict::ClusterTilting);
  EXPECT_TRUE(ct.cluster_tilting);
  EXPECT_EQ(ct.reason, ReasonKind::FountainMatchesInfiniteArc);
  EXPECT_EQ(ct.maximality, MaximalityKind::CertifiedMaximal);

  const auto zz = classify(ArcConfiguration{{Zigzag{0}}, {}}, kWindow);
  EXPECT_EQ(zz.verdict, Verdict::WCT_LocallyFinite);
  EXPECT_FALSE(zz.cluster_tilting);

  const auto fan = classify(ArcConfiguration{{Fan{0}}, {}}, kWindow);
  EXPECT_EQ(fan.verdict, Verdict::NotWCT);
  EXPECT_EQ(fan.reason, ReasonKind::MissingInfiniteArc);
  EXPECT_EQ(fan.vertex, 0);

  const auto split = classify(ArcConfiguration{{SplitFan{0, 3}}, {}}, kWindow);
  EXPECT_EQ(split.verdict, Verdict::NotWCT);
  EXPECT_EQ(split.reason, ReasonKind::NotLocallyFiniteNoInfiniteArc);

  const auto single = classify(ArcConfiguration{{ExplicitArcs{{{0, 2}}}}, {}}, kWindow);
  EXPECT_EQ(single.verdict, Verdict::NotWCT);
  EXPECT_EQ(single.reason, ReasonKind::AddableArc);
  EXPECT_EQ(single.addable, (FiniteArc{2, 4}));

  const auto crossed = classify(ArcConfiguration{{Fan{0}}, {1}}, kWindow);
  EXPECT_EQ(crossed.reason, ReasonKind::CrossingPair);
  ASSERT_TRUE(crossed.crossing);
  EXPECT_EQ(crossed.crossing->first, (FiniteArc{0, 2}));

  const auto two = classify(ArcConfiguration{{Fan{0}}, {0, 4}}, kWindow);
  EXPECT_EQ(two.verdict, Verdict::NotWCT);
  EXPECT_EQ(two.reason, ReasonKind::MultipleInfiniteArcs);
  EXPECT_EQ(two.infinite_arcs, (std::vector<Int>{0, 4}));
}

TEST(Classify, MoreReasons) {
  EXPECT_EQ(classify(ArcConfiguration{{SplitFan{0, 3}}, {0}}, kWindow).reason, ReasonKind::FountainMismatch);
  EXPECT_EQ(classify(ArcConfiguration{{Zigzag{0}}, {5}}, kWindow).reason, ReasonKind::CrossingPair);
  // A lone infinite arc has no fountain to match.
  EXPECT_EQ(classify(ArcConfiguration{{}, {0}}, kWindow).reason, ReasonKind::FountainMismatch);
  // SplitFan(m, m) is Fan(m).
  EXPECT_EQ(classify(ArcConfiguration{{SplitFan{2, 2}}, {2}}, kWindow).verdict, Verdict::ClusterTilting);
  // Duplicate infinite arcs name one object.
  EXPECT_EQ(classify(ArcConfiguration{{Fan{1}}, {1, 1}}, kWindow).verdict, Verdict::ClusterTilting);
}

TEST(Classify, FamiliesOverParameters) {
  for (Int m = -5; m <= 5; ++m) {
    EXPECT_EQ(classify(fan_with_ray(m), kWindow).verdict, Verdict::ClusterTilting) << m;
    EXPECT_EQ(classify(ArcConfiguration{{Zigzag{m}}, {}}, kWindow).verdict, Verdict::WCT_LocallyFinite) << m;
    EXPECT_EQ(classify(ArcConfiguration{{Fan{m}}, {m + 1}}, kWindow).verdict, Verdict::NotWCT) << m;
  }
}

TEST(Classify, ClusterTiltingHasTheFountainConditions) {
  const ArcConfiguration c = fan_with_ray(-3);
  const auto cl = classify(c, kWindow);
  ASSERT_EQ(cl.verdict, Verdict::ClusterTilting);
  ASSERT_EQ(cl.infinite_arcs.size(), 1u);
  const auto& f = cl.fountains.at(cl.infinite_arcs.front());
  EXPECT_TRUE(f.left_fountain && f.right_fountain);
  // No finite arc in the window crosses the ray or can be added.
  const auto arcs = oracle::unfold(c, -12, 12);
  for (const auto& x : arcs) EXPECT_FALSE(x.a < -3 && -3 < x.b);
  EXPECT_TRUE(oracle::addable(arcs, -10, 10).empty());
}

TEST(EncodeVerdict, Format) {
  EXPECT_EQ(encode_verdict(classify(fan_with_ray(0), kWindow)),
            "VERDICT ClusterTilting\n"
            "WITNESS reason FountainMatchesInfiniteArc\n"
            "WITNESS infinite_arcs (0,inf)\n"
            "WITNESS vertex 0\n"
            "WITNESS fountain 0 left right\n"
            "WITNESS maximality CertifiedMaximal\n"
            "WITNESS cluster_tilting true\n");
  EXPECT_EQ(encode_verdict(classify(ArcConfiguration{{Fan{0}}, {1}}, kWindow)),
            "VERDICT NotWCT\n"
            "WITNESS reason CrossingPair\n"
            "WITNESS crossing (0,2) (1,inf)\n"
            "WITNESS infinite_arcs (1,inf)\n"
            "WITNESS cluster_tilting false\n");
}

TEST(StrongOverarc, Examples) {
  const ArcConfiguration zz{{Zigzag{0}}, {}};
  EXPECT_EQ(strong_overarc(zz, FiniteArc{-1, 1}), (FiniteArc{-2, 2}));
  EXPECT_EQ(strong_overarc(zz, Int{0}), (FiniteArc{-1, 1}));
  EXPECT_EQ(strong_overarc(zz, FiniteArc{-2, 2}), (FiniteArc{-3, 3}));
}

TEST(StrongOverarc, MatchesShortestStraddlingArc) {
  for (Int c = -3; c <= 3; ++c) {
    const ArcConfiguration zz{{Zigzag{c}}, {}};
    const auto all = oracle::unfold(zz, -60, 60);
    for (const auto& t : oracle::unfold(zz, -12, 12)) {
      ASSERT_EQ(strong_overarc(zz, t), oracle::shortest_straddling(all, t.a, t.b)) << to_string(Arc{t});
    }
    for (Int h = -12; h <= 12; ++h) {
      ASSERT_EQ(strong_overarc(zz, h), oracle::shortest_straddling(all, h, h)) << h;
    }
  }
}

TEST(StrongOverarc, RejectsOutsideHypotheses) {
  EXPECT_THROW(strong_overarc(fan_with_ray(0), Int{1}), DomainError);
  EXPECT_THROW(strong_overarc(ArcConfiguration{{Fan{0}}, {}}, Int{1}), DomainError);
  EXPECT_THROW(strong_overarc(ArcConfiguration{{ExplicitArcs{{{0, 2}}}}, {}}, Int{1}), DomainError);
  // Arc target not in the configuration.
  EXPECT_THROW(strong_overarc(ArcConfiguration{{Zigzag{0}}, {}}, FiniteArc{0, 2}), DomainError);
}

TEST(Antichain, Examples) {
  const ArcConfiguration zz{{Zigzag{0}}, {}};
  EXPECT_EQ(overarc_antichain(zz, {-1, 1}, 3), (std::vector<FiniteArc>{{-2, 2}, {-3, 3}, {-4, 4}}));
  EXPECT_TRUE(overarc_antichain(zz, {-1, 1}, 0).empty());
  EXPECT_THROW(overarc_antichain(fan_with_ray(0), {0, 2}, 1), DomainError);
  EXPECT_THROW(overarc_antichain(zz, {-1, 1}, -1), DomainError);
}

TEST(Antichain, LongChainsAreHomOrthogonal) {
  for (Int c = -2; c <= 2; ++c) {
    const ArcConfiguration zz{{Zigzag{c}}, {}};
    const FiniteArc seed{c - 1, c + 1};
    const auto chain = overarc_antichain(zz, seed, 24);
    ASSERT_EQ(chain.size(), 24u);
    Int prev_d = 0;
    Int prev_e = 0;
    for (const auto& x : chain) {
      EXPECT_GT(seed.a - x.a, prev_d);
      EXPECT_GT(x.b - seed.b, prev_e);
      prev_d = seed.a - x.a;
      prev_e = x.b - seed.b;
      // Finite-to-Pruefer maps are governed by the wedge of E_{-p-2}.
      EXPECT_TRUE(oracle::in_wedge(-seed.a - 2, arc_to_object(x)));
    }
    for (const auto& x : chain) {
      for (const auto& y : chain) {
        if (x == y) continue;
        EXPECT_EQ(oracle::hom(arc_to_object(x), arc_to_object(y)), 0);
      }
    }
  }
}

TEST(Zigzag, LeftEndpointSpotCheck) {
  // Where no arc of the zigzag ends at p from the left, some arc starts at p-1.
  for (Int c = -3; c <= 3; ++c) {
    const auto arcs = oracle::unfold(ArcConfiguration{{Zigzag{c}}, {}}, -30, 30);
    for (Int p = -8; p <= 8; ++p) {
      const bool ends_at_p = std::any_of(arcs.begin(), arcs.end(), [&](const FiniteArc& x) { return x.b == p; });
      if (ends_at_p) continue;
      EXPECT_TRUE(std::any_of(arcs.begin(), arcs.end(), [&](const FiniteArc& x) { return x.a == p - 1; }))
          << "c=" << c << " p=" << p;
    }
  }
}

TEST(Approximation, Examples) {
  const ArcConfiguration c = fan_with_ray(0);  // fountain f = 0, Pruefer E_{-2}
  const auto near = approximation_report(c, PruferInd{-1}, kWindow);
  EXPECT_EQ(near.kind, ApproximationKind::ZeroSuffices);
  EXPECT_EQ(near.prufer_slot, -2);
  EXPECT_TRUE(near.entries.empty());

  const auto same = approximation_report(c, PruferInd{-2}, kWindow);
  EXPECT_EQ(same.kind, ApproximationKind::PruferObject);
  EXPECT_EQ(same.target, IndObject{PruferInd{-2}});
  EXPECT_EQ(same.exceptions, 0u);

  const auto below = approximation_report(c, PruferInd{-3}, kWindow);
  EXPECT_EQ(below.kind, ApproximationKind::PruferObject);
  EXPECT_EQ(below.target, IndObject{PruferInd{-2}});
  EXPECT_EQ(below.exceptions, 0u);

  // d = Sigma^-1 X_2 = (-3, 1) lies in W(Sigma^0 X_0).
  const IndObject d = FiniteInd{-1, 2};
  ASSERT_TRUE(oracle::in_wedge(0, std::get<FiniteInd>(d)));
  const auto wedge = approximation_report(c, d, kWindow);
  EXPECT_EQ(wedge.kind, ApproximationKind::CosliceObject);
  ASSERT_TRUE(wedge.target);
  EXPECT_EQ(object_to_arc(*wedge.target), (Arc{FiniteArc{-3, 0}}));
  EXPECT_EQ(hom_dim(*wedge.target, d).value, 1);
  EXPECT_EQ(oracle::hom(std::get<FiniteInd>(*wedge.target), std::get<FiniteInd>(d)), 1);
  EXPECT_EQ(wedge.exceptions, 0u);
  EXPECT_GT(wedge.certified_composites, 0u);
}

TEST(Approximation, FarPruferUsesShortestCosliceArc) {
  const ArcConfiguration c = fan_with_ray(0);
  for (Int k = 2; k <= 6; ++k) {
    const IndObject d = PruferInd{-2 + k};
    const auto rep = approximation_report(c, d, kWindow);
    ASSERT_EQ(rep.kind, ApproximationKind::CosliceObject);
    const auto arc = std::get<FiniteArc>(object_to_arc(*rep.target));
    EXPECT_EQ(arc, (FiniteArc{-k, 0}));
    // Shorter coslice arcs do not map to d.
    for (Int x = -k + 1; x <= -2; ++x) EXPECT_EQ(hom_dim(arc_to_object(FiniteArc{x, 0}), d).value, 0);
    EXPECT_EQ(rep.exceptions, 0u);
  }
}

TEST(Approximation, ExceptionsDoNotGrowWithWindow) {
  const ArcConfiguration c = fan_with_ray(0);
  for (Int a = -8; a <= 8; ++a) {
    for (Int b = a + 2; b <= 8; ++b) {
      const FiniteInd d = arc_to_object(FiniteArc{a, b});
      const auto small = approximation_report(c, d, {-10, 10});
      const auto big = approximation_report(c, d, {-20, 20});
      // Almost-approximation: the exceptions do not grow with the window.
      ASSERT_EQ(small.exceptions, big.exceptions) << to_string(IndObject{d});
    }
  }
}

TEST(Approximation, RequiresClusterTilting) {
  EXPECT_THROW(approximation_report(ArcConfiguration{{Zigzag{0}}, {}}, PruferInd{0}, kWindow), DomainError);
}

TEST(DirectSystem, Examples) {
  EXPECT_EQ(classify_direct_system({std::nullopt, {}, RidesSliceFrom{0}}), DirectSystemLimit{PruferLimit{0}});
  EXPECT_EQ(classify_direct_system({std::nullopt, {}, ZigzagsForever{}}), DirectSystemLimit{ZeroLimit{}});
  // From Sigma^11 X_0 (slice level 11): up, down, up, down lands on level 7.
  const DirectSystemPath path{FiniteInd{11, 0},
                              {QuiverMove::Up, QuiverMove::Down, QuiverMove::Up, QuiverMove::Down},
                              RidesSliceFrom{7}};
  EXPECT_EQ(classify_direct_system(path), DirectSystemLimit{PruferLimit{7}});
}

TEST(DirectSystem, MalformedPrefixes) {
  EXPECT_THROW(classify_direct_system({FiniteInd{0, 0}, {QuiverMove::Down}, ZigzagsForever{}}), DomainError);
  EXPECT_THROW(classify_direct_system({std::nullopt, {QuiverMove::Up}, ZigzagsForever{}}), DomainError);
  // Slice level only goes down, in steps of two.
  EXPECT_THROW(classify_direct_system({FiniteInd{0, 0}, {QuiverMove::Up}, RidesSliceFrom{2}}), DomainError);
  EXPECT_THROW(classify_direct_system({FiniteInd{0, 0}, {QuiverMove::Up}, RidesSliceFrom{-1}}), DomainError);
  EXPECT_EQ(classify_direct_system({FiniteInd{0, 0}, {QuiverMove::Up}, RidesSliceFrom{-2}}),
            DirectSystemLimit{PruferLimit{-2}});
}
