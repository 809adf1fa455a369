#include "infgon/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "infgon/classification.hpp"
#include "infgon/graded.hpp"

namespace infgon {

namespace {

struct Mismatch {
  std::string what;
};

std::vector<FiniteArc> arcs_in(Int lo, Int hi) {
  std::vector<FiniteArc> out;
  for (Int a = lo; a <= hi; ++a) {
    for (Int b = a + 2; b <= hi; ++b) out.push_back({a, b});
  }
  return out;
}

std::string arc_text(const FiniteArc& x) { return to_string(Arc{x}); }

SuiteResult run_timed(int id, std::string name, double limit, const std::function<std::string()>& body) {
  SuiteResult r;
  r.id = id;
  r.name = std::move(name);
  r.time_limit = limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.passed = true;
  } catch (const Mismatch& m) {
    r.detail = m.what;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds >= limit) {
    r.passed = false;
    r.detail += " (took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit) + " s)";
  }
  return r;
}

void expect(bool ok, const std::function<std::string()>& message) {
  if (!ok) throw Mismatch{message()};
}

}  // namespace

SuiteResult suite_crossing_ext_bridge() {
  return run_timed(1, "crossing/Ext bridge on [-25,25]", 30.0, [] {
    const auto arcs = arcs_in(-25, 25);
    std::vector<IndObject> objs;
    for (const auto& x : arcs) objs.emplace_back(arc_to_object(x));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = 0; j < arcs.size(); ++j) {
        const int geo = ext_via_crossing(arcs[i], arcs[j]).value;
        const int fwd = ext_dim(objs[i], objs[j]).value;
        const int bwd = ext_dim(objs[j], objs[i]).value;
        expect(geo == fwd && geo == bwd, [&] {
          return "crossing " + std::to_string(geo) + " vs ext " + std::to_string(fwd) + "/" + std::to_string(bwd) +
                 " for " + arc_text(arcs[i]) + ", " + arc_text(arcs[j]);
        });
        ++pairs;
      }
    }
    return std::to_string(arcs.size()) + " arcs, " + std::to_string(pairs) + " ordered pairs";
  });
}

SuiteResult suite_serre_duality() {
  return run_timed(2, "Serre duality on [-25,25]", 30.0, [] {
    std::vector<FiniteInd> objs;
    for (const auto& x : arcs_in(-25, 25)) objs.push_back(arc_to_object(x));
    std::size_t pairs = 0;
    for (const auto& a : objs) {
      const IndObject a2 = shift_object(a, 2);
      for (const auto& b : objs) {
        const int lhs = hom_dim(a, b).value;
        const int rhs = hom_dim(b, a2).value;
        expect(lhs == rhs, [&] { return "Hom(" + to_string(IndObject{a}) + ", " + to_string(IndObject{b}) + ")"; });
        ++pairs;
      }
    }
    return std::to_string(pairs) + " ordered pairs";
  });
}

namespace {

std::string tower_suite(bool inverse) {
  const Int n_max = 60;
  std::size_t towers = 0;
  std::size_t ones = 0;
  for (const auto& arc : arcs_in(-15, 15)) {
    const FiniteInd y = arc_to_object(arc);
    for (Int n = -8; n <= 8; ++n) {
      int tower = 0;
      int formula = 0;
      if (inverse) {
        tower = truncated_lim(build_inverse_hom_tower(y, n, n_max)).value;
        formula = wedge_contains(n + 2, y) ? 1 : 0;
        expect(formula == hom_dim(PruferInd{n}, y).value, [&] { return "wedge test disagrees with hom_dim"; });
      } else {
        tower = truncated_colim(build_hom_tower(y, n, n_max)).value;
        formula = hom_dim(y, PruferInd{n}).value;
      }
      expect(tower == formula, [&] {
        return "tower " + std::to_string(tower) + " vs formula " + std::to_string(formula) + " for Y=" +
               to_string(IndObject{y}) + ", n=" + std::to_string(n);
      });
      ++towers;
      ones += static_cast<std::size_t>(formula);
    }
  }
  return std::to_string(towers) + " towers of length 60, " + std::to_string(ones) + " nonzero";
}

}  // namespace

SuiteResult suite_direct_towers() {
  return run_timed(3, "direct towers vs Hom(Y, E_n)", 60.0, [] { return tower_suite(false); });
}

SuiteResult suite_inverse_towers() {
  return run_timed(4, "inverse towers vs Hom(E_n, Y)", 60.0, [] { return tower_suite(true); });
}

SuiteResult suite_prufer_double_tower() {
  return run_timed(5, "double tower vs Hom(E_m, E_n)", 60.0, [] {
    std::size_t count = 0;
    for (Int m = -6; m <= 6; ++m) {
      for (Int n = -6; n <= 6; ++n) {
        const int got = prufer_prufer_tower(m, n, 30);
        const int want = n <= m ? 1 : 0;
        expect(got == want && got == hom_dim(PruferInd{m}, PruferInd{n}).value, [&] {
          return "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": tower gives " + std::to_string(got);
        });
        ++count;
      }
    }
    return std::to_string(count) + " pairs";
  });
}

SuiteResult suite_classification_fixtures() {
  return run_timed(6, "classification fixtures", 5.0, [] {
    const Window w{-10, 10};
    struct Fixture {
      std::string label;
      ArcConfiguration c;
      Verdict verdict;
      ReasonKind reason;
    };
    const std::vector<Fixture> fixtures = {
        {"Fan(0)+[0]", {{Fan{0}}, {0}}, Verdict::ClusterTilting, ReasonKind::FountainMatchesInfiniteArc},
        {"Zigzag(0)", {{Zigzag{0}}, {}}, Verdict::WCT_LocallyFinite, ReasonKind::LocallyFiniteMaximal},
        {"Fan(0)", {{Fan{0}}, {}}, Verdict::NotWCT, ReasonKind::MissingInfiniteArc},
        {"Explicit{(0,2)}", {{ExplicitArcs{{{0, 2}}}}, {}}, Verdict::NotWCT, ReasonKind::AddableArc},
        {"SplitFan(0,3)", {{SplitFan{0, 3}}, {}}, Verdict::NotWCT, ReasonKind::NotLocallyFiniteNoInfiniteArc},
        {"Fan(0)+[1]", {{Fan{0}}, {1}}, Verdict::NotWCT, ReasonKind::CrossingPair},
        {"Fan(0)+[0,3]", {{Fan{0}}, {0, 3}}, Verdict::NotWCT, ReasonKind::MultipleInfiniteArcs},
    };
    for (const auto& f : fixtures) {
      const Classification cl = classify(f.c, w);
      expect(cl.verdict == f.verdict && cl.reason == f.reason, [&] {
        return f.label + ": got " + to_string(cl.verdict) + "/" + to_string(cl.reason);
      });
      if (f.reason == ReasonKind::CrossingPair) {
        expect(cl.crossing && arcs_cross(Arc{cl.crossing->first}, cl.crossing->second) == CrossResult::Cross,
               [&] { return f.label + ": crossing witness does not cross"; });
      }
      if (f.reason == ReasonKind::AddableArc) {
        expect(cl.addable && !contains(f.c, *cl.addable) && !crossing_arc(f.c, *cl.addable),
               [&] { return f.label + ": addable witness is not addable"; });
      }
      expect(cl.cluster_tilting == (f.verdict == Verdict::ClusterTilting),
             [&] { return f.label + ": cluster tilting flag inconsistent"; });
    }
    return std::to_string(fixtures.size()) + " fixtures";
  });
}

SuiteResult suite_zigzag_witnesses() {
  return run_timed(7, "Zigzag(0) overarcs and antichain", 10.0, [] {
    const ArcConfiguration c{{Zigzag{0}}, {}};
    std::size_t found = 0;
    for (const auto& t : materialize_finite(c, Window{-10, 10})) {
      const FiniteArc o = strong_overarc(c, t);
      expect(contains(c, o) && o.a < t.a && t.b < o.b,
             [&] { return "bad overarc " + arc_text(o) + " of " + arc_text(t); });
      ++found;
    }
    for (Int h = -10; h <= 10; ++h) {
      const FiniteArc o = strong_overarc(c, h);
      expect(contains(c, o) && o.a < h && h < o.b,
             [&] { return "bad overarc " + arc_text(o) + " of " + std::to_string(h); });
      ++found;
    }
    const FiniteArc seed{-1, 1};
    const auto chain = overarc_antichain(c, seed, 20);
    expect(chain.size() == 20, [] { return "antichain is short"; });
    const IndObject prufer = PruferInd{-seed.a - 2};
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const IndObject x = arc_to_object(chain[i]);
      expect(hom_dim(x, prufer).value == 1, [&] { return "no map to the Pruefer object from " + arc_text(chain[i]); });
      for (std::size_t j = 0; j < chain.size(); ++j) {
        if (i == j) continue;
        expect(hom_dim(x, arc_to_object(chain[j])).value == 0,
               [&] { return "Hom(" + arc_text(chain[i]) + ", " + arc_text(chain[j]) + ") != 0"; });
      }
    }
    return std::to_string(found) + " overarcs, antichain of 20 ending at " + arc_text(chain.back());
  });
}

SuiteResult suite_graded_modules() {
  return run_timed(8, "duality involution, F-images, support mirror", 5.0, [] {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<Int> shift(-40, 40);
    std::uniform_int_distribution<Int> length(1, 30);
    const Window mirror{-50, 50};
    for (int k = 0; k < 1000; ++k) {
      GradedModuleDescriptor m;
      switch (kind(rng)) {
        case 0:
          m = FiniteCyclic{shift(rng), length(rng)};
          break;
        case 1:
          m = PolyFree{shift(rng)};
          break;
        default:
          m = PruferMod{shift(rng)};
          break;
      }
      const GradedModuleDescriptor d = dual_descriptor(m);
      expect(dual_descriptor(d) == m, [&] { return "dual is not an involution on " + to_string(m); });
      auto dims = degreewise_dims(m, mirror);
      const auto dual_dims = degreewise_dims(d, mirror);
      std::reverse(dims.begin(), dims.end());
      expect(dims == dual_dims, [&] { return "support of " + to_string(d) + " is not the mirror of " + to_string(m); });
    }
    for (Int i = -20; i <= 20; ++i) {
      for (Int n = 0; n <= 20; ++n) {
        const auto img = f_image(FiniteInd{i, n});
        expect(img == GradedModuleDescriptor{FiniteCyclic{i, n + 1}},
               [&] { return "F-image of X[" + std::to_string(i) + "," + std::to_string(n) + "]"; });
        const auto dims = degreewise_dims(img, mirror);
        expect(std::count(dims.begin(), dims.end(), 1) == n + 1, [&] { return "total dimension of " + to_string(img); });
      }
    }
    return std::string("1000 random descriptors, 861 F-images");
  });
}

SuiteResult suite_shift_equivariance() {
  return run_timed(9, "shift equivariance on [-15,15]", 30.0, [] {
    std::vector<IndObject> objs;
    for (const auto& x : arcs_in(-15, 15)) objs.emplace_back(arc_to_object(x));
    for (Int m = -15; m <= 15; ++m) objs.emplace_back(arc_to_object(Arc{InfiniteArc{m}}));
    std::size_t checks = 0;
    for (Int t = -5; t <= 5; ++t) {
      std::vector<IndObject> shifted;
      for (const auto& x : objs) {
        shifted.push_back(shift_object(x, t));
        const Arc before = object_to_arc(x);
        const Arc after = object_to_arc(shifted.back());
        Arc moved = before;
        if (auto* f = std::get_if<FiniteArc>(&moved)) {
          f->a -= t;
          f->b -= t;
        } else {
          std::get<InfiniteArc>(moved).m -= t;
        }
        expect(after == moved, [&] { return "arc of " + to_string(x) + " shifted by " + std::to_string(t); });
      }
      for (std::size_t i = 0; i < objs.size(); ++i) {
        for (std::size_t j = 0; j < objs.size(); ++j) {
          expect(hom_dim(objs[i], objs[j]).value == hom_dim(shifted[i], shifted[j]).value, [&] {
            return "Hom(" + to_string(objs[i]) + ", " + to_string(objs[j]) + ") under shift " + std::to_string(t);
          });
          ++checks;
        }
      }
    }
    return std::to_string(checks) + " Hom comparisons";
  });
}

std::vector<SuiteResult> run_all_suites() {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_suite(id));
  return out;
}

SuiteResult run_suite(int id) {
  switch (id) {
    case 1:
      return suite_crossing_ext_bridge();
    case 2:
      return suite_serre_duality();
    case 3:
      return suite_direct_towers();
    case 4:
      return suite_inverse_towers();
    case 5:
      return suite_prufer_double_tower();
    case 6:
      return suite_classification_fixtures();
    case 7:
      return suite_zigzag_witnesses();
    case 8:
      return suite_graded_modules();
    case 9:
      return suite_shift_equivariance();
    default:
      throw DomainError("no suite " + std::to_string(id) + ", expected 1..9");
  }
}

}  // namespace infgon
