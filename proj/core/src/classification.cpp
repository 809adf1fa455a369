#include "infgon/classification.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "overloaded.hpp"

namespace infgon {

namespace {

using detail::Overloaded;

bool shorter(const FiniteArc& x, const FiniteArc& y) {
  return std::tuple(x.length(), x.a, x.b) < std::tuple(y.length(), y.a, y.b);
}

std::string fountain_text(Int v, const FountainFlags& f) {
  std::string s = std::to_string(v);
  if (f.left_fountain) s += " left";
  if (f.right_fountain) s += " right";
  return s;
}

}  // namespace

Classification classify(const ArcConfiguration& c, const Window& window) {
  validate(c);
  validate(window);
  Classification cl;
  cl.infinite_arcs = c.infinite_arcs;
  std::sort(cl.infinite_arcs.begin(), cl.infinite_arcs.end());
  cl.infinite_arcs.erase(std::unique(cl.infinite_arcs.begin(), cl.infinite_arcs.end()), cl.infinite_arcs.end());

  if (cl.infinite_arcs.size() >= 2) {
    cl.reason = ReasonKind::MultipleInfiniteArcs;
    return cl;
  }
  if (auto w = noncrossing_check(c)) {
    cl.reason = ReasonKind::CrossingPair;
    cl.crossing = *w;
    return cl;
  }

  cl.fountains = fountain_profile(c);
  const Maximality max = maximality_check(c, window);
  cl.maximality = max.kind;

  if (cl.infinite_arcs.empty()) {
    if (max.kind == MaximalityKind::AddableArc) {
      cl.reason = ReasonKind::AddableArc;
      cl.addable = max.addable;
      return cl;
    }
    if (!cl.fountains.empty()) {
      // With a fountain at v, the arc (v, inf) crosses nothing, so the set
      // cannot be weakly cluster tilting without it.
      auto it = std::find_if(cl.fountains.begin(), cl.fountains.end(),
                             [](const auto& kv) { return kv.second.left_fountain && kv.second.right_fountain; });
      if (it != cl.fountains.end()) {
        cl.reason = ReasonKind::MissingInfiniteArc;
        cl.vertex = it->first;
      } else {
        cl.reason = ReasonKind::NotLocallyFiniteNoInfiniteArc;
        cl.vertex = cl.fountains.begin()->first;
      }
      return cl;
    }
    cl.verdict = Verdict::WCT_LocallyFinite;
    cl.reason = ReasonKind::LocallyFiniteMaximal;
    return cl;
  }

  const Int m = cl.infinite_arcs.front();
  const bool exact_fountain =
      cl.fountains.size() == 1 && cl.fountains.begin()->first == m && cl.fountains.begin()->second.left_fountain &&
      cl.fountains.begin()->second.right_fountain;
  if (!exact_fountain) {
    cl.reason = ReasonKind::FountainMismatch;
    cl.vertex = m;
    return cl;
  }
  if (max.kind == MaximalityKind::AddableArc) {
    cl.reason = ReasonKind::AddableArc;
    cl.addable = max.addable;
    return cl;
  }
  // The fountain-plus-infinite-arc case is always functorially finite, so it
  // is reported directly as ClusterTilting.
  cl.verdict = Verdict::ClusterTilting;
  cl.reason = ReasonKind::FountainMatchesInfiniteArc;
  cl.vertex = m;
  cl.cluster_tilting = true;
  return cl;
}

std::string encode_verdict(const Classification& cl) {
  std::ostringstream out;
  out << "VERDICT " << to_string(cl.verdict) << "\n";
  out << "WITNESS reason " << to_string(cl.reason) << "\n";
  if (cl.crossing) {
    out << "WITNESS crossing " << to_string(Arc{cl.crossing->first}) << " " << to_string(cl.crossing->second) << "\n";
  }
  if (cl.addable) out << "WITNESS addable " << to_string(Arc{*cl.addable}) << "\n";
  if (!cl.infinite_arcs.empty()) {
    out << "WITNESS infinite_arcs";
    for (Int m : cl.infinite_arcs) out << " " << to_string(Arc{InfiniteArc{m}});
    out << "\n";
  }
  if (cl.vertex) out << "WITNESS vertex " << *cl.vertex << "\n";
  if (cl.reason != ReasonKind::CrossingPair && cl.reason != ReasonKind::MultipleInfiniteArcs) {
    for (const auto& [v, f] : cl.fountains) out << "WITNESS fountain " << fountain_text(v, f) << "\n";
    out << "WITNESS maximality " << to_string(cl.maximality) << "\n";
  }
  out << "WITNESS cluster_tilting " << (cl.cluster_tilting ? "true" : "false") << "\n";
  return out.str();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::WCT_LocallyFinite:
      return "WCT_LocallyFinite";
    case Verdict::WCT_FountainPlusInfinite:
      return "WCT_FountainPlusInfinite";
    case Verdict::ClusterTilting:
      return "ClusterTilting";
    case Verdict::NotWCT:
      return "NotWCT";
  }
  return "?";
}

std::string to_string(ReasonKind r) {
  switch (r) {
    case ReasonKind::CrossingPair:
      return "CrossingPair";
    case ReasonKind::AddableArc:
      return "AddableArc";
    case ReasonKind::MissingInfiniteArc:
      return "MissingInfiniteArc";
    case ReasonKind::FountainMismatch:
      return "FountainMismatch";
    case ReasonKind::MultipleInfiniteArcs:
      return "MultipleInfiniteArcs";
    case ReasonKind::NotLocallyFiniteNoInfiniteArc:
      return "NotLocallyFiniteNoInfiniteArc";
    case ReasonKind::LocallyFiniteMaximal:
      return "LocallyFiniteMaximal";
    case ReasonKind::FountainMatchesInfiniteArc:
      return "FountainMatchesInfiniteArc";
  }
  return "?";
}

namespace {

void require_locally_finite_maximal(const ArcConfiguration& c, const FiniteArc& around) {
  validate(c);
  if (!c.infinite_arcs.empty()) throw DomainError("strong overarcs need a set of finite arcs only");
  if (auto w = noncrossing_check(c)) {
    throw DomainError("configuration is not non-crossing: " + to_string(Arc{w->first}) + " crosses " +
                      to_string(w->second));
  }
  if (!is_locally_finite(c)) throw DomainError("configuration is not locally finite");
  const Int pad = around.length() + 4;
  const Maximality max = maximality_check(c, Window{around.a - pad, around.b + pad});
  if (max.kind == MaximalityKind::AddableArc) {
    throw DomainError("configuration is not maximal: " + to_string(Arc{*max.addable}) + " can be added");
  }
}

}  // namespace

FiniteArc strong_overarc(const ArcConfiguration& c, const OverarcTarget& target) {
  // An integer target h behaves like the degenerate pair p = q = h.
  const auto [p, q] = std::visit(Overloaded{
                                     [](const FiniteArc& t) { return std::pair{t.a, t.b}; },
                                     [](Int h) { return std::pair{h, h}; },
                                 },
                                 target);
  check_coordinate(p, "overarc target");
  check_coordinate(q, "overarc target");
  require_locally_finite_maximal(c, FiniteArc{p, q});
  if (const auto* t = std::get_if<FiniteArc>(&target)) {
    make_finite_arc(t->a, t->b);
    if (!contains(c, *t)) throw DomainError("target " + to_string(Arc{*t}) + " is not in the configuration");
  }

  auto best_in = [&](const Window& w) {
    std::optional<FiniteArc> best;
    for (const auto& x : materialize_finite(c, w)) {
      if (x.a < p && q < x.b && (!best || shorter(x, *best))) best = x;
    }
    return best;
  };

  for (Int radius = (q - p) + 2; radius <= (Int{1} << 26); radius *= 2) {
    auto best = best_in(Window{p - radius, q + radius});
    if (!best) continue;
    // Any straddling arc of length <= L has both endpoints in [q-L, p+L].
    const Int len = best->length();
    if (p - radius > q - len || q + radius < p + len) best = best_in(Window{q - len, p + len});
    return *best;
  }
  throw DomainError("no strong overarc found within search bound");
}

std::vector<FiniteArc> overarc_antichain(const ArcConfiguration& c, const FiniteArc& seed, Int count) {
  if (count < 0) throw DomainError("antichain length must be >= 0");
  make_finite_arc(seed.a, seed.b);
  require_locally_finite_maximal(c, seed);
  if (!contains(c, seed)) throw DomainError("seed " + to_string(Arc{seed}) + " is not in the configuration");

  std::vector<FiniteArc> chain;
  FiniteArc cur = seed;
  Int prev_delta = 0;
  Int prev_eps = 0;
  for (Int k = 0; k < count; ++k) {
    const FiniteArc next = strong_overarc(c, cur);
    const Int delta = seed.a - next.a;
    const Int eps = next.b - seed.b;
    if (!contains(c, next) || delta <= prev_delta || eps <= prev_eps) {
      throw DomainError("overarc chain is not strictly nested at " + to_string(Arc{next}));
    }
    chain.push_back(next);
    prev_delta = delta;
    prev_eps = eps;
    cur = next;
  }

  const IndObject prufer = PruferInd{-seed.a - 2};
  std::vector<IndObject> objs;
  for (const auto& x : chain) objs.emplace_back(arc_to_object(x));
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (hom_dim(objs[i], prufer).value != 1) {
      throw DomainError("Hom(" + to_string(objs[i]) + ", " + to_string(prufer) + ") vanishes");
    }
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      if (hom_dim(objs[i], objs[j]).value != 0 || hom_dim(objs[j], objs[i]).value != 0) {
        throw DomainError("chain members " + to_string(objs[i]) + " and " + to_string(objs[j]) +
                          " are not Hom-orthogonal");
      }
    }
  }
  return chain;
}

ApproximationReport approximation_report(const ArcConfiguration& c, const IndObject& d, const Window& window) {
  validate(d);
  const Classification cl = classify(c, window);
  if (cl.verdict != Verdict::ClusterTilting) {
    throw DomainError("configuration is not cluster tilting (" + to_string(cl.reason) + ")");
  }
  ApproximationReport rep;
  rep.fountain = cl.infinite_arcs.front();
  rep.prufer_slot = -rep.fountain - 2;
  const Int f = rep.fountain;
  const Int n = rep.prufer_slot;

  // The coslice arcs (x, f) form the left fountain. The approximating one is
  // the shortest of them that still maps to d.
  auto coslice_target = [&]() -> IndObject {
    for (Int x = f - 2; x >= f - 2 - (Int{1} << 26); --x) {
      const IndObject t = arc_to_object(FiniteArc{x, f});
      if (hom_dim(t, d).value == 1) return t;
    }
    throw DomainError("no coslice arc maps to " + to_string(d));
  };

  if (const auto* e = std::get_if<PruferInd>(&d)) {
    const Int k = e->slot - n;
    if (k <= 0) {
      rep.kind = ApproximationKind::PruferObject;
      rep.target = PruferInd{n};
    } else if (k == 1) {
      rep.kind = ApproximationKind::ZeroSuffices;
    } else {
      rep.kind = ApproximationKind::CosliceObject;
      rep.target = coslice_target();
    }
  } else if (wedge_contains(n + 2, std::get<FiniteInd>(d))) {
    rep.kind = ApproximationKind::CosliceObject;
    rep.target = coslice_target();
  } else {
    rep.kind = ApproximationKind::ZeroSuffices;
  }

  for (const Arc& arc : materialize(c, window)) {
    const IndObject t = arc_to_object(arc);
    if (hom_dim(t, d).value != 1) continue;
    ApproximationEntry entry{arc, false, std::nullopt};
    if (rep.target) {
      const IndObject& g = *rep.target;
      if (t == g) {
        entry.handled = true;
      } else if (hom_dim(t, g).value == 1 && hom_dim(g, d).value == 1) {
        const auto* ft = std::get_if<FiniteInd>(&t);
        const auto* fg = std::get_if<FiniteInd>(&g);
        const auto* fd = std::get_if<FiniteInd>(&d);
        if (ft && fg && fd) {
          entry.composite = composite_nonzero(*ft, *fg, *fd);
          entry.handled = *entry.composite != Truth::False;
        } else {
          entry.handled = true;
        }
      }
    }
    if (!entry.handled) ++rep.exceptions;
    if (entry.composite == Truth::True) ++rep.certified_composites;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

std::string to_string(ApproximationKind k) {
  switch (k) {
    case ApproximationKind::ZeroSuffices:
      return "ZeroSuffices";
    case ApproximationKind::CosliceObject:
      return "CosliceObject";
    case ApproximationKind::PruferObject:
      return "PruferObject";
  }
  return "?";
}

DirectSystemLimit classify_direct_system(const DirectSystemPath& path) {
  if (!path.prefix.empty() && !path.start) throw DomainError("a non-empty prefix needs a start vertex");
  std::optional<FiniteInd> pos = path.start;
  if (pos) validate(*pos);
  for (QuiverMove mv : path.prefix) {
    pos->shift -= 1;
    pos->index += mv == QuiverMove::Up ? 1 : -1;
    if (pos->index < 0) throw DomainError("move leaves the quiver at index -1");
    check_coordinate(pos->shift, "shift");
  }
  return std::visit(Overloaded{
                        [&](const RidesSliceFrom& r) -> DirectSystemLimit {
                          check_coordinate(r.slot, "slot");
                          // Every arrow lowers shift by one and keeps shift + index
                          // or lowers it by two; the slice from Sigma^n X_0 has
                          // shift + index = n.
                          if (pos) {
                            const Int level = pos->shift + pos->index;
                            if (r.slot > level || (level - r.slot) % 2 != 0) {
                              throw DomainError("slice from " + to_string(IndObject{FiniteInd{r.slot, 0}}) +
                                                " is not reachable from " + to_string(IndObject{*pos}));
                            }
                          }
                          return PruferLimit{r.slot};
                        },
                        [](const ZigzagsForever&) -> DirectSystemLimit { return ZeroLimit{}; },
                    },
                    path.tail);
}

}  // namespace infgon
