#include "infgon/configuration.hpp"

#include <algorithm>
#include <tuple>

#include "overloaded.hpp"

namespace infgon {

namespace {

using detail::Overloaded;

void sort_unique(std::vector<FiniteArc>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

// Shortest first, then lexicographic.
bool shorter(const FiniteArc& x, const FiniteArc& y) {
  return std::tuple(x.length(), x.a, x.b) < std::tuple(y.length(), y.a, y.b);
}

void keep_shortest(std::optional<FiniteArc>& best, const FiniteArc& candidate) {
  if (!best || shorter(candidate, *best)) best = candidate;
}

// Fan(v) and SplitFan(v, v) are the same arc set.
Generator canonical(const Generator& g) {
  if (const auto* s = std::get_if<SplitFan>(&g); s && s->p == s->q) return Fan{s->p};
  return g;
}

std::vector<FiniteArc> merged_explicit(const ArcConfiguration& c) {
  std::vector<FiniteArc> out;
  for (const auto& g : c.generators) {
    if (const auto* e = std::get_if<ExplicitArcs>(&g)) {
      out.insert(out.end(), e->arcs.begin(), e->arcs.end());
    }
  }
  sort_unique(out);
  return out;
}

// Distinct non-explicit generators, in first-appearance order.
std::vector<Generator> infinite_generators(const ArcConfiguration& c) {
  std::vector<Generator> out;
  for (const auto& g : c.generators) {
    if (std::holds_alternative<ExplicitArcs>(g)) continue;
    Generator canon = canonical(g);
    if (std::find(out.begin(), out.end(), canon) == out.end()) out.push_back(std::move(canon));
  }
  return out;
}

// Parameters of a non-explicit generator, used to centre witness searches.
std::pair<Int, Int> parameter_span(const Generator& g) {
  return std::visit(Overloaded{
                        [](const ExplicitArcs&) { return std::pair<Int, Int>{0, 0}; },
                        [](const Fan& f) { return std::pair{f.vertex, f.vertex}; },
                        [](const Zigzag& z) { return std::pair{z.center, z.center}; },
                        [](const SplitFan& s) { return std::pair{s.p, s.q}; },
                    },
                    g);
}

}  // namespace

void validate(const Generator& g) {
  std::visit(Overloaded{
                 [](const ExplicitArcs& e) {
                   for (const auto& a : e.arcs) make_finite_arc(a.a, a.b);
                 },
                 [](const Fan& f) { check_coordinate(f.vertex, "fan vertex"); },
                 [](const Zigzag& z) { check_coordinate(z.center, "zigzag center"); },
                 [](const SplitFan& s) {
                   check_coordinate(s.p, "splitfan p");
                   check_coordinate(s.q, "splitfan q");
                   if (s.p > s.q) {
                     throw DomainError("SplitFan requires p <= q, got p=" + std::to_string(s.p) +
                                       " q=" + std::to_string(s.q));
                   }
                 },
             },
             g);
}

void validate(const ArcConfiguration& c) {
  for (const auto& g : c.generators) validate(g);
  for (Int m : c.infinite_arcs) check_coordinate(m, "infinite arc endpoint");
}

VertexStar vertex_star(const Generator& g, Int e) {
  VertexStar star;
  auto& fin = star.finite;
  std::visit(Overloaded{
                 [&](const ExplicitArcs& ex) {
                   for (const auto& a : ex.arcs) {
                     if (a.a == e || a.b == e) fin.push_back(a);
                   }
                 },
                 [&](const Fan& f) {
                   const Int v = f.vertex;
                   if (e == v) {
                     star.left_family = star.right_family = true;
                   } else if (e <= v - 2) {
                     fin.push_back({e, v});
                   } else if (e >= v + 2) {
                     fin.push_back({v, e});
                   }
                 },
                 [&](const Zigzag& z) {
                   const Int d = e - z.center;
                   if (d >= 1) {
                     fin.push_back({z.center - d, e});
                     fin.push_back({z.center - d - 1, e});
                   } else if (d <= -1) {
                     const Int n = -d;
                     fin.push_back({e, z.center + n});
                     if (n >= 2) fin.push_back({e, z.center + n - 1});
                   }
                 },
                 [&](const SplitFan& s) {
                   const Int p = s.p;
                   const Int q = s.q;
                   if (e == p) {
                     star.left_family = true;
                     if (p == q) star.right_family = true;
                     for (Int j = p + 2; j <= q; ++j) fin.push_back({p, j});
                   } else if (e == q) {
                     star.right_family = true;
                     if (q >= p + 2) fin.push_back({p, q});
                   } else if (e <= p - 2) {
                     fin.push_back({e, p});
                   } else if (e >= q + 2) {
                     fin.push_back({q, e});
                   } else if (p + 2 <= e && e < q) {
                     fin.push_back({p, e});
                   }
                 },
             },
             g);
  sort_unique(fin);
  return star;
}

VertexStar vertex_star(const ArcConfiguration& c, Int e) {
  VertexStar out;
  for (const auto& g : c.generators) {
    VertexStar s = vertex_star(g, e);
    out.finite.insert(out.finite.end(), s.finite.begin(), s.finite.end());
    out.left_family = out.left_family || s.left_family;
    out.right_family = out.right_family || s.right_family;
  }
  sort_unique(out.finite);
  return out;
}

bool contains(const Generator& g, const FiniteArc& arc) {
  if (arc.a > arc.b - 2) return false;
  const VertexStar left = vertex_star(g, arc.a);
  if (left.right_family || std::binary_search(left.finite.begin(), left.finite.end(), arc)) {
    return true;
  }
  return vertex_star(g, arc.b).left_family;
}

bool contains(const ArcConfiguration& c, const FiniteArc& arc) {
  return std::any_of(c.generators.begin(), c.generators.end(),
                     [&](const Generator& g) { return contains(g, arc); });
}

std::vector<FiniteArc> materialize(const Generator& g, const Window& window) {
  validate(window);
  std::vector<FiniteArc> out;
  for (Int e = window.lo; e <= window.hi; ++e) {
    const VertexStar star = vertex_star(g, e);
    for (const auto& a : star.finite) {
      if (a.a == e && window.contains(a.b)) out.push_back(a);
    }
    if (star.right_family) {
      for (Int b = e + 2; b <= window.hi; ++b) out.push_back({e, b});
    }
    if (star.left_family) {
      for (Int a = window.lo; a <= e - 2; ++a) out.push_back({a, e});
    }
  }
  sort_unique(out);
  return out;
}

std::vector<FiniteArc> materialize_finite(const ArcConfiguration& c, const Window& window) {
  std::vector<FiniteArc> out;
  for (const auto& g : c.generators) {
    auto part = materialize(g, window);
    out.insert(out.end(), part.begin(), part.end());
  }
  sort_unique(out);
  return out;
}

std::vector<Arc> materialize(const ArcConfiguration& c, const Window& window) {
  std::vector<Arc> out;
  for (const auto& a : materialize_finite(c, window)) out.emplace_back(a);
  std::vector<Int> ms;
  for (Int m : c.infinite_arcs) {
    if (window.contains(m)) ms.push_back(m);
  }
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  for (Int m : ms) out.emplace_back(InfiniteArc{m});
  return out;
}

std::optional<FiniteArc> crossing_arc(const Generator& g, const FiniteArc& x) {
  // Any arc crossing x has exactly one endpoint strictly inside (x.a, x.b).
  std::optional<FiniteArc> best;
  for (Int e = x.a + 1; e < x.b; ++e) {
    const VertexStar star = vertex_star(g, e);
    for (const auto& y : star.finite) {
      if (crosses(x, y)) keep_shortest(best, y);
    }
    if (star.right_family) keep_shortest(best, {e, x.b + 1});
    if (star.left_family) keep_shortest(best, {x.a - 1, e});
  }
  return best;
}

std::optional<FiniteArc> crossing_arc(const ArcConfiguration& c, const FiniteArc& x) {
  std::optional<FiniteArc> best;
  for (const auto& g : c.generators) {
    if (auto y = crossing_arc(g, x)) keep_shortest(best, *y);
  }
  return best;
}

std::optional<FiniteArc> straddling_arc(const Generator& g, Int m) {
  return std::visit(
      Overloaded{
          [m](const ExplicitArcs& ex) -> std::optional<FiniteArc> {
            std::optional<FiniteArc> best;
            for (const auto& a : ex.arcs) {
              if (crosses(a, m)) keep_shortest(best, a);
            }
            return best;
          },
          [m](const Fan& f) -> std::optional<FiniteArc> {
            if (m > f.vertex) return FiniteArc{f.vertex, m + 1};
            if (m < f.vertex) return FiniteArc{m - 1, f.vertex};
            return std::nullopt;
          },
          [m](const Zigzag& z) -> std::optional<FiniteArc> {
            const Int c = z.center;
            if (m == c) return FiniteArc{c - 1, c + 1};
            if (m > c) {
              const Int d = m - c;
              return FiniteArc{c - d - 1, c + d + 1};
            }
            // (c-n-1, c+n) with n = c-m is shorter than any (c-n, c+n) straddling m.
            const Int d = c - m;
            return FiniteArc{c - d - 1, c + d};
          },
          [m](const SplitFan& s) -> std::optional<FiniteArc> {
            if (m < s.p) return FiniteArc{m - 1, s.p};
            if (m > s.q) return FiniteArc{s.q, m + 1};
            if (s.p < m && m < s.q) return FiniteArc{s.p, m + 1};
            return std::nullopt;
          },
      },
      g);
}

std::optional<FiniteArc> straddling_arc(const ArcConfiguration& c, Int m) {
  std::optional<FiniteArc> best;
  for (const auto& g : c.generators) {
    if (auto y = straddling_arc(g, m)) keep_shortest(best, *y);
  }
  return best;
}

namespace {

// Two different maximal generators always cross: the first is not contained
// in the second, and any arc outside a maximal non-crossing set crosses it.
// So widening the window around both parameter sets must find a witness.
CrossingWitness generator_pair_witness(const Generator& g1, const Generator& g2) {
  const auto [p1, q1] = parameter_span(g1);
  const auto [p2, q2] = parameter_span(g2);
  const Int lo = std::min(p1, p2);
  const Int hi = std::max(q1, q2);
  for (Int radius = 4; radius <= (Int{1} << 24); radius *= 2) {
    auto arcs = materialize(g1, Window{lo - radius, hi + radius});
    std::sort(arcs.begin(), arcs.end(), shorter);
    for (const auto& x : arcs) {
      if (auto y = crossing_arc(g2, x)) return {x, Arc{*y}};
    }
  }
  throw std::logic_error("distinct generators " + to_string(g1) + " and " + to_string(g2) +
                         " produced no crossing witness");
}

}  // namespace

std::optional<CrossingWitness> noncrossing_check(const ArcConfiguration& c) {
  validate(c);
  const auto explicit_arcs = merged_explicit(c);
  const auto gens = infinite_generators(c);

  for (std::size_t i = 0; i < explicit_arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < explicit_arcs.size(); ++j) {
      if (crosses(explicit_arcs[i], explicit_arcs[j])) {
        return CrossingWitness{explicit_arcs[i], Arc{explicit_arcs[j]}};
      }
    }
  }
  for (const auto& x : explicit_arcs) {
    for (const auto& g : gens) {
      if (auto y = crossing_arc(g, x)) return CrossingWitness{x, Arc{*y}};
    }
  }
  if (gens.size() >= 2) return generator_pair_witness(gens[0], gens[1]);
  std::vector<Int> ms = c.infinite_arcs;
  std::sort(ms.begin(), ms.end());
  for (Int m : ms) {
    if (auto y = straddling_arc(c, m)) return CrossingWitness{*y, Arc{InfiniteArc{m}}};
  }
  return std::nullopt;
}

std::map<Int, FountainFlags> fountain_profile(const ArcConfiguration& c) {
  std::map<Int, FountainFlags> out;
  for (const auto& g : c.generators) {
    if (const auto* f = std::get_if<Fan>(&g)) {
      out[f->vertex].left_fountain = true;
      out[f->vertex].right_fountain = true;
    } else if (const auto* s = std::get_if<SplitFan>(&g)) {
      out[s->p].left_fountain = true;
      out[s->q].right_fountain = true;
    }
  }
  return out;
}

bool is_locally_finite(const ArcConfiguration& c) { return fountain_profile(c).empty(); }

Maximality maximality_check(const ArcConfiguration& c, const Window& window) {
  validate(c);
  validate(window);
  const auto explicit_arcs = merged_explicit(c);
  const auto gens = infinite_generators(c);

  if (gens.empty()) {
    // A finite arc set is never maximal: nothing ends right of its span.
    if (explicit_arcs.empty()) return {MaximalityKind::AddableArc, FiniteArc{0, 2}};
    Int right = explicit_arcs.front().b;
    for (const auto& a : explicit_arcs) right = std::max(right, a.b);
    return {MaximalityKind::AddableArc, FiniteArc{right, right + 2}};
  }

  for (Int a = window.lo; a <= window.hi; ++a) {
    for (Int b = a + 2; b <= window.hi; ++b) {
      const FiniteArc x{a, b};
      if (!contains(c, x) && !crossing_arc(c, x)) return {MaximalityKind::AddableArc, x};
    }
  }
  if (gens.size() == 1 && explicit_arcs.empty()) return {MaximalityKind::CertifiedMaximal, std::nullopt};
  return {MaximalityKind::WindowVerified, std::nullopt};
}

std::string to_string(const Generator& g) {
  return std::visit(Overloaded{
                        [](const ExplicitArcs& e) {
                          std::string s = "Explicit{";
                          for (std::size_t i = 0; i < e.arcs.size(); ++i) {
                            if (i) s += ",";
                            s += to_string(Arc{e.arcs[i]});
                          }
                          return s + "}";
                        },
                        [](const Fan& f) { return "Fan(" + std::to_string(f.vertex) + ")"; },
                        [](const Zigzag& z) { return "Zigzag(" + std::to_string(z.center) + ")"; },
                        [](const SplitFan& s) {
                          return "SplitFan(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
                        },
                    },
                    g);
}

std::string to_string(MaximalityKind k) {
  switch (k) {
    case MaximalityKind::CertifiedMaximal:
      return "CertifiedMaximal";
    case MaximalityKind::WindowVerified:
      return "WindowVerified";
    case MaximalityKind::AddableArc:
      return "AddableArc";
  }
  return "?";
}

}  // namespace infgon
