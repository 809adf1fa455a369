#pragma once

// Symbolic, possibly infinite sets of arcs.
//
// A configuration is a list of generators plus a list of infinite arcs
// (m, inf). Each generator describes its arcs vertex by vertex: at every
// integer e it has finitely many arcs ending there, plus possibly an
// infinite family (e - k, e), k >= 2 ("left family") and/or (e, e + k),
// k >= 2 ("right family"). All predicates below are decided exactly from
// that description; windows only bound what gets listed.

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "infgon/arc.hpp"

namespace infgon {

struct ExplicitArcs {
  std::vector<FiniteArc> arcs;
  friend bool operator==(const ExplicitArcs&, const ExplicitArcs&) = default;
};

// {(v-k, v) : k >= 2} u {(v, v+k) : k >= 2}.
struct Fan {
  Int vertex = 0;
  friend bool operator==(const Fan&, const Fan&) = default;
};

// {(c-n, c+n) : n >= 1} u {(c-n-1, c+n) : n >= 1}.
struct Zigzag {
  Int center = 0;
  friend bool operator==(const Zigzag&, const Zigzag&) = default;
};

// {(p-k, p) : k >= 2} u {(q, q+k) : k >= 2} u {(p, j) : p+2 <= j <= q}, p <= q.
struct SplitFan {
  Int p = 0;
  Int q = 0;
  friend bool operator==(const SplitFan&, const SplitFan&) = default;
};

using Generator = std::variant<ExplicitArcs, Fan, Zigzag, SplitFan>;

struct ArcConfiguration {
  std::vector<Generator> generators;
  std::vector<Int> infinite_arcs;
  friend bool operator==(const ArcConfiguration&, const ArcConfiguration&) = default;
};

// The arcs of one generator meeting a vertex.
struct VertexStar {
  std::vector<FiniteArc> finite;  // sorted, deduplicated
  bool left_family = false;       // (e-k, e) for every k >= 2
  bool right_family = false;      // (e, e+k) for every k >= 2
};

void validate(const Generator& g);
void validate(const ArcConfiguration& c);

VertexStar vertex_star(const Generator& g, Int e);
VertexStar vertex_star(const ArcConfiguration& c, Int e);  // finite part only

bool contains(const Generator& g, const FiniteArc& arc);
bool contains(const ArcConfiguration& c, const FiniteArc& arc);

// Every finite arc of the configuration with both endpoints in the window,
// followed by each infinite arc whose endpoint is in the window; sorted
// (finite lexicographically, then infinite by m) and deduplicated.
std::vector<Arc> materialize(const ArcConfiguration& c, const Window& window);
std::vector<FiniteArc> materialize_finite(const ArcConfiguration& c, const Window& window);
std::vector<FiniteArc> materialize(const Generator& g, const Window& window);

// The shortest arc of the configuration's finite part crossing x (ties broken
// lexicographically), if any.
std::optional<FiniteArc> crossing_arc(const ArcConfiguration& c, const FiniteArc& x);
std::optional<FiniteArc> crossing_arc(const Generator& g, const FiniteArc& x);

// The shortest arc of the finite part strictly straddling m (a < m < b).
std::optional<FiniteArc> straddling_arc(const ArcConfiguration& c, Int m);
std::optional<FiniteArc> straddling_arc(const Generator& g, Int m);

struct CrossingWitness {
  FiniteArc first;
  Arc second;
};

// nullopt when the configuration is pairwise non-crossing. Two infinite arcs
// are never reported; classify flags that case on its own.
std::optional<CrossingWitness> noncrossing_check(const ArcConfiguration& c);

struct FountainFlags {
  bool left_fountain = false;
  bool right_fountain = false;
  friend bool operator==(const FountainFlags&, const FountainFlags&) = default;
};

// Vertices carrying a left- or right-fountain. Requires a non-crossing
// configuration.
std::map<Int, FountainFlags> fountain_profile(const ArcConfiguration& c);
bool is_locally_finite(const ArcConfiguration& c);

enum class MaximalityKind { CertifiedMaximal, WindowVerified, AddableArc };

struct Maximality {
  MaximalityKind kind = MaximalityKind::WindowVerified;
  std::optional<FiniteArc> addable;  // set iff kind == AddableArc
};

// Maximality of the finite part among sets of finite arcs.
//   single Fan/Zigzag/SplitFan: CertifiedMaximal, re-verified on the window
//   explicit arcs only:         AddableArc just right of the explicit span
//   anything else:              WindowVerified unless the window scan finds
//                               an addable arc
// Requires a non-crossing configuration.
Maximality maximality_check(const ArcConfiguration& c, const Window& window);

std::string to_string(const Generator& g);
std::string to_string(MaximalityKind k);

}  // namespace infgon
