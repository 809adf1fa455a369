#pragma once

// Weakly cluster tilting / cluster tilting classification of arc
// configurations, and the constructive witnesses behind it.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infgon/configuration.hpp"

namespace infgon {

enum class Verdict { WCT_LocallyFinite, WCT_FountainPlusInfinite, ClusterTilting, NotWCT };

enum class ReasonKind {
  CrossingPair,                 // two arcs of the configuration cross
  AddableArc,                   // the finite part is not maximal
  MissingInfiniteArc,           // a fountain at v, no infinite arc: (v, inf) would be addable
  FountainMismatch,             // one infinite arc (m, inf) but the fountain is not exactly at m
  MultipleInfiniteArcs,         // at most one Pruefer object fits in a weakly cluster tilting set
  NotLocallyFiniteNoInfiniteArc,
  LocallyFiniteMaximal,         // certified facts behind WCT_LocallyFinite
  FountainMatchesInfiniteArc,   // certified facts behind ClusterTilting
};

struct Classification {
  Verdict verdict = Verdict::NotWCT;
  ReasonKind reason = ReasonKind::CrossingPair;
  std::optional<CrossingWitness> crossing;
  std::optional<FiniteArc> addable;
  std::vector<Int> infinite_arcs;       // the infinite arcs involved, if any
  std::optional<Int> vertex;            // fountain vertex, or a vertex that is not locally finite
  MaximalityKind maximality = MaximalityKind::WindowVerified;
  std::map<Int, FountainFlags> fountains;
  bool cluster_tilting = false;
};

Classification classify(const ArcConfiguration& c, const Window& window);

// "VERDICT <name>" then one "WITNESS <...>" line per fact.
std::string encode_verdict(const Classification& cl);
std::string to_string(Verdict v);
std::string to_string(ReasonKind r);

// A strong overarc target: an arc (p, q) of the configuration, or an integer h.
using OverarcTarget = std::variant<FiniteArc, Int>;

// The shortest arc (x, y) of c with x < p < q < y (or x < h < y), ties broken
// lexicographically. Requires c to be a maximal, non-crossing, locally finite
// set of finite arcs; throws DomainError otherwise or if an arc target is not
// in c.
FiniteArc strong_overarc(const ArcConfiguration& c, const OverarcTarget& target);

// `count` successive strong overarcs of seed = (p, q), each checked to be in
// c, strictly nested with strictly growing offsets on both sides, mapping
// nonzero to E_{-p-2} and pairwise Hom-orthogonal. Throws DomainError when
// the hypotheses fail or a check does not hold.
std::vector<FiniteArc> overarc_antichain(const ArcConfiguration& c, const FiniteArc& seed, Int count);

enum class ApproximationKind { ZeroSuffices, CosliceObject, PruferObject };

// One configuration indecomposable t with Hom(t, d) != 0, and how the chosen
// approximation handles it.
// Handling is decided at dimension level: t is handled when it is the target,
// or Hom(t, target) = Hom(target, d) = 1 and, for three finite objects, the
// composite is not forced to vanish.
struct ApproximationEntry {
  Arc arc;
  bool handled = false;
  std::optional<Truth> composite;  // composite_nonzero(t, target, d) when all three are finite
};

struct ApproximationReport {
  ApproximationKind kind = ApproximationKind::ZeroSuffices;
  Int fountain = 0;      // f; the Pruefer object in c is E_n with n = -f-2
  Int prufer_slot = 0;   // n
  std::optional<IndObject> target;  // the approximating object (absent for ZeroSuffices)
  std::vector<ApproximationEntry> entries;  // window scan, sorted by arc
  std::size_t exceptions = 0;           // entries not handled by the target
  std::size_t certified_composites = 0; // entries whose composite is known nonzero
};

// Almost-right approximation of d by the cluster tilting configuration c,
// together with a scan of configuration objects in the window mapping to d.
// Throws DomainError unless c classifies as ClusterTilting.
ApproximationReport approximation_report(const ArcConfiguration& c, const IndObject& d, const Window& window);

std::string to_string(ApproximationKind k);

// Direct systems in the quiver: a start vertex, a finite prefix of moves, and
// what happens afterwards.
enum class QuiverMove { Up, Down };  // Sigma^s X_d -> Sigma^{s-1} X_{d+1} / Sigma^{s-1} X_{d-1}

struct RidesSliceFrom {
  Int slot = 0;
};
struct ZigzagsForever {};

struct DirectSystemPath {
  std::optional<FiniteInd> start;  // required when the prefix is non-empty
  std::vector<QuiverMove> prefix;
  std::variant<RidesSliceFrom, ZigzagsForever> tail;
};

struct PruferLimit {
  Int slot = 0;
  friend bool operator==(const PruferLimit&, const PruferLimit&) = default;
};
struct ZeroLimit {
  friend bool operator==(const ZeroLimit&, const ZeroLimit&) = default;
};
using DirectSystemLimit = std::variant<PruferLimit, ZeroLimit>;

// Throws DomainError if a move leaves the quiver (index < 0) or the prefix
// ends somewhere from which the named slice cannot be reached.
DirectSystemLimit classify_direct_system(const DirectSystemPath& path);

}  // namespace infgon
