#pragma once

// Indecomposables of the cluster category of type A-infinity enlarged by the
// Pruefer objects E_n, and their Hom/Ext dimensions.
//
// A finite indecomposable is written Sigma^shift X_index with index >= 0 and
// sits at a vertex of the ZA-infinity Auslander-Reiten quiver. E_n is the
// homotopy colimit of the slice Sigma^n X_0 -> Sigma^{n-1} X_1 -> ...
// Every Hom space between two indecomposables is 0- or 1-dimensional, so a
// dimension plus a record of which membership test fired is the whole answer.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "infgon/error.hpp"

namespace infgon {

// Sigma^shift X_index.
struct FiniteInd {
  Int shift = 0;
  Int index = 0;

  friend auto operator<=>(const FiniteInd&, const FiniteInd&) = default;
};

// E_slot, the homotopy colimit of the slice starting at Sigma^slot X_0.
struct PruferInd {
  Int slot = 0;

  friend auto operator<=>(const PruferInd&, const PruferInd&) = default;
};

using IndObject = std::variant<FiniteInd, PruferInd>;

enum class RegionPart { Minus, Plus, Either };

// Which formula decided a Hom dimension.
enum class HomClause {
  FiniteRegion,   // finite -> finite, target tested against H(Sigma source)
  WedgeInto,      // finite -> E_n, source tested against W(Sigma^n X_0)
  WedgeOutOf,     // E_n -> finite, target tested against W(Sigma^{n+2} X_0)
  PruferOrder,    // E_m -> E_n, nonzero iff n <= m
};

struct HomWitness {
  HomClause clause = HomClause::FiniteRegion;
  // FiniteRegion only: the region that contained the target, if any, and the
  // parameters (m, n) with target = Sigma^{-n} X_{n-m-2}.
  std::optional<RegionPart> region;
  Int m = 0;
  Int n = 0;
  // Wedge clauses: the base n' of W(Sigma^{n'} X_0) that was tested.
  Int wedge_base = 0;
};

struct HomDim {
  int value = 0;
  HomWitness witness;
};

enum class Truth { True, False, Indeterminate };

// Throws DomainError if index < 0 or a coordinate is out of range.
void validate(const FiniteInd& x);
void validate(const IndObject& x);

FiniteInd shift_object(const FiniteInd& x, Int t);
PruferInd shift_object(const PruferInd& x, Int t);
IndObject shift_object(const IndObject& x, Int t);

// True iff obj lies in the wedge W(Sigma^base X_0) = {Sigma^{base-j} X_k : 0 <= j <= k}.
bool wedge_contains(Int base, const FiniteInd& obj);

// The unique (m, n) with obj = Sigma^{-n} X_{n-m-2}.
struct RegionParameters {
  Int m = 0;
  Int n = 0;
};
RegionParameters region_parameters(const FiniteInd& obj);

// Membership of obj in H^-(center), H^+(center) or their union, decided from
// the defining inequalities on (m, n).
bool h_region_contains(const FiniteInd& center, const FiniteInd& obj, RegionPart part);

HomDim hom_dim(const IndObject& a, const IndObject& b);

// Ext^1(a, b) = Hom(a, Sigma b).
HomDim ext_dim(const IndObject& a, const IndObject& b);

// Whether the composite of the nonzero maps u -> v -> w is nonzero.
//   True          v, w in H^+(Sigma u) and w in H^+(Sigma v) (known sufficient condition)
//   False         Hom(u, w) = 0
//   Indeterminate otherwise
// Throws DomainError if Hom(u, v) or Hom(v, w) vanishes.
Truth composite_nonzero(const FiniteInd& u, const FiniteInd& v, const FiniteInd& w);

// Text form: "X[shift,index]" and "E[slot]".
std::string to_string(const IndObject& x);
std::string to_string(RegionPart part);
std::string to_string(HomClause clause);
std::string to_string(Truth t);
IndObject parse_object(std::string_view text);

}  // namespace infgon
