#pragma once

// Graded k[T]-module images and truncated Hom towers: an independent route
// to the Hom dimensions involving Pruefer objects.
//
// Grading: T sits in cohomological degree -1 and (Sigma M)^i = M^{i+1}.
// So Sigma^s k[T] lives in degrees <= -s, Sigma^s k[T^-1] in degrees >= -s
// and Sigma^s k[T]/(T^L) in degrees -s-L+1 .. -s.

#include <string>
#include <variant>
#include <vector>

#include "infgon/arc.hpp"
#include "infgon/quiver.hpp"

namespace infgon {

// Sigma^shift k[T]/(T^length), length >= 1.
struct FiniteCyclic {
  Int shift = 0;
  Int length = 1;
  friend bool operator==(const FiniteCyclic&, const FiniteCyclic&) = default;
};
// Sigma^shift k[T].
struct PolyFree {
  Int shift = 0;
  friend bool operator==(const PolyFree&, const PolyFree&) = default;
};
// Sigma^shift k[T^-1].
struct PruferMod {
  Int shift = 0;
  friend bool operator==(const PruferMod&, const PruferMod&) = default;
};

using GradedModuleDescriptor = std::variant<FiniteCyclic, PolyFree, PruferMod>;

void validate(const GradedModuleDescriptor& m);

GradedModuleDescriptor f_image(const IndObject& x);
GradedModuleDescriptor dual_descriptor(const GradedModuleDescriptor& m);
// k-dimension in each degree of the range, lowest degree first.
std::vector<int> degreewise_dims(const GradedModuleDescriptor& m, const Window& range);
std::string to_string(const GradedModuleDescriptor& m);

enum class TowerDirection { Direct, Inverse };

// Entries i = 0..N along the slice v_i = Sigma^{n-i} X_i.
//   Direct:  dims[i] = dim Hom(Y, v_i); transition_nonzero[i] says the map
//            Hom(Y, v_i) -> Hom(Y, v_{i+1}) is known nonzero.
//   Inverse: dims[i] = dim Hom(v_i, Y); transition_nonzero[i] says the map
//            Hom(v_{i+1}, Y) -> Hom(v_i, Y) is known nonzero.
struct HomTower {
  std::vector<int> dims;
  std::vector<bool> transition_nonzero;
  TowerDirection direction = TowerDirection::Direct;
};

HomTower build_hom_tower(const FiniteInd& y, Int slice_start, Int n_max);
// Transitions are read through Serre duality: the map Hom(v_{i+1}, Y) ->
// Hom(v_i, Y) is dual to Hom(Y, Sigma^2 v_i) -> Hom(Y, Sigma^2 v_{i+1}).
HomTower build_inverse_hom_tower(const FiniteInd& y, Int slice_start, Int n_max);

struct TowerLimit {
  int value = 0;
  Int stable_from = 0;          // first index of the settled tail
  bool lim1_vanishes = false;   // inverse towers only: tail maps are 1 -> 1 isomorphisms, or the tail is 0
};

// The tower counts as settled when its last max(1, ceil(N/4)) dimensions and
// transition flags are constant; otherwise UnstableTower is thrown.
TowerLimit truncated_colim(const HomTower& t);
TowerLimit truncated_lim(const HomTower& t);

// dim Hom(E_m, E_n) as lim_j colim_i Hom(Sigma^{m-j} X_j, Sigma^{n-i} X_i),
// with outer index up to N and inner index up to 4N.
int prufer_prufer_tower(Int m, Int n, Int n_max);

std::string to_string(TowerDirection d);

}  // namespace infgon
