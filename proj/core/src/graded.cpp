#include "infgon/graded.hpp"

#include "overloaded.hpp"

namespace infgon {

namespace {

using detail::Overloaded;

FiniteInd slice_vertex(Int n, Int i) { return {n - i, i}; }

void check_length(Int n_max) {
  if (n_max < 0) throw DomainError("tower length must be >= 0, got " + std::to_string(n_max));
  if (n_max > (Int{1} << 24)) throw DomainError("tower length too large: " + std::to_string(n_max));
}

// The settled tail: last K dims and last K flags constant.
Int settled_tail(const HomTower& t) {
  const Int size = static_cast<Int>(t.dims.size());
  if (size == 0) throw DomainError("empty tower");
  const Int n = size - 1;
  const Int k = std::max<Int>(1, (n + 3) / 4);
  for (Int i = std::max<Int>(0, size - k); i < size; ++i) {
    if (t.dims[i] != t.dims[size - 1]) throw UnstableTower("tower dimensions still changing near index " + std::to_string(i));
  }
  const Int flags = static_cast<Int>(t.transition_nonzero.size());
  for (Int i = std::max<Int>(0, flags - k); i < flags; ++i) {
    if (t.transition_nonzero[i] != t.transition_nonzero[flags - 1]) {
      throw UnstableTower("tower transitions still changing near index " + std::to_string(i));
    }
  }
  // Walk back to the first index of the constant tail.
  Int from = n;
  while (from > 0 && t.dims[from - 1] == t.dims[n] &&
         (flags == 0 || t.transition_nonzero[from - 1] == t.transition_nonzero[flags - 1])) {
    --from;
  }
  return from;
}

TowerLimit tail_limit(const HomTower& t) {
  TowerLimit out;
  out.stable_from = settled_tail(t);
  const bool ones = t.dims.back() == 1;
  const bool maps = t.transition_nonzero.empty() || t.transition_nonzero.back();
  out.value = ones && maps ? 1 : 0;
  return out;
}

}  // namespace

void validate(const GradedModuleDescriptor& m) {
  std::visit(Overloaded{
                 [](const FiniteCyclic& c) {
                   check_coordinate(c.shift, "module shift");
                   check_coordinate(c.length, "module length");
                   if (c.length < 1) throw DomainError("cyclic module length must be >= 1");
                 },
                 [](const PolyFree& p) { check_coordinate(p.shift, "module shift"); },
                 [](const PruferMod& p) { check_coordinate(p.shift, "module shift"); },
             },
             m);
}

GradedModuleDescriptor f_image(const IndObject& x) {
  validate(x);
  return std::visit(Overloaded{
                        [](const FiniteInd& f) -> GradedModuleDescriptor { return FiniteCyclic{f.shift, f.index + 1}; },
                        [](const PruferInd& e) -> GradedModuleDescriptor { return PruferMod{e.slot}; },
                    },
                    x);
}

GradedModuleDescriptor dual_descriptor(const GradedModuleDescriptor& m) {
  validate(m);
  return std::visit(Overloaded{
                        [](const FiniteCyclic& c) -> GradedModuleDescriptor {
                          return FiniteCyclic{-c.shift - c.length + 1, c.length};
                        },
                        [](const PolyFree& p) -> GradedModuleDescriptor { return PruferMod{-p.shift}; },
                        [](const PruferMod& p) -> GradedModuleDescriptor { return PolyFree{-p.shift}; },
                    },
                    m);
}

std::vector<int> degreewise_dims(const GradedModuleDescriptor& m, const Window& range) {
  validate(m);
  validate(range);
  const auto in_support = [&](Int deg) {
    return std::visit(Overloaded{
                          [deg](const FiniteCyclic& c) { return -c.shift - c.length + 1 <= deg && deg <= -c.shift; },
                          [deg](const PolyFree& p) { return deg <= -p.shift; },
                          [deg](const PruferMod& p) { return deg >= -p.shift; },
                      },
                      m);
  };
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  for (Int deg = range.lo; deg <= range.hi; ++deg) out.push_back(in_support(deg) ? 1 : 0);
  return out;
}

std::string to_string(const GradedModuleDescriptor& m) {
  return std::visit(Overloaded{
                        [](const FiniteCyclic& c) {
                          return "FiniteCyclic(" + std::to_string(c.shift) + "," + std::to_string(c.length) + ")";
                        },
                        [](const PolyFree& p) { return "PolyFree(" + std::to_string(p.shift) + ")"; },
                        [](const PruferMod& p) { return "PruferMod(" + std::to_string(p.shift) + ")"; },
                    },
                    m);
}

HomTower build_hom_tower(const FiniteInd& y, Int slice_start, Int n_max) {
  validate(y);
  check_coordinate(slice_start, "slice start");
  check_length(n_max);
  HomTower t;
  t.direction = TowerDirection::Direct;
  for (Int i = 0; i <= n_max; ++i) {
    t.dims.push_back(hom_dim(y, slice_vertex(slice_start, i)).value);
  }
  for (Int i = 0; i < n_max; ++i) {
    bool nz = false;
    if (t.dims[i] == 1 && t.dims[i + 1] == 1) {
      nz = composite_nonzero(y, slice_vertex(slice_start, i), slice_vertex(slice_start, i + 1)) == Truth::True;
    }
    t.transition_nonzero.push_back(nz);
  }
  return t;
}

HomTower build_inverse_hom_tower(const FiniteInd& y, Int slice_start, Int n_max) {
  validate(y);
  check_coordinate(slice_start, "slice start");
  check_length(n_max);
  HomTower t;
  t.direction = TowerDirection::Inverse;
  for (Int i = 0; i <= n_max; ++i) {
    t.dims.push_back(hom_dim(slice_vertex(slice_start, i), y).value);
  }
  for (Int i = 0; i < n_max; ++i) {
    bool nz = false;
    if (t.dims[i] == 1 && t.dims[i + 1] == 1) {
      const FiniteInd a = shift_object(slice_vertex(slice_start, i), 2);
      const FiniteInd b = shift_object(slice_vertex(slice_start, i + 1), 2);
      nz = composite_nonzero(y, a, b) == Truth::True;
    }
    t.transition_nonzero.push_back(nz);
  }
  return t;
}

TowerLimit truncated_colim(const HomTower& t) {
  if (t.direction != TowerDirection::Direct) throw DomainError("truncated_colim needs a direct tower");
  return tail_limit(t);
}

TowerLimit truncated_lim(const HomTower& t) {
  if (t.direction != TowerDirection::Inverse) throw DomainError("truncated_lim needs an inverse tower");
  TowerLimit out = tail_limit(t);
  // A tail of 1 -> 1 isomorphisms or of zero spaces is Mittag-Leffler.
  const bool zero_tail = t.dims.back() == 0;
  out.lim1_vanishes = zero_tail || out.value == 1;
  return out;
}

int prufer_prufer_tower(Int m, Int n, Int n_max) {
  check_coordinate(m, "slot");
  check_coordinate(n, "slot");
  check_length(n_max);
  // Inner colimits need a longer slice than the outer index reaches.
  const Int inner = 4 * n_max;
  const FiniteInd far = slice_vertex(n, inner);
  HomTower outer;
  outer.direction = TowerDirection::Inverse;
  for (Int j = 0; j <= n_max; ++j) {
    outer.dims.push_back(truncated_colim(build_hom_tower(slice_vertex(m, j), n, inner)).value);
  }
  for (Int j = 0; j < n_max; ++j) {
    bool nz = false;
    if (outer.dims[j] == 1 && outer.dims[j + 1] == 1) {
      const FiniteInd u = slice_vertex(m, j);
      const FiniteInd u_next = slice_vertex(m, j + 1);
      if (hom_dim(u, u_next).value == 1 && hom_dim(u_next, far).value == 1) {
        nz = composite_nonzero(u, u_next, far) == Truth::True;
      }
    }
    outer.transition_nonzero.push_back(nz);
  }
  return truncated_lim(outer).value;
}

std::string to_string(TowerDirection d) { return d == TowerDirection::Direct ? "Direct" : "Inverse"; }

}  // namespace infgon
