#pragma once

// Arcs on the integer line: the geometric face of the indecomposables.
//
// Sigma^s X_d corresponds to the finite arc (-s-d-2, -s) and E_n to the
// infinite arc (-n-2, inf). Ext between two objects is nonzero exactly when
// their arcs cross, unless both are infinite, where crossing has no meaning.

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "infgon/quiver.hpp"

namespace infgon {

// (a, b) with a <= b - 2.
struct FiniteArc {
  Int a = 0;
  Int b = 0;

  Int length() const { return b - a; }
  friend auto operator<=>(const FiniteArc&, const FiniteArc&) = default;
};

// (m, inf).
struct InfiniteArc {
  Int m = 0;

  friend auto operator<=>(const InfiniteArc&, const InfiniteArc&) = default;
};

// Variant order gives the canonical sort: finite arcs lexicographically by
// (a, b), then infinite arcs by m.
using Arc = std::variant<FiniteArc, InfiniteArc>;

enum class CrossResult { Cross, NoCross, UndefinedInfiniteInfinite };

// Closed integer interval [lo, hi].
struct Window {
  Int lo = 0;
  Int hi = 0;

  bool contains(Int v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

// Throws DomainError on a > b - 2 or out-of-range coordinates.
FiniteArc make_finite_arc(Int a, Int b);
void validate(const Arc& arc);
void validate(const Window& w);

Arc object_to_arc(const IndObject& x);
FiniteArc object_to_arc(const FiniteInd& x);
IndObject arc_to_object(const Arc& arc);
FiniteInd arc_to_object(const FiniteArc& arc);

CrossResult arcs_cross(const Arc& x, const Arc& y);
bool crosses(const FiniteArc& x, const FiniteArc& y);
bool crosses(const FiniteArc& x, Int infinite_m);

// Ext dimension read off the crossing. Throws DomainError for two infinite
// arcs: Hom between Pruefer objects is not symmetric, so no crossing notion
// can represent it.
HomDim ext_via_crossing(const Arc& x, const Arc& y);

// Every finite arc (a, b) with a, b in the window and a < m < b, sorted.
std::vector<FiniteArc> overarcs_crossing_infinite(Int m, const Window& window);

// "a,b" for finite arcs and "m,inf" for infinite ones; whitespace allowed.
Arc parse_arc(std::string_view text);
FiniteArc parse_finite_arc(std::string_view text);
std::string to_string(const Arc& arc);
std::string to_string(CrossResult r);
// "LO:HI".
Window parse_window(std::string_view text);

}  // namespace infgon
