#include "infgon/arc.hpp"

#include "text_util.hpp"

namespace infgon {

FiniteArc make_finite_arc(Int a, Int b) {
  check_coordinate(a, "arc endpoint");
  check_coordinate(b, "arc endpoint");
  if (a > b - 2) {
    throw DomainError("finite arc (" + std::to_string(a) + "," + std::to_string(b) +
                      ") needs non-neighbouring endpoints a <= b-2");
  }
  return {a, b};
}

void validate(const Arc& arc) {
  if (const auto* f = std::get_if<FiniteArc>(&arc)) {
    make_finite_arc(f->a, f->b);
  } else {
    check_coordinate(std::get<InfiniteArc>(arc).m, "arc endpoint");
  }
}

void validate(const Window& w) {
  check_coordinate(w.lo, "window bound");
  check_coordinate(w.hi, "window bound");
  if (w.lo > w.hi) {
    throw DomainError("empty window " + std::to_string(w.lo) + ":" + std::to_string(w.hi));
  }
}

FiniteArc object_to_arc(const FiniteInd& x) {
  validate(x);
  return {-x.shift - x.index - 2, -x.shift};
}

Arc object_to_arc(const IndObject& x) {
  if (const auto* f = std::get_if<FiniteInd>(&x)) return object_to_arc(*f);
  const Int n = std::get<PruferInd>(x).slot;
  check_coordinate(n, "slot");
  return InfiniteArc{-n - 2};
}

FiniteInd arc_to_object(const FiniteArc& arc) {
  make_finite_arc(arc.a, arc.b);
  return {-arc.b, arc.b - arc.a - 2};
}

IndObject arc_to_object(const Arc& arc) {
  if (const auto* f = std::get_if<FiniteArc>(&arc)) return arc_to_object(*f);
  const Int m = std::get<InfiniteArc>(arc).m;
  check_coordinate(m, "arc endpoint");
  return PruferInd{-m - 2};
}

bool crosses(const FiniteArc& x, const FiniteArc& y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

bool crosses(const FiniteArc& x, Int infinite_m) { return x.a < infinite_m && infinite_m < x.b; }

CrossResult arcs_cross(const Arc& x, const Arc& y) {
  const auto* fx = std::get_if<FiniteArc>(&x);
  const auto* fy = std::get_if<FiniteArc>(&y);
  bool c = false;
  if (fx && fy) {
    c = crosses(*fx, *fy);
  } else if (fx) {
    c = crosses(*fx, std::get<InfiniteArc>(y).m);
  } else if (fy) {
    c = crosses(*fy, std::get<InfiniteArc>(x).m);
  } else {
    return CrossResult::UndefinedInfiniteInfinite;
  }
  return c ? CrossResult::Cross : CrossResult::NoCross;
}

HomDim ext_via_crossing(const Arc& x, const Arc& y) {
  validate(x);
  validate(y);
  const CrossResult r = arcs_cross(x, y);
  if (r == CrossResult::UndefinedInfiniteInfinite) {
    throw DomainError("no crossing notion for two infinite arcs: Ext between Pruefer objects is "
                      "inherently non-symmetrical");
  }
  HomDim out;
  out.value = r == CrossResult::Cross ? 1 : 0;
  // Record the clause the quiver side would use for Ext(x, y) = Hom(x, Sigma y).
  const bool x_finite = std::holds_alternative<FiniteArc>(x);
  const bool y_finite = std::holds_alternative<FiniteArc>(y);
  if (x_finite && y_finite) {
    out.witness.clause = HomClause::FiniteRegion;
  } else if (x_finite) {
    out.witness.clause = HomClause::WedgeInto;
    out.witness.wedge_base = -std::get<InfiniteArc>(y).m - 1;
  } else {
    out.witness.clause = HomClause::WedgeOutOf;
    out.witness.wedge_base = -std::get<InfiniteArc>(x).m;
  }
  return out;
}

std::vector<FiniteArc> overarcs_crossing_infinite(Int m, const Window& window) {
  validate(window);
  std::vector<FiniteArc> out;
  for (Int a = window.lo; a < m && a <= window.hi; ++a) {
    for (Int b = std::max(m + 1, a + 2); b <= window.hi; ++b) {
      out.push_back({a, b});
    }
  }
  return out;
}

Arc parse_arc(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw DomainError("malformed arc '" + std::string(text) + "', expected \"a,b\" or \"m,inf\"");
  }
  const Int first = detail::parse_int(text.substr(0, comma), text);
  const std::string_view second = detail::trim(text.substr(comma + 1));
  if (second == "inf" || second == "+inf" || second == "infinity") {
    return InfiniteArc{first};
  }
  return make_finite_arc(first, detail::parse_int(second, text));
}

FiniteArc parse_finite_arc(std::string_view text) {
  const Arc arc = parse_arc(text);
  if (const auto* f = std::get_if<FiniteArc>(&arc)) return *f;
  throw DomainError("expected a finite arc, got '" + std::string(text) + "'");
}

std::string to_string(const Arc& arc) {
  if (const auto* f = std::get_if<FiniteArc>(&arc)) {
    return "(" + std::to_string(f->a) + "," + std::to_string(f->b) + ")";
  }
  return "(" + std::to_string(std::get<InfiniteArc>(arc).m) + ",inf)";
}

std::string to_string(CrossResult r) {
  switch (r) {
    case CrossResult::Cross:
      return "Cross";
    case CrossResult::NoCross:
      return "NoCross";
    case CrossResult::UndefinedInfiniteInfinite:
      return "UndefinedInfiniteInfinite";
  }
  return "?";
}

Window parse_window(std::string_view text) {
  // Split on the colon that follows the first character so "-5:5" works.
  const auto colon = text.find(':', 1);
  if (colon == std::string_view::npos) {
    throw DomainError("malformed window '" + std::string(text) + "', expected LO:HI");
  }
  Window w{detail::parse_int(text.substr(0, colon), text), detail::parse_int(text.substr(colon + 1), text)};
  validate(w);
  return w;
}

}  // namespace infgon
