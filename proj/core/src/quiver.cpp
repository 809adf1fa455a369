#include "infgon/quiver.hpp"

#include <string>

#include "text_util.hpp"

namespace infgon {

void validate(const FiniteInd& x) {
  check_coordinate(x.shift, "shift");
  check_coordinate(x.index, "index");
  if (x.index < 0) {
    throw DomainError("quiver index must be >= 0, got " + std::to_string(x.index));
  }
}

void validate(const IndObject& x) {
  if (const auto* f = std::get_if<FiniteInd>(&x)) {
    validate(*f);
  } else {
    check_coordinate(std::get<PruferInd>(x).slot, "slot");
  }
}

FiniteInd shift_object(const FiniteInd& x, Int t) { return {x.shift + t, x.index}; }

PruferInd shift_object(const PruferInd& x, Int t) { return {x.slot + t}; }

IndObject shift_object(const IndObject& x, Int t) {
  return std::visit([t](const auto& v) -> IndObject { return shift_object(v, t); }, x);
}

bool wedge_contains(Int base, const FiniteInd& obj) {
  // obj = Sigma^{base-j} X_k with k = index, so j = base - shift.
  const Int j = base - obj.shift;
  return 0 <= j && j <= obj.index;
}

RegionParameters region_parameters(const FiniteInd& obj) {
  const Int n = -obj.shift;
  return {n - obj.index - 2, n};
}

bool h_region_contains(const FiniteInd& center, const FiniteInd& obj, RegionPart part) {
  const Int r = center.shift;
  const Int s = center.index;
  const auto [m, n] = region_parameters(obj);
  const bool minus = m <= -r - s - 3 && -r - s - 1 <= n && n <= -r - 1;
  const bool plus = -r - s - 1 <= m && m <= -r - 1 && -r + 1 <= n;
  switch (part) {
    case RegionPart::Minus:
      return minus;
    case RegionPart::Plus:
      return plus;
    case RegionPart::Either:
      return minus || plus;
  }
  return false;
}

namespace {

HomDim finite_to_finite(const FiniteInd& u, const FiniteInd& v) {
  const FiniteInd center = shift_object(u, 1);
  HomDim out;
  out.witness.clause = HomClause::FiniteRegion;
  const auto params = region_parameters(v);
  out.witness.m = params.m;
  out.witness.n = params.n;
  if (h_region_contains(center, v, RegionPart::Minus)) {
    out.value = 1;
    out.witness.region = RegionPart::Minus;
  } else if (h_region_contains(center, v, RegionPart::Plus)) {
    out.value = 1;
    out.witness.region = RegionPart::Plus;
  }
  return out;
}

HomDim wedge_clause(HomClause clause, Int base, const FiniteInd& y) {
  HomDim out;
  out.witness.clause = clause;
  out.witness.wedge_base = base;
  out.value = wedge_contains(base, y) ? 1 : 0;
  return out;
}

struct HomDispatch {
  HomDim operator()(const FiniteInd& u, const FiniteInd& v) const { return finite_to_finite(u, v); }
  HomDim operator()(const FiniteInd& y, const PruferInd& e) const {
    return wedge_clause(HomClause::WedgeInto, e.slot, y);
  }
  HomDim operator()(const PruferInd& e, const FiniteInd& y) const {
    return wedge_clause(HomClause::WedgeOutOf, e.slot + 2, y);
  }
  HomDim operator()(const PruferInd& from, const PruferInd& to) const {
    HomDim out;
    out.witness.clause = HomClause::PruferOrder;
    out.value = to.slot <= from.slot ? 1 : 0;
    return out;
  }
};

}  // namespace

HomDim hom_dim(const IndObject& a, const IndObject& b) {
  validate(a);
  validate(b);
  return std::visit(HomDispatch{}, a, b);
}

HomDim ext_dim(const IndObject& a, const IndObject& b) { return hom_dim(a, shift_object(b, 1)); }

Truth composite_nonzero(const FiniteInd& u, const FiniteInd& v, const FiniteInd& w) {
  if (hom_dim(u, v).value == 0) {
    throw DomainError("composite_nonzero: Hom(" + to_string(u) + ", " + to_string(v) + ") = 0");
  }
  if (hom_dim(v, w).value == 0) {
    throw DomainError("composite_nonzero: Hom(" + to_string(v) + ", " + to_string(w) + ") = 0");
  }
  if (hom_dim(u, w).value == 0) return Truth::False;
  const FiniteInd su = shift_object(u, 1);
  const FiniteInd sv = shift_object(v, 1);
  if (h_region_contains(su, v, RegionPart::Plus) && h_region_contains(su, w, RegionPart::Plus) &&
      h_region_contains(sv, w, RegionPart::Plus)) {
    return Truth::True;
  }
  return Truth::Indeterminate;
}

std::string to_string(const IndObject& x) {
  if (const auto* f = std::get_if<FiniteInd>(&x)) {
    return "X[" + std::to_string(f->shift) + "," + std::to_string(f->index) + "]";
  }
  return "E[" + std::to_string(std::get<PruferInd>(x).slot) + "]";
}

std::string to_string(RegionPart part) {
  switch (part) {
    case RegionPart::Minus:
      return "H-";
    case RegionPart::Plus:
      return "H+";
    case RegionPart::Either:
      return "H";
  }
  return "?";
}

std::string to_string(HomClause clause) {
  switch (clause) {
    case HomClause::FiniteRegion:
      return "finite-region";
    case HomClause::WedgeInto:
      return "wedge-into-prufer";
    case HomClause::WedgeOutOf:
      return "wedge-out-of-prufer";
    case HomClause::PruferOrder:
      return "prufer-order";
  }
  return "?";
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True:
      return "True";
    case Truth::False:
      return "False";
    case Truth::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

IndObject parse_object(std::string_view text) {
  using detail::parse_int;
  using detail::trim;
  const std::string_view body = trim(text);
  const auto fail = [&]() -> IndObject {
    throw DomainError("malformed object '" + std::string(text) + "', expected X[s,d] or E[n]");
  };
  if (body.size() < 4 || body[1] != '[' || body.back() != ']') return fail();
  const std::string_view inner = body.substr(2, body.size() - 3);
  if (body[0] == 'E') {
    return PruferInd{parse_int(inner, text)};
  }
  if (body[0] != 'X') return fail();
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) return fail();
  FiniteInd f{parse_int(inner.substr(0, comma), text), parse_int(inner.substr(comma + 1), text)};
  validate(f);
  return f;
}

}  // namespace infgon
