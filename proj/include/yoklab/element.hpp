#pragma once

#include <string>
#include <string_view>

#include "yoklab/exactla.hpp"

namespace yoklab {

// Which normal-form basis an element's coefficients refer to:
//   T    t^a g_w          (Yokonuma-Hecke, exponent labels)
//   E    E_chi g_w        (Yokonuma-Hecke, color labels)
//   L    L_c h_w          (fourth presentation)
//   Nil  t^a T_w          (nil algebra)
enum class Basis { T, E, L, Nil };

std::string basis_name(Basis b);
Basis parse_basis(std::string_view name);

template <class V>
struct Element {
  Basis basis = Basis::E;
  SparseVector<V> terms;
};

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::T: return "T";
    case Basis::E: return "E";
    case Basis::L: return "L";
    case Basis::Nil: return "NIL";
  }
  return "?";
}

inline Basis parse_basis(std::string_view name) {
  if (name == "T") return Basis::T;
  if (name == "E") return Basis::E;
  if (name == "L") return Basis::L;
  if (name == "NIL") return Basis::Nil;
  throw UsageError("unknown basis tag '" + std::string(name) + "'");
}

}  // namespace yoklab
