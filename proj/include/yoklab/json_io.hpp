#pragma once

// JSON forms of elements, labels, cells, relation reports and matrices.
//
// Element: {"basis": "T"|"E"|"L"|"NIL", "r": r, "n": n,
//           "terms": [{"chi"|"a": [...], "w": [images], "coeff": "scalar"}]}
// E and L terms carry a color vector "chi" (entries 1..r); T and NIL terms
// carry an exponent vector "a" (entries 0..r-1).

#include <string>
#include <vector>

#include <json.hpp>

#include "yoklab/element.hpp"
#include "yoklab/labels.hpp"
#include "yoklab/report.hpp"
#include "yoklab/structure.hpp"

namespace yoklab {

using json = nlohmann::json;

inline constexpr const char* kSchema = "yoklab/1";

inline bool uses_colors(Basis b) { return b == Basis::E || b == Basis::L; }

template <Field F>
json element_to_json(const F& f, const BasisIndex& idx, const Element<typename F::value_type>& x) {
  json terms = json::array();
  const char* label_key = uses_colors(x.basis) ? "chi" : "a";
  for (const auto& [k, c] : x.terms) {
    const std::size_t l = idx.label_of(k);
    terms.push_back({{label_key, uses_colors(x.basis) ? idx.colors(l) : idx.exponents(l)},
                     {"w", idx.perm(idx.perm_of(k)).images()},
                     {"coeff", f.render(c)}});
  }
  return {{"basis", basis_name(x.basis)}, {"r", idx.r()}, {"n", idx.n()}, {"terms", terms}};
}

template <Field F>
Element<typename F::value_type> element_from_json(const F& f, const BasisIndex& idx, const json& j) {
  try {
    Element<typename F::value_type> x;
    x.basis = parse_basis(j.at("basis").get<std::string>());
    if (j.at("r").get<int>() != idx.r() || j.at("n").get<int>() != idx.n())
      throw UsageError("element was written for a different (r, n)");
    const char* label_key = uses_colors(x.basis) ? "chi" : "a";
    for (const auto& t : j.at("terms")) {
      auto digits = t.at(label_key).get<std::vector<int>>();
      const std::size_t label = uses_colors(x.basis) ? idx.color_index(digits) : idx.exponent_index(digits);
      const std::size_t w = idx.perm_index(Permutation(t.at("w").get<std::vector<int>>()));
      add_term(f, x.terms, idx.key(w, label), f.parse(t.at("coeff").get<std::string>()));
    }
    return x;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed element JSON: ") + e.what());
  }
}

inline json label_to_json(const SimpleLabel& l) {
  json parts = json::array();
  for (const auto& c : l.J) parts.push_back(c.parts());
  return {{"c", l.c}, {"J", parts}};
}

inline SimpleLabel label_from_json(const json& j, int r) {
  try {
    SimpleLabel l;
    l.c = j.at("c").get<ColorVector>();
    for (const auto& p : j.at("J")) l.J.emplace_back(p.get<std::vector<int>>());
    validate_label(l, r);
    return l;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed label JSON: ") + e.what());
  }
}

template <Field F>
json cell_to_json(const F& f, const BasisIndex& idx, const CellReport<typename F::value_type>& c) {
  return {{"chi", idx.colors(c.chi)},
          {"w", idx.perm(c.w).images()},
          {"beta", f.render(c.beta)},
          {"predicted", c.predicted}};
}

inline json report_to_json(const RelationReport& rep) {
  json fams = json::array();
  for (const auto& fam : rep.families) {
    json j{{"relation", fam.name}, {"instances", fam.instances}, {"failures", fam.failures}};
    if (!fam.ok()) j["first_failure"] = fam.first_failure;
    fams.push_back(j);
  }
  return {{"presentation", rep.presentation}, {"all_zero", rep.all_zero()}, {"families", fams}};
}

inline json check_to_json(const CheckResult& c) {
  json j{{"ok", c.ok}, {"checked", c.checked}};
  if (!c.ok) j["witness"] = c.witness;
  return j;
}

template <Field F>
json matrix_to_json(const F& f, const DenseMatrix<typename F::value_type>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(f.render(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace yoklab
