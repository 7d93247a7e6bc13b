#pragma once

#include <nlohmann/json.hpp>

#include "cobweb/admissibility.hpp"
#include "cobweb/fnomial.hpp"
#include "cobweb/incidence.hpp"
#include "cobweb/packing.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/prefab.hpp"
#include "cobweb/series.hpp"

// Serializers for every report the CLI emits. Big integers are written as
// decimal strings so that no JSON reader loses precision.
namespace cobweb::json {

using json = nlohmann::ordered_json;

inline json fnomial_value(const FNomialValue& v) { return {{"value", v.str()}, {"integral", v.integral}}; }

inline json triangle(const FNomialTriangle& t) {
  json rows = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json admissibility(const AdmissibilityReport& r) {
  json out{{"spec", r.spec}, {"bound", r.bound}, {"verdict", r.verdict()}, {"violation", nullptr}};
  if (r.violation) {
    out["violation"] = {{"n", r.violation->n}, {"k", r.violation->k}, {"value", r.violation->value.str()}};
  }
  return out;
}

inline json gcd_morphism(const GcdMorphismReport& r) {
  json out{{"spec", r.spec}, {"bound", r.bound}, {"gcd_morphic", r.morphic()}, {"violation", nullptr}};
  if (r.violation) {
    out["violation"] = {{"n", r.violation->n},
                        {"m", r.violation->m},
                        {"gcd", r.violation->gcd.str()},
                        {"expected", r.violation->expected.str()}};
  }
  return out;
}

inline json scan(const std::vector<ScanEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    if (e.report) {
      out.push_back(admissibility(*e.report));
    } else {
      out.push_back({{"spec", e.spec}, {"error", e.error}});
    }
  }
  return out;
}

inline json poset(const CobwebPoset& P) { return {{"spec", P.sequence().spec()}, {"levels", P.level_sizes()}}; }

inline json labels(const std::vector<Vertex>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.label());
  return out;
}

inline json matrix(const IncidenceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) r.push_back(m.at(i, j).str());
    rows.push_back(std::move(r));
  }
  return {{"vertices", labels(m.order())}, {"matrix", std::move(rows)}};
}

inline json packing(const PackingReport& r) {
  return {{"spec", r.spec},
          {"k", r.k},
          {"m", r.m},
          {"n", r.n},
          {"copies_total", r.copies_total.str()},
          {"chains_total", r.chains_total.str()},
          {"quotient_bound", r.quotient_bound.str()},
          {"max_packing", r.max_packing},
          {"tight", r.tight}};
}

inline json dim2(const Dim2Realizer& r) {
  return {{"verified", r.verified}, {"first", labels(r.first)}, {"second", labels(r.second)}};
}

inline json laws(const LawReport& r) {
  json ls = json::array();
  for (const auto& l : r.laws) {
    ls.push_back({{"name", l.name}, {"checked", l.checked}, {"failures", l.failures}, {"passed", l.passed()}});
  }
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json ops = json::array();
    for (const auto& o : w.operands) ops.push_back(o.str());
    ws.push_back({{"law", w.law}, {"lhs", w.lhs.str()}, {"rhs", w.rhs.str()}, {"operands", std::move(ops)}});
  }
  return {{"laws", std::move(ls)}, {"witnesses", std::move(ws)}};
}

inline json series(const FormalSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

}  // namespace cobweb::json
