#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <pirgb/division.hpp>
#include <pirgb/element.hpp>
#include <pirgb/groebner.hpp>
#include <pirgb/problem.hpp>
#include <pirgb/resolution.hpp>
#include <pirgb/ring.hpp>
#include <pirgb/syzygy.hpp>

namespace pirgb {

using ordered_json = nlohmann::ordered_json;

// Big integers are rendered as decimal strings; only structural indices
// (exponents, basis positions, generator numbers) are JSON numbers.
inline ordered_json json_int(const Int& v) { return v.str(); }

inline ordered_json json_ring(const RingSpec& spec) {
  ordered_json moduli = ordered_json::array();
  for (const auto& m : spec.moduli) moduli.push_back(json_int(m));
  return ordered_json{{"moduli", moduli}};
}

inline ordered_json json_coeff(const RingElement& c) {
  ordered_json out = ordered_json::array();
  for (const auto& v : c.c) out.push_back(json_int(v));
  return out;
}

inline ordered_json json_term(const Term& t) {
  return ordered_json{{"coeff", json_coeff(t.coeff)},
                      {"mono", t.mono},
                      {"basis", t.basis + 1}};
}

inline ordered_json json_element(const ModuleElement& f, const std::vector<std::string>& vars,
                                 const std::string& basis_symbol = "e") {
  ordered_json terms = ordered_json::array();
  for (const auto& t : f.terms) terms.push_back(json_term(t));
  return ordered_json{{"terms", terms}, {"text", render_element(f, vars, basis_symbol)}};
}

inline ordered_json json_order(BaseOrder base, ModuleRule rule) {
  const char* b = base == BaseOrder::lex ? "lex" : base == BaseOrder::grlex ? "grlex" : "grevlex";
  const char* r = rule == ModuleRule::pot ? "pot" : rule == ModuleRule::top ? "top" : "schreyer";
  return ordered_json{{"base", b}, {"module_rule", r}};
}

inline ordered_json json_trace(const std::vector<TraceStep>& trace) {
  ordered_json out = ordered_json::array();
  for (const auto& step : trace) {
    ordered_json used = ordered_json::array();
    for (std::size_t j = 0; j < step.indicator.size(); ++j)
      if (step.indicator[j]) used.push_back(j + 1);
    out.push_back(ordered_json{{"reduced", step.reduced},
                               {"lead", json_term(step.lead)},
                               {"used", used}});
  }
  return out;
}

inline ordered_json json_division(const DivisionResult& r, const std::vector<std::string>& vars,
                                  bool with_trace) {
  ordered_json quotients = ordered_json::array();
  for (const auto& q : r.quotients) quotients.push_back(json_element(q, vars));
  ordered_json out{{"quotients", quotients},
                   {"remainder", json_element(r.remainder, vars)}};
  if (with_trace) out["trace"] = json_trace(r.trace);
  return out;
}

inline ordered_json json_basis(const GroebnerBasis& gb, const std::vector<std::string>& vars) {
  ordered_json elements = ordered_json::array();
  for (const auto& f : gb.elements) elements.push_back(json_element(f, vars));
  return elements;
}

inline ordered_json json_transcript(const GroebnerBasis& gb, const std::vector<std::string>& vars) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : gb.transcript) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) cells.push_back(json_element(cell, vars));
    rows.push_back(cells);
  }
  return rows;
}

inline ordered_json json_criterion(const CriterionReport& report,
                                   const std::vector<std::string>& vars) {
  ordered_json failures = ordered_json::array();
  for (const auto& fail : report.failures) {
    const char* kind = fail.critical.kind == CriticalElement::Kind::pair ? "pair" : "ann";
    failures.push_back(ordered_json{{"kind", kind},
                                    {"alpha", fail.critical.alpha + 1},
                                    {"beta", fail.critical.beta + 1},
                                    {"remainder", json_element(fail.remainder, vars)}});
  }
  return ordered_json{{"passed", report.passed}, {"failures", failures}};
}

inline ordered_json json_syzygies(const SyzygyBasis& syz, const std::vector<std::string>& vars) {
  ordered_json relations = ordered_json::array();
  for (const auto& rel : syz.relations) {
    const char* kind = rel.kind == SyzygyRelation::Kind::pair ? "pair" : "ann";
    relations.push_back(ordered_json{{"kind", kind},
                                     {"alpha", rel.alpha + 1},
                                     {"beta", rel.beta + 1},
                                     {"element", json_element(rel.element, vars, "g")}});
  }
  return relations;
}

inline ordered_json json_matrix(const ScalarMatrix& m, const std::vector<std::string>& vars) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.entries) {
    ordered_json cells = ordered_json::array();
    for (const auto& cell : row) cells.push_back(json_element(cell, vars));
    rows.push_back(cells);
  }
  return ordered_json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline ordered_json json_resolution(const Resolution& res, const std::vector<std::string>& vars) {
  const char* status = res.status == ResolutionStatus::finite ? "finite"
                       : res.status == ResolutionStatus::periodic ? "periodic"
                                                                  : "truncated";
  ordered_json diffs = ordered_json::array();
  for (const auto& d : res.differentials) diffs.push_back(json_matrix(d, vars));
  ordered_json out{{"ranks", res.ranks},
                   {"status", status},
                   {"length", res.length},
                   {"bound_applicable", res.bound_applicable},
                   {"bound_violated", res.bound_violated},
                   {"presentation", json_matrix(res.presentation, vars)},
                   {"differentials", diffs}};
  if (res.status == ResolutionStatus::periodic) {
    out["period_start"] = res.period_start;
    out["period_length"] = res.period_length;
  }
  return out;
}

}  // namespace pirgb
