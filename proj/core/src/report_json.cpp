#include "listcrit/report_json.hpp"

namespace listcrit {

Json to_json(const Rational& x) { return to_fraction_string(x); }

Json to_json(const Quadruple& q) {
  Json j;
  j["family"] = family_name(q.family);
  j["k"] = q.k;
  j["p"] = to_json(q.p);
  j["h"] = to_json(q.h);
  j["z"] = to_json(q.z);
  j["f"] = to_json(q.f);
  if (q.z_param) j["z_param"] = to_json(*q.z_param);
  return j;
}

Json to_json(const Condition& c) {
  Json j;
  j["name"] = c.name;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["pass"] = c.pass;
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["k"] = r.k;
  j["pass"] = r.pass;
  j["sufficiency_regime"] = r.sufficiency_regime;
  j["conditions"] = Json::array();
  for (const auto& c : r.conditions) j["conditions"].push_back(to_json(c));
  j["conditions"].push_back(to_json(r.sign_2h_plus_f));
  j["conditions"].push_back(to_json(r.sign_h_plus_f));
  return j;
}

Json to_json(const TreeCheck& c) {
  Json j;
  j["order"] = c.order;
  j["edges"] = Json::array();
  for (auto [u, v] : c.edges) j["edges"].push_back(Json::array({u, v}));
  j["clique_branch"] = c.clique_branch;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  return j;
}

Json to_json(const TreeVerification& v) {
  Json j;
  j["max_n"] = v.max_n;
  j["trees_checked"] = v.trees_checked;
  j["tight_count"] = v.tight_count;
  j["pass"] = v.pass;
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  return j;
}

Json to_json(const BoundResult& b) {
  Json j;
  j["k"] = b.k;
  j["theorem"] = theorem_name(b.theorem);
  j["quadruple"] = to_json(b.quadruple);
  j["excess"] = to_json(b.excess);
  j["bound"] = to_json(b.bound());
  j["decimal"] = b.decimal();
  return j;
}

Json to_json(const TableRow& row) {
  Json j;
  j["k"] = row.k;
  j["gallai"] = to_json(row.gallai);
  j["ks"] = row.ks_historical ? Json(to_decimal_truncated(*row.ks_historical, 4)) : Json(nullptr);
  j["kr"] = row.kr_historical ? Json(to_decimal_truncated(*row.kr_historical, 4)) : Json(nullptr);
  j["cr"] = row.cr ? to_json(*row.cr) : Json(nullptr);
  j["r"] = to_json(row.r);
  j["here"] = to_json(row.here);
  return j;
}

Json table_to_json(const std::vector<TableRow>& rows) {
  Json j = Json::array();
  for (const auto& row : rows) j.push_back(to_json(row));
  return j;
}

Json to_json(const LpSolution& s) {
  Json j;
  j["status"] = lp_status_name(s.status);
  if (s.status == LpStatus::optimal) {
    j["value"] = to_json(s.value);
    j["assignment"] = Json::array();
    for (const auto& x : s.assignment) j["assignment"].push_back(to_json(x));
  }
  return j;
}

Json to_json(const FractionalSolution& s) {
  Json j;
  j["status"] = lp_status_name(s.status);
  if (s.status == LpStatus::optimal) {
    j["value"] = to_json(s.value);
    j["assignment"] = Json::array();
    for (const auto& x : s.assignment) j["assignment"].push_back(to_json(x));
    j["denominator"] = to_json(s.denominator_value);
  }
  return j;
}

Json to_json(const OptimizeResult& r) {
  Json j;
  j["quadruple"] = to_json(r.quadruple);
  j["branch"] = z_branch_name(r.branch);
  j["bound"] = to_json(r.bound);
  if (r.positive_solution) j["positive_branch"] = to_json(*r.positive_solution);
  if (r.zero_solution) j["zero_branch"] = to_json(*r.zero_solution);
  return j;
}

Json to_json(const ATVerdict& v) {
  Json j;
  j["is_at"] = v.is_at;
  if (v.is_at) {
    j["witness"] = Json::array();
    for (auto [u, w] : v.witness) j["witness"].push_back(Json::array({u, w}));
    j["even_count"] = v.even_count;
    j["odd_count"] = v.odd_count;
  }
  return j;
}

Json to_json(const AuditReport& r) {
  Json j;
  j["id"] = r.id;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["sense"] = r.sense == Sense::ge ? ">=" : r.sense == Sense::le ? "<=" : "==";
  j["pass"] = r.pass;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const GraphAuditResult& r) {
  Json j;
  j["k"] = r.k;
  j["order"] = r.order;
  j["size"] = r.size;
  j["average_degree"] = to_json(r.average_degree);
  j["min_degree_ok"] = r.min_degree_ok;
  j["complete"] = r.complete;
  j["critical"] = r.critical ? Json(*r.critical) : Json(nullptr);
  j["irreducibility"] = evidence_name(r.evidence);
  j["l_stats"] = {{"components", r.l.components},
                  {"c_star", r.l.c_star},
                  {"q", r.l.q},
                  {"beta", r.l.beta}};
  j["reports"] = Json::array();
  for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
  if (r.q_audit && r.q_audit->violated) {
    Json q;
    q["extraction_note"] = r.q_audit->extraction_note;
    q["candidate"] = r.q_audit->extraction_candidate;
    if (r.q_audit->extracted) {
      q["vertices"] = r.q_audit->extracted->vertices;
      q["verdict"] = to_json(r.q_audit->extracted->verdict);
    }
    j["extraction"] = q;
  }
  if (r.bound_excess) j["registered_bound"] = to_json(*r.bound_excess);
  j["average_degree_ok"] = r.average_degree_ok;
  j["pass"] = r.pass;
  return j;
}

}  // namespace listcrit
