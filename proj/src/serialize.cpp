/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "serialize.hpp"

#include <sstream>

namespace bandforms {

namespace {

json group_json(const FiniteAbelianGroup &g) {
  json factors = json::array();
  for (const auto &d : g.factors()) factors.push_back(d.get_str());
  return json{{"invariant_factors", factors}, {"order", g.order().get_str()}};
}

json gram_json(const LinkingForm &f) {
  json rows = json::array();
  for (const auto &row : f.gram()) {
    json r = json::array();
    for (const auto &x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return rows;
}

json element_json(const GroupElement &e) {
  json c = json::array();
  for (const auto &x : e.coords) c.push_back(x.get_str());
  return c;
}

json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

} // namespace

json form_json(const LinkingForm &f) {
  return json{{"group", group_json(f.group())}, {"gram", gram_json(f)}};
}

json witt_json(const WittResult &w) {
  json splits = json::array();
  for (const auto &s : w.split_log) {
    json metab = json::array();
    for (const auto &g : s.metabolizer) metab.push_back(element_json(g));
    splits.push_back(json{{"prime", s.prime.get_str()},
                          {"summand", form_json(s.summand_form)},
                          {"metabolizer", metab}});
  }
  return json{{"anisotropic", form_json(w.anisotropic)},
              {"mu_an", min_generators(w.anisotropic.group())},
              {"metabolic_splits", splits}};
}

json obstruction_json(const ObstructionResult &o) {
  json out{{"verdict", o.obstructed ? "obstructed" : "not_obstructed"},
           {"reason", o.reason_str()}};
  out["witness"] = o.witness ? json(o.witness->get_str()) : json(nullptr);
  return out;
}

namespace {

json report_json(const BoundReport &r) {
  json prov = json::array();
  for (const auto &p : r.provenance)
    prov.push_back(json{{"rule", p.rule},
                        {"citation", p.citation},
                        {"inputs", p.inputs}});
  json out{{"quantity", r.quantity}, {"lower", r.lower}};
  out["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  out["provenance"] = prov;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

} // namespace

json bounds_json(const BoundsResult &b) {
  return json{{"expression", b.expression},
              {"u_nb", report_json(b.unb)},
              {"gamma4s", report_json(b.gamma4s)},
              {"gamma4t", report_json(b.gamma4t)}};
}

json section5_json(const Section5Case &c) {
  return json{{"a", c.a},
              {"group_order", c.group_order.get_str()},
              {"cyclic", c.cyclic},
              {"paper_form_isometric", c.paper_form_isometric},
              {"generator_search", obstruction_json(c.route_a)},
              {"congruence_route",
               json{{"case_plus_blocked", c.case_plus_blocked},
                    {"case_minus_blocked", c.case_minus_blocked},
                    {"obstructed", c.route_b_obstructed}}},
              {"pm_square_unsolvable", c.pm_square_unsolvable},
              {"routes_agree", c.routes_agree},
              {"pass", c.pass}};
}

json family5_json(const std::vector<Section5Case> &cases) {
  json arr = json::array();
  for (const auto &c : cases) arr.push_back(section5_json(c));
  bool all = true;
  for (const auto &c : cases) all = all && c.pass;
  return json{{"cases", arr}, {"pass", all}};
}

json paper_examples_json(const PaperExamplesReport &rep) {
  json f4 = json::array();
  for (const auto &c : rep.family4)
    f4.push_back(json{{"k", c.k},
                      {"expression", c.expression},
                      {"det", c.det.get_str()},
                      {"sum_u_nb", c.sum_bounds.unb.interval_str()},
                      {"leaf_u_nb", c.leaf_bounds.unb.interval_str()},
                      {"sum_obstructed", c.sum_obstruction.obstructed},
                      {"leaf_obstructed", c.leaf_obstruction.obstructed},
                      {"pass", c.pass}});
  json f5 = json::array();
  for (const auto &c : rep.family5) f5.push_back(section5_json(c));
  json co = json::array();
  for (const auto &c : rep.cohort)
    co.push_back(json{{"name", c.name},
                      {"record_ok", c.record_ok},
                      {"sum_upper", c.sum_upper},
                      {"leaf_lower", c.leaf_lower},
                      {"strict", c.strict},
                      {"pass", c.pass}});
  return json{{"double_twist_family", f4},
              {"lens_sum_family", f5},
              {"strict_subadditivity", co},
              {"failures", rep.failures},
              {"pass", rep.pass}};
}

GoeritzReport goeritz_report(const std::string &pd_text) {
  GoeritzReport rep;
  PdCode pd = parse_pd(pd_text);
  DiagramFaces faces = trace_faces(pd);
  CheckerboardColoring col = checkerboard(pd, faces);
  rep.crossings = pd.size();
  rep.faces = static_cast<int>(faces.face_corners.size());
  rep.white_regions = col.white_count;
  rep.matrix = goeritz_matrix(pd, col);
  rep.det = goeritz_determinant(rep.matrix);
  rep.form = linking_form_from_goeritz(rep.matrix);
  return rep;
}

json goeritz_json(const GoeritzReport &rep) {
  return json{{"crossings", rep.crossings},
              {"faces", rep.faces},
              {"white_regions", rep.white_regions},
              {"goeritz_matrix", matrix_json(rep.matrix)},
              {"det", rep.det.get_str()},
              {"form", form_json(rep.form)}};
}

std::string form_text(const LinkingForm &f) {
  std::ostringstream os;
  os << "group: " << f.group().str() << " (order " << f.order().get_str()
     << ")\n";
  os << "gram:";
  if (f.group().is_trivial()) {
    os << " (trivial)\n";
    return os.str();
  }
  os << "\n";
  for (const auto &row : f.gram()) {
    os << " ";
    for (const auto &x : row) os << " " << x.str();
    os << "\n";
  }
  return os.str();
}

std::string witt_text(const WittResult &w) {
  std::ostringstream os;
  os << "anisotropic part: " << w.anisotropic.str() << "\n";
  os << "mu_an = " << min_generators(w.anisotropic.group()) << "\n";
  if (w.split_log.empty()) {
    os << "no metabolic summands split off\n";
  } else {
    os << "metabolic summands split off:\n";
    for (const auto &s : w.split_log) {
      os << "  p = " << s.prime.get_str() << ": " << s.summand_form.str()
         << ", metabolizer generated by";
      for (const auto &g : s.metabolizer) os << " " << g.str();
      os << "\n";
    }
  }
  return os.str();
}

std::string obstruction_text(const ObstructionResult &o) {
  std::ostringstream os;
  if (o.obstructed) {
    os << "obstructed (" << o.reason_str()
       << "): a single non-orientable band move cannot unknot this knot; "
          "u_nb >= 2 whenever det > 1\n";
  } else {
    os << "not obstructed: generator witness x = "
       << (o.witness ? o.witness->get_str() : "?")
       << " has self-linking +-1/det\n";
  }
  return os.str();
}

std::string bounds_text(const BoundsResult &b) {
  std::ostringstream os;
  os << "expression: " << b.expression << "\n";
  for (const BoundReport *r : {&b.unb, &b.gamma4s, &b.gamma4t}) {
    os << r->quantity << " in " << r->interval_str() << "\n";
    for (const auto &p : r->provenance)
      os << "  [" << p.rule << "] " << p.inputs << "\n";
    for (const auto &n : r->notes) os << "  note: " << n << "\n";
  }
  return os.str();
}

std::string family5_text(const std::vector<Section5Case> &cases) {
  std::ostringstream os;
  for (const auto &c : cases) {
    os << "a = " << c.a << ": order " << c.group_order.get_str()
       << (c.cyclic ? " cyclic" : " NON-CYCLIC")
       << ", generator search " << (c.route_a.obstructed ? "obstructed" : "NOT OBSTRUCTED")
       << ", congruence route " << (c.route_b_obstructed ? "obstructed" : "NOT OBSTRUCTED")
       << ", routes " << (c.routes_agree ? "agree" : "DISAGREE") << " -> "
       << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string goeritz_text(const GoeritzReport &rep) {
  std::ostringstream os;
  os << "crossings: " << rep.crossings << ", faces: " << rep.faces
     << ", white regions: " << rep.white_regions << "\n";
  os << "goeritz matrix: " << rep.matrix.str() << "\n";
  os << "det: " << rep.det.get_str() << "\n";
  os << "form: " << rep.form.str() << "\n";
  return os.str();
}

std::string paper_examples_text(const PaperExamplesReport &rep) {
  std::ostringstream os;
  for (const auto &c : rep.family4)
    os << "double-twist k = " << c.k << " (" << c.expression << "): sum u_nb "
       << c.sum_bounds.unb.interval_str() << ", leaf u_nb "
       << c.leaf_bounds.unb.interval_str() << " -> "
       << (c.pass ? "pass" : "FAIL") << "\n";
  os << family5_text(rep.family5);
  for (const auto &c : rep.cohort)
    os << "strict subadditivity " << c.name << ": sum upper "
       << c.sum_upper << ", summand lowers >= " << c.leaf_lower << " -> "
       << (c.pass ? "pass" : "FAIL") << "\n";
  for (const auto &f : rep.failures) os << "failure: " << f << "\n";
  os << (rep.pass ? "all examples reproduced\n" : "REPRODUCTION FAILED\n");
  return os.str();
}

} // namespace bandforms
