#include "serialize.hpp"

namespace flagcalc {

namespace {

Json value_json(const WitnessValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json opt(const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const EdValue& v) {
  return Json{{"value", v.value},
              {"provenance", provenance_name(v.provenance)},
              {"exact", v.exact},
              {"gd", opt(v.gd)},
              {"gd_equals_ed", opt(v.gd_equals_ed)},
              {"note", v.note}};
}

Json to_json(const VmrtDescriptor& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    const char* kind = f.kind == FactorKind::MarkedDynkin       ? "marked-dynkin"
                       : f.kind == FactorKind::ProjectiveBundle ? "projective-bundle"
                                                                : "special";
    factors.push_back({{"kind", kind},
                       {"display", f.display},
                       {"variety", f.variety ? Json(f.variety->to_string()) : Json(nullptr)},
                       {"fiber_dim", f.kind == FactorKind::ProjectiveBundle ? Json(f.fiber_dim) : Json(nullptr)},
                       {"special", f.kind == FactorKind::Special ? Json(f.special) : Json(nullptr)},
                       {"dimension", f.dimension()},
                       {"part_dimensions", f.part_dimensions()}});
  }
  return Json{{"text", d.to_string()}, {"dimension", d.dimension()}, {"factors", factors}};
}

Json variety_summary(const MarkedDynkin& m) {
  return Json{{"variety", m.to_string()},
              {"type", m.type().to_string()},
              {"marked", m.marked()},
              {"dimension", dim_quotient(m)},
              {"positive_roots", static_cast<int>(root_system(m.type()).positive_roots.size())}};
}

Json to_json(const VmrtEntry& e) {
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[std::string(1, k)] = v;
  return Json{{"variety", e.X.to_string()},
              {"name", e.name},
              {"dimension", dim_quotient(e.X)},
              {"row", e.row},
              {"row_id", e.row_id},
              {"params", params},
              {"vmrt", to_json(e.vmrt)},
              {"a", e.a},
              {"ed", to_json(e.ed)},
              {"stored", {{"a", e.stored_a}, {"ed", e.stored_ed}, {"provenance", provenance_name(e.stored_provenance)}}}};
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  int samples = 0;
  for (const auto& row : r.rows) {
    Json ss = Json::array();
    for (const auto& s : row.samples) {
      Json params = Json::object();
      for (const auto& [k, v] : s.params) params[std::string(1, k)] = v;
      ss.push_back({{"variety", s.X},
                    {"params", params},
                    {"a", s.a},
                    {"stored_a", s.stored_a},
                    {"ed", s.ed},
                    {"stored_ed", s.stored_ed},
                    {"provenance", s.provenance},
                    {"stored_provenance", s.stored_provenance},
                    {"passed", s.passed},
                    {"error", s.error.empty() ? Json(nullptr) : Json(s.error)}});
      ++samples;
    }
    rows.push_back({{"row", row.row}, {"id", row.id}, {"name", row.name}, {"passed", row.passed}, {"samples", ss}});
  }
  return Json{{"passed", r.passed},
              {"rows_checked", static_cast<int>(r.rows.size())},
              {"samples_checked", samples},
              {"failed_rows", r.failed_rows},
              {"rows", rows}};
}

Json to_json(const ProofReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"name", s.name}, {"status", s.passed ? "pass" : "fail"}, {"witness", s.witness}});
  Json results = Json::object();
  for (const auto& [k, v] : r.results) results[k] = std::visit([](const auto& x) { return Json(x); }, v);
  return Json{{"name", r.name}, {"passed", r.passed}, {"steps", steps}, {"results", results}};
}

Json to_json(const Witness& w) {
  return Json{{"name", w.name}, {"lhs", value_json(w.lhs)}, {"relation", w.relation}, {"rhs", value_json(w.rhs)}};
}

Json to_json(const Verdict& v) {
  Json ws = Json::array();
  for (const auto& w : v.witnesses()) ws.push_back(to_json(w));
  return Json{{"outcome", outcome_name(v.outcome())},
              {"rule", v.rule().empty() ? "none" : v.rule()},
              {"witnesses", ws},
              {"note", v.note()}};
}

Json to_json(const WitnessBundle& w) {
  Json fiber = Json::array();
  for (const auto& f : w.other_fiber) fiber.push_back(f.to_string());
  Json facts = Json::array();
  for (const auto& f : w.inequality_facts) facts.push_back(to_json(f));
  return Json{{"variety", w.X.to_string()},
              {"construction", w.construction},
              {"total", w.total ? Json(w.total->to_string()) : Json(nullptr)},
              {"other_projection", w.other_projection ? Json(w.other_projection->to_string()) : Json(nullptr)},
              {"other_fiber", fiber},
              {"rank", w.rank},
              {"facts", facts},
              {"verdict", to_json(w.verdict())},
              {"note", w.note}};
}

Json to_json(const ObstructionReport& r) {
  Json eqs = Json::array();
  for (std::size_t i = 0; i < r.equation_system.size(); ++i)
    eqs.push_back({{"label", i < r.equation_labels.size() ? r.equation_labels[i] : ""},
                   {"equation", r.format_equation(i)}});
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back({{"equation", s.equation}, {"forced", s.forced}});
  return Json{{"source", r.source.to_string()},
              {"shape", shape_name(r.shape)},
              {"quartic", r.quartic},
              {"quartic_in_ideal", r.quartic_in_ideal},
              {"unknowns", r.unknowns},
              {"equations", eqs},
              {"steps", steps},
              {"verdict", r.verdict == ObstructionVerdict::ForcesZero ? "forces-zero" : "inconclusive"}};
}

Json ring_summary(const RingPresentation& ring) {
  Json gens = Json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  Json rels = Json::array();
  for (const auto& r : ring.relations()) rels.push_back(ring.format(r));
  const int top = top_degree(ring);
  return Json{{"name", ring.name()},
              {"generators", gens},
              {"relations", rels},
              {"top_degree", top},
              {"hilbert_series", hilbert_series(ring, top)},
              {"total_dimension", total_dimension(ring)}};
}

Json ring_degree(const RingPresentation& ring, int d) {
  Json basis = Json::array();
  for (const auto& m : graded_piece(ring, d)) basis.push_back(ring.format(Polynomial::monomial(m)));
  Json slice = Json::array();
  for (const auto& p : ideal_slice(ring, d)) slice.push_back(ring.format(p));
  return Json{{"ring", ring.name()},
              {"degree", d},
              {"dimension", static_cast<int>(basis.size())},
              {"basis", basis},
              {"ideal_slice_dim", ideal_slice_dim(ring, d)},
              {"ideal_slice", slice}};
}

}  // namespace flagcalc
