#include "valrv/cli/format.hpp"

#include <sstream>

namespace valrv::cli {

std::string rational_json(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Json value_json(const Value& v) { return v.is_infinite() ? Json("inf") : Json(rational_json(v.rational())); }

Json rv_json(const RvElem& r) {
  if (r.is_infinite()) return "inf";
  return Json{{"value", rational_json(r.value().rational())}, {"unit", r.unit().to_string()}};
}

Json witness_json(const WitnessValue& w) {
  if (const auto* e = std::get_if<FieldElem>(&w)) return e->to_string();
  if (const auto* r = std::get_if<ResidueElem>(&w)) return r->to_string();
  return value_json(std::get<Value>(w));
}

std::string witness_text(const WitnessValue& w) {
  if (const auto* e = std::get_if<FieldElem>(&w)) return e->to_string();
  if (const auto* r = std::get_if<ResidueElem>(&w)) return r->to_string();
  return std::get<Value>(w).to_string();
}

Json polygon_json(const NewtonPolygon& np) {
  Json vs = Json::array();
  for (const auto& v : np.vertices) vs.push_back({{"index", v.index}, {"value", value_json(v.value)}});
  Json ss = Json::array();
  for (const auto& s : np.segments)
    ss.push_back({{"start", s.start},
                  {"end", s.end},
                  {"slope", rational_json(s.slope)},
                  {"length", s.length},
                  {"root_value", rational_json(-s.slope)},
                  {"residual", s.residual.to_string("Y")}});
  return Json{{"lowest_index", np.lowest_index}, {"vertices", vs}, {"segments", ss}};
}

Json roots_json(const RootAnalysis& ra) {
  Json rs = Json::array();
  for (const auto& r : ra.roots) {
    Json j{{"root", r.root.to_string()}, {"multiplicity", r.multiplicity}, {"achieved", value_json(r.achieved)}};
    j["segment_slope"] = r.segment_slope ? Json(rational_json(*r.segment_slope)) : Json(nullptr);
    rs.push_back(std::move(j));
  }
  return Json{{"completeness", to_string(ra.completeness)}, {"roots", rs}, {"notes", ra.notes}};
}

std::string roots_text(const RootAnalysis& ra) {
  std::ostringstream os;
  os << "completeness: " << to_string(ra.completeness) << "\n";
  os << "roots: " << ra.roots.size() << "\n";
  for (const auto& r : ra.roots) {
    os << "  " << r.root.to_string() << "  multiplicity " << r.multiplicity << "  achieved " << r.achieved.to_string();
    if (r.segment_slope) os << "  slope " << rational_to_string(*r.segment_slope);
    os << "\n";
  }
  for (const auto& n : ra.notes) os << "note: " << n << "\n";
  return os.str();
}

Json verdict_json(const PredicateVerdict& v) {
  Json w = Json::object();
  for (const auto& x : v.witnesses) w[x.name] = witness_json(x.value);
  Json j{{"verdict", to_string(v.kind)}, {"witnesses", w}};
  if (!v.certificate_kind.empty())
    j["certificate"] = Json{{"kind", v.certificate_kind}, {"lines", v.certificate}};
  if (v.kind != VerdictKind::Fails) j["certified"] = v.certified;
  if (!v.diagnostic.empty()) j["diagnostic"] = v.diagnostic;
  if (v.trace) {
    Json steps = Json::array();
    for (const auto& s : v.trace->steps)
      steps.push_back({{"a", s.a.to_string()}, {"residual", s.residual.to_string()}, {"value", value_json(s.value)}});
    j["trace"] = steps;
  }
  return j;
}

std::string verdict_text(const PredicateVerdict& v) {
  std::ostringstream os;
  os << to_string(v.kind);
  if (v.certified) os << " (certified)";
  os << "\n";
  for (const auto& x : v.witnesses) os << "  " << x.name << " = " << witness_text(x.value) << "\n";
  if (!v.certificate_kind.empty()) {
    os << "certificate: " << v.certificate_kind << "\n";
    for (const auto& c : v.certificate) os << "  " << c << "\n";
  }
  if (!v.diagnostic.empty()) os << "diagnostic: " << v.diagnostic << "\n";
  if (v.trace) {
    os << "trace:\n";
    for (const auto& s : v.trace->steps) os << "  v(r) = " << s.value.to_string() << "  a = " << s.a.to_string() << "\n";
  }
  return os.str();
}

namespace {

Json rate_json(const RateCount& r) {
  return Json{{"samples", r.samples}, {"holds", r.holds}, {"fails", r.fails}, {"unknown", r.unknown}};
}

std::string rate_text(const RateCount& r) {
  return std::to_string(r.holds) + "/" + std::to_string(r.samples) + " hold, " + std::to_string(r.fails) +
         " fail, " + std::to_string(r.unknown) + " unknown";
}

}  // namespace

Json profile_json(const TamenessProfile& p) {
  Json j{{"field", p.field},
         {"depth", p.depth},
         {"label", p.label},
         {"p_divisible", p.p_divisible},
         {"residue_perfect", p.residue_perfect},
         {"p_predicates_applicable", p.p_predicates_applicable}};
  if (!p.p_predicates_applicable) j["inapplicable_reason"] = p.inapplicable_reason;
  j["A_prime"] = rate_json(p.a_prime);
  j["A_prime_failures"] = p.a_prime_failures;
  j["A"] = rate_json(p.a);
  j["H"] = rate_json(p.h);
  return j;
}

std::string profile_text(const TamenessProfile& p) {
  std::ostringstream os;
  os << p.label << "\n";
  os << "field: " << p.field << "\n";
  os << "p-divisible value group: " << p.p_divisible << "\n";
  os << "perfect residue field: " << p.residue_perfect << "\n";
  if (p.p_predicates_applicable) {
    os << "A': " << rate_text(p.a_prime) << "\n";
    for (const auto& f : p.a_prime_failures) os << "  " << f << "\n";
    os << "A: " << rate_text(p.a) << "\n";
  } else {
    os << "A', A: not applicable (" << p.inapplicable_reason << ")\n";
  }
  os << "H: " << rate_text(p.h) << "\n";
  return os.str();
}

Json validation_json(const ValidationReport& r) {
  Json roots = Json::array();
  for (const auto& x : r.roots)
    roots.push_back({{"x", x.x.to_string()}, {"admissible", x.admissible}, {"problems", x.problems}});
  return Json{{"valid", r.valid},
              {"monic_integral", r.monic_integral},
              {"irreducible", r.irreducible},
              {"separable", r.separable},
              {"prime_to_p", r.prime_to_p},
              {"diagnostics", r.diagnostics},
              {"residue_roots", roots}};
}

std::string validation_text(const ValidationReport& r) {
  std::ostringstream os;
  os << "valid: " << (r.valid ? "yes" : "no") << "\n";
  for (const auto& d : r.diagnostics) os << "  " << d << "\n";
  for (const auto& x : r.roots) {
    os << "residue root " << x.x.to_string() << ": " << (x.admissible ? "admissible" : "not admissible") << "\n";
    for (const auto& p : x.problems) os << "  " << p << "\n";
  }
  return os.str();
}

Json target_json(const EmbeddingTarget& t) {
  Json ys = Json::array();
  for (const auto& y : t.y) ys.push_back(rv_json(y));
  return Json{{"x", t.x.to_string()}, {"y", ys}};
}

Json embedding_json(const EmbeddingResult& e) {
  Json ts = Json::array();
  for (const auto& t : e.t) ts.push_back(t.to_string());
  Json rs = Json::array();
  for (const auto& r : e.gen_residuals) rs.push_back(value_json(r));
  return Json{{"z", e.z.to_string()},
              {"t", ts},
              {"achieved", value_json(e.achieved)},
              {"f_residual", value_json(e.f_residual)},
              {"generator_residuals", rs}};
}

std::string embedding_text(const EmbeddingResult& e) {
  std::ostringstream os;
  os << "  z = " << e.z.to_string() << "\n";
  for (std::size_t i = 0; i < e.t.size(); ++i) os << "  t" << i + 1 << " = " << e.t[i].to_string() << "\n";
  os << "  v(f(z)) >= " << e.f_residual.to_string() << "\n";
  for (std::size_t i = 0; i < e.gen_residuals.size(); ++i)
    os << "  v(b" << i + 1 << "*t" << i + 1 << "^n" << i + 1 << " - h" << i + 1 << "(z)) >= "
       << e.gen_residuals[i].to_string() << "\n";
  os << "  achieved " << e.achieved.to_string() << "\n";
  return os.str();
}

}  // namespace valrv::cli
