#include "valrv/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "valrv/cli/parser.hpp"
#include "valrv/errors.hpp"

namespace valrv::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

void arity(const std::string& cmd, const std::vector<std::string>& args, std::size_t lo, std::size_t hi) {
  if (args.size() < lo || args.size() > hi) {
    for (const auto& s : subcommands())
      if (s.name == cmd) throw UsageError("usage: valrv " + s.name + " " + s.usage);
  }
}

int verdict_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds:
      return kOk;
    case VerdictKind::Fails:
      return kFails;
    default:
      return kUnknown;
  }
}

std::vector<FieldElem> elements(const std::vector<std::string>& args, std::size_t from, const FieldSpec& spec) {
  std::vector<FieldElem> out;
  for (std::size_t i = from; i < args.size(); ++i) out.push_back(parse_element(args[i], spec));
  return out;
}

CommandOutput verdict_output(const PredicateVerdict& v) {
  return {verdict_code(v.kind), verdict_text(v), verdict_json(v)};
}

int root_budget(const SessionConfig& cfg) { return cfg.budget > 0 ? cfg.budget : 4; }

using Handler = std::function<CommandOutput(const std::vector<std::string>&, const SessionConfig&)>;

CommandOutput cmd_val(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldElem x = parse_element(a[0], base_field(cfg));
  const Value v = x.valuation();
  return {kOk, v.to_string() + "\n", Json{{"valuation", value_json(v)}}};
}

CommandOutput cmd_res(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const ResidueElem r = residue(parse_element(a[0], base_field(cfg)));
  return {kOk, r.to_string() + "\n", Json{{"residue", r.to_string()}}};
}

CommandOutput cmd_rv(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const RvElem r = rv_of(parse_element(a[0], base_field(cfg)));
  return {kOk, r.to_string() + "\n", Json{{"rv", rv_json(r)}}};
}

CommandOutput cmd_rv_sum(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec spec = base_field(cfg);
  std::vector<RvElem> rs;
  for (const auto& x : elements(a, 0, spec)) rs.push_back(rv_of(x));
  const RvSumResult s = rv_sum(rs);
  Json j{{"kind", s.kind == RvSumResult::Kind::Definite ? "definite" : "any-above"}};
  if (s.kind == RvSumResult::Kind::Definite)
    j["sum"] = rv_json(s.definite);
  else
    j["gamma"] = value_json(s.gamma);
  std::string text = s.to_string() + "\n";
  int code = kOk;
  if (!cfg.probe.empty()) {
    const RvElem z = rv_of(parse_element(cfg.probe, spec));
    const bool h = holds_oplus(rs, z);
    j["probe"] = rv_json(z);
    j["holds"] = h;
    text += std::string(h ? "holds" : "fails") + " for z = " + z.to_string() + "\n";
    code = h ? kOk : kFails;
  }
  return {code, text, j};
}

CommandOutput cmd_hensel(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec spec = base_field(cfg);
  const Poly f = parse_poly(a[0], spec);
  const FieldElem b = parse_element(a[1], spec);
  const Value target = working_precision(cfg, spec);
  const HenselResult r = hensel_lift_ex(f, b, target);
  const bool reached = r.achieved >= target;
  // The true root agrees with the iterate to v f(z) - v f'(z).
  FieldElem shown = r.root;
  if (!r.achieved.is_infinite()) {
    const FieldElem d = f.derivative()(r.root);
    if (!d.is_zero_at_precision()) shown = r.root.truncated(r.achieved - d.valuation());
  }
  std::string text = "root: " + shown.to_string() + "\nachieved: " + r.achieved.to_string() + "\n";
  if (!reached) text += "target " + target.to_string() + " not reached\n";
  return {reached ? kOk : kUnknown, text,
          Json{{"root", shown.to_string()},
               {"achieved", value_json(r.achieved)},
               {"target", value_json(target)},
               {"reached", reached}}};
}

CommandOutput cmd_roots(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const RootAnalysis ra = roots_in_field(parse_poly(a[0], base_field(cfg)), root_budget(cfg));
  return {ra.completeness == Completeness::Complete ? kOk : kUnknown, roots_text(ra), roots_json(ra)};
}

CommandOutput cmd_polygon(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const NewtonPolygon np = newton_polygon(parse_poly(a[0], base_field(cfg)));
  return {kOk, np.to_string() + "\n", polygon_json(np)};
}

CommandOutput cmd_check_A(const std::vector<std::string>& a, const SessionConfig& cfg) {
  return verdict_output(check_A(parse_element(a[0], base_field(cfg)), cfg.budget));
}

CommandOutput cmd_check_A_prime(const std::vector<std::string>& a, const SessionConfig& cfg) {
  return verdict_output(check_A_prime(parse_element(a[0], base_field(cfg))));
}

CommandOutput cmd_check_E(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const auto b = elements(a, 0, base_field(cfg));
  return verdict_output(check_E(static_cast<int>(b.size()) - 1, b, cfg.search, root_budget(cfg)));
}

CommandOutput cmd_check_E_prime(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const auto b = elements(a, 0, base_field(cfg));
  return verdict_output(check_E_prime(static_cast<int>(b.size()) - 1, b, cfg.search, root_budget(cfg)));
}

CommandOutput cmd_check_H(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec spec = base_field(cfg);
  const FieldElem y = parse_element(a[0], spec);
  const auto x = elements(a, 1, spec);
  return verdict_output(check_H(static_cast<int>(x.size()), x, y, root_budget(cfg)));
}

std::string field_line(const FieldSpec& K, const FieldSpec& F) {
  return "base " + K.to_string() + "\nextension " + F.to_string() + "\n";
}

CommandOutput cmd_enumerate_targets(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec K = base_field(cfg);
  const FieldSpec F = extension_field(cfg);
  const TameExtensionData data = parse_tame_data(a[0], K);
  const ValidationReport rep = validate(data, F);
  Json j{{"validation", validation_json(rep)}};
  std::string text = field_line(K, F) + validation_text(rep);
  if (!rep.valid) return {kFails, text, j};
  const auto ts = enumerate_targets(data, F);
  Json arr = Json::array();
  text += "targets: " + std::to_string(ts.size()) + "\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    arr.push_back(target_json(ts[i]));
    text += "  [" + std::to_string(i) + "] " + ts[i].to_string() + "\n";
  }
  j["count"] = ts.size();
  j["targets"] = arr;
  return {kOk, text, j};
}

std::vector<std::size_t> chosen_targets(std::size_t count, const SessionConfig& cfg) {
  if (cfg.target < 0) {
    std::vector<std::size_t> all(count);
    for (std::size_t i = 0; i < count; ++i) all[i] = i;
    return all;
  }
  if (static_cast<std::size_t>(cfg.target) >= count)
    throw UsageError("target index " + std::to_string(cfg.target) + " out of range (" + std::to_string(count) +
                     " targets)");
  return {static_cast<std::size_t>(cfg.target)};
}

CommandOutput cmd_embed(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec K = base_field(cfg);
  const FieldSpec F = extension_field(cfg);
  const TameExtensionData data = parse_tame_data(a[0], K);
  const ValidationReport rep = validate(data, F);
  std::string text = field_line(K, F);
  if (!rep.valid) return {kFails, text + validation_text(rep), Json{{"validation", validation_json(rep)}}};
  const auto ts = enumerate_targets(data, F);
  const Value prec = working_precision(cfg, F);
  Json arr = Json::array();
  text += "targets: " + std::to_string(ts.size()) + "\n";
  for (std::size_t i : chosen_targets(ts.size(), cfg)) {
    const EmbeddingResult e = embed(data, F, ts[i], prec);
    arr.push_back({{"index", i}, {"target", target_json(ts[i])}, {"embedding", embedding_json(e)}});
    text += "[" + std::to_string(i) + "] " + ts[i].to_string() + "\n" + embedding_text(e);
  }
  return {ts.empty() ? kFails : kOk, text, Json{{"precision", value_json(prec)}, {"embeddings", arr}}};
}

CommandOutput cmd_decompose_rv(const std::vector<std::string>& a, const SessionConfig& cfg) {
  const FieldSpec K = base_field(cfg);
  const FieldSpec F = extension_field(cfg);
  const TameExtensionData data = parse_tame_data(a[0], K);
  const ValidationReport rep = validate(data, F);
  if (!rep.valid) return {kFails, validation_text(rep), Json{{"validation", validation_json(rep)}}};
  const auto ts = enumerate_targets(data, F);
  if (ts.empty()) throw DomainError("data admits no embedding into the extension model");
  const std::size_t idx = chosen_targets(ts.size(), cfg).front();
  const EmbeddingResult basis = embed(data, F, ts[idx], working_precision(cfg, F));
  const FieldElem x = parse_element(a[1], F);
  const auto d = decompose_rv(x, data, basis);
  if (!d) return {kFails, "no decomposition: value outside the generated group\n", Json{{"decomposition", nullptr}}};
  const bool ok = recombine_rv(*d, basis) == rv_of(x);
  std::ostringstream os;
  os << "target [" << idx << "] " << ts[idx].to_string() << "\n";
  os << "m = (";
  Json m = Json::array();
  for (std::size_t i = 0; i < d->m.size(); ++i) {
    os << (i ? ", " : "") << d->m[i];
    m.push_back(d->m[i]);
  }
  os << ")\nd_value = " << d->d_value.to_string() << "\nresidue_part = " << d->residue_part.to_string()
     << "\nreconstructs rv(a): " << (ok ? "yes" : "no") << "\n";
  return {ok ? kOk : kFails, os.str(),
          Json{{"target", idx},
               {"m", m},
               {"d_value", value_json(d->d_value)},
               {"residue_part", d->residue_part.to_string()},
               {"reconstructs", ok}}};
}

CommandOutput cmd_tame_profile(const std::vector<std::string>&, const SessionConfig& cfg) {
  const TamenessProfile p = tameness_profile(base_field(cfg), cfg.samples, cfg.seed);
  return {kOk, profile_text(p), profile_json(p)};
}

struct Entry {
  std::size_t lo, hi;
  Handler fn;
};

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = {
      {"val", {1, 1, cmd_val}},
      {"res", {1, 1, cmd_res}},
      {"rv", {1, 1, cmd_rv}},
      {"rv-sum", {1, 64, cmd_rv_sum}},
      {"hensel", {2, 2, cmd_hensel}},
      {"roots", {1, 1, cmd_roots}},
      {"polygon", {1, 1, cmd_polygon}},
      {"check-A", {1, 1, cmd_check_A}},
      {"check-Aprime", {1, 1, cmd_check_A_prime}},
      {"check-E", {1, 16, cmd_check_E}},
      {"check-Eprime", {1, 16, cmd_check_E_prime}},
      {"check-H", {2, 16, cmd_check_H}},
      {"embed", {1, 1, cmd_embed}},
      {"enumerate-targets", {1, 1, cmd_enumerate_targets}},
      {"decompose-rv", {2, 2, cmd_decompose_rv}},
      {"tame-profile", {0, 0, cmd_tame_profile}},
  };
  return t;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const UsageError*>(&e)) return "usage";
  if (dynamic_cast<const LatticeError*>(&e)) return "lattice";
  if (dynamic_cast<const SpecError*>(&e)) return "spec";
  if (dynamic_cast<const NotIntegral*>(&e)) return "not-integral";
  if (dynamic_cast<const IndeterminateValuation*>(&e)) return "indeterminate";
  if (dynamic_cast<const InsufficientPrecision*>(&e)) return "precision";
  if (dynamic_cast<const UnsupportedError*>(&e)) return "unsupported";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "internal";
}

}  // namespace

const std::vector<SubcommandInfo>& subcommands() {
  static const std::vector<SubcommandInfo> s = {
      {"val", "<elem>", "valuation of an element"},
      {"res", "<elem>", "residue of an integral element"},
      {"rv", "<elem>", "leading term rv(a) as (value, unit)"},
      {"rv-sum", "<elem>...", "closed form of the sum set of rv(a_1), ..., rv(a_k); --probe tests one z"},
      {"hensel", "<poly> <elem>", "Newton lifting of an approximate root"},
      {"roots", "<poly>", "roots in the field with a completeness flag"},
      {"polygon", "<poly>", "Newton polygon with residual polynomials"},
      {"check-A", "<c>", "Artin-Schreier predicate A"},
      {"check-Aprime", "<a>", "p-th power approximation predicate A'"},
      {"check-E", "<b0> <b1>...", "extremality of b0 + b1 X + b2 X^p + ..."},
      {"check-Eprime", "<b0> <b1>...", "extremality of b0 + b1 X + b2 X^2 + ..."},
      {"check-H", "<y> <x1>...", "a root z of X^n + x1 X^(n-1) + ... + xn with v(z - y) > 0"},
      {"embed", "<data>", "embeddings of a tame extension into the extension model"},
      {"enumerate-targets", "<data>", "RV-compatible embedding targets"},
      {"decompose-rv", "<data> <elem>", "rv of an extension element over the generators"},
      {"tame-profile", "", "sampled predicate profile of the configured field"},
  };
  return s;
}

TameExtensionData parse_tame_data(const std::string& source, const FieldSpec& spec) {
  std::string text = source;
  if (text.find('{') == std::string::npos) {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read tame extension data from '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed extension data: ") + e.what(), e.byte);
  }
  try {
    TameExtensionData d{parse_poly(j.at("f").get<std::string>(), spec), {}};
    if (j.contains("gens"))
      for (const auto& g : j.at("gens"))
        d.gens.push_back(
            {g.at("n").get<std::int64_t>(), parse_element(g.at("b").get<std::string>(), spec),
             parse_poly(g.at("h").get<std::string>(), spec)});
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("extension data needs {f, gens: [{n, b, h}]}: ") + e.what());
  }
}

CommandOutput run(const std::string& command, const std::vector<std::string>& args, const SessionConfig& cfg) {
  CommandOutput out;
  try {
    const auto it = table().find(command);
    if (it == table().end()) throw UsageError("unknown subcommand '" + command + "'");
    arity(command, args, it->second.lo, it->second.hi);
    out = it->second.fn(args, cfg);
  } catch (const std::exception& e) {
    const std::string kind = error_kind(e);
    out.exit_code = (kind == "indeterminate" || kind == "precision") ? kUnknown : kUsage;
    out.text = "error (" + kind + "): " + e.what() + "\n";
    out.json = Json{{"kind", kind}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) out.json["position"] = pe->position();
    Json wrapped{{"schema", kSchema}, {"command", command}, {"exit_code", out.exit_code}, {"error", out.json}};
    out.json = std::move(wrapped);
    return out;
  }
  Json wrapped{{"schema", kSchema}, {"command", command}, {"exit_code", out.exit_code}, {"result", out.json}};
  out.json = std::move(wrapped);
  return out;
}

std::string render(const CommandOutput& out, bool json) { return json ? out.json.dump(2) + "\n" : out.text; }

}  // namespace valrv::cli
