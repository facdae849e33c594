#include "valrv/cli/config.hpp"

#include <fstream>

#include "valrv/errors.hpp"

namespace valrv::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw SpecError("config key '" + key + "' needs an integer, got '" + v + "'");
  }
}

ResidueFieldPtr residue_for(std::int64_t p, int k) {
  if (p == 0) return ResidueField::rationals();
  return ResidueField::finite(p, k);
}

ValueGroupSpec lattice_for(std::int64_t N, std::int64_t p, int depth) {
  if (depth > 0) {
    if (p == 0) throw SpecError("a p-rooted value group needs p > 0");
    return ValueGroupSpec::p_rooted(N, p, depth);
  }
  return ValueGroupSpec::lattice(N);
}

}  // namespace

const std::map<std::string, std::string>& config_keys() {
  static const std::map<std::string, std::string> keys = {
      {"model", "series | padic"},
      {"p", "residue characteristic (0 = Q residues, series only)"},
      {"k", "residue degree: residue field F_(p^k)"},
      {"N", "value group (1/N)Z, before p-rooting"},
      {"depth", "p-rooting depth of the value group"},
      {"digits", "p-adic digits"},
      {"e", "p-adic ramification index"},
      {"prec", "default precision (rational)"},
      {"ext_k", "extension residue degree"},
      {"ext_N", "extension value group (1/N)Z"},
      {"ext_depth", "extension p-rooting depth"},
      {"ext_e", "extension ramification index"},
      {"target", "target index for embed / decompose-rv"},
      {"budget", "root-search recursion budget"},
      {"seed", "random seed"},
      {"samples", "samples per predicate in tame-profile"},
      {"search_lo", "grid: lowest exponent"},
      {"search_hi", "grid: highest exponent"},
      {"search_den", "grid: exponent denominator bound"},
      {"search_terms", "grid: maximal number of terms"},
      {"search_coeffs", "grid: number of residues used (0 = all)"},
      {"output", "text | json"},
  };
  return keys;
}

void apply_setting(SessionConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "model") {
    if (v != "series" && v != "padic") throw SpecError("model must be 'series' or 'padic'");
    cfg.model = v;
  } else if (key == "p") {
    cfg.p = to_int(key, v);
  } else if (key == "k") {
    cfg.k = static_cast<int>(to_int(key, v));
  } else if (key == "N") {
    cfg.N = to_int(key, v);
  } else if (key == "depth") {
    cfg.depth = static_cast<int>(to_int(key, v));
  } else if (key == "digits") {
    cfg.digits = to_int(key, v);
  } else if (key == "e") {
    cfg.e = to_int(key, v);
  } else if (key == "prec") {
    parse_rational(v);
    cfg.prec = v;
    cfg.prec_set = true;
  } else if (key == "ext_k") {
    cfg.ext_k = static_cast<int>(to_int(key, v));
  } else if (key == "ext_N") {
    cfg.ext_N = to_int(key, v);
  } else if (key == "ext_depth") {
    cfg.ext_depth = static_cast<int>(to_int(key, v));
  } else if (key == "ext_e") {
    cfg.ext_e = to_int(key, v);
  } else if (key == "target") {
    cfg.target = static_cast<int>(to_int(key, v));
  } else if (key == "budget") {
    cfg.budget = static_cast<int>(to_int(key, v));
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(to_int(key, v));
  } else if (key == "samples") {
    cfg.samples = static_cast<int>(to_int(key, v));
  } else if (key == "search_lo") {
    cfg.search.lo = parse_rational(v);
  } else if (key == "search_hi") {
    cfg.search.hi = parse_rational(v);
  } else if (key == "search_den") {
    cfg.search.denominator_bound = to_int(key, v);
  } else if (key == "search_terms") {
    cfg.search.max_terms = static_cast<int>(to_int(key, v));
  } else if (key == "search_coeffs") {
    cfg.search.coefficient_range = static_cast<int>(to_int(key, v));
  } else if (key == "output") {
    if (v != "text" && v != "json") throw SpecError("output must be 'text' or 'json'");
    cfg.json = v == "json";
  } else {
    throw SpecError("unknown config key '" + key + "'");
  }
}

void load_config_file(SessionConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw SpecError(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

FieldSpec base_field(const SessionConfig& cfg) {
  if (cfg.model == "padic") return FieldSpec::padic(cfg.p, cfg.e, cfg.digits);
  return FieldSpec::series(residue_for(cfg.p, cfg.k), lattice_for(cfg.N, cfg.p, cfg.depth),
                           Value(parse_rational(cfg.prec)));
}

FieldSpec extension_field(const SessionConfig& cfg) {
  if (cfg.model == "padic") return FieldSpec::padic(cfg.p, cfg.ext_e > 0 ? cfg.ext_e : cfg.e, cfg.digits);
  return FieldSpec::series(residue_for(cfg.p, cfg.ext_k > 0 ? cfg.ext_k : cfg.k),
                           lattice_for(cfg.ext_N > 0 ? cfg.ext_N : cfg.N, cfg.p,
                                       cfg.ext_depth >= 0 ? cfg.ext_depth : cfg.depth),
                           Value(parse_rational(cfg.prec)));
}

Value working_precision(const SessionConfig& cfg, const FieldSpec& spec) {
  if (spec.is_padic() && !cfg.prec_set) return spec.default_precision();
  return Value(parse_rational(cfg.prec));
}

}  // namespace valrv::cli
