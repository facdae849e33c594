#pragma once

// Session configuration: key=value files with flag overrides.

#include <cstdint>
#include <map>
#include <string>

#include "valrv/field.hpp"
#include "valrv/predicates.hpp"

namespace valrv::cli {

struct SessionConfig {
  std::string model = "series";  // series | padic
  std::int64_t p = 3;            // 0 selects Q as residue field (series only)
  int k = 1;
  std::int64_t N = 1;
  int depth = 0;
  std::int64_t digits = 6;
  std::int64_t e = 1;
  /// Default precision of series models; also the working target of
  /// hensel/embed when set.
  std::string prec = "8";
  bool prec_set = false;

  // Extension model for the tame-extension commands; unset keys inherit.
  int ext_k = 0;
  std::int64_t ext_N = 0;
  int ext_depth = -1;
  std::int64_t ext_e = 0;
  int target = -1;
  /// rv-sum: element z whose membership in the sum set is tested.
  std::string probe;

  SearchSpace search;
  /// Recursion budget; 0 keeps each operation's own default.
  int budget = 0;
  std::uint64_t seed = 1;
  int samples = 50;
  bool json = false;
};

/// Applies one key=value setting; SpecError for an unknown key or bad value.
void apply_setting(SessionConfig& cfg, const std::string& key, const std::string& value);

/// Reads key=value lines ('#' starts a comment) into cfg.
void load_config_file(SessionConfig& cfg, const std::string& path);

/// Recognised keys in file order.
const std::map<std::string, std::string>& config_keys();

FieldSpec base_field(const SessionConfig& cfg);
FieldSpec extension_field(const SessionConfig& cfg);
Value working_precision(const SessionConfig& cfg, const FieldSpec& spec);

}  // namespace valrv::cli
