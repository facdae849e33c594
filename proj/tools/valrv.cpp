#include <algorithm>
#include <iostream>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "valrv/cli/commands.hpp"
#include "valrv/errors.hpp"

namespace {

struct Flags {
  std::string field;
  std::optional<std::string> prec;
  std::optional<int> budget;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> target;
  std::optional<std::string> probe;
  std::vector<std::string> set;
  bool json = false;
};

const std::set<std::string> kValued = {"--field", "--prec", "--budget", "--seed",
                                       "--samples", "--target", "--probe", "--set"};

// Expressions such as "-t^-1" look like short options to CLI11. Options are
// moved to the front and every other token is passed after "--".
std::vector<std::string> reorder(int argc, char** argv) {
  std::vector<std::string> opts, pos;
  std::string sub;
  bool raw = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (raw) {
      pos.push_back(a);
    } else if (a == "--") {
      raw = true;
    } else if (kValued.count(a)) {
      opts.push_back(a);
      if (i + 1 < argc) opts.emplace_back(argv[++i]);
    } else if (a.rfind("--", 0) == 0 || a == "-h") {
      opts.push_back(a);
    } else if (sub.empty()) {
      sub = a;
    } else {
      pos.push_back(a);
    }
  }
  std::vector<std::string> out{argv[0]};
  out.insert(out.end(), opts.begin(), opts.end());
  if (!sub.empty()) out.push_back(sub);
  if (!pos.empty()) {
    out.emplace_back("--");
    out.insert(out.end(), pos.begin(), pos.end());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace valrv::cli;
  CLI::App app{"Computations in valued fields, their RV structure and tameness predicates", "valrv"};
  app.require_subcommand(1);

  Flags flags;
  auto add_common = [&flags](CLI::App* a) {
    a->add_option("--field", flags.field, "key=value configuration file");
    a->add_option("--prec", flags.prec, "working / default precision, e.g. 8 or 17/2");
    a->add_option("--budget", flags.budget, "recursion budget of the root search");
    a->add_option("--seed", flags.seed, "random seed");
    a->add_option("--samples", flags.samples, "samples per predicate (tame-profile)");
    a->add_option("--target", flags.target, "embedding target index (embed, decompose-rv)");
    a->add_option("--probe", flags.probe, "element z tested against the sum set (rv-sum)");
    a->add_option("--set", flags.set, "override one configuration key: key=value")
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    a->add_flag("--json", flags.json, "emit one JSON object");
  };
  add_common(&app);

  std::string chosen;
  std::vector<std::string> args;
  for (const auto& info : subcommands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.summary);
    sub->add_option("args", args, info.usage);
    sub->callback([&chosen, name = info.name] { chosen = name; });
  }

  try {
    std::vector<std::string> tokens = reorder(argc, argv);
    std::reverse(tokens.begin() + 1, tokens.end());
    tokens.erase(tokens.begin());
    app.parse(tokens);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  SessionConfig cfg;
  try {
    if (!flags.field.empty()) load_config_file(cfg, flags.field);
    for (const auto& kv : flags.set) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw valrv::SpecError("--set needs key=value, got '" + kv + "'");
      apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (flags.prec) apply_setting(cfg, "prec", *flags.prec);
    if (flags.budget) cfg.budget = *flags.budget;
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.samples) cfg.samples = *flags.samples;
    if (flags.target) cfg.target = *flags.target;
    if (flags.probe) cfg.probe = *flags.probe;
    if (flags.json) cfg.json = true;
  } catch (const std::exception& e) {
    CommandOutput err{kUsage, std::string("error (config): ") + e.what() + "\n",
                      Json{{"schema", kSchema},
                           {"command", chosen},
                           {"exit_code", kUsage},
                           {"error", Json{{"kind", "config"}, {"message", e.what()}}}}};
    std::cout << render(err, flags.json);
    return kUsage;
  }

  const CommandOutput out = run(chosen, args, cfg);
  std::cout << render(out, cfg.json);
  return out.exit_code;
}
