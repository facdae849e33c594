#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support.hpp"
#include "valrv/cli/commands.hpp"
#include "valrv/cli/parser.hpp"
#include "valrv/errors.hpp"

using namespace valrv;
using namespace valrv::cli;
using namespace testutil;

TEST_CASE("expression parser") {
  const ExprAst a = parse_expr("2*t^-1 + 1");
  CHECK(a.kind == ExprAst::Kind::Add);
  REQUIRE(a.children.size() == 2);
  CHECK(a.children[0].kind == ExprAst::Kind::Mul);
  CHECK(a.children[0].children[1].kind == ExprAst::Kind::Pow);
  CHECK(a.children[0].children[1].exponent == Rational(-1));

  const ExprAst b = parse_expr("t^(-2/3)");
  CHECK(b.exponent == Rational(-2, 3));
  CHECK(parse_expr("-(1+t)").kind == ExprAst::Kind::Neg);
  CHECK(parse_expr("O(t^3)").kind == ExprAst::Kind::BigO);

  CHECK_THROWS_WITH_AS(parse_expr("1 + * t"), doctest::Contains("position 4"), ParseError);
  CHECK_THROWS_WITH_AS(parse_expr("(1+t"), doctest::Contains("position 4"), ParseError);
  CHECK_THROWS_AS(parse_expr("t^(1/0)"), ParseError);
  CHECK_THROWS_AS(parse_expr("y"), ParseError);
  CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("element parsing") {
  const auto K = series(3);
  CHECK(parse_element("t^2 + t^5", K) == t_pow(K, 2) + t_pow(K, 5));
  CHECK(parse_element("2*t^-1 + 1 + O(t^3)", K).to_string() == "2*t^-1 + 1 + O(t^3)");
  CHECK(parse_element("(1 + t)^2", K) == num(K, 1) + mono(K, 2, 1) + t_pow(K, 2));
  CHECK(parse_element("(1 - t)^-1", K).precision() == K.default_precision());
  CHECK(parse_element("5", K) == num(K, 2));
  CHECK(parse_element("t/2", K) == mono(K, 2, 1));
  CHECK_THROWS_WITH_AS(parse_element("t^(1/2)", K), doctest::Contains("position 0"), LatticeError);
  CHECK_THROWS_WITH_AS(parse_element("u", K), doctest::Contains("degree"), ParseError);
  CHECK_THROWS_AS(parse_element("O(1 + t)", K), ParseError);
  CHECK(parse_element("1/t", K) == t_pow(K, -1));
  CHECK_THROWS_AS(parse_element("1/(t - t)", K), ParseError);

  const auto H = series(3, 1, 1, 2);
  CHECK(parse_element("t^(1/9)", H) == t_pow(H, Rational(1, 9)));

  const auto F9 = series(3, 2);
  CHECK(parse_element("u*t", F9) == monomial(F9.residue()->from_digits({0, 1}), Value(1), F9));
  CHECK(parse_residue("2*u+1", F9.residue()) == F9.residue()->from_digits({1, 2}));

  const auto Q7 = FieldSpec::padic(7, 1, 4);
  CHECK(parse_element("49 + 7", Q7) == num(Q7, 56));
  CHECK(parse_element("3 + pi", Q7) == num(Q7, 10));
  const auto Q3e2 = FieldSpec::padic(3, 2, 8);
  CHECK(valuation(parse_element("pi", Q3e2)) == Value(Rational(1, 2)));

  const Poly f = parse_poly("X^2 - t", K);
  CHECK(f == poly(K, {-t_pow(K, 1), num(K, 0), num(K, 1)}));
  CHECK(parse_poly("(X - 1)*(X + 1)", K) == poly_i(K, {-1, 0, 1}));
  CHECK_THROWS(parse_element("X", K));
}

TEST_CASE("printed elements parse back to themselves") {
  std::mt19937_64 rng(71);
  for (const auto& K : {series(3), series(3, 2), series(2, 1, 1, 2), series(5, 1, 3), FieldSpec::padic(5, 1, 6),
                        FieldSpec::padic(3, 2, 6), series(0)}) {
    RandomShape exact, vague;
    vague.precision = Value(3);
    for (int i = 0; i < 100; ++i) {
      const FieldElem a = random_element(K, rng, i % 2 ? exact : vague);
      const FieldElem b = parse_element(a.to_string(), K);
      CHECK(b == a);
      CHECK(b.precision() == a.precision());
    }
  }
}

TEST_CASE("configuration") {
  SessionConfig cfg;
  apply_setting(cfg, "p", "5");
  apply_setting(cfg, "depth", "2");
  apply_setting(cfg, "prec", "6");
  const FieldSpec F = base_field(cfg);
  CHECK(F.p() == 5);
  CHECK(F.lattice().depth() == 2);
  CHECK(F.default_precision() == Value(6));
  CHECK_THROWS_AS(apply_setting(cfg, "colour", "red"), SpecError);
  CHECK_THROWS_AS(apply_setting(cfg, "p", "four"), SpecError);

  apply_setting(cfg, "ext_k", "2");
  const FieldSpec E = extension_field(cfg);
  CHECK(E.residue()->degree() == 2);
  CHECK(E.lattice().depth() == 2);

  SessionConfig pad;
  apply_setting(pad, "model", "padic");
  apply_setting(pad, "digits", "10");
  apply_setting(pad, "e", "2");
  CHECK(working_precision(pad, base_field(pad)) == Value(5));

  const std::string path = "valrv_test_config.cfg";
  {
    std::ofstream out(path);
    out << "# hull\np = 3\ndepth=4\n\nprec = 10  # trailing\n";
  }
  SessionConfig file;
  load_config_file(file, path);
  CHECK(file.depth == 4);
  CHECK(file.prec == "10");
  {
    std::ofstream out(path);
    out << "p 3\n";
  }
  CHECK_THROWS_AS(load_config_file(file, path), SpecError);
  std::remove(path.c_str());
  CHECK_THROWS(load_config_file(file, "no/such/file.cfg"));
  CHECK(config_keys().count("search_terms") == 1);
}

TEST_CASE("command exit codes") {
  SessionConfig cfg;
  CHECK(run("val", {"t^2 + t^5"}, cfg).exit_code == kOk);
  CHECK(run("val", {"t^2 + t^5"}, cfg).text == "2\n");
  CHECK(run("val", {"t^(1/2)"}, cfg).exit_code == kUsage);
  CHECK(run("val", {"O(t^2)"}, cfg).exit_code == kUnknown);
  CHECK(run("val", {}, cfg).exit_code == kUsage);
  CHECK(run("res", {"t^-1"}, cfg).exit_code == kUsage);
  CHECK(run("check-Aprime", {"t^2"}, cfg).exit_code == kFails);
  CHECK(run("check-A", {"t^-1"}, cfg).exit_code == kUnknown);
  CHECK(run("no-such-command", {}, cfg).exit_code == kUsage);

  SessionConfig hull = cfg;
  apply_setting(hull, "depth", "4");
  const CommandOutput a = run("check-A", {"t^-3 - t^-1"}, hull);
  CHECK(a.exit_code == kOk);
  CHECK(a.json["result"]["verdict"] == "Holds");
  CHECK(run("check-Aprime", {"t^2"}, hull).exit_code == kOk);

  const CommandOutput h = run("hensel", {"X^2 - X", "1"}, cfg);
  CHECK(h.exit_code == kOk);
  const std::string json = render(h, true);
  const Json parsed = Json::parse(json);
  CHECK(parsed["schema"] == "valrv/1");
  CHECK(parsed["command"] == "hensel");
  CHECK(parsed["exit_code"] == 0);
  CHECK(parsed.contains("result"));

  const Json err = Json::parse(render(run("val", {"1 +"}, cfg), true));
  CHECK(err["exit_code"] == kUsage);
  CHECK(err.contains("error"));

  for (const auto& info : subcommands()) CHECK_FALSE(info.summary.empty());
}

TEST_CASE("tame data parsing") {
  const auto K = series(3);
  const TameExtensionData d =
      parse_tame_data(R"({"f": "X^2 - X - 1", "gens": [{"n": 2, "b": "t", "h": "X"}]})", K);
  CHECK(d.f == poly_i(K, {-1, -1, 1}));
  REQUIRE(d.gens.size() == 1);
  CHECK(d.gens[0].n == 2);
  CHECK(d.gens[0].b == t_pow(K, 1));
  CHECK_THROWS(parse_tame_data(R"({"gens": []})", K));
  CHECK_THROWS(parse_tame_data("{not json", K));
}
