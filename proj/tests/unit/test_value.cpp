#include <doctest.h>

#include <random>

#include "valrv/errors.hpp"
#include "valrv/value.hpp"

using namespace valrv;

namespace {

Value q(std::int64_t n, std::int64_t d = 1) { return Value(Rational(n, d)); }

}  // namespace

TEST_CASE("value addition and ordering") {
  CHECK(value_add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(value_add(Value::infinity(), q(-7)).is_infinite());
  CHECK(value_add(q(2, 4), q(1, 4)) == q(3, 4));
  CHECK(q(2, 4).to_string() == "1/2");
  CHECK(q(-3, 2).to_string() == "-3/2");
  CHECK(Value::infinity().to_string() == "inf");

  CHECK(value_min(q(1, 2), q(1, 3)) == q(1, 3));
  CHECK(value_cmp(Value::infinity(), q(1000000000)) == std::strong_ordering::greater);
  CHECK(value_min(Value::infinity(), Value::infinity()).is_infinite());
  CHECK(Value::infinity() == Value::infinity());
}

TEST_CASE("value parsing") {
  CHECK(parse_value("inf").is_infinite());
  CHECK(parse_value("-6/4") == q(-3, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("value addition is a commutative monoid on random samples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> n(-50, 50), d(1, 12);
  for (int i = 0; i < 300; ++i) {
    const Value a = q(n(rng), d(rng)), b = q(n(rng), d(rng)), c = q(n(rng), d(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + Value(0) == a);
    CHECK((a + Value::infinity()).is_infinite());
  }
}

TEST_CASE("lattice membership") {
  const auto Z = ValueGroupSpec::lattice(1);
  CHECK_FALSE(Z.contains(q(1, 2)));
  CHECK(ValueGroupSpec::p_rooted(1, 3, 2).contains(q(-1, 9)));
  CHECK(ValueGroupSpec::p_rooted(2, 3, 1).contains(q(1, 6)));
  CHECK_THROWS_AS(Z.contains(Value::infinity()), DomainError);
  CHECK_THROWS(ValueGroupSpec::p_rooted(3, 3, 1));
  CHECK(ValueGroupSpec::p_rooted(1, 3, 4).denominator() == 81);
}

TEST_CASE("value groups are closed under addition and negation") {
  const std::vector<ValueGroupSpec> specs{ValueGroupSpec::lattice(1), ValueGroupSpec::lattice(6),
                                          ValueGroupSpec::p_rooted(2, 3, 2), ValueGroupSpec::p_rooted(1, 5, 1)};
  for (const auto& g : specs)
    for (int a = -40; a <= 40; ++a)
      for (int b = -40; b <= 40; b += 7) {
        const Value x = q(a, 36), y = q(b, 36);
        if (g.contains(x) && g.contains(y)) {
          CHECK(g.contains(x + y));
          CHECK(g.contains(-x));
        }
      }
}

TEST_CASE("p-divisibility is never claimed outright") {
  CHECK(is_p_divisible(ValueGroupSpec::lattice(1), 3).kind == PDivisibility::Kind::No);
  const auto hull = is_p_divisible(ValueGroupSpec::p_rooted(1, 3, 4), 3);
  CHECK(hull.kind == PDivisibility::Kind::Approximately);
  CHECK(hull.depth == 4);
  CHECK(hull.to_string() == "approximately(depth=4)");
  // Brute force: the generator 1/6 halved must leave (1/6)Z.
  const auto g = ValueGroupSpec::p_rooted(2, 3, 1);
  CHECK_FALSE(g.contains(q(1, 12)));
  CHECK(is_p_divisible(g, 2).kind == PDivisibility::Kind::No);
}

TEST_CASE("division inside the value group") {
  CHECK(divide_value(Value(2), 2, ValueGroupSpec::lattice(1)) == std::optional<Value>(Value(1)));
  CHECK_FALSE(divide_value(Value(1), 3, ValueGroupSpec::lattice(1)).has_value());
  CHECK(divide_value(Value(-1), 3, ValueGroupSpec::p_rooted(1, 3, 2)) == std::optional<Value>(q(-1, 3)));
}

TEST_CASE("torsion order against brute force") {
  CHECK(torsion_order(q(1, 2), ValueGroupSpec::lattice(1), ValueGroupSpec::lattice(2)) == 2);
  CHECK(torsion_order(Value(3), ValueGroupSpec::lattice(1), ValueGroupSpec::lattice(1)) == 1);
  CHECK(torsion_order(q(1, 6), ValueGroupSpec::lattice(2), ValueGroupSpec::lattice(6)) == 3);
  CHECK_THROWS_AS(torsion_order(q(1, 2), ValueGroupSpec::lattice(2), ValueGroupSpec::lattice(1)), SpecError);

  const auto sub = ValueGroupSpec::lattice(4), sup = ValueGroupSpec::p_rooted(4, 3, 2);
  for (int k = -30; k <= 30; ++k) {
    const Value v = q(k, 36);
    const auto n = torsion_order(v, sub, sup);
    REQUIRE(n.has_value());
    CHECK(sub.contains(*n * v));
    for (std::int64_t m = 1; m < *n; ++m) CHECK_FALSE(sub.contains(m * v));
  }
}
