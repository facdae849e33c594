#include <doctest.h>

#include "support.hpp"
#include "valrv/errors.hpp"
#include "valrv/rv.hpp"

using namespace valrv;
using namespace testutil;

TEST_CASE("leading terms") {
  const auto K = series(3);
  const auto& F = K.residue();
  CHECK(rv_of(FieldElem::zero(K)).is_infinite());
  CHECK(rv_of(mono(K, 2, 1) + t_pow(K, 3)) == RvElem(Value(1), F->from_integer(2)));
  CHECK(rv_of(t_pow(K, 1)) == rv_of(t_pow(K, 1) + t_pow(K, 2)));
  CHECK_THROWS_AS(rv_of(FieldElem::big_o(K, Value(1))), InsufficientPrecision);
  CHECK(RvElem(Value(Rational(1, 2)), F->one()).to_string() == "(1/2, 1)");
  CHECK(RvElem::infinity().to_string() == "inf");
}

TEST_CASE("group law") {
  const auto F = ResidueField::finite(3);
  const RvElem a(Value(1), F->from_integer(2)), b(Value(2), F->one());
  CHECK(rv_mul(a, b) == RvElem(Value(3), F->from_integer(2)));
  CHECK(rv_inv(RvElem(Value(-1), F->from_integer(2))) == RvElem(Value(1), F->from_integer(2)));
  CHECK(rv_mul(a, RvElem::infinity()).is_infinite());
  CHECK_THROWS(rv_inv(RvElem::infinity()));
  CHECK(rv_mul(a, rv_one(F)) == a);
  CHECK(rv_pow(a, 3) == rv_mul(a, rv_mul(a, a)));
}

TEST_CASE("valuation, iota and extraction maps") {
  const auto F9 = ResidueField::finite(3, 2);
  const ResidueElem u = F9->from_digits({0, 1});
  CHECK(v_rv(RvElem(Value(Rational(1, 2)), u)) == Value(Rational(1, 2)));
  CHECK(v_rv(RvElem::infinity()).is_infinite());
  const auto Q3 = FieldSpec::padic(3, 1, 4);
  CHECK(v_rv(rv_of(num(Q3, 3))) == Value(1));
  CHECK(iota(F9->from_integer(2)) == RvElem(Value(0), F9->from_integer(2)));
  CHECK(residue_of(RvElem(Value(0), u)) == u);
  CHECK_THROWS_AS(residue_of(RvElem(Value(1), u)), DomainError);
  CHECK(value_of(RvElem(Value(3), u)) == Value(3));
  for (const auto& x : F9->elements())
    if (!x.is_zero()) CHECK(residue_of(iota(x)) == x);
}

TEST_CASE("sum sets") {
  const auto F3 = ResidueField::finite(3);
  const RvElem one3(Value(0), F3->one()), two3(Value(0), F3->from_integer(2));
  const RvSumResult s = rv_sum({one3, one3});
  CHECK(s.kind == RvSumResult::Kind::Definite);
  CHECK(s.definite == two3);

  const auto F2 = ResidueField::finite(2);
  const RvSumResult s2 = rv_sum({RvElem(Value(0), F2->one()), RvElem(Value(0), F2->one())});
  CHECK(s2.kind == RvSumResult::Kind::AnyAbove);
  CHECK(s2.gamma == Value(0));

  const auto Q2 = FieldSpec::padic(2, 1, 3);
  const RvSumResult s3 = rv_sum({rv_of(num(Q2, 1)), rv_of(num(Q2, 1))});
  CHECK(s3.kind == RvSumResult::Kind::AnyAbove);
  CHECK(s3.gamma == Value(0));

  CHECK(rv_sum({RvElem::infinity(), RvElem::infinity()}).definite.is_infinite());
  CHECK(rv_sum({RvElem::infinity(), one3}).definite == one3);

  CHECK(holds_oplus({one3, one3}, two3));
  CHECK(holds_oplus({one3, two3}, RvElem::infinity()));
  CHECK(holds_oplus({one3, two3}, RvElem(Value(5), F3->one())));
  CHECK_FALSE(holds_oplus({one3, two3}, RvElem(Value(0), F3->one())));
  CHECK_FALSE(holds_oplus({one3, RvElem(Value(1), F3->one())}, two3));
  CHECK(holds_oplus({one3, RvElem(Value(1), F3->one())}, one3));
}

TEST_CASE("rv equality criterion") {
  const auto K = series(3);
  CHECK(rv_eq_criterion(t_pow(K, 1), t_pow(K, 1) + t_pow(K, 2)));
  CHECK_FALSE(rv_eq_criterion(t_pow(K, 1), mono(K, 2, 1)));
  const auto Q3e2 = FieldSpec::padic(3, 2, 6);
  const FieldElem pi = monomial(Q3e2.residue()->one(), Value(Rational(1, 2)), Q3e2);
  CHECK(rv_eq_criterion(FieldElem::one(Q3e2) + pi, FieldElem::one(Q3e2)));
  CHECK_FALSE(rv_eq_criterion(FieldElem::zero(K), t_pow(K, 1)));
  CHECK(rv_eq_criterion(FieldElem::zero(K), FieldElem::zero(K)));
}

TEST_CASE("rv is multiplicative on random elements") {
  std::mt19937_64 rng(29);
  for (const auto& K : {series(3), series(2, 2, 1, 2), FieldSpec::padic(5, 2, 6), FieldSpec::padic(2, 1, 6)})
    for (int i = 0; i < 200; ++i) {
      const FieldElem a = random_element(K, rng, {}), b = random_element(K, rng, {});
      CHECK(rv_of(a * b) == rv_mul(rv_of(a), rv_of(b)));
      CHECK(rv_of(a.inverse()) == rv_inv(rv_of(a)));
      CHECK(v_rv(rv_of(a)) == valuation(a));
    }
}
