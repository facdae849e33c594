#include <doctest.h>

#include "support.hpp"
#include "valrv/errors.hpp"

using namespace valrv;
using namespace testutil;

TEST_CASE("Newton polygons") {
  const auto K = series(3);
  const FieldElem t = t_pow(K, 1);

  const NewtonPolygon a = newton_polygon(poly(K, {-t, num(K, 0), num(K, 1)}));
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].slope == Rational(-1, 2));
  CHECK(a.segments[0].length == 2);
  CHECK(a.segments[0].residual == ResPoly::from_ints(K.residue(), {-1, 0, 1}));

  const NewtonPolygon b = newton_polygon(poly_i(K, {0, -1, 1}));
  CHECK(b.lowest_index == 1);
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0].start == 1);
  CHECK(b.segments[0].end == 2);
  CHECK(b.segments[0].slope == 0);
  CHECK(b.segments[0].length == 1);

  const NewtonPolygon c = newton_polygon(poly(K, {-t.pow(3), num(K, 1)}));
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].slope == -3);

  // Collinear interior points stay off the vertex list but enter the residual.
  const NewtonPolygon d = newton_polygon(poly(K, {t.pow(2), t, num(K, 1)}));
  CHECK(d.vertices.size() == 2);
  CHECK(d.segments[0].residual == ResPoly::from_ints(K.residue(), {1, 1, 1}));

  CHECK_THROWS_AS(newton_polygon(poly(K, {FieldElem::big_o(K, Value(2)), num(K, 1)})), IndeterminateValuation);
}

TEST_CASE("reduction") {
  const auto K = series(3);
  const FieldElem t = t_pow(K, 1);
  CHECK(reduce_poly(poly(K, {num(K, -1) - t, num(K, 0), num(K, 1)})) == ResPoly::from_ints(K.residue(), {-1, 0, 1}));
  CHECK(reduce_poly(poly_i(K, {-1, -1, 1})) == ResPoly::from_ints(K.residue(), {-1, -1, 1}));
  CHECK(reduce_poly(poly(K, {num(K, 1), t})).degree() == 0);
  CHECK_THROWS_AS(reduce_poly(poly(K, {t_pow(K, -1), num(K, 1)})), NotIntegral);
}

TEST_CASE("Taylor shift agrees with evaluation") {
  std::mt19937_64 rng(41);
  for (const auto& K : {series(3), FieldSpec::padic(5, 1, 8)}) {
    for (int i = 0; i < 30; ++i) {
      std::vector<FieldElem> cs;
      for (int j = 0; j < 4; ++j) cs.push_back(random_element(K, rng, {}));
      const Poly f(K, cs);
      const FieldElem a = random_element(K, rng, {}), w = random_element(K, rng, {});
      CHECK(eq_at_precision(f.taylor_shift(a)(w), f(a + w)) != Tri::False);
    }
  }
}

TEST_CASE("Hensel lifting examples") {
  const auto K5 = series(5);
  const Poly f = poly(K5, {num(K5, -1) - t_pow(K5, 1), num(K5, 0), num(K5, 1)});
  const FieldElem z = hensel_lift(f, num(K5, 1), Value(3));
  // Brute force over all truncated candidates 1 + c1 t + c2 t^2.
  int matches = 0;
  for (int c1 = 0; c1 < 5; ++c1)
    for (int c2 = 0; c2 < 5; ++c2) {
      const FieldElem cand = num(K5, 1) + mono(K5, c1, 1) + mono(K5, c2, 2);
      if (vlb(f(cand)) >= Value(3)) {
        ++matches;
        CHECK(truncate(z, Value(3)) == truncate(cand, Value(3)));
      }
    }
  CHECK(matches == 1);
  CHECK(truncate(z, Value(3)).to_string() == "1 + 3*t + 3*t^2 + O(t^3)");

  const auto K3 = series(3);
  const FieldElem exact = hensel_lift(poly_i(K3, {0, -1, 1}), num(K3, 1), Value(5));
  CHECK(exact == num(K3, 1));
  CHECK(exact.is_exact());

  const auto Q7 = FieldSpec::padic(7, 1, 3);
  const FieldElem r = hensel_lift(poly_i(Q7, {-2, 0, 1}), num(Q7, 3), Value(3));
  CHECK(padic_to_int(r, 7, 3) == 108);
  CHECK((BigInt(108) * 108) % 343 == 2);
  CHECK(truncate(r, Value(3)).to_string() == "3 + pi + 2*pi^2 + O(pi^3)");

  CHECK_THROWS_AS(hensel_lift(poly_i(K3, {-1, 0, 1}), num(K3, 0), Value(3)), DomainError);
  const Poly vague = poly(K3, {num(K3, -1) - t_pow(K3, 1) + FieldElem::big_o(K3, Value(2)), num(K3, 0), num(K3, 1)});
  CHECK_THROWS_AS(hensel_lift(vague, num(K3, 1), Value(6)), InsufficientPrecision);
  const HenselResult partial = hensel_lift_ex(vague, num(K3, 1), Value(6));
  CHECK(partial.achieved == Value(2));
}

TEST_CASE("n-th roots of 1-units") {
  const auto K = series(3, 1, 1, 0, Value(3));
  CHECK(nth_root_near_one(FieldElem::one(K), 5) == FieldElem::one(K));
  const FieldElem u = num(K, 1) + t_pow(K, 1);
  const FieldElem s = nth_root_near_one(u, 2);
  CHECK(eq_at_precision(s * s, u) != Tri::False);
  CHECK(s.to_string() == "1 + 2*t + t^2 + O(t^3)");
  CHECK_THROWS_AS(nth_root_near_one(u, 3), DomainError);
  CHECK_THROWS_AS(nth_root_near_one(num(K, 2), 2), DomainError);
}

TEST_CASE("root finding examples") {
  const auto Z = series(3);
  const Poly a = poly(Z, {-t_pow(Z, 1), num(Z, 0), num(Z, 1)});
  const RootAnalysis ra = roots_in_field(a);
  CHECK(ra.roots.empty());
  CHECK(ra.completeness == Completeness::Complete);

  const auto H = series(3, 1, 2);
  const RootAnalysis rb = roots_in_field(poly(H, {-t_pow(H, 1), num(H, 0), num(H, 1)}));
  CHECK(rb.completeness == Completeness::Complete);
  REQUIRE(rb.roots.size() == 2);
  CHECK(rb.roots[0].root == t_pow(H, Rational(1, 2)));
  CHECK(rb.roots[1].root == mono(H, 2, Rational(1, 2)));

  const RootAnalysis rc = roots_in_field(poly_i(Z, {-1, -1, 1}));
  CHECK(rc.roots.empty());
  CHECK(rc.completeness == Completeness::Complete);

  // Wild: X^3 - t needs a cube root of t, which only the hull has.
  const auto W = series(3, 1, 1, 2);
  const RootAnalysis rd = roots_in_field(poly(W, {-t_pow(W, 1), num(W, 0), num(W, 0), num(W, 1)}));
  REQUIRE(rd.roots.size() == 1);
  CHECK(rd.roots[0].root == t_pow(W, Rational(1, 3)));
  CHECK(rd.roots[0].multiplicity == 3);

  // X^2 (X - 1): the root 0 has multiplicity 2 and no segment.
  const RootAnalysis re = roots_in_field(poly_i(Z, {0, 0, -1, 1}));
  REQUIRE(re.roots.size() == 2);
  CHECK(re.roots[0].root.is_exact_zero());
  CHECK(re.roots[0].multiplicity == 2);
  CHECK_FALSE(re.roots[0].segment_slope.has_value());
  CHECK(re.roots[1].root == num(Z, 1));
}

TEST_CASE("split products have all their roots") {
  std::mt19937_64 rng(43);
  for (const auto& K : {series(5), series(3, 2), FieldSpec::padic(7, 1, 10)}) {
    RandomShape shape;
    shape.lo = Rational(-1);
    shape.max_terms = 2;
    for (int i = 0; i < 25; ++i) {
      std::vector<FieldElem> rs;
      Poly f(K, {FieldElem::one(K)});
      for (int j = 0; j < 3; ++j) {
        FieldElem r = random_element(K, rng, shape);
        bool fresh = true;
        for (const auto& s : rs) fresh = fresh && !(s == r);
        if (!fresh) continue;
        rs.push_back(r);
        f = f * Poly(K, {-r, FieldElem::one(K)});
      }
      const RootAnalysis ra = roots_in_field(f);
      if (ra.completeness != Completeness::Complete) continue;
      int total = 0;
      for (const auto& r : ra.roots) total += r.multiplicity;
      CHECK(total <= f.degree());
      for (const auto& r : rs) {
        bool found = false;
        for (const auto& x : ra.roots) found = found || eq_at_precision(x.root, r) != Tri::False;
        CHECK(found);
      }
    }
  }
}
