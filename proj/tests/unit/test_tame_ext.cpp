#include <doctest.h>

#include "support.hpp"
#include "valrv/errors.hpp"
#include "valrv/tame_ext.hpp"

using namespace valrv;
using namespace testutil;

namespace {

/// K = F_3((t)), f = X^2 - X - 1, d^2 t = c.
TameExtensionData quadratic_data() {
  const auto K = series(3);
  TameExtensionData d{poly_i(K, {-1, -1, 1}), {}};
  d.gens.push_back({2, t_pow(K, 1), poly_i(K, {0, 1})});
  return d;
}

/// Counts (x, y) with f̄(x) = 0 and y^n b̄ = h̄(x) by scanning all of F's residue field.
std::size_t brute_target_count(const TameExtensionData& data, const FieldSpec& F) {
  const ResidueEmbedding emb(data.spec().residue(), F.residue());
  auto img = [&](const FieldElem& c) { return c.is_zero_at_precision() ? F.residue()->zero() : emb(residue(c)); };
  auto eval = [&](const Poly& p, const ResidueElem& x) {
    ResidueElem acc = F.residue()->zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + img(p.coeff(i));
    return acc;
  };
  std::size_t count = 0;
  for (const auto& x : F.residue()->elements()) {
    if (!eval(data.f, x).is_zero()) continue;
    std::size_t combos = 1;
    for (const auto& g : data.gens) {
      const Rational v = -g.b.valuation().rational() / g.n;
      if (!F.lattice().contains(Value(v))) return 0;
      std::size_t ys = 0;
      for (const auto& y : F.residue()->elements())
        if (!y.is_zero() && y.pow(g.n) * emb(g.b.leading_coeff()) == eval(g.h, x)) ++ys;
      combos *= ys;
    }
    count += combos;
  }
  return count;
}

}  // namespace

TEST_CASE("validation") {
  const auto data = quadratic_data();
  const ValidationReport ok = validate(data, series(3, 4, 2));
  CHECK(ok.valid);
  CHECK(ok.roots.size() == 2);
  for (const auto& r : ok.roots) CHECK(r.admissible);

  const auto K = series(3);
  TameExtensionData reducible{poly_i(K, {-1, 0, 1}), {}};
  const ValidationReport bad = validate(reducible, series(3));
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.irreducible);

  TameExtensionData wild = data;
  wild.gens[0].n = 3;
  const ValidationReport w = validate(wild, series(3, 4, 3));
  CHECK_FALSE(w.valid);
  CHECK_FALSE(w.prime_to_p);

  TameExtensionData nonmonic{poly_i(K, {-1, -1, 2}), {}};
  CHECK_FALSE(validate(nonmonic, series(3)).monic_integral);
  TameExtensionData nonint{poly(K, {t_pow(K, -1), num(K, -1), num(K, 1)}), {}};
  CHECK_FALSE(validate(nonint, series(3)).monic_integral);

  // Compatible data whose generator value misses the extension's lattice.
  const ValidationReport flat = validate(data, series(3, 2));
  CHECK(flat.valid);
  CHECK_FALSE(flat.diagnostics.empty());

  CHECK_FALSE(validate(data, series(5, 1, 2)).valid);
  const auto K9 = series(3, 2);
  TameExtensionData over9{poly_i(K9, {-1, 1}), {}};
  CHECK_FALSE(validate(over9, series(3, 3)).valid);
  CHECK(validate(over9, series(3, 4)).valid);

  // h vanishing at the residue root makes it inadmissible.
  TameExtensionData vanish{poly_i(K, {0, 1}), {}};
  vanish.gens.push_back({2, t_pow(K, 1), poly_i(K, {0, 1})});
  const ValidationReport v = validate(vanish, series(3, 1, 2));
  REQUIRE(v.roots.size() == 1);
  CHECK_FALSE(v.roots[0].admissible);
}

TEST_CASE("target counts match a brute-force scan") {
  const auto data = quadratic_data();
  CHECK(enumerate_targets(data, series(3, 2, 2)).size() == 0);
  CHECK(enumerate_targets(data, series(3, 4, 2)).size() == 4);
  CHECK(enumerate_targets(data, series(3, 4)).size() == 0);
  for (const auto& F : {series(3, 2, 2), series(3, 4, 2), series(3, 4), series(3, 2, 4), series(3, 4, 6)})
    CHECK(enumerate_targets(data, F).size() == brute_target_count(data, F));

  const auto K = series(3);
  TameExtensionData trivial{poly_i(K, {-1, 1}), {}};
  const auto one = enumerate_targets(trivial, series(3));
  REQUIRE(one.size() == 1);
  CHECK(one[0].x == K.residue()->one());

  TameExtensionData unram{poly_i(K, {-1, -1, 1}), {}};
  CHECK(enumerate_targets(unram, series(3)).empty());
  CHECK(enumerate_targets(unram, series(3, 2)).size() == 2);

  const auto Q5 = FieldSpec::padic(5, 1, 6);
  TameExtensionData pad{poly_i(Q5, {-2, 0, 1}), {}};
  pad.gens.push_back({2, num(Q5, 5), poly_i(Q5, {1})});
  CHECK(enumerate_targets(pad, FieldSpec::padic(5, 1, 6)).empty());
  CHECK(enumerate_targets(pad, FieldSpec::padic(5, 2, 6)).empty());
}

TEST_CASE("targets are distinct") {
  const auto targets = enumerate_targets(quadratic_data(), series(3, 4, 2));
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      CHECK_FALSE((targets[i].x == targets[j].x && targets[i].y == targets[j].y));
  CHECK(targets[0].to_string().rfind("x = ", 0) == 0);
}

TEST_CASE("embeddings satisfy the defining equations") {
  const auto data = quadratic_data();
  const auto F = series(3, 4, 2);
  const auto targets = enumerate_targets(data, F);
  std::vector<FieldElem> ts;
  for (const auto& tgt : targets) {
    const EmbeddingResult r = embed(data, F, tgt, Value(8));
    CHECK(r.achieved >= Value(8));
    CHECK(r.f_residual >= Value(8));
    REQUIRE(r.t.size() == 1);
    CHECK(rv_of(r.t[0]) == tgt.y[0]);
    CHECK(residue(r.z) == tgt.x);
    // Independent re-check: z^2 - z - 1 and t * t1^2 - z.
    CHECK(vlb(r.z * r.z - r.z - num(F, 1)) >= Value(8));
    CHECK(vlb(t_pow(F, 1) * r.t[0] * r.t[0] - r.z) >= Value(8));
    ts.push_back(r.t[0]);
  }
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) CHECK(valuation(ts[i] - ts[j]) <= Value(8));

  EmbeddingTarget wrong = targets[0];
  wrong.y[0] = RvElem(Value(Rational(1, 2)), wrong.y[0].unit());
  CHECK_THROWS_AS(embed(data, F, wrong, Value(8)), DomainError);
  CHECK_THROWS(embed(data, series(3, 4), targets[0], Value(8)));

  const auto K = series(3);
  TameExtensionData unram{poly_i(K, {-1, -1, 1}), {}};
  const auto F9 = series(3, 2);
  for (const auto& tgt : enumerate_targets(unram, F9)) {
    const EmbeddingResult r = embed(unram, F9, tgt, Value(6));
    CHECK(r.f_residual >= Value(6));
    CHECK(r.t.empty());
  }
}

TEST_CASE("rv decomposition") {
  const auto data = quadratic_data();
  const auto F = series(3, 4, 2);
  const auto targets = enumerate_targets(data, F);
  const EmbeddingResult basis = embed(data, F, targets[0], Value(8));
  const FieldElem t1 = basis.t[0];

  const auto a = decompose_rv(t1, data, basis);
  REQUIRE(a.has_value());
  CHECK(a->m == std::vector<std::int64_t>{1});
  CHECK(a->d_value == Value(0));
  CHECK(a->residue_part == F.residue()->one());

  const auto b = decompose_rv(num(F, 1) + t_pow(F, 1), data, basis);
  REQUIRE(b.has_value());
  CHECK(b->m == std::vector<std::int64_t>{0});

  const FieldElem c = t_pow(F, 1) * t1.pow(3);
  const auto dc = decompose_rv(c, data, basis);
  REQUIRE(dc.has_value());
  CHECK(dc->m == std::vector<std::int64_t>{1});
  CHECK(dc->d_value == Value(0));
  CHECK(recombine_rv(*dc, basis) == rv_of(c));

  CHECK_FALSE(decompose_rv(FieldElem::zero(F), data, basis).has_value());

  std::mt19937_64 rng(61);
  for (int i = 0; i < 100; ++i) {
    const FieldElem x = random_element(F, rng, {});
    const auto d = decompose_rv(x, data, basis);
    REQUIRE(d.has_value());
    CHECK(d->m[0] >= 0);
    CHECK(d->m[0] < 2);
    CHECK(data.spec().lattice().contains(d->d_value));
    CHECK(recombine_rv(*d, basis) == rv_of(x));
  }
}
