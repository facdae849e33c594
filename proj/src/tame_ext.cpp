#include "valrv/tame_ext.hpp"

#include <numeric>

#include "valrv/errors.hpp"

namespace valrv {
namespace {

Value residual_value(const FieldElem& r) {
  if (r.is_exact_zero()) return Value::infinity();
  if (r.is_zero_at_precision()) return r.precision();
  return r.valuation();
}

bool is_integral(const FieldElem& c) {
  return c.is_zero_at_precision() ? c.precision() >= Value(0) : c.valuation() >= Value(0);
}

std::string compat_problem(const FieldSpec& K, const FieldSpec& F) {
  if (K.model() != F.model()) return "extension model differs from the base model";
  if (K.p() != F.p()) return "extension has a different residue characteristic";
  if (K.is_padic()) {
    if (F.e() % K.e() != 0) return "ramification index of the base does not divide the extension's";
    return {};
  }
  if (F.lattice().denominator() % K.lattice().denominator() != 0)
    return "value group " + K.lattice().to_string() + " is not contained in " + F.lattice().to_string();
  if (F.residue()->is_finite() && F.residue()->degree() % K.residue()->degree() != 0)
    return "residue field " + K.residue()->name() + " does not embed in " + F.residue()->name();
  return {};
}

ResPoly map_res_poly(const ResPoly& f, const ResidueEmbedding& emb) {
  std::vector<ResidueElem> cs;
  for (const auto& c : f.coeffs()) cs.push_back(emb(c));
  return ResPoly(emb.target(), std::move(cs));
}

bool lattice_contains(const FieldSpec& F, const Value& v) {
  if (F.is_padic()) return boost::multiprecision::denominator(v.rational() * F.e()) == 1;
  return F.lattice().contains(v);
}

struct Prepared {
  ResidueEmbedding emb;
  ResPoly fbar;
  std::vector<ResPoly> hbar;
  std::vector<Value> values;  // -v(b_i)/n_i
};

Prepared prepare(const TameExtensionData& data, const FieldSpec& F) {
  const std::string problem = compat_problem(data.spec(), F);
  if (!problem.empty()) throw SpecError(problem);
  ResidueEmbedding emb(data.spec().residue(), F.residue());
  Prepared pre{emb, map_res_poly(reduce_poly(data.f), emb), {}, {}};
  for (const auto& g : data.gens) {
    pre.hbar.push_back(map_res_poly(reduce_poly(g.h), emb));
    pre.values.push_back(Value(-g.b.valuation().rational() / g.n));
  }
  return pre;
}

}  // namespace

Poly map_poly(const Poly& f, const FieldSpec& F, const ResidueEmbedding& emb) {
  std::vector<FieldElem> cs;
  for (const auto& c : f.coeffs()) cs.push_back(map_into(c, F, emb));
  return Poly(F, std::move(cs));
}

ValidationReport validate(const TameExtensionData& data, const FieldSpec& F) {
  ValidationReport rep;
  auto fail = [&rep](bool& flag, std::string msg) {
    flag = false;
    rep.valid = false;
    rep.diagnostics.push_back(std::move(msg));
  };
  const FieldSpec& K = data.spec();
  const std::int64_t p = K.p();

  const Poly& f = data.f;
  if (f.degree() < 1) {
    fail(rep.monic_integral, "f must have positive degree");
    return rep;
  }
  if (!(f.coeffs().back() == FieldElem::one(K))) fail(rep.monic_integral, "f is not monic");
  for (const auto& c : f.coeffs())
    if (!is_integral(c)) {
      fail(rep.monic_integral, "f has a coefficient of negative value: " + c.to_string());
      break;
    }
  for (std::size_t i = 0; i < data.gens.size(); ++i) {
    const auto& g = data.gens[i];
    const std::string tag = "generator " + std::to_string(i + 1) + ": ";
    if (g.n < 1) fail(rep.prime_to_p, tag + "n must be positive");
    if (p > 0 && std::gcd(g.n, p) != 1)
      fail(rep.prime_to_p, tag + "n = " + std::to_string(g.n) + " is divisible by the residue characteristic " +
                               std::to_string(p));
    if (g.b.is_zero_at_precision()) {
      rep.valid = false;
      rep.diagnostics.push_back(tag + "b must be a nonzero element with known valuation");
    }
    for (const auto& c : g.h.coeffs())
      if (!is_integral(c)) {
        rep.valid = false;
        rep.diagnostics.push_back(tag + "h has a coefficient of negative value: " + c.to_string());
        break;
      }
  }
  if (!rep.monic_integral) return rep;

  const ResPoly fbar = reduce_poly(f);
  try {
    if (!is_irreducible(fbar)) fail(rep.irreducible, "reduction " + fbar.to_string() + " is reducible");
  } catch (const UnsupportedError& e) {
    rep.valid = false;
    rep.diagnostics.push_back(std::string("irreducibility undecided: ") + e.what());
  }
  if (!is_separable(fbar)) fail(rep.separable, "reduction " + fbar.to_string() + " is inseparable");

  const std::string problem = compat_problem(K, F);
  if (!problem.empty()) {
    rep.valid = false;
    rep.diagnostics.push_back(problem);
    return rep;
  }
  if (!rep.valid) return rep;

  const Prepared pre = prepare(data, F);
  for (std::size_t i = 0; i < pre.values.size(); ++i)
    if (!lattice_contains(F, pre.values[i]))
      rep.diagnostics.push_back("generator " + std::to_string(i + 1) + ": value " + pre.values[i].to_string() +
                                " is not in the extension's value group; no targets");
  for (const auto& r : poly_roots(pre.fbar)) {
    RootAdmissibility adm{r.root, true, {}};
    for (std::size_t i = 0; i < pre.hbar.size(); ++i)
      if (pre.hbar[i](r.root).is_zero()) {
        adm.admissible = false;
        adm.problems.push_back("h" + std::to_string(i + 1) + " vanishes at " + r.root.to_string());
      }
    rep.roots.push_back(std::move(adm));
  }
  return rep;
}

std::string EmbeddingTarget::to_string() const {
  std::string s = "x = " + x.to_string();
  for (std::size_t i = 0; i < y.size(); ++i) s += ", y" + std::to_string(i + 1) + " = " + y[i].to_string();
  return s;
}

std::vector<EmbeddingTarget> enumerate_targets(const TameExtensionData& data, const FieldSpec& F) {
  const Prepared pre = prepare(data, F);
  for (const auto& v : pre.values)
    if (!lattice_contains(F, v)) return {};
  std::vector<EmbeddingTarget> out;
  for (const auto& r : poly_roots(pre.fbar)) {
    std::vector<std::vector<RvElem>> choices;
    bool ok = true;
    for (std::size_t i = 0; i < data.gens.size() && ok; ++i) {
      const ResidueElem hx = pre.hbar[i](r.root);
      if (hx.is_zero()) {
        ok = false;
        break;
      }
      const ResidueElem rhs = hx / pre.emb(data.gens[i].b.leading_coeff());
      std::vector<RvElem> ys;
      for (const auto& w : nth_roots_res(rhs, data.gens[i].n)) ys.emplace_back(pre.values[i], w);
      if (ys.empty()) ok = false;
      choices.push_back(std::move(ys));
    }
    if (!ok) continue;
    // Cartesian product, first generator varying slowest.
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      EmbeddingTarget tgt{r.root, {}};
      for (std::size_t i = 0; i < choices.size(); ++i) tgt.y.push_back(choices[i][idx[i]]);
      out.push_back(std::move(tgt));
      std::size_t k = choices.size();
      while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

EmbeddingResult embed(const TameExtensionData& data, const FieldSpec& F, const EmbeddingTarget& target,
                      const Value& target_prec) {
  const Prepared pre = prepare(data, F);
  if (target.y.size() != data.gens.size()) throw DomainError("embed: target has the wrong number of components");
  if (!target.x.field()->same_as(*F.residue()) || !pre.fbar(target.x).is_zero())
    throw DomainError("embed: " + target.x.to_string() + " is not a residue root of f");
  for (std::size_t i = 0; i < data.gens.size(); ++i) {
    const RvElem& y = target.y[i];
    const ResidueElem hx = pre.hbar[i](target.x);
    if (y.is_infinite() || hx.is_zero() || !(y.value() == pre.values[i]) ||
        !(y.unit().pow(data.gens[i].n) * pre.emb(data.gens[i].b.leading_coeff()) == hx))
      throw DomainError("embed: target component " + std::to_string(i + 1) + " is not admissible");
  }

  EmbeddingResult res;
  const Poly fF = map_poly(data.f, F, pre.emb);
  res.z = hensel_lift(fF, lift_residue(target.x, F), target_prec);
  res.f_residual = residual_value(fF(res.z));
  res.achieved = res.f_residual;
  for (std::size_t i = 0; i < data.gens.size(); ++i) {
    const auto n = data.gens[i].n;
    const FieldElem b = map_into(data.gens[i].b, F, pre.emb);
    const Poly h = map_poly(data.gens[i].h, F, pre.emb);
    const FieldElem e = monomial(target.y[i].unit(), target.y[i].value(), F);
    const FieldElem hz = h(res.z);
    const FieldElem u = hz * (b * e.pow(n)).inverse();
    const FieldElem ti = nth_root_near_one(u, n, target_prec) * e;
    if (!(rv_of(ti) == target.y[i])) throw DomainError("embed: lifted generator lost its leading term");
    const Value r = residual_value(b * ti.pow(n) - hz);
    res.t.push_back(ti);
    res.gen_residuals.push_back(r);
    res.achieved = value_min(res.achieved, r);
  }
  if (!(residue(res.z) == target.x)) throw DomainError("embed: lifted root has the wrong residue");
  if (res.achieved < target_prec)
    throw InsufficientPrecision("embed reached only " + res.achieved.to_string() + " of " + target_prec.to_string());
  return res;
}

std::optional<RvDecomposition> decompose_rv(const FieldElem& a, const TameExtensionData& data,
                                            const EmbeddingResult& basis) {
  if (a.is_exact_zero()) return std::nullopt;
  const Value va = a.valuation();
  const FieldSpec& K = data.spec();
  const std::size_t r = data.gens.size();
  std::vector<Value> vt;
  for (const auto& t : basis.t) vt.push_back(t.valuation());
  std::vector<std::int64_t> m(r, 0);
  while (true) {
    Rational rest = va.rational();
    for (std::size_t i = 0; i < r; ++i) rest -= vt[i].rational() * m[i];
    if (lattice_contains(K, Value(rest))) {
      ResidueElem unit = a.leading_coeff();
      for (std::size_t i = 0; i < r; ++i) unit = unit / basis.t[i].leading_coeff().pow(m[i]);
      return RvDecomposition{m, Value(rest), unit};
    }
    std::size_t k = r;
    while (k > 0 && ++m[k - 1] == data.gens[k - 1].n) m[--k] = 0;
    if (k == 0) return std::nullopt;
  }
}

RvElem recombine_rv(const RvDecomposition& d, const EmbeddingResult& basis) {
  const ResidueFieldPtr& field = d.residue_part.field();
  RvElem acc = rv_mul(RvElem(d.d_value, field->one()), iota(d.residue_part));
  for (std::size_t i = 0; i < d.m.size(); ++i) acc = rv_mul(acc, rv_pow(rv_of(basis.t[i]), d.m[i]));
  return acc;
}

}  // namespace valrv
