#include "valrv/predicates.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "valrv/errors.hpp"

namespace valrv {
namespace {

Value vlb(const FieldElem& a) { return a.valuation_lower_bound(); }

Value working_precision(const FieldSpec& spec, const std::vector<FieldElem>& inputs) {
  Value w = spec.default_precision();
  for (const auto& x : inputs) w = value_min(w, x.precision());
  return w;
}

PredicateVerdict unknown(std::string diagnostic) {
  PredicateVerdict v;
  v.kind = VerdictKind::Unknown;
  v.diagnostic = std::move(diagnostic);
  return v;
}

PredicateVerdict fails(std::string kind, std::vector<std::string> lines) {
  PredicateVerdict v;
  v.kind = VerdictKind::Fails;
  v.certificate_kind = std::move(kind);
  v.certificate = std::move(lines);
  return v;
}

// Adds monomials β t^(γ/p) killing the most negative term of s until no
// negative exponent is left; none when some γ/p leaves the lattice.
std::optional<FieldElem> eliminate_negative_part(const FieldElem& r) {
  const FieldSpec& spec = r.spec();
  const std::int64_t p = spec.p();
  if (r.is_zero_at_precision() && r.precision() <= Value(0)) return std::nullopt;
  FieldElem s = r;
  FieldElem add = FieldElem::zero(spec);
  for (int guard = 0; guard < 100000; ++guard) {
    if (s.is_zero_at_precision()) return s.precision() > Value(0) || s.is_exact() ? std::optional(add) : std::nullopt;
    const Term& lead = s.terms().front();
    if (lead.exp >= 0) return add;
    const Rational g = lead.exp / p;
    if (!spec.lattice().contains(Value(g))) return std::nullopt;
    const FieldElem m = monomial(*frobenius_inverse(lead.coeff), Value(g), spec);
    add = add + m;
    s = s + m - m.pow(p);
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Holds:
      return "Holds";
    case VerdictKind::Fails:
      return "Fails";
    default:
      return "Unknown";
  }
}

const WitnessValue* PredicateVerdict::find(const std::string& name) const {
  for (const auto& w : witnesses)
    if (w.name == name) return &w.value;
  return nullptr;
}

Value value_of_poly_at(const Poly& f, const FieldElem& z) {
  const FieldElem fz = f(z);
  return fz.is_exact_zero() ? Value::infinity() : vlb(fz);
}

// ---------------------------------------------------------------- H_n

PredicateVerdict check_H(int n, const std::vector<FieldElem>& x, const FieldElem& y, int budget) {
  if (n < 1 || static_cast<int>(x.size()) != n) throw DomainError("check_H needs n coefficients x_1..x_n");
  const FieldSpec& spec = y.spec();
  std::vector<FieldElem> cs(n + 1, FieldElem::zero(spec));
  for (int i = 1; i <= n; ++i) cs[n - i] = x[i - 1];
  cs[n] = FieldElem::one(spec);
  const Poly f(spec, cs);
  std::vector<FieldElem> inputs = x;
  inputs.push_back(y);
  const Value working = working_precision(spec, inputs);
  RootSearchOptions opt;
  opt.budget = budget;
  opt.target = spec.default_precision();
  const RootAnalysis ra = analyze_roots(f, y, Value(0), opt);
  for (const auto& r : ra.roots) {
    const FieldElem diff = r.root - y;
    const bool close = vlb(diff) > Value(0);
    const Value achieved = value_of_poly_at(f, r.root);
    if (close && achieved >= working) {
      PredicateVerdict v;
      v.kind = VerdictKind::Holds;
      v.witnesses.push_back({"z", r.root});
      v.witnesses.push_back({"v(f(z))", achieved});
      return v;
    }
  }
  if (!ra.roots.empty())
    return unknown("roots near y were found only below the working precision " + working.to_string());
  if (ra.completeness == Completeness::Complete) {
    std::vector<std::string> lines = ra.notes;
    if (lines.empty()) lines.push_back("no polygon segment of f(y + W) has slope below 0");
    return fails("polygon", lines);
  }
  PredicateVerdict v = unknown("root search " + to_string(ra.completeness));
  v.certificate = ra.notes;
  return v;
}

// ---------------------------------------------------------------- A

PredicateVerdict check_A(const FieldElem& c, int budget) {
  const FieldSpec& spec = c.spec();
  if (!spec.is_series()) throw DomainError("check_A needs the equal-characteristic series model");
  const std::int64_t p = spec.p();
  if (p == 0) throw DomainError("check_A needs positive residue characteristic");
  if (budget <= 0) budget = spec.lattice().depth() + 4;

  ASIterationTrace trace;
  FieldElem a = FieldElem::zero(spec);
  std::optional<FieldElem> found;
  std::string why;
  for (int k = 0;; ++k) {
    const FieldElem r = c + a - a.pow(p);
    trace.steps.push_back({a, r, vlb(r)});
    if (r.is_zero_at_precision() && r.precision() <= Value(0)) {
      why = "residual vanishes only at precision " + r.precision().to_string();
      break;
    }
    if (vlb(r) >= Value(0)) {
      found = a;
      break;
    }
    if (auto jump = eliminate_negative_part(r)) {
      found = a + *jump;
      break;
    }
    if (k >= budget) {
      why = "budget exhausted with v(r) = " + vlb(r).to_string();
      break;
    }
    auto b = pth_root(r);
    if (!b) {
      why = "p-th root of the residual leaves " + spec.lattice().to_string();
      break;
    }
    a = a + *b;
  }
  if (!found) {
    PredicateVerdict v = unknown("residual values keep descending (" + why + ")");
    v.trace = std::move(trace);
    return v;
  }

  const Value target = c.is_exact() ? spec.default_precision() : c.precision();
  const FieldElem s = c + *found - found->pow(p);
  FieldElem d = FieldElem::zero(spec);
  FieldElem root = *found;
  if (vlb(s) > Value(0)) {
    std::vector<FieldElem> cs(p + 1, FieldElem::zero(spec));
    cs[0] = -s;
    cs[1] = -FieldElem::one(spec);
    cs[p] = FieldElem::one(spec);
    const HenselResult beta = hensel_lift_ex(Poly(spec, cs), FieldElem::zero(spec), target);
    root = *found + beta.root;
  } else if (!s.is_zero_at_precision() && s.valuation() == Value(0)) {
    d = -s;
  } else {
    PredicateVerdict v = unknown("cannot decide v(c + a - a^p) at the available precision");
    v.trace = std::move(trace);
    return v;
  }

  const FieldElem check = root.pow(p) - root - c - d;
  const Value residual = check.is_exact_zero() ? Value::infinity() : vlb(check);
  const Value needed = value_min(target, c.precision());
  PredicateVerdict v;
  v.trace = std::move(trace);
  if (residual < needed) {
    v.kind = VerdictKind::Unknown;
    v.diagnostic = "root verified only to " + residual.to_string();
    return v;
  }
  v.kind = VerdictKind::Holds;
  v.witnesses.push_back({"d", d});
  v.witnesses.push_back({"root", root});
  v.witnesses.push_back({"v(root^p - root - c - d)", residual});
  return v;
}

// ---------------------------------------------------------------- A'

PredicateVerdict check_A_prime(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  const std::int64_t p = spec.p();
  if (p == 0) throw DomainError("check_A_prime needs positive residue characteristic");
  if (a.is_exact_zero()) return fails("value", {"v(0) = inf, so no b satisfies v(a - b^p) > v(a)"});
  if (a.is_zero_at_precision()) return unknown("v(a) is only known to be >= " + a.precision().to_string());
  const Value va = a.valuation();
  const auto vc = divide_value(va, p, spec.lattice());
  if (!vc)
    return fails("value-group", {"v(a)/" + std::to_string(p) + " = " + Value(Rational(va.rational() / p)).to_string() +
                                     " not in " + spec.lattice().to_string()});
  const ResidueElem ubar = a.leading_coeff();
  const auto dbar = frobenius_inverse(ubar, p);
  if (!dbar)
    return fails("residue", {"residue " + ubar.to_string() + " has no " + std::to_string(p) + "-th root in " +
                             spec.residue()->name()});
  const FieldElem b = monomial(*dbar, *vc, spec);
  const FieldElem diff = a - b.pow(p);
  const Value vd = diff.is_exact_zero() ? Value::infinity() : vlb(diff);
  if (!(vd > va)) return unknown("witness b = " + b.to_string() + " did not verify");
  PredicateVerdict v;
  v.kind = VerdictKind::Holds;
  v.witnesses.push_back({"b", b});
  v.witnesses.push_back({"v(a - b^p)", vd});
  return v;
}

// ---------------------------------------------------------------- E_n, E'_n

std::vector<FieldElem> enumerate_search_space(const FieldSpec& spec, const SearchSpace& space) {
  if (space.denominator_bound < 1 || space.max_terms < 0) throw DomainError("malformed search space");
  std::vector<Rational> exps;
  for (std::int64_t d = 1; d <= space.denominator_bound; ++d) {
    const Rational lo = space.lo * d;
    const Rational hi = space.hi * d;
    BigInt k = boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo) - 1;
    for (; Rational(k) <= hi; ++k) {
      if (Rational(k) < lo) continue;
      const Rational q(k, d);
      if (spec.lattice().contains(Value(q)) && std::find(exps.begin(), exps.end(), q) == exps.end()) exps.push_back(q);
    }
  }
  std::sort(exps.begin(), exps.end());
  const auto& field = spec.residue();
  std::vector<ResidueElem> coeffs;
  if (field->is_finite()) {
    const std::uint32_t n = space.coefficient_range > 0
                                ? std::min<std::uint32_t>(space.coefficient_range, field->size() - 1)
                                : field->size() - 1;
    for (std::uint32_t c = 1; c <= n; ++c) coeffs.push_back(field->from_code(c));
  } else {
    const int n = space.coefficient_range > 0 ? space.coefficient_range : 2;
    for (int c = 1; c <= n; ++c) {
      coeffs.push_back(field->from_integer(c));
      coeffs.push_back(field->from_integer(-c));
    }
  }
  std::vector<FieldElem> out{FieldElem::zero(spec)};
  std::vector<Term> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (out.size() > 2'000'000) throw DomainError("search space too large");
    for (std::size_t i = start; i < exps.size(); ++i)
      for (const auto& c : coeffs) {
        current.push_back({exps[i], c});
        out.emplace_back(spec, current);
        if (left > 1) rec(i + 1, left - 1);
        current.pop_back();
      }
  };
  if (space.max_terms > 0) rec(0, space.max_terms);
  std::stable_sort(out.begin() + 1, out.end(),
                   [](const FieldElem& x, const FieldElem& y) { return x.terms().size() < y.terms().size(); });
  return out;
}

PredicateVerdict check_extremal(const Poly& f, const SearchSpace& space, int budget) {
  const FieldSpec& spec = f.spec();
  PredicateVerdict v;
  if (f.is_zero()) {
    v.kind = VerdictKind::Holds;
    v.certified = true;
    v.witnesses.push_back({"z", FieldElem::zero(spec)});
    v.witnesses.push_back({"max", Value::infinity()});
    return v;
  }
  const Value working = working_precision(spec, f.coeffs());
  RootSearchOptions opt;
  opt.budget = budget;
  opt.target = spec.default_precision();
  const RootAnalysis ra = analyze_roots(f, FieldElem::zero(spec), std::nullopt, opt);
  for (const auto& r : ra.roots) {
    const Value achieved = value_of_poly_at(f, r.root);
    if (achieved >= working) {
      v.kind = VerdictKind::Holds;
      v.certified = true;
      v.witnesses.push_back({"z", r.root});
      v.witnesses.push_back({"max", Value::infinity()});
      v.witnesses.push_back({"v(f(z))", achieved});
      v.certificate_kind = "root";
      v.certificate.push_back("root of f located to precision " + achieved.to_string());
      return v;
    }
  }

  const auto grid = enumerate_search_space(spec, space);
  std::optional<std::size_t> grid_best;
  std::vector<Value> grid_values;
  grid_values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid_values.push_back(value_of_poly_at(f, grid[i]));
    if (!grid_best || grid_values[i] > grid_values[*grid_best]) grid_best = i;
  }

  if (ra.completeness == Completeness::Complete && ra.roots.empty()) {
    const SearchCandidate* best = nullptr;
    for (const auto& c : ra.candidates)
      if (!best || c.value > best->value) best = &c;
    if (grid_values[*grid_best] > best->value)
      throw std::logic_error("extremality certificate contradicted by the grid at " + grid[*grid_best].to_string());
    v.kind = VerdictKind::Holds;
    v.certified = true;
    v.witnesses.push_back({"z", best->center});
    v.witnesses.push_back({"max", best->value});
    v.certificate_kind = "polygon";
    v.certificate = ra.notes;
    v.certificate.push_back("all " + std::to_string(ra.candidates.size()) +
                            " disc centre(s) examined; no branch can raise v f");
    v.diagnostic = "grid audit: " + std::to_string(grid.size()) + " candidates, none above the maximum";
    return v;
  }

  FieldElem best_z = grid[*grid_best];
  Value best_v = grid_values[*grid_best];
  for (const auto& c : ra.candidates)
    if (c.value > best_v) {
      best_z = c.center;
      best_v = c.value;
    }
  v.kind = VerdictKind::Unknown;
  v.witnesses.push_back({"z", best_z});
  v.witnesses.push_back({"best", best_v});
  v.diagnostic = "root analysis " + to_string(ra.completeness) + "; best of " + std::to_string(grid.size()) +
                 " grid candidates reported";
  v.certificate = ra.notes;
  return v;
}

PredicateVerdict check_E(int n, const std::vector<FieldElem>& b, const SearchSpace& space, int budget) {
  if (n < 0 || static_cast<int>(b.size()) != n + 1) throw DomainError("check_E needs n + 1 coefficients");
  const FieldSpec& spec = b.front().spec();
  const std::int64_t p = spec.p();
  if (p == 0) throw DomainError("check_E needs positive residue characteristic");
  std::int64_t deg = n == 0 ? 0 : ipow(p, n - 1);
  if (deg > 4096) throw UnsupportedError("additive polynomial degree too large");
  std::vector<FieldElem> cs(deg + 1, FieldElem::zero(spec));
  cs[0] = b[0];
  for (int i = 1; i <= n; ++i) cs[ipow(p, i - 1)] = cs[ipow(p, i - 1)] + b[i];
  return check_extremal(Poly(spec, std::move(cs)), space, budget);
}

PredicateVerdict check_E_prime(int n, const std::vector<FieldElem>& b, const SearchSpace& space, int budget) {
  if (n < 0 || static_cast<int>(b.size()) != n + 1) throw DomainError("check_E_prime needs n + 1 coefficients");
  return check_extremal(Poly(b.front().spec(), b), space, budget);
}

// ---------------------------------------------------------------- profile

TamenessProfile tameness_profile(const FieldSpec& spec, int samples, std::uint64_t seed) {
  TamenessProfile out;
  const ValueGroupSpec& lattice = spec.lattice();
  const std::int64_t p = spec.p();
  out.field = spec.to_string();
  out.depth = lattice.is_p_rooted() ? lattice.depth() : 0;
  out.label = "profile at truncation depth " + std::to_string(out.depth) + "; not a proof of tameness";
  out.p_divisible = p > 0 ? is_p_divisible(lattice, p).to_string() : "n/a (residue characteristic 0)";
  out.residue_perfect = spec.residue()->is_finite() ? "true" : "true (characteristic 0)";
  out.p_predicates_applicable = p > 0;
  if (p == 0) out.inapplicable_reason = "residue characteristic 0: A, A' and E_n do not apply";

  std::mt19937_64 rng(seed);
  auto count = [](RateCount& rc, VerdictKind k) {
    ++rc.samples;
    if (k == VerdictKind::Holds) ++rc.holds;
    if (k == VerdictKind::Fails) ++rc.fails;
    if (k == VerdictKind::Unknown) ++rc.unknown;
  };

  if (p > 0) {
    // Samples whose value stays p-divisible inside the truncated lattice.
    FieldSpec sample_spec = spec;
    if (spec.is_series() && lattice.is_p_rooted() && lattice.depth() > 0)
      sample_spec = FieldSpec::series(spec.residue(), ValueGroupSpec::p_rooted(lattice.n(), p, lattice.depth() - 1),
                                      spec.default_precision());
    RandomShape shape;
    for (int i = 0; i < samples; ++i) {
      const FieldElem s = random_element(sample_spec, rng, shape);
      const FieldElem a(spec, s.terms(), s.precision());
      const PredicateVerdict v = check_A_prime(a);
      count(out.a_prime, v.kind);
      if (v.kind == VerdictKind::Fails && out.a_prime_failures.size() < 3)
        out.a_prime_failures.push_back(a.to_string() + ": " + v.certificate.front());
    }
    if (spec.is_series()) {
      RandomShape neg;
      neg.hi = Rational(1);
      for (int i = 0; i < samples; ++i) {
        FieldElem c = random_element(spec, rng, neg);
        if (c.valuation() >= Value(0)) c = c + monomial(spec.residue()->one(), Value(-1), spec);
        count(out.a, check_A(c).kind);
      }
    } else {
      out.inapplicable_reason = "A is checked in the equal-characteristic model only";
    }
  }

  RandomShape integral;
  integral.lo = Rational(0);
  integral.nonzero = false;
  for (int i = 0; i < samples; ++i) {
    std::vector<FieldElem> x{random_element(spec, rng, integral), random_element(spec, rng, integral)};
    const FieldElem y = random_element(spec, rng, integral);
    count(out.h, check_H(2, x, y).kind);
  }
  return out;
}

}  // namespace valrv
