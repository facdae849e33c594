#include "valrv/newton.hpp"

#include <algorithm>

#include "valrv/errors.hpp"

namespace valrv {
namespace {

using Point = std::pair<int, Rational>;

// Lower convex hull; collinear interior points are not vertices.
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
  std::vector<Point> h;
  for (const auto& p : pts) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h.back();
      const Rational cross = Rational(b.first - a.first) * (p.second - a.second) -
                             (b.second - a.second) * Rational(p.first - a.first);
      if (cross > 0) break;
      h.pop_back();
    }
    h.push_back(p);
  }
  return h;
}

std::vector<PolygonSegment> hull_segments(const std::vector<Point>& hull, const std::vector<Point>& pts,
                                          const std::vector<FieldElem>& coeffs, const ResidueFieldPtr& field) {
  std::vector<PolygonSegment> segs;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto& [a, va] = hull[s];
    const auto& [b, vb] = hull[s + 1];
    PolygonSegment seg;
    seg.start = a;
    seg.end = b;
    seg.length = b - a;
    seg.slope = (vb - va) / (b - a);
    std::vector<ResidueElem> res(b - a + 1, field->zero());
    for (const auto& [k, vk] : pts) {
      if (k < a || k > b) continue;
      if (vk == va + seg.slope * (k - a)) res[k - a] = coeffs[k].leading_coeff();
    }
    seg.residual = ResPoly(field, std::move(res));
    segs.push_back(std::move(seg));
  }
  return segs;
}

Value vlb(const FieldElem& a) { return a.valuation_lower_bound(); }

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldSpec spec, std::vector<FieldElem> coeffs) : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.spec() == spec_)) throw SpecError("polynomial coefficient from another field");
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

Poly Poly::monomial_x(const FieldSpec& spec, int k) {
  std::vector<FieldElem> cs(k + 1, FieldElem::zero(spec));
  cs[k] = FieldElem::one(spec);
  return Poly(spec, std::move(cs));
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElem::zero(spec_);
  return coeffs_[i];
}

FieldElem Poly::operator()(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<FieldElem> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(FieldElem::from_integer(spec_, i) * coeffs_[i]);
  return Poly(spec_, std::move(d));
}

Poly Poly::taylor_shift(const FieldElem& a) const {
  const int n = degree();
  if (n < 0) return *this;
  std::vector<FieldElem> powers{FieldElem::one(spec_)};
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * a);
  std::vector<FieldElem> g;
  for (int k = 0; k <= n; ++k) {
    FieldElem acc = FieldElem::zero(spec_);
    for (int i = k; i <= n; ++i) {
      if (coeffs_[i].is_exact_zero()) continue;
      acc = acc + FieldElem::from_integer(spec_, binomial(i, k)) * coeffs_[i] * powers[i - k];
    }
    g.push_back(acc);
  }
  return Poly(spec_, std::move(g));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FieldElem& c = coeffs_[i];
    if (c.is_exact_zero()) continue;
    const std::string x = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
    std::string cs = c.to_string();
    bool negative = false;
    std::string body;
    const bool single = c.is_exact() && c.terms().size() == 1;
    if (single && cs[0] == '-') {
      negative = true;
      cs = cs.substr(1);
    }
    if (!single) cs = "(" + cs + ")";
    if (x.empty())
      body = cs;
    else if (cs == "1")
      body = x;
    else
      body = cs + "*" + x;
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return Poly(a.spec_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<FieldElem> c;
  for (int i = 0; i <= std::max(a.degree(), b.degree()); ++i) c.push_back(a.coeff(i) - b.coeff(i));
  return Poly(a.spec_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.spec_, {});
  std::vector<FieldElem> c(a.degree() + b.degree() + 1, FieldElem::zero(a.spec_));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return Poly(a.spec_, std::move(c));
}

// ---------------------------------------------------------------- polygons

std::string NewtonPolygon::to_string() const {
  std::string out = "vertices:";
  for (const auto& v : vertices) out += " (" + std::to_string(v.index) + ", " + v.value.to_string() + ")";
  out += "\nlowest index: " + std::to_string(lowest_index);
  for (const auto& s : segments) {
    out += "\nsegment [" + std::to_string(s.start) + ", " + std::to_string(s.end) +
           "] slope " + rational_to_string(s.slope) + " length " + std::to_string(s.length) +
           " residual " + s.residual.to_string("Y");
  }
  return out;
}

NewtonPolygon newton_polygon(const Poly& f) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  std::vector<Point> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_exact_zero()) continue;
    if (c.is_zero_at_precision())
      throw IndeterminateValuation("coefficient of X^" + std::to_string(i) + " vanishes at its precision");
    pts.emplace_back(i, c.valuation().rational());
  }
  NewtonPolygon np;
  np.lowest_index = pts.front().first;
  const auto hull = lower_hull(pts);
  for (const auto& [i, v] : hull) np.vertices.push_back({i, Value(v)});
  np.segments = hull_segments(hull, pts, f.coeffs(), f.spec().residue());
  return np;
}

ResPoly reduce_poly(const Poly& f) {
  std::vector<ResidueElem> r;
  for (const auto& c : f.coeffs()) r.push_back(residue(c));
  return ResPoly(f.spec().residue(), std::move(r));
}

// ---------------------------------------------------------------- Hensel

HenselResult hensel_lift_ex(const Poly& f, const FieldElem& b, const Value& target) {
  if (target.is_infinite()) throw DomainError("hensel_lift needs a finite target precision");
  if (f.degree() < 1) throw DomainError("hensel_lift needs a non-constant polynomial");
  const FieldElem fb = f(b);
  if (fb.is_exact_zero()) return {b, Value::infinity()};
  const Poly df = f.derivative();
  const FieldElem dfb = df(b);
  if (dfb.is_zero_at_precision()) throw DomainError("Hensel precondition violated: f'(b) vanishes");
  const Value vd = dfb.valuation();
  const Value vf = vlb(fb);
  if (!(vf > 2 * vd)) throw DomainError("Hensel precondition violated: v f(b) <= 2 v f'(b)");
  if (vf >= target) return {b, vf};

  // Lower bound for v(z) along the iteration, then the precision z needs so
  // that f(z) is known to the target.
  const Value vz = value_min(vlb(b), vf - vd);
  Value m = Value::infinity();
  for (int i = 1; i <= f.degree(); ++i) {
    const FieldElem& c = f.coeffs()[i];
    if (c.is_exact_zero()) continue;
    m = value_min(m, i == 1 ? vlb(c) : vlb(c) + (i - 1) * vz);
  }
  const Value pz = target - m;

  // Iterates are exact truncations, so f(z) carries only the coefficients'
  // own uncertainty.
  auto exact_below = [&](const FieldElem& x) { return FieldElem(x.spec(), x.truncated(pz).terms()); };
  FieldElem z = b;
  Value prev = vf;
  for (int iter = 0; iter < 64; ++iter) {
    const FieldElem d = df(z).truncated(pz);
    if (d.is_zero_at_precision()) return {z, prev};
    const FieldElem fz = iter == 0 ? fb : f(z);
    if (iter > 0) {
      if (fz.is_exact_zero()) return {z, Value::infinity()};
      const Value a = vlb(fz);
      if (a >= target || fz.is_zero_at_precision() || a <= prev) return {z, a};
      prev = a;
    }
    z = exact_below(z - fz / d);
  }
  return {z, prev};
}

FieldElem hensel_lift(const Poly& f, const FieldElem& b, const Value& target) {
  HenselResult r = hensel_lift_ex(f, b, target);
  if (r.achieved < target)
    throw InsufficientPrecision("Hensel lifting reached only " + r.achieved.to_string() + " < " + target.to_string());
  return r.root;
}

FieldElem nth_root_near_one(const FieldElem& u, std::int64_t n, std::optional<Value> target) {
  const FieldSpec& spec = u.spec();
  if (n < 1) throw DomainError("nth_root_near_one needs n >= 1");
  if (spec.p() > 0 && n % spec.p() == 0) throw DomainError("nth_root_near_one: n is divisible by the residue characteristic");
  const FieldElem one = FieldElem::one(spec);
  if (!(vlb(u - one) > Value(0))) throw DomainError("nth_root_near_one needs v(u - 1) > 0");
  if (u == one) return one;
  const Value t = target ? *target : (u.is_exact() ? spec.default_precision() : u.precision());
  std::vector<FieldElem> cs(n + 1, FieldElem::zero(spec));
  cs[0] = -u;
  cs[n] = one;
  // p does not divide n and z is a unit, so v f'(z) = 0: the root is known to
  // the value reached.
  return hensel_lift(Poly(spec, std::move(cs)), one, t).truncated(t);
}

// ---------------------------------------------------------------- root search

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::Complete:
      return "Complete";
    case Completeness::IncompleteWild:
      return "IncompleteWild";
    default:
      return "IncompletePrecision";
  }
}

namespace {

struct Search {
  const Poly& f;
  Value target;
  RootAnalysis out;

  void mark(Completeness c) {
    if (out.completeness == Completeness::Complete) out.completeness = c;
  }

  Value value_at(const FieldElem& z) {
    const FieldElem fz = f(z);
    return fz.is_exact_zero() ? Value::infinity() : vlb(fz);
  }

  void node(const FieldElem& z0, const Poly& g, const std::optional<Value>& bound, int budget,
            const std::optional<Rational>& top_slope);
};

void Search::node(const FieldElem& z0, const Poly& g, const std::optional<Value>& bound, int budget,
                  const std::optional<Rational>& top_slope) {
  const FieldSpec& spec = f.spec();
  const auto& cs = g.coeffs();
  const int deg = g.degree();
  int m = 0;
  while (m <= deg && cs[m].is_zero_at_precision()) ++m;
  if (m > deg) {
    mark(Completeness::IncompletePrecision);
    out.notes.push_back("all coefficients vanish at their precision around " + z0.to_string());
    return;
  }
  if (m > 0) {
    const Value achieved = cs[0].is_exact() ? Value::infinity() : cs[0].precision();
    out.roots.push_back({z0, m, achieved, top_slope});
    out.candidates.push_back({z0, achieved});
  } else {
    out.candidates.push_back({z0, cs[0].valuation()});
  }

  std::vector<Point> pts;
  std::vector<Point> vague;
  for (int i = m; i <= deg; ++i) {
    if (cs[i].is_exact_zero()) continue;
    if (cs[i].is_zero_at_precision())
      vague.emplace_back(i, cs[i].precision().rational());
    else
      pts.emplace_back(i, cs[i].valuation().rational());
  }
  const auto hull = lower_hull(pts);
  for (const auto& [i, lb] : vague) {
    bool above = i > hull.front().first && i < hull.back().first;
    for (std::size_t s = 0; above && s + 1 < hull.size(); ++s) {
      const auto& [a, va] = hull[s];
      const auto& [b, vb] = hull[s + 1];
      if (i >= a && i <= b) above = lb > va + (vb - va) / (b - a) * (i - a);
    }
    if (!above) {
      mark(Completeness::IncompletePrecision);
      out.notes.push_back("coefficient of W^" + std::to_string(i) + " is too imprecise to fix the polygon");
    }
  }

  for (const auto& seg : hull_segments(hull, pts, cs, spec.residue())) {
    const Rational lambda = -seg.slope;
    const std::string where = "slope " + rational_to_string(seg.slope) + " at " + z0.to_string();
    if (bound && !(Value(lambda) > *bound)) continue;
    if (!spec.lattice().contains(Value(lambda))) {
      out.notes.push_back(where + ": value " + rational_to_string(lambda) + " not in " + spec.lattice().to_string());
      continue;
    }
    std::vector<ResidueRoot> rroots;
    try {
      rroots = poly_roots(seg.residual);
    } catch (const UnsupportedError& e) {
      mark(Completeness::IncompleteWild);
      out.notes.push_back(where + ": " + e.what());
      continue;
    }
    if (rroots.empty()) {
      out.notes.push_back(where + ": residual " + seg.residual.to_string("Y") + " has no root in " +
                          spec.residue()->name());
      continue;
    }
    const std::optional<Rational> origin = top_slope ? top_slope : std::optional<Rational>(seg.slope);
    const Rational mu = cs[seg.start].valuation().rational() + lambda * seg.start;
    for (const auto& rr : rroots) {
      const FieldElem step = monomial(rr.root, Value(lambda), spec);
      if (rr.multiplicity == 1) {
        std::vector<FieldElem> h;
        for (int i = 0; i <= deg; ++i)
          h.push_back(cs[i] * monomial(spec.residue()->one(), Value(Rational(lambda * i - mu)), spec));
        HenselResult lifted;
        try {
          lifted = hensel_lift_ex(Poly(spec, std::move(h)), lift_residue(rr.root, spec), target - Value(mu));
        } catch (const Error& e) {
          mark(Completeness::IncompletePrecision);
          out.notes.push_back(where + ": lifting " + rr.root.to_string() + " failed: " + e.what());
          continue;
        }
        const FieldElem z = z0 + monomial(spec.residue()->one(), Value(lambda), spec) * lifted.root;
        out.roots.push_back({z, 1, value_at(z), origin});
        continue;
      }
      if (budget <= 0) {
        mark(Completeness::IncompleteWild);
        out.notes.push_back(where + ": repeated residual root " + rr.root.to_string() + " beyond the budget");
        continue;
      }
      node(z0 + step, g.taylor_shift(step), Value(lambda), budget - 1, origin);
    }
  }
}

}  // namespace

RootAnalysis analyze_roots(const Poly& f, const FieldElem& center, const std::optional<Value>& bound,
                           const RootSearchOptions& options) {
  if (f.is_zero()) throw DomainError("root search on the zero polynomial");
  Search s{f, options.target ? *options.target : f.spec().default_precision(), {}};
  s.node(center, f.taylor_shift(center), bound, options.budget, std::nullopt);
  return s.out;
}

RootAnalysis roots_in_field(const Poly& f, int budget) {
  RootSearchOptions opt;
  opt.budget = budget;
  return analyze_roots(f, FieldElem::zero(f.spec()), std::nullopt, opt);
}

}  // namespace valrv
