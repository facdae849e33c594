#include "valrv/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "valrv/errors.hpp"

namespace valrv {
namespace {

Rational floor_rational(const Rational& q) {
  const BigInt& n = boost::multiprecision::numerator(q);
  const BigInt& d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return Rational(f);
}

Rational ceil_rational(const Rational& q) { return -floor_rational(-q); }

std::int64_t as_index(const Rational& exp, std::int64_t e) {
  const Rational scaled = exp * e;
  if (boost::multiprecision::denominator(scaled) != 1)
    throw LatticeError("exponent " + rational_to_string(exp) + " is not a multiple of 1/" + std::to_string(e));
  return static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
}

std::string power_string(const std::string& var, const Rational& q) {
  if (q == 1) return var;
  if (boost::multiprecision::denominator(q) == 1) return var + "^" + rational_to_string(q);
  return var + "^(" + rational_to_string(q) + ")";
}

void require_same_spec(const FieldElem& a, const FieldElem& b) {
  if (!a.spec().valid() || !b.spec().valid()) throw DomainError("uninitialised field element");
  if (!(a.spec() == b.spec())) throw SpecError("field spec mismatch");
}

bool below(const Rational& exp, const Value& prec) { return prec.is_infinite() || Value(exp) < prec; }

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False:
      return "false";
    case Tri::True:
      return "true";
    default:
      return "indeterminate";
  }
}

// ---------------------------------------------------------------- specs

FieldSpec FieldSpec::series(ResidueFieldPtr residue, ValueGroupSpec lattice, Value default_precision) {
  if (!residue) throw SpecError("series spec needs a residue field");
  if (lattice.is_p_rooted() && residue->is_finite() && lattice.p() != residue->characteristic())
    throw SpecError("p-rooted lattice must use the residue characteristic");
  if (default_precision.is_infinite() || default_precision <= Value(0))
    throw SpecError("default precision must be a positive rational");
  Data d;
  d.model = Model::Series;
  d.residue = std::move(residue);
  d.lattice = lattice;
  d.default_precision = default_precision;
  FieldSpec s;
  s.d_ = std::make_shared<const Data>(std::move(d));
  return s;
}

FieldSpec FieldSpec::padic(std::int64_t p, std::int64_t e, std::int64_t digits) {
  if (!is_prime(p)) throw SpecError("p-adic spec needs a prime p");
  if (e < 1 || std::gcd(e, p) != 1) throw SpecError("ramification index must be positive and prime to p");
  if (digits < 1) throw SpecError("p-adic spec needs at least one digit");
  Data d;
  d.model = Model::Padic;
  d.residue = ResidueField::finite(p, 1);
  d.lattice = ValueGroupSpec::lattice(e);
  d.default_precision = Value(Rational(digits, e));
  d.e = e;
  d.digits = digits;
  FieldSpec s;
  s.d_ = std::make_shared<const Data>(std::move(d));
  return s;
}

const FieldSpec::Data& FieldSpec::data() const {
  if (!d_) throw DomainError("uninitialised field spec");
  return *d_;
}

std::string FieldSpec::to_string() const {
  const Data& d = data();
  if (d.model == Model::Padic) {
    std::string s = "Q_" + std::to_string(residue()->characteristic());
    if (d.e > 1) s += "(pi), pi^" + std::to_string(d.e) + " = " + std::to_string(residue()->characteristic());
    return s + ", " + std::to_string(d.digits) + " digits";
  }
  return d.residue->name() + "((t)), value group " + d.lattice.to_string() + ", default precision " +
         d.default_precision.to_string();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  const auto& x = *a.d_;
  const auto& y = *b.d_;
  return x.model == y.model && x.residue->same_as(*y.residue) && x.lattice == y.lattice &&
         x.default_precision == y.default_precision && x.e == y.e && x.digits == y.digits;
}

// ---------------------------------------------------------------- elements

FieldElem::FieldElem(FieldSpec spec, std::vector<Term> terms, Value precision)
    : spec_(std::move(spec)), terms_(std::move(terms)), prec_(std::move(precision)) {
  if (!spec_.valid()) throw SpecError("field element without a spec");
  for (const auto& t : terms_)
    if (!t.coeff.field() || !t.coeff.field()->same_as(*spec_.residue()))
      throw SpecError("coefficient lies in the wrong residue field");
  if (spec_.is_series()) {
    for (const auto& t : terms_)
      if (!spec_.lattice().contains(Value(t.exp)))
        throw LatticeError("exponent " + rational_to_string(t.exp) + " is outside " + spec_.lattice().to_string());
    normalize_series();
    return;
  }
  std::vector<std::pair<std::int64_t, BigInt>> raw;
  for (const auto& t : terms_) raw.emplace_back(as_index(t.exp, spec_.e()), BigInt(t.coeff.code()));
  normalize_padic(std::move(raw));
}

void FieldElem::normalize_series() {
  std::map<Rational, ResidueElem> acc;
  for (auto& t : terms_) {
    if (!below(t.exp, prec_)) continue;
    auto [it, inserted] = acc.try_emplace(t.exp, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  terms_.clear();
  for (auto& [exp, c] : acc)
    if (!c.is_zero()) terms_.push_back({exp, c});
}

void FieldElem::normalize_padic(std::vector<std::pair<std::int64_t, BigInt>> raw) {
  const std::int64_t p = spec_.p();
  const std::int64_t e = spec_.e();
  std::optional<std::int64_t> limit;
  if (prec_.is_finite()) {
    const Rational idx = ceil_rational(prec_.rational() * e);
    limit = static_cast<std::int64_t>(boost::multiprecision::numerator(idx));
    prec_ = Value(Rational(*limit, e));
  }
  std::map<std::int64_t, BigInt> pending;
  BigInt mass = 0;
  for (auto& [i, c] : raw) {
    pending[i] += c;
    mass += c < 0 ? BigInt(-c) : c;
  }
  // Past this index only a perpetual carry of -1 can survive.
  std::int64_t bound = 0;
  if (!pending.empty()) {
    const auto bits = mass > 0 ? static_cast<std::int64_t>(boost::multiprecision::msb(mass)) + 1 : 0;
    bound = pending.rbegin()->first + e * (bits + 2);
  }
  terms_.clear();
  const ResidueFieldPtr& field = spec_.residue();
  while (!pending.empty()) {
    auto it = pending.begin();
    const std::int64_t i = it->first;
    const BigInt c = it->second;
    pending.erase(it);
    if (!limit && i > bound) {
      if (terms_.empty()) throw DomainError("p-adic normalization lost its leading digit");
      limit = as_index(terms_.front().exp, e) + spec_.digits();
      prec_ = Value(Rational(*limit, e));
    }
    if (limit && i >= *limit) break;
    BigInt d = c % p;
    if (d < 0) d += p;
    const BigInt carry = (c - d) / p;
    if (d != 0) terms_.push_back({Rational(i, e), field->from_integer(d)});
    if (carry != 0) pending[i + e] += carry;
  }
  if (limit) {
    const Rational cap(*limit, e);
    std::erase_if(terms_, [&](const Term& t) { return t.exp >= cap; });
  }
}

FieldElem FieldElem::padic_from_raw(const FieldSpec& spec, std::vector<std::pair<std::int64_t, BigInt>> raw,
                                    const Value& precision) {
  FieldElem out;
  out.spec_ = spec;
  out.prec_ = precision;
  out.normalize_padic(std::move(raw));
  return out;
}

FieldElem FieldElem::zero(const FieldSpec& spec) { return FieldElem(spec, {}); }

FieldElem FieldElem::one(const FieldSpec& spec) { return FieldElem(spec, {{Rational(0), spec.residue()->one()}}); }

FieldElem FieldElem::from_integer(const FieldSpec& spec, const BigInt& n) {
  if (spec.is_series()) return FieldElem(spec, {{Rational(0), spec.residue()->from_integer(n)}});
  return padic_from_raw(spec, {{0, n}}, Value::infinity());
}

FieldElem FieldElem::from_rational(const FieldSpec& spec, const Rational& q) {
  if (spec.is_series()) return FieldElem(spec, {{Rational(0), spec.residue()->from_rational(q)}});
  return from_integer(spec, boost::multiprecision::numerator(q)) /
         from_integer(spec, boost::multiprecision::denominator(q));
}

FieldElem FieldElem::big_o(const FieldSpec& spec, const Value& precision) { return FieldElem(spec, {}, precision); }

Value FieldElem::valuation() const {
  if (!terms_.empty()) return Value(terms_.front().exp);
  if (prec_.is_infinite()) return Value::infinity();
  throw IndeterminateValuation("valuation is only known to be >= " + prec_.to_string());
}

Value FieldElem::valuation_lower_bound() const {
  if (!terms_.empty()) return Value(terms_.front().exp);
  return prec_;
}

ResidueElem FieldElem::leading_coeff() const {
  if (terms_.empty()) throw IndeterminateValuation("no leading term");
  return terms_.front().coeff;
}

ResidueElem FieldElem::coeff_at(const Rational& exp) const {
  for (const auto& t : terms_)
    if (t.exp == exp) return t.coeff;
  return spec_.residue()->zero();
}

FieldElem FieldElem::truncated(const Value& prec) const {
  FieldElem out(spec_, terms_, value_min(prec_, prec));
  return out;
}

FieldElem FieldElem::inverse() const {
  if (terms_.empty()) {
    if (prec_.is_infinite()) throw DomainError("inverse of zero");
    throw IndeterminateValuation("inverse of an element that is zero at precision " + prec_.to_string());
  }
  const Rational v = terms_.front().exp;
  const FieldElem m = monomial(terms_.front().coeff.inverse(), Value(Rational(-v)), spec_);
  const FieldElem u = *this * m;
  const FieldElem one_exact = one(spec_);
  if (is_exact() && u == one_exact) return m;
  const Value rel = is_exact() ? spec_.default_precision() : prec_ - Value(v);
  const FieldElem ut = u.truncated(rel);
  FieldElem x = one_exact.truncated(rel);
  for (int iter = 0; iter < 128; ++iter) {
    const FieldElem err = (one_exact - ut * x).truncated(rel);
    if (err.is_zero_at_precision()) break;
    x = (x + x * err).truncated(rel);
  }
  if (is_exact()) {
    FieldElem exact_x(spec_, x.terms_);
    if (u * exact_x == one_exact) return exact_x * m;
  }
  return x * m;
}

FieldElem FieldElem::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElem result = one(spec_);
  FieldElem base = *this;
  const std::int64_t p = spec_.p();
  if (spec_.is_series() && p > 0) {
    // Frobenius is additive in characteristic p, and sharpens the precision.
    while (n > 0 && n % p == 0) {
      std::vector<Term> terms;
      for (const auto& t : base.terms_) terms.push_back({t.exp * p, t.coeff.pow(p)});
      const Value prec = base.prec_.is_infinite() ? base.prec_ : Value(Rational(base.prec_.rational() * p));
      base = FieldElem(spec_, std::move(terms), prec);
      n /= p;
    }
  }
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::string FieldElem::to_string() const {
  const bool padic = spec_.is_padic();
  const std::string var = padic ? "pi" : "t";
  auto exp_of = [&](const Rational& q) { return padic ? Rational(q * spec_.e()) : q; };
  std::string out;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = false;
    if (!c.empty() && c[0] == '-') {
      negative = true;
      c = c.substr(1);
    }
    if (c.find('+') != std::string::npos) c = "(" + c + ")";
    std::string body;
    const Rational x = exp_of(t.exp);
    if (x == 0)
      body = c;
    else if (c == "1")
      body = power_string(var, x);
    else
      body = c + "*" + power_string(var, x);
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  if (prec_.is_finite()) {
    const std::string o = "O(" + power_string(var, exp_of(prec_.rational())) + ")";
    out = out.empty() ? o : out + " + " + o;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- arithmetic

FieldElem padic_combine(const FieldElem& a, const FieldElem& b, int sign) {
  const std::int64_t e = a.spec_.e();
  std::vector<std::pair<std::int64_t, BigInt>> raw;
  for (const auto& t : a.terms_) raw.emplace_back(as_index(t.exp, e), BigInt(t.coeff.code()));
  for (const auto& t : b.terms_) raw.emplace_back(as_index(t.exp, e), BigInt(sign * static_cast<std::int64_t>(t.coeff.code())));
  return FieldElem::padic_from_raw(a.spec_, std::move(raw), value_min(a.prec_, b.prec_));
}

FieldElem series_combine(const FieldElem& a, const FieldElem& b, bool subtract) {
  FieldElem out;
  out.spec_ = a.spec_;
  out.prec_ = value_min(a.prec_, b.prec_);
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t i = 0, j = 0;
  auto push = [&](const Rational& exp, ResidueElem c) {
    if (!c.is_zero() && below(exp, out.prec_)) out.terms_.push_back({exp, std::move(c)});
  };
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exp < y[j].exp)) {
      push(x[i].exp, x[i].coeff);
      ++i;
    } else if (i == x.size() || y[j].exp < x[i].exp) {
      push(y[j].exp, subtract ? -y[j].coeff : y[j].coeff);
      ++j;
    } else {
      push(x[i].exp, subtract ? x[i].coeff - y[j].coeff : x[i].coeff + y[j].coeff);
      ++i;
      ++j;
    }
  }
  return out;
}

FieldElem series_multiply(const FieldElem& a, const FieldElem& b, const Value& prec) {
  FieldElem out;
  out.spec_ = a.spec_;
  out.prec_ = prec;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  // Exponents all lie in (1/D)Z: work with integer numerators.
  const std::int64_t den = a.spec_.lattice().denominator();
  auto num = [den](const Rational& q) {
    return static_cast<std::int64_t>(boost::multiprecision::numerator(q) * (den / boost::multiprecision::denominator(q)));
  };
  std::vector<std::int64_t> ka, kb;
  for (const auto& t : a.terms_) ka.push_back(num(t.exp));
  for (const auto& t : b.terms_) kb.push_back(num(t.exp));
  const std::int64_t kmin = ka.front() + kb.front();
  std::int64_t kmax = ka.back() + kb.back();
  if (prec.is_finite()) {
    const Rational cap = ceil_rational(prec.rational() * den) - 1;
    kmax = std::min(kmax, static_cast<std::int64_t>(boost::multiprecision::numerator(cap)));
  }
  if (kmax < kmin) return out;
  const ResidueField& field = *a.spec_.residue();
  const std::int64_t span = kmax - kmin + 1;
  if (field.is_finite() && span <= 4'000'000) {
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(span), 0);
    for (std::size_t i = 0; i < ka.size(); ++i) {
      const std::uint32_t cx = a.terms_[i].coeff.code();
      for (std::size_t j = 0; j < kb.size(); ++j) {
        const std::int64_t k = ka[i] + kb[j];
        if (k > kmax) break;
        auto& slot = acc[static_cast<std::size_t>(k - kmin)];
        slot = field.add(slot, field.mul(cx, b.terms_[j].coeff.code()));
      }
    }
    for (std::int64_t k = 0; k < span; ++k)
      if (acc[k] != 0) out.terms_.push_back({Rational(kmin + k, den), field.from_code(acc[k])});
    return out;
  }
  std::map<std::int64_t, ResidueElem> acc;
  for (std::size_t i = 0; i < ka.size(); ++i)
    for (std::size_t j = 0; j < kb.size(); ++j) {
      const std::int64_t k = ka[i] + kb[j];
      if (k > kmax) break;
      ResidueElem c = a.terms_[i].coeff * b.terms_[j].coeff;
      auto [it, inserted] = acc.try_emplace(k, c);
      if (!inserted) it->second = it->second + c;
    }
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({Rational(k, den), c});
  return out;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  if (a.spec_.is_padic()) return padic_combine(a, b, 1);
  return series_combine(a, b, false);
}

FieldElem operator-(const FieldElem& a) {
  if (a.spec_.is_padic()) return padic_combine(FieldElem::zero(a.spec_), a, -1);
  return series_combine(FieldElem::zero(a.spec_), a, true);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  if (a.spec_.is_padic()) return padic_combine(a, b, -1);
  return series_combine(a, b, true);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  const Value prec = value_min(a.prec_ + b.valuation_lower_bound(), b.prec_ + a.valuation_lower_bound());
  if (a.spec_.is_padic()) {
    const std::int64_t e = a.spec_.e();
    std::vector<std::pair<std::int64_t, BigInt>> raw;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        raw.emplace_back(as_index(x.exp, e) + as_index(y.exp, e),
                         BigInt(static_cast<std::int64_t>(x.coeff.code()) * y.coeff.code()));
    return FieldElem::padic_from_raw(a.spec_, std::move(raw), prec);
  }
  return series_multiply(a, b, prec);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.spec_ == b.spec_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------- free functions

Value valuation(const FieldElem& a) { return a.valuation(); }

ResidueElem residue(const FieldElem& a) {
  if (!a.terms().empty() && a.terms().front().exp < 0) throw NotIntegral("residue of an element with negative valuation");
  if (a.precision() <= Value(0)) throw InsufficientPrecision("residue needs precision > 0");
  return a.coeff_at(Rational(0));
}

std::optional<FieldElem> pth_root(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  if (spec.is_padic()) throw UnsupportedError("pth_root is not available for p-adic fields");
  const std::int64_t p = spec.p();
  if (p == 0) throw DomainError("pth_root needs positive residue characteristic");
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    Rational exp = t.exp / p;
    if (!spec.lattice().contains(Value(exp))) return std::nullopt;
    terms.push_back({std::move(exp), *frobenius_inverse(t.coeff)});
  }
  Value prec = a.precision();
  if (prec.is_finite()) prec = Value(Rational(prec.rational() / p));
  return FieldElem(spec, std::move(terms), prec);
}

FieldElem lift_residue(const ResidueElem& r, const FieldSpec& spec) { return monomial(r, Value(0), spec); }

FieldElem monomial(const ResidueElem& coeff, const Value& exp, const FieldSpec& spec) {
  if (exp.is_infinite()) throw DomainError("monomial exponent must be finite");
  if (!spec.lattice().contains(exp))
    throw LatticeError("exponent " + exp.to_string() + " is outside " + spec.lattice().to_string());
  return FieldElem(spec, {{exp.rational(), coeff}});
}

FieldElem truncate(const FieldElem& a, const Value& prec) { return a.truncated(prec); }

Tri eq_at_precision(const FieldElem& a, const FieldElem& b) {
  const FieldElem d = a - b;
  if (!d.is_zero_at_precision()) return Tri::False;
  return d.is_exact() ? Tri::True : Tri::Indeterminate;
}

FieldElem map_into(const FieldElem& a, const FieldSpec& target, const ResidueEmbedding& emb) {
  if (a.spec().model() != target.model()) throw SpecError("map_into: field models differ");
  if (target.is_padic() && (a.spec().p() != target.p() || target.e() % a.spec().e() != 0))
    throw SpecError("map_into: ramification index must divide the target's");
  std::vector<Term> terms;
  for (const auto& t : a.terms()) terms.push_back({t.exp, emb(t.coeff)});
  return FieldElem(target, std::move(terms), a.precision());
}

FieldElem random_element(const FieldSpec& spec, std::mt19937_64& rng, const RandomShape& shape) {
  const std::int64_t den = spec.is_padic() ? spec.e() : spec.lattice().denominator();
  const auto lo = static_cast<std::int64_t>(boost::multiprecision::numerator(ceil_rational(shape.lo * den)));
  auto hi = static_cast<std::int64_t>(boost::multiprecision::numerator(floor_rational(shape.hi * den)));
  if (shape.precision.is_finite()) {
    const auto cap = static_cast<std::int64_t>(
        boost::multiprecision::numerator(ceil_rational(shape.precision.rational() * den)) - 1);
    hi = std::min(hi, cap);
  }
  if (hi < lo) throw DomainError("random_element: empty exponent window");
  const std::int64_t span = hi - lo + 1;
  std::uniform_int_distribution<int> nterms(shape.nonzero ? 1 : 0, shape.max_terms);
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  const int n = static_cast<int>(std::min<std::int64_t>(nterms(rng), span));
  std::set<std::int64_t> exps;
  while (static_cast<int>(exps.size()) < n) exps.insert(pick(rng));
  const auto& field = spec.residue();
  std::vector<Term> terms;
  for (auto k : exps) {
    ResidueElem c;
    if (field->is_finite()) {
      std::uniform_int_distribution<std::uint32_t> code(1, field->size() - 1);
      c = field->from_code(code(rng));
    } else {
      std::uniform_int_distribution<int> num(-4, 4);
      std::uniform_int_distribution<int> dd(1, 3);
      int x = 0;
      while (x == 0) x = num(rng);
      c = field->from_rational(Rational(x, dd(rng)));
    }
    terms.push_back({Rational(k, den), c});
  }
  return FieldElem(spec, std::move(terms), shape.precision);
}

}  // namespace valrv
