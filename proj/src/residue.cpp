#include "valrv/residue.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "valrv/errors.hpp"

namespace valrv {
namespace {

using IPoly = std::vector<std::int64_t>;  // over Z/p, constant term first

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod_p(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over Z/p; b nonzero.
IPoly ipoly_rem(IPoly a, const IPoly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::int64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod_p(a[shift + i] - factor * b[i], p);
    trim(a);
  }
  return a;
}

bool ipoly_irreducible(const IPoly& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    const std::int64_t count = ipow(p, d);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      IPoly g(d + 1);
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      g[d] = 1;
      if (ipoly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_same(const ResidueElem& a, const ResidueElem& b) {
  if (!a.field() || !b.field()) throw DomainError("uninitialised residue element");
  if (!a.field()->same_as(*b.field())) throw SpecError("residue field mismatch");
}

}  // namespace

// ---------------------------------------------------------------- fields

ResidueFieldPtr ResidueField::finite(std::int64_t p, int k) {
  return std::make_shared<const ResidueField>(Token{}, p, k);
}

ResidueFieldPtr ResidueField::rationals() {
  static const ResidueFieldPtr q = std::make_shared<const ResidueField>(Token{});
  return q;
}

ResidueField::ResidueField(Token) : p_(0), k_(1), q_(0) {}

ResidueField::ResidueField(Token, std::int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw SpecError("residue characteristic must be prime");
  if (k < 1) throw SpecError("residue degree must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxResidueFieldSize) throw SpecError("residue field too large");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Smallest monic irreducible, comparing coefficient tuples constant first.
  const std::int64_t count = ipow(p, k);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    IPoly m(k + 1);
    std::int64_t rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = rest % p;
      rest /= p;
    }
    m[k] = 1;
    if (ipoly_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](std::uint32_t a, std::int64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t gen = 1;
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors)
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
}

std::uint32_t ResidueField::slow_mul(std::uint32_t a, std::uint32_t b) const {
  IPoly da(k_), db(k_);
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= static_cast<std::uint32_t>(p_);
    db[i] = b % p_;
    b /= static_cast<std::uint32_t>(p_);
  }
  IPoly prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  IPoly r = ipoly_rem(prod, modulus_, p_);
  std::uint32_t code = 0, mult = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    code += static_cast<std::uint32_t>(r[i]) * mult;
    mult *= static_cast<std::uint32_t>(p_);
  }
  return code;
}

std::uint32_t ResidueField::add(std::uint32_t a, std::uint32_t b) const {
  const auto p = static_cast<std::uint32_t>(p_);
  std::uint32_t r = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((a % p + b % p) % p) * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

std::uint32_t ResidueField::neg(std::uint32_t a) const {
  const auto p = static_cast<std::uint32_t>(p_);
  std::uint32_t r = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    r += ((p - a % p) % p) * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

std::uint32_t ResidueField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

std::uint32_t ResidueField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero residue");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t ResidueField::pow(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("negative power of zero residue");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  const std::int64_t idx = mod_p(static_cast<std::int64_t>(log_[a]) * mod_p(e, order), order);
  return exp_[static_cast<std::size_t>(idx)];
}

ResidueElem ResidueField::zero() const {
  if (!is_finite()) return ResidueElem(shared_from_this(), Rational(0));
  return ResidueElem(shared_from_this(), std::uint32_t{0});
}

ResidueElem ResidueField::one() const {
  if (!is_finite()) return ResidueElem(shared_from_this(), Rational(1));
  return ResidueElem(shared_from_this(), std::uint32_t{1});
}

ResidueElem ResidueField::generator() const {
  if (!is_finite()) throw DomainError("Q has no residue generator");
  if (k_ == 1) return from_integer(-modulus_[0]);
  return from_code(static_cast<std::uint32_t>(p_));
}

ResidueElem ResidueField::from_integer(const BigInt& n) const {
  if (!is_finite()) return ResidueElem(shared_from_this(), Rational(n));
  BigInt r = n % p_;
  if (r < 0) r += p_;
  return ResidueElem(shared_from_this(), static_cast<std::uint32_t>(r));
}

ResidueElem ResidueField::from_rational(const Rational& q) const {
  if (!is_finite()) return ResidueElem(shared_from_this(), q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den % p_ == 0) throw DomainError("rational with denominator divisible by p has no residue");
  return from_integer(boost::multiprecision::numerator(q)) / from_integer(den);
}

ResidueElem ResidueField::from_code(std::uint32_t code) const {
  return ResidueElem(shared_from_this(), code);
}

ResidueElem ResidueField::from_digits(const std::vector<std::int64_t>& digits) const {
  if (!is_finite()) throw DomainError("from_digits needs a finite residue field");
  ResidueElem acc = zero();
  ResidueElem upow = one();
  const ResidueElem u = generator();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    acc = acc + from_integer(digits[i]) * upow;
    upow = upow * u;
  }
  return acc;
}

std::vector<ResidueElem> ResidueField::elements() const {
  if (!is_finite()) throw DomainError("Q cannot be enumerated");
  std::vector<ResidueElem> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back(from_code(c));
  return out;
}

std::string ResidueField::name() const {
  if (!is_finite()) return "Q";
  return "F_" + std::to_string(q_);
}

bool ResidueField::same_as(const ResidueField& other) const noexcept {
  return p_ == other.p_ && k_ == other.k_;
}

// ---------------------------------------------------------------- elements

ResidueElem::ResidueElem(ResidueFieldPtr field, std::uint32_t code) : field_(std::move(field)), code_(code) {
  if (!field_ || !field_->is_finite()) throw SpecError("code representation needs a finite field");
  if (code_ >= field_->size()) throw DomainError("residue code out of range");
}

ResidueElem::ResidueElem(ResidueFieldPtr field, Rational q) : field_(std::move(field)), rat_(std::move(q)) {
  if (!field_ || field_->is_finite()) throw SpecError("rational representation needs the field Q");
}

bool ResidueElem::is_zero() const { return field_->is_finite() ? code_ == 0 : rat_ == 0; }
bool ResidueElem::is_one() const { return field_->is_finite() ? code_ == 1 : rat_ == 1; }

std::vector<std::int64_t> ResidueElem::digits() const {
  if (!field_->is_finite()) throw DomainError("digits of a rational residue");
  std::vector<std::int64_t> d(field_->degree());
  std::uint32_t c = code_;
  const auto p = static_cast<std::uint32_t>(field_->characteristic());
  for (auto& x : d) {
    x = c % p;
    c /= p;
  }
  return d;
}

ResidueElem ResidueElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero residue");
  if (!field_->is_finite()) return ResidueElem(field_, Rational(1 / rat_));
  return ResidueElem(field_, field_->inv(code_));
}

ResidueElem ResidueElem::pow(std::int64_t e) const {
  if (field_->is_finite()) return ResidueElem(field_, field_->pow(code_, e));
  if (e < 0) return inverse().pow(-e);
  Rational r(1), b = rat_;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return ResidueElem(field_, r);
}

std::string ResidueElem::to_string() const {
  if (!field_) return "<null>";
  if (!field_->is_finite()) return rational_to_string(rat_);
  if (code_ == 0) return "0";
  const auto d = digits();
  std::string out;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += "u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
  require_same(a, b);
  if (!a.field_->is_finite()) return ResidueElem(a.field_, Rational(a.rat_ + b.rat_));
  return ResidueElem(a.field_, a.field_->add(a.code_, b.code_));
}

ResidueElem operator-(const ResidueElem& a) {
  if (!a.field_->is_finite()) return ResidueElem(a.field_, Rational(-a.rat_));
  return ResidueElem(a.field_, a.field_->neg(a.code_));
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) { return a + (-b); }

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
  require_same(a, b);
  if (!a.field_->is_finite()) return ResidueElem(a.field_, Rational(a.rat_ * b.rat_));
  return ResidueElem(a.field_, a.field_->mul(a.code_, b.code_));
}

ResidueElem operator/(const ResidueElem& a, const ResidueElem& b) { return a * b.inverse(); }

bool operator==(const ResidueElem& a, const ResidueElem& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  if (!a.field_->same_as(*b.field_)) return false;
  return a.field_->is_finite() ? a.code_ == b.code_ : a.rat_ == b.rat_;
}

std::strong_ordering operator<=>(const ResidueElem& a, const ResidueElem& b) {
  require_same(a, b);
  if (a.field_->is_finite()) return a.code_ <=> b.code_;
  if (a.rat_ < b.rat_) return std::strong_ordering::less;
  if (b.rat_ < a.rat_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- polynomials

ResPoly::ResPoly(ResidueFieldPtr field, std::vector<ResidueElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw SpecError("polynomial without residue field");
  for (const auto& c : coeffs_)
    if (!c.field() || !c.field()->same_as(*field_)) throw SpecError("residue field mismatch");
  trim();
}

ResPoly ResPoly::from_ints(const ResidueFieldPtr& field, const std::vector<std::int64_t>& coeffs) {
  std::vector<ResidueElem> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(field->from_integer(c));
  return ResPoly(field, std::move(cs));
}

void ResPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ResidueElem ResPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
  return coeffs_[i];
}

ResidueElem ResPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

ResidueElem ResPoly::operator()(const ResidueElem& x) const {
  ResidueElem acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ResPoly ResPoly::derivative() const {
  std::vector<ResidueElem> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.push_back(field_->from_integer(static_cast<std::int64_t>(i)) * coeffs_[i]);
  return ResPoly(field_, std::move(d));
}

ResPoly ResPoly::monic() const {
  const ResidueElem inv = leading().inverse();
  std::vector<ResidueElem> m;
  for (const auto& c : coeffs_) m.push_back(c * inv);
  return ResPoly(field_, std::move(m));
}

std::string ResPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const ResidueElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = cs.find_first_of("+-/", 1) != std::string::npos;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (!c.is_one()) out += (compound || cs[0] == '-' ? "(" + cs + ")" : cs) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

ResPoly operator+(const ResPoly& a, const ResPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<ResidueElem> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
  return ResPoly(a.field_, std::move(c));
}

ResPoly operator-(const ResPoly& a, const ResPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<ResidueElem> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
  return ResPoly(a.field_, std::move(c));
}

ResPoly operator*(const ResPoly& a, const ResPoly& b) {
  if (a.is_zero() || b.is_zero()) return ResPoly(a.field_, {});
  std::vector<ResidueElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return ResPoly(a.field_, std::move(c));
}

bool operator==(const ResPoly& a, const ResPoly& b) { return a.coeffs_ == b.coeffs_; }

std::pair<ResPoly, ResPoly> divmod(const ResPoly& a, const ResPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto& field = a.field();
  std::vector<ResidueElem> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {ResPoly(field, {}), a};
  std::vector<ResidueElem> quot(da - db + 1, field->zero());
  const ResidueElem lead_inv = b.leading().inverse();
  for (int i = da; i >= db; --i) {
    const ResidueElem factor = rem[i] * lead_inv;
    quot[i - db] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - factor * b.coeffs()[j];
  }
  rem.resize(db);
  return {ResPoly(field, std::move(quot)), ResPoly(field, std::move(rem))};
}

ResPoly gcd(ResPoly a, ResPoly b) {
  while (!b.is_zero()) {
    ResPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// ---------------------------------------------------------------- roots

std::optional<BigInt> exact_integer_root(const BigInt& x, std::int64_t n) {
  if (x < 0 || n < 1) throw DomainError("exact_integer_root needs x >= 0 and n >= 1");
  if (x < 2 || n == 1) return x;
  const auto bits = boost::multiprecision::msb(x);
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / static_cast<unsigned>(n) + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, static_cast<unsigned>(n)) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (boost::multiprecision::pow(lo, static_cast<unsigned>(n)) == x) return lo;
  return std::nullopt;
}

std::optional<ResidueElem> frobenius_inverse(const ResidueElem& a, std::int64_t p) {
  const auto& field = a.field();
  if (field->is_finite()) {
    if (p != 0 && p != field->characteristic()) throw DomainError("frobenius_inverse: p differs from the characteristic");
    // Frobenius has order k, so its inverse is x -> x^(p^(k-1)).
    return a.pow(ipow(field->characteristic(), field->degree() - 1));
  }
  if (!is_prime(p)) throw DomainError("frobenius_inverse over Q needs a prime p");
  const Rational& q = a.rational();
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (num < 0 && p == 2) return std::nullopt;
  auto rn = exact_integer_root(num < 0 ? BigInt(-num) : num, p);
  auto rd = exact_integer_root(den, p);
  if (!rn || !rd) return std::nullopt;
  Rational r(*rn, *rd);
  if (num < 0) r = -r;
  return ResidueElem(field, r);
}

namespace {

int multiplicity_at(ResPoly f, const ResidueElem& r) {
  const auto& field = f.field();
  const ResPoly lin(field, {-r, field->one()});
  int m = 0;
  while (!f.is_zero() && f(r).is_zero()) {
    f = divmod(f, lin).first;
    ++m;
  }
  return m;
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  constexpr std::int64_t kLimit = 1'000'000'000'000;
  if (n > kLimit) throw UnsupportedError("rational root search: coefficient too large to factor");
  const auto v = static_cast<std::int64_t>(n);
  std::vector<BigInt> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      if (d != v / d) out.emplace_back(v / d);
    }
  }
  return out;
}

std::vector<ResidueRoot> rational_roots(const ResPoly& f) {
  const auto& field = f.field();
  BigInt l = 1;
  for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(c.rational())));
  std::vector<BigInt> a;
  for (const auto& c : f.coeffs()) a.push_back(boost::multiprecision::numerator(Rational(c.rational() * l)));
  std::vector<ResidueRoot> out;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) out.push_back({field->zero(), static_cast<int>(low)});
  if (low + 1 == a.size()) return out;
  const auto d0 = divisors(a[low]);
  const auto dn = divisors(a.back());
  if (d0.size() * dn.size() > 2'000'000) throw UnsupportedError("rational root search: too many candidates");
  std::set<Rational> candidates;
  for (const auto& num : d0)
    for (const auto& den : dn) {
      candidates.insert(Rational(num, den));
      candidates.insert(Rational(-num, den));
    }
  for (const auto& c : candidates) {
    ResidueElem r(field, c);
    if (!f(r).is_zero()) continue;
    out.push_back({r, multiplicity_at(f, r)});
  }
  std::sort(out.begin(), out.end(), [](const ResidueRoot& x, const ResidueRoot& y) { return x.root < y.root; });
  return out;
}

}  // namespace

std::vector<ResidueRoot> poly_roots(const ResPoly& f) {
  if (f.is_zero()) throw DomainError("poly_roots of the zero polynomial");
  if (!f.field()->is_finite()) return rational_roots(f);
  std::vector<ResidueRoot> out;
  if (f.degree() == 0) return out;
  for (const auto& r : f.field()->elements())
    if (f(r).is_zero()) out.push_back({r, multiplicity_at(f, r)});
  return out;
}

std::vector<ResidueElem> artin_schreier_solve_res(const ResidueElem& c) {
  const auto& field = c.field();
  if (!field->is_finite()) throw DomainError("Artin-Schreier equation needs positive characteristic");
  const std::int64_t p = field->characteristic();
  std::vector<ResidueElem> out;
  for (const auto& x : field->elements())
    if (x.pow(p) - x == c) out.push_back(x);
  return out;
}

std::vector<ResidueElem> nth_roots_res(const ResidueElem& a, std::int64_t n) {
  if (n < 1) throw DomainError("nth_roots_res needs n >= 1");
  if (a.is_zero()) throw DomainError("nth_roots_res of zero");
  const auto& field = a.field();
  std::vector<ResidueElem> out;
  if (field->is_finite()) {
    for (const auto& b : field->elements())
      if (!b.is_zero() && b.pow(n) == a) out.push_back(b);
    return out;
  }
  const Rational& q = a.rational();
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);
  if (num < 0 && n % 2 == 0) return out;
  auto rn = exact_integer_root(num < 0 ? BigInt(-num) : num, n);
  auto rd = exact_integer_root(den, n);
  if (!rn || !rd) return out;
  Rational r(*rn, *rd);
  if (num < 0) r = -r;
  if (n % 2 == 0) out.emplace_back(field, Rational(-r));
  out.emplace_back(field, r);
  return out;
}

bool is_irreducible(const ResPoly& f, int degree_bound) {
  const auto& field = f.field();
  if (!field->is_finite()) throw UnsupportedError("irreducibility test needs a finite residue field");
  if (f.is_zero()) throw DomainError("irreducibility of the zero polynomial");
  if (f.degree() > degree_bound) throw UnsupportedError("degree exceeds the irreducibility bound");
  if (f.degree() < 1) return false;
  const ResPoly m = f.monic();
  const std::int64_t q = field->size();
  for (int d = 1; d <= m.degree() / 2; ++d) {
    const std::int64_t count = ipow(q, d);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<ResidueElem> g(d + 1, field->one());
      std::int64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = field->from_code(static_cast<std::uint32_t>(rest % q));
        rest /= q;
      }
      if (divmod(m, ResPoly(field, std::move(g))).second.is_zero()) return false;
    }
  }
  return true;
}

bool is_separable(const ResPoly& f) {
  if (f.is_zero()) throw DomainError("separability of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------- embeddings

ResidueEmbedding::ResidueEmbedding(ResidueFieldPtr from, ResidueFieldPtr to)
    : from_(std::move(from)), to_(std::move(to)) {
  if (from_->is_finite() != to_->is_finite()) throw SpecError("cannot embed between characteristics");
  if (!from_->is_finite()) return;
  if (from_->characteristic() != to_->characteristic() || to_->degree() % from_->degree() != 0)
    throw SpecError("residue field " + from_->name() + " does not embed in " + to_->name());
  const ResPoly m = ResPoly::from_ints(to_, from_->modulus());
  const auto roots = poly_roots(m);
  if (roots.empty()) throw SpecError("modulus has no root in the target residue field");
  ResidueElem g = to_->one();
  for (int i = 0; i < from_->degree(); ++i) {
    generator_powers_.push_back(g);
    g = g * roots.front().root;
  }
}

ResidueElem ResidueEmbedding::operator()(const ResidueElem& a) const {
  if (!a.field()->same_as(*from_)) throw SpecError("residue embedding applied to a foreign element");
  if (!from_->is_finite()) return ResidueElem(to_, a.rational());
  const auto d = a.digits();
  ResidueElem acc = to_->zero();
  for (std::size_t i = 0; i < d.size(); ++i) acc = acc + to_->from_integer(d[i]) * generator_powers_[i];
  return acc;
}

}  // namespace valrv
