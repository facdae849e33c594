#pragma once

// Shared fixtures and small independent oracles for the test binaries.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "valrv/newton.hpp"

namespace testutil {

using namespace valrv;

inline FieldSpec series(std::int64_t p, int k = 1, std::int64_t N = 1, int depth = 0, Value prec = Value(8)) {
  const ValueGroupSpec g = depth > 0 ? ValueGroupSpec::p_rooted(N, p, depth) : ValueGroupSpec::lattice(N);
  return FieldSpec::series(p == 0 ? ResidueField::rationals() : ResidueField::finite(p, k), g, prec);
}

inline FieldElem mono(const FieldSpec& s, std::int64_t c, const Rational& e) {
  return monomial(s.residue()->from_integer(c), Value(e), s);
}

inline FieldElem t_pow(const FieldSpec& s, const Rational& e) { return mono(s, 1, e); }

inline FieldElem num(const FieldSpec& s, std::int64_t n) { return FieldElem::from_integer(s, n); }

inline Poly poly(const FieldSpec& s, std::vector<FieldElem> cs) { return Poly(s, std::move(cs)); }

inline Poly poly_i(const FieldSpec& s, const std::vector<std::int64_t>& cs) {
  std::vector<FieldElem> v;
  for (auto c : cs) v.push_back(num(s, c));
  return Poly(s, std::move(v));
}

/// Dense series over F_p as exponent -> coefficient (mod p); an oracle that
/// shares no code with the library's sparse arithmetic.
using DenseSeries = std::map<Rational, std::int64_t>;

inline DenseSeries dense_of(const FieldElem& a) {
  DenseSeries d;
  for (const auto& t : a.terms()) d[t.exp] = static_cast<std::int64_t>(t.coeff.code());
  return d;
}

inline DenseSeries dense_mul(const DenseSeries& a, const DenseSeries& b, std::int64_t p) {
  DenseSeries out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] = (out[ea + eb] + ca * cb) % p;
  return out;
}

inline DenseSeries dense_add(const DenseSeries& a, const DenseSeries& b, std::int64_t p, std::int64_t sign = 1) {
  DenseSeries out = a;
  for (const auto& [e, c] : b) out[e] = (((out[e] + sign * c) % p) + p) % p;
  return out;
}

/// Drops zeros and everything at or past prec.
inline DenseSeries dense_cut(const DenseSeries& a, const Value& prec) {
  DenseSeries out;
  for (const auto& [e, c] : a)
    if (c != 0 && (prec.is_infinite() || Value(e) < prec)) out[e] = c;
  return out;
}

/// Exact value of an exact e = 1 p-adic element as an integer modulo p^digits.
inline BigInt padic_to_int(const FieldElem& a, std::int64_t p, std::int64_t digits) {
  BigInt acc = 0, pw = 1;
  BigInt mod = 1;
  for (std::int64_t i = 0; i < digits; ++i) mod *= p;
  std::int64_t pos = 0;
  for (const auto& t : a.terms()) {
    const auto idx = static_cast<std::int64_t>(boost::multiprecision::numerator(t.exp));
    while (pos < idx) {
      pw *= p;
      ++pos;
    }
    acc += pw * BigInt(t.coeff.code());
  }
  return acc % mod;
}

inline Value vlb(const FieldElem& a) {
  if (a.is_exact_zero()) return Value::infinity();
  return a.valuation_lower_bound();
}

}  // namespace testutil
