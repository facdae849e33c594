#pragma once

// Residue fields Kv: finite fields F_{p^k} (as F_p[u]/(m(u)) with m the
// lexicographically smallest monic irreducible) and the rationals Q.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valrv/value.hpp"

namespace valrv {

class ResidueElem;
class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

/// Largest supported finite field; everything here is brute force.
inline constexpr std::uint32_t kMaxResidueFieldSize = 1u << 20;

class ResidueField : public std::enable_shared_from_this<ResidueField> {
  struct Token {};

 public:
  static ResidueFieldPtr finite(std::int64_t p, int k = 1);
  static ResidueFieldPtr rationals();

  ResidueField(Token, std::int64_t p, int k);
  explicit ResidueField(Token);

  bool is_finite() const noexcept { return p_ != 0; }
  /// p for F_{p^k}, 0 for Q.
  std::int64_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Coefficients c_0..c_{k-1}, 1 of the defining modulus.
  const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

  ResidueElem zero() const;
  ResidueElem one() const;
  /// The class of u in F_p[u]/(m). Only meaningful for k > 1.
  ResidueElem generator() const;
  ResidueElem from_integer(const BigInt& n) const;
  /// For F_q the denominator must be prime to p.
  ResidueElem from_rational(const Rational& q) const;
  ResidueElem from_code(std::uint32_t code) const;
  /// Polynomial coefficients in u, constant first; reduced mod p.
  ResidueElem from_digits(const std::vector<std::int64_t>& digits) const;
  /// Every element in code order (F_q only).
  std::vector<ResidueElem> elements() const;

  std::string name() const;
  bool same_as(const ResidueField& other) const noexcept;

  // Code-level arithmetic for F_q. Codes are Σ c_i p^i for c_0 + c_1 u + ...
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  /// Multiplicative order of a nonzero code's log, used for root extraction.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::uint32_t i) const { return exp_[i % (q_ - 1)]; }

 private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

  std::int64_t p_ = 0;
  int k_ = 1;
  std::uint32_t q_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

class ResidueElem {
 public:
  ResidueElem() = default;
  ResidueElem(ResidueFieldPtr field, std::uint32_t code);
  ResidueElem(ResidueFieldPtr field, Rational q);

  const ResidueFieldPtr& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t code() const noexcept { return code_; }
  const Rational& rational() const noexcept { return rat_; }
  /// Coefficients in u, constant first (F_q only).
  std::vector<std::int64_t> digits() const;

  ResidueElem inverse() const;
  ResidueElem pow(std::int64_t e) const;

  /// "2*u+1", "u^2+2", "3/4"...
  std::string to_string() const;

  friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator-(const ResidueElem& a);
  friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b);
  friend ResidueElem operator/(const ResidueElem& a, const ResidueElem& b);
  friend bool operator==(const ResidueElem& a, const ResidueElem& b);
  /// Canonical order: by code for F_q, numeric for Q.
  friend std::strong_ordering operator<=>(const ResidueElem& a, const ResidueElem& b);

 private:
  ResidueFieldPtr field_;
  std::uint32_t code_ = 0;
  Rational rat_{0};
};

/// Dense univariate polynomial over a residue field, constant term first.
class ResPoly {
 public:
  ResPoly() = default;
  ResPoly(ResidueFieldPtr field, std::vector<ResidueElem> coeffs);
  static ResPoly from_ints(const ResidueFieldPtr& field, const std::vector<std::int64_t>& coeffs);

  const ResidueFieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<ResidueElem>& coeffs() const noexcept { return coeffs_; }
  ResidueElem coeff(int i) const;
  ResidueElem leading() const;

  ResidueElem operator()(const ResidueElem& x) const;
  ResPoly derivative() const;
  ResPoly monic() const;

  std::string to_string(std::string_view var = "X") const;

  friend ResPoly operator+(const ResPoly& a, const ResPoly& b);
  friend ResPoly operator-(const ResPoly& a, const ResPoly& b);
  friend ResPoly operator*(const ResPoly& a, const ResPoly& b);
  friend bool operator==(const ResPoly& a, const ResPoly& b);

 private:
  void trim();

  ResidueFieldPtr field_;
  std::vector<ResidueElem> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<ResPoly, ResPoly> divmod(const ResPoly& a, const ResPoly& b);
/// Monic gcd (zero if both are zero).
ResPoly gcd(ResPoly a, ResPoly b);

/// The unique b with b^p = a in F_q; in Q the rational p-th root if any.
/// For F_q, p may be left 0 (the characteristic is used).
std::optional<ResidueElem> frobenius_inverse(const ResidueElem& a, std::int64_t p = 0);

struct ResidueRoot {
  ResidueElem root;
  int multiplicity = 1;
};

/// Complete list of roots in the residue field. F_q: exhaustive evaluation.
/// Q: rational root theorem (UnsupportedError when the cleared coefficients
/// are too large to factor by trial division).
std::vector<ResidueRoot> poly_roots(const ResPoly& f);

/// All x with x^p - x = c (empty or exactly p elements). F_q only.
std::vector<ResidueElem> artin_schreier_solve_res(const ResidueElem& c);

/// All b with b^n = a, a ≠ 0.
std::vector<ResidueElem> nth_roots_res(const ResidueElem& a, std::int64_t n);

/// Exhaustive trial division over F_q; UnsupportedError past degree_bound.
bool is_irreducible(const ResPoly& f, int degree_bound = 6);

/// gcd(f, f') is constant.
bool is_separable(const ResPoly& f);

/// Field embedding F_{p^k} -> F_{p^m} (k | m) sending u to the smallest root
/// of the source modulus in the target; Q -> Q is the identity.
class ResidueEmbedding {
 public:
  ResidueEmbedding(ResidueFieldPtr from, ResidueFieldPtr to);

  const ResidueFieldPtr& source() const noexcept { return from_; }
  const ResidueFieldPtr& target() const noexcept { return to_; }
  ResidueElem operator()(const ResidueElem& a) const;

 private:
  ResidueFieldPtr from_;
  ResidueFieldPtr to_;
  std::vector<ResidueElem> generator_powers_;
};

/// Integer n-th root when x is a perfect n-th power (x >= 0).
std::optional<BigInt> exact_integer_root(const BigInt& x, std::int64_t n);

}  // namespace valrv
