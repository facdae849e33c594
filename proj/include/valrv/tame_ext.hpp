#pragma once

// Normal form of a finite tame extension L = K(c, d_1, ..., d_r):
//   f(c) = 0 with f monic over O_K and f̄ irreducible, separable;
//   b_i d_i^(n_i) = h_i(c) with gcd(n_i, p) = 1.
// L is represented by a larger concrete model F, and embeddings L -> F are
// computed from RV-compatible residue/value targets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valrv/newton.hpp"
#include "valrv/rv.hpp"

namespace valrv {

struct TameGenerator {
  std::int64_t n = 1;
  FieldElem b;
  Poly h;
};

struct TameExtensionData {
  Poly f;
  std::vector<TameGenerator> gens;

  const FieldSpec& spec() const { return f.spec(); }
};

struct RootAdmissibility {
  ResidueElem x;
  bool admissible = true;
  std::vector<std::string> problems;
};

struct ValidationReport {
  /// All invariants of the data hold and the data is compatible with F.
  bool valid = true;
  bool monic_integral = true;
  bool irreducible = true;
  bool separable = true;
  bool prime_to_p = true;
  std::vector<std::string> diagnostics;
  /// One entry per root of f̄ in Fv, in canonical order.
  std::vector<RootAdmissibility> roots;
};

ValidationReport validate(const TameExtensionData& data, const FieldSpec& F);

/// x = image of c̄ in Fv, y_i = image of rv(d_i) in RV_F.
struct EmbeddingTarget {
  ResidueElem x;
  std::vector<RvElem> y;

  std::string to_string() const;
};

std::vector<EmbeddingTarget> enumerate_targets(const TameExtensionData& data, const FieldSpec& F);

struct EmbeddingResult {
  FieldElem z;
  std::vector<FieldElem> t;
  Value achieved;
  /// v f(z).
  Value f_residual;
  /// v(b_i t_i^(n_i) - h_i(z)).
  std::vector<Value> gen_residuals;
};

/// DomainError for a target outside enumerate_targets; InsufficientPrecision
/// when a residual stays below target_prec.
EmbeddingResult embed(const TameExtensionData& data, const FieldSpec& F, const EmbeddingTarget& target,
                      const Value& target_prec);

/// rv(a) = Π rv(t_i)^(m_i) · rv(t^d_value) · ι(residue_part).
struct RvDecomposition {
  std::vector<std::int64_t> m;
  Value d_value;
  ResidueElem residue_part;
};

/// Picks the lexicographically least m with 0 <= m_i < n_i; none when v(a)
/// lies outside vK + Σ Z v(t_i) or a is exactly zero.
std::optional<RvDecomposition> decompose_rv(const FieldElem& a, const TameExtensionData& data,
                                            const EmbeddingResult& basis);

/// Rebuilds rv(a) from a decomposition.
RvElem recombine_rv(const RvDecomposition& d, const EmbeddingResult& basis);

/// Coefficient-wise image of a polynomial over K in the model F.
Poly map_poly(const Poly& f, const FieldSpec& F, const ResidueEmbedding& emb);

}  // namespace valrv
