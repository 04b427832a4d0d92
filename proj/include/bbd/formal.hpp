// Truncation towers A_n = A/I^{n+1} of a positively graded algebra and of
// graded modules over it, per-character dimension tables, stabilization
// checks and recovery of the isotypic pieces of A from the tower.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbd/grading.hpp"
#include "bbd/ideal.hpp"

namespace bbd {

struct TruncationOptions {
  /// Total-degree cap used when counting monomials that involve variables of
  /// Kempf weight zero (those pieces can be infinite dimensional).
  unsigned zero_weight_degree_cap = 8;
  /// Check ker(A_m -> A_n) = ker(A_m -> A_0)^{n+1} for m = depth.
  bool verify_adic_identity = true;
};

struct TruncatedAlgebra {
  GradedAlgebra base;
  /// Kempf cocharacter in the coordinates of the torus of `base`.
  WeightVector cochar;
  std::vector<std::int64_t> kempf_weights;
  /// Ideal of the fixed locus, I = J + (variables of positive Kempf weight).
  Ideal ideal_i;
  /// levels[n] = J + I^{n+1}, n = 0..depth.
  std::vector<Ideal> levels;
  unsigned depth = 0;
  TruncationOptions options;

  /// Kempf pairing of a character.
  std::int64_t stabilization_index(const WeightVector& chi) const;
};

/// Throws PreconditionError when a variable of negative Kempf weight is not
/// zero in A, and InvariantError when the adic kernel identity fails.
TruncatedAlgebra truncate(const GradedAlgebra& alg, const WeightVector& cochar, unsigned depth,
                          const TruncationOptions& options = {});

/// dim A_n[chi] for n = 0..depth.
std::vector<std::size_t> isotypic_dims(const TruncatedAlgebra& trunc, const WeightVector& chi);

/// Finitely presented graded module: generator e_i has torus weight
/// generator_weights[i]; each relation lists one coefficient per generator.
struct ModulePresentation {
  std::vector<WeightVector> generator_weights;
  std::vector<std::vector<MultiPoly>> relations;
};

/// The tower M_n = M / I^{n+1} M, encoded in k[x, e_1..e_s] modulo the
/// products e_i e_j so that M_n is the part linear in e.
struct AdicModule {
  TruncatedAlgebra algebra;
  ModulePresentation presentation;
  RingPtr ring;
  TorusAction weights;
  std::vector<std::int64_t> kempf_weights;
  std::vector<Ideal> levels;
  /// Minimal Kempf weight of a generator that is nonzero in M_0 (0 when M_0 = 0).
  std::int64_t minimal_weight = 0;

  std::size_t rank() const { return presentation.generator_weights.size(); }
  /// Generator e_i in `ring`.
  MultiPoly generator(std::size_t i) const;
  /// Element sum_i coeffs[i] e_i of M.
  MultiPoly element(const std::vector<MultiPoly>& coeffs) const;
  /// n_chi + |m|.
  std::int64_t stabilization_index(const WeightVector& chi) const;
};

/// Throws PreconditionError on shape mismatches or
/// inhomogeneous relations.
AdicModule truncate_module(const TruncatedAlgebra& trunc, ModulePresentation presentation);

std::vector<std::size_t> isotypic_dims(const AdicModule& module, const WeightVector& chi);

enum class StabilizationStatus { Confirmed, Inconclusive, Violated };
std::string to_string(StabilizationStatus s);

struct StabilizationRow {
  WeightVector chi;
  std::int64_t predicted = 0;
  /// Smallest n0 with dims[n] = dims[n-1] for all n0 < n <= depth.
  unsigned observed = 0;
  std::vector<std::size_t> dims;
  StabilizationStatus status = StabilizationStatus::Inconclusive;

  /// The onset meets the bound exactly.
  bool attained() const { return status == StabilizationStatus::Confirmed && observed == std::max<std::int64_t>(predicted, 0); }
};

struct StabilizationReport {
  unsigned depth = 0;
  std::vector<StabilizationRow> rows;

  bool has_violation() const;
};

/// First level from which a dimension sequence is constant.
unsigned stabilization_onset(const std::vector<std::size_t>& dims);

/// Throws InvariantError when some onset exceeds its bound; characters whose
/// bound is not below the depth are reported as inconclusive.
StabilizationReport check_stabilization(const TruncatedAlgebra& trunc, const CharacterSet& chars);
StabilizationReport check_stabilization(const AdicModule& module, const CharacterSet& chars);

struct AlgebraizedPiece {
  WeightVector chi;
  /// Level the basis was read from (n_chi + 1, at least 1).
  unsigned level = 0;
  std::vector<MultiPoly> basis;
};

/// Basis of A[chi] read from A_{n_chi+1}[chi]. Throws PreconditionError when
/// the depth is below n_chi + 1.
std::vector<AlgebraizedPiece> algebraize(const TruncatedAlgebra& trunc, const CharacterSet& chars);

/// Dimension of A[chi] computed directly from the graded algebra (monomials
/// of weight chi, capped as in the truncation options).
std::size_t direct_isotypic_dim(const TruncatedAlgebra& trunc, const WeightVector& chi);

/// Whether the submodule generated by `lifted` fills M[chi] at level
/// n_{chi,M} + 1 for every chi in `chars`. Throws PreconditionError when the
/// elements do not generate M_0.
bool check_generation(const AdicModule& module, const std::vector<MultiPoly>& lifted, const CharacterSet& chars);

/// Generators weight + i * step for i = 0, 1, ... (only i = 0 unless infinite).
struct GeneratorFamily {
  WeightVector weight;
  WeightVector step;
  bool infinite = false;
};

struct Groundedness {
  bool grounded = false;
  std::string diagnostic;
  /// Minimal Kempf weight over the generators, when grounded.
  std::optional<std::int64_t> minimal_weight;
};

/// A module is grounded when M_0 involves finitely many characters; a family
/// with a nonzero step produces infinitely many and is rejected with a
/// diagnostic naming the direction in which its Kempf weights run off.
Groundedness classify_groundedness(const std::vector<GeneratorFamily>& families, const WeightVector& cochar);

}  // namespace bbd
