// Attractor and fixed-point ideals of affine schemes with a monoid action,
// together with the unit, limit and section maps between the quotients.
#pragma once

#include <optional>
#include <vector>

#include "bbd/coaction.hpp"
#include "bbd/grading.hpp"
#include "bbd/ideal.hpp"

namespace bbd {

/// Algebra map k[x]/source -> k[y]/target given by the images of the source
/// variables (normal forms modulo target).
struct AlgebraMap {
  Ideal source;
  Ideal target;
  std::vector<MultiPoly> images;

  MultiPoly apply(const MultiPoly& f) const;
  /// True iff every generator of `source` maps to zero.
  bool well_defined() const;
};

/// The map "first, then second".
AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& second);
/// Same images after normal form, over equal source ideals.
bool same_map(const AlgebraMap& a, const AlgebraMap& b);
AlgebraMap identity_map(const Ideal& ideal);

struct BBOptions {
  std::optional<unsigned> degree_bound;
  unsigned saturation_cap = 32;
};

/// Maximum generator degree of the ideal plus two.
unsigned default_degree_bound(const Ideal& ideal);

/// Ideal of the fixed locus: the defining ideal plus every variable of
/// positive weight for a rank-one (Kempf) grading. Throws PreconditionError
/// when a variable of negative weight survives in the quotient.
Ideal fixed_ideal(const GradedAlgebra& kempf_graded);

/// Defining ideal plus every weight piece whose weight lies outside S, found
/// from normal forms of monomials up to the degree bound and iterated until
/// nothing new appears.
Ideal attractor_ideal_torus(const GradedAlgebra& alg, const WeightMonoid& s,
                            std::optional<unsigned> degree_bound = std::nullopt);

/// G-saturation of the torus attractor for the maximal torus of the monoid.
Ideal attractor_ideal_reductive(const GradedAlgebra& alg, const GroupPresentation& group,
                                const MonoidPresentation& monoid, const BBOptions& options = {});

/// Attractor ideal obtained from the universal monoid quotient of the
/// polynomials of degree <= degree: the defining ideal plus the kernel of
/// k[x]_{<=d} onto its universal quotient.
Ideal attractor_ideal_general(const GradedAlgebra& alg, const GroupPresentation& group,
                              const MonoidPresentation& monoid, unsigned degree);

struct BBVerification {
  bool fixed_contains_attractor = false;
  bool attractor_g_stable = false;
  bool attractor_gbar_stable = false;
  bool fixed_action_trivial = false;
  bool section_identity = false;
  bool limit_map_well_defined = false;
  bool unit_map_well_defined = false;

  bool all() const {
    return fixed_contains_attractor && attractor_g_stable && attractor_gbar_stable && fixed_action_trivial &&
           section_identity && limit_map_well_defined && unit_map_well_defined;
  }
};

struct BBResult {
  Ideal attractor;
  Ideal fixed;
  /// A -> A/attractor.
  AlgebraMap unit_map;
  /// A/fixed -> A/attractor, onto the Kempf-degree-0 part.
  AlgebraMap limit_map;
  /// A/attractor -> A/fixed.
  AlgebraMap section_map;
  KempfOnePSG kempf;
  /// Kempf weight of each variable.
  std::vector<std::int64_t> kempf_weights;
  unsigned degree_bound = 0;
  BBVerification verification;
};

/// Kempf weights of the variables of alg for a central cocharacter.
std::vector<std::int64_t> kempf_weights(const GradedAlgebra& alg, const MonoidPresentation& monoid,
                                        const KempfOnePSG& kempf);

/// True iff the coaction is the identity substitution on k[x]/ideal.
bool action_trivial_on(const Ideal& ideal, const GroupPresentation& group);

/// Both ideals, the three maps and the verification block. Throws
/// InvariantError when the fixed ideal does not contain the attractor ideal.
BBResult assemble_bb(const GradedAlgebra& alg, const GroupPresentation& group, const MonoidPresentation& monoid,
                     const KempfOnePSG& kempf, const BBOptions& options = {});

}  // namespace bbd
