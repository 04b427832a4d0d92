// Split torus actions as integer weights on ring variables: weight
// decompositions, isotypic pieces of graded quotients and membership in
// finitely generated weight monoids.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bbd/ideal.hpp"
#include "bbd/linalg.hpp"
#include "bbd/poly.hpp"

namespace bbd {

/// A character of G_m^r, identified with Z^r.
using WeightVector = std::vector<std::int64_t>;
using CharacterSet = std::set<WeightVector>;

WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector scale(const WeightVector& a, std::int64_t k);
std::int64_t pairing(const WeightVector& a, const WeightVector& b);
bool is_zero(const WeightVector& w);
std::string format_weight(const WeightVector& w);

class TorusAction {
 public:
  TorusAction() = default;
  TorusAction(std::size_t rank, std::vector<WeightVector> variable_weights);

  static TorusAction trivial(std::size_t nvars, std::size_t rank = 1);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return weights_.size(); }
  const WeightVector& weight(std::size_t var) const { return weights_.at(var); }
  const std::vector<WeightVector>& weights() const { return weights_; }

  /// Rank-one grading obtained by pairing every weight with a cocharacter.
  std::vector<std::int64_t> paired_with(const WeightVector& cochar) const;

  friend bool operator==(const TorusAction&, const TorusAction&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<WeightVector> weights_;
};

/// Weight of a monomial; throws PreconditionError on a length mismatch.
WeightVector weight_of(const Monomial& m, const TorusAction& action);

/// Weight pieces of f; they sum to f and none is zero.
std::map<WeightVector, MultiPoly> homogeneous_components(const MultiPoly& f, const TorusAction& action);
bool is_homogeneous(const MultiPoly& f, const TorusAction& action);

/// A quotient k[x]/I together with a torus action for which I is homogeneous.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  /// Throws PreconditionError when a generator of the ideal is not
  /// weight-homogeneous or the weight list does not match the ring.
  GradedAlgebra(Ideal defining, TorusAction action);

  const RingPtr& ring() const { return ideal_.ring(); }
  const Ideal& defining_ideal() const { return ideal_; }
  const TorusAction& action() const { return action_; }

 private:
  Ideal ideal_;
  TorusAction action_;
};

/// Submonoid of Z^r generated by finitely many weights (0 is implicit).
class WeightMonoid {
 public:
  WeightMonoid() = default;
  WeightMonoid(std::size_t rank, std::vector<WeightVector> generators);

  /// The monoid N^r.
  static WeightMonoid positive_orthant(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<WeightVector>& generators() const { return gens_; }
  bool contains(const WeightVector& chi) const;

 private:
  struct Analysis;
  std::size_t rank_ = 0;
  std::vector<WeightVector> gens_;
  std::shared_ptr<const Analysis> analysis_;
};

bool monoid_membership(const WeightVector& chi, const WeightMonoid& monoid);

/// Rational functional that vanishes on the lineality space of the cone
/// spanned by `generators` and is strictly positive on every generator
/// outside it. `in_lineality[i]` reports whether generator i lies in that
/// space. Zero generators count as lineality generators.
struct ConeSplit {
  std::vector<bool> in_lineality;
  Vector functional;
};
ConeSplit split_cone(std::size_t rank, const std::vector<WeightVector>& generators);

/// Primitive integer vector pairing strictly positively with every weight,
/// or nothing when the weights do not lie in an open half-space.
std::optional<WeightVector> strictly_positive_functional(std::size_t rank,
                                                         const std::vector<WeightVector>& weights);

/// Monomials of total degree <= degree_bound, ascending by degree.
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned degree_bound);

struct IsotypicComponent {
  CharacterSet characters;
  unsigned degree_bound = 0;
  /// Monomials indexing the coordinates of `span`, descending in ring order.
  std::vector<Monomial> coordinates;
  LinearSubspace span;
  /// Normal-form representatives, one per basis row of `span`.
  std::vector<MultiPoly> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Span in A of the elements of weight in `chi` and total degree at most
/// `degree_bound`, computed from normal forms of the weight-chi monomials.
IsotypicComponent isotypic_component(const GradedAlgebra& alg, const CharacterSet& chi,
                                     unsigned degree_bound);

}  // namespace bbd
