// Ideals with lazily cached reduced Groebner bases, and the operations built
// on them: membership, equality, elimination and subalgebra membership.
#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bbd/poly.hpp"

namespace bbd {

class Ideal {
 public:
  Ideal() = default;
  /// Throws PreconditionError when a generator lives in another ring.
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {MultiPoly::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

  bool has_groebner() const;
  /// Reduced Groebner basis under the ring's order; computed once and shared
  /// by all copies of this value.
  const std::vector<MultiPoly>& groebner() const;

  MultiPoly reduce(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;

  /// The ideal with extra generators (same ring).
  Ideal with(const std::vector<MultiPoly>& more) const;
  /// The ideal moved into a ring with the same variable names (any order).
  Ideal in_ring(const RingPtr& target) const;

 private:
  struct Cache {
    std::once_flag once;
    std::atomic<bool> ready{false};
    std::vector<MultiPoly> basis;
  };

  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Reduced Groebner basis of the ideal under `order`; the result lives in a
/// copy of the ring carrying that order and has its basis cached.
Ideal buchberger(const Ideal& ideal, const MonomialOrder& order);

/// Reduced Groebner basis of an explicit generator list in the generators'
/// ring; 0 generators are dropped. Used by Ideal; exposed for tests.
std::vector<MultiPoly> reduced_groebner_basis(const RingPtr& ring, std::vector<MultiPoly> gens);

/// Full reduction of f by a Groebner basis (any basis works for the
/// division; uniqueness needs a Groebner basis).
MultiPoly reduce_by(const MultiPoly& f, const std::vector<MultiPoly>& basis);

/// Strict form: throws PreconditionError if no basis is cached yet.
MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal);

bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned e);

/// ideal intersected with the subring on the variables not in drop_vars,
/// returned as an ideal of the original ring.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop_vars);

/// Decides membership in the subalgebra k[h_1..h_k] of R/relations via tag
/// variables: the ideal relations + (T_i - h_i) is eliminated with the
/// original variables in the first block.
class SubalgebraMembership {
 public:
  SubalgebraMembership(const Ideal& relations, std::vector<MultiPoly> subalg_gens);

  /// Polynomial in the tag variables evaluating to f modulo relations, or
  /// nothing when f lies outside the subalgebra.
  std::optional<MultiPoly> express(const MultiPoly& f) const;
  bool contains(const MultiPoly& f) const { return express(f).has_value(); }

  /// Normal form of f (from the base ring) in the tagged ring.
  MultiPoly tagged_normal_form(const MultiPoly& f) const;
  /// Variable indices >= base_size of the tagged ring are tags.
  std::size_t base_size() const { return base_->size(); }

  const RingPtr& tag_ring() const { return tag_ring_; }
  const RingPtr& tagged_ring() const { return tagged_ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

 private:
  RingPtr base_;
  RingPtr tagged_ring_;
  RingPtr tag_ring_;
  std::vector<MultiPoly> gens_;
  Ideal tagged_;
};

std::optional<MultiPoly> subalgebra_membership(const MultiPoly& f, const Ideal& relations,
                                               const std::vector<MultiPoly>& subalg_gens);

}  // namespace bbd
