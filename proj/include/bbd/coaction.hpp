// Linear algebraic groups and monoids given by coordinate-ring presentations,
// their coactions on polynomial rings, G-saturation of ideals, the universal
// monoid-quotient tower and the search for Kempf one-parameter subgroups.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbd/grading.hpp"
#include "bbd/ideal.hpp"
#include "bbd/linalg.hpp"
#include "bbd/poly.hpp"

namespace bbd {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// O(G) = k[group vars]/relations acting linearly on k^n. The point action is
/// action[j][i]: under g the coordinate x_j pulls back to sum_i action[j][i] x_i.
/// inverse_action holds the same matrix for g^{-1}.
struct GroupPresentation {
  std::string name;
  RingPtr ring;
  Ideal relations;
  PolyMatrix action;
  PolyMatrix inverse_action;
  /// Coordinates of the identity element.
  std::vector<Rational> identity;

  std::size_t dim() const { return action.size(); }
};

/// Monoid Gbar with unit group G: O(Gbar) is the subalgebra of O(G) spanned by
/// `generators`. The central torus Z acts on each generator with the weight
/// central.weight(i); `central_to_maximal` (rank T rows, rank Z columns) maps
/// cocharacters of Z to cocharacters of the maximal torus T, whose closure has
/// weight monoid `tbar`.
struct MonoidPresentation {
  GroupPresentation group;
  std::vector<MultiPoly> generators;
  /// Value of each generator at the zero element, when Gbar has one.
  std::optional<std::vector<Rational>> zero_point;
  TorusAction central;
  std::vector<WeightVector> central_to_maximal;
  WeightMonoid tbar;
};

struct KempfOnePSG {
  WeightVector cochar;  // in central-torus coordinates
};

/// Throws InvariantError unless relations are proper, the identity satisfies
/// them, both matrices are square of equal size, action(e) = 1 and
/// inverse_action * action = 1 modulo the relations.
void validate_group(const GroupPresentation& group);
/// Group checks plus generator ring, central data shapes and the zero point.
void validate_monoid(const MonoidPresentation& monoid);

/// A group bound to the ring of the space it acts on. Products live in a ring
/// with the group variables first.
class Coaction {
 public:
  Coaction(GroupPresentation group, RingPtr space);

  const GroupPresentation& group() const { return group_; }
  const RingPtr& space() const { return space_; }
  const RingPtr& product_ring() const { return product_; }

  /// f(g^{-1} x), reduced modulo the group relations.
  MultiPoly coact(const MultiPoly& f) const;
  /// f(g x), reduced modulo the group relations.
  MultiPoly act(const MultiPoly& f) const;

  MultiPoly lift_group(const MultiPoly& h) const { return h.in_ring(product_); }
  MultiPoly lift_space(const MultiPoly& f) const { return f.in_ring(product_); }
  /// Normal form modulo the relations extended to the product ring.
  MultiPoly reduce(const MultiPoly& F) const { return relations_.reduce(F); }

  /// F = sum over group monomials mu of mu * c_mu(x); returns mu -> c_mu.
  std::map<Monomial, MultiPoly> split_by_group(const MultiPoly& F) const;
  /// F = sum over space monomials m of p_m(g) * m; returns m -> p_m.
  std::map<Monomial, MultiPoly> split_by_space(const MultiPoly& F) const;
  /// Substitutes the identity element for the group variables.
  MultiPoly at_identity(const MultiPoly& F) const;

 private:
  MultiPoly substitute_linear(const MultiPoly& f, const PolyMatrix& m) const;

  GroupPresentation group_;
  RingPtr space_;
  RingPtr product_;
  Ideal relations_;
};

MultiPoly coact(const MultiPoly& f, const GroupPresentation& group);

/// Smallest G-stable ideal containing seed. Throws ResourceError after `cap`
/// rounds without reaching a fixed point.
Ideal g_saturate(const Ideal& seed, const GroupPresentation& group, unsigned cap = 32);
bool is_g_stable(const Ideal& ideal, const GroupPresentation& group);

/// True iff the action on k[x]/ideal extends to the monoid, i.e. every
/// coordinate pulls back into O(Gbar) (x) k[x]/ideal. Throws
/// PreconditionError when the ideal is not G-stable.
bool is_gbar_stable(const Ideal& ideal, const MonoidPresentation& monoid);

struct UniversalQuotient {
  /// U inside V^dual (coordinates of the dual basis).
  LinearSubspace u;
  /// ker(V -> W) = annihilator of U.
  LinearSubspace kernel;
  /// dim U_n for n = -1, 0, 1, ... until the tower stops.
  std::vector<std::size_t> tower_dims;

  std::size_t quotient_dim() const { return u.dim(); }
};

/// Tower for a representation V whose dual has coaction
/// xi_j -> sum_i rho[j][i] xi_i with rho over O(G). Throws InvariantError when
/// rho is not the identity at the identity element.
UniversalQuotient universal_quotient(const PolyMatrix& rho, const MonoidPresentation& monoid);
/// The same tower for the point action of the monoid's group on k^n.
UniversalQuotient universal_quotient(const MonoidPresentation& monoid);

/// Smallest-max-norm cocharacter of the central torus pairing positively with
/// every nonzero central weight (lexicographic tie-break), or nothing when no
/// such cocharacter exists. Throws InvariantError on empty weight data.
std::optional<KempfOnePSG> find_kempf_opsg(const MonoidPresentation& monoid);

/// Image of a central cocharacter in maximal-torus coordinates.
WeightVector cochar_in_maximal(const MonoidPresentation& monoid, const KempfOnePSG& kempf);

/// Every central-weight-0 monomial in the generators of degree <= bound is a
/// scalar modulo the relations.
bool center_invariants_trivial(const MonoidPresentation& monoid, unsigned degree_bound);

// Builders for standard presentations --------------------------------------

/// Split torus of the given rank acting diagonally with the given weights
/// (one row per coordinate). Variables t1..tr and t1_inv..tr_inv, or t and
/// t_inv in rank one.
GroupPresentation torus_group(std::size_t rank, const std::vector<WeightVector>& point_weights);
/// Torus closure with weight monoid generated by `monoid_gens`; O(Tbar) is
/// generated by the corresponding Laurent monomials. The zero point exists
/// exactly when the weight cone is pointed.
MonoidPresentation torus_monoid(const GroupPresentation& torus, std::size_t rank,
                                const std::vector<WeightVector>& monoid_gens);

enum class LinearRep { Standard, Dual, StandardPlusDual };

/// GL_n with variables g11..gnn and dinv, relation dinv*det - 1.
GroupPresentation general_linear_group(std::size_t n, LinearRep rep);
/// M_n inside O(GL_n) with the scalar central torus.
MonoidPresentation matrix_monoid(const GroupPresentation& gl, std::size_t n);

/// Invertible upper-triangular 2x2 matrices acting on k^2, with the monoid of
/// all upper-triangular matrices and the diagonal torus.
MonoidPresentation upper_triangular_monoid();

/// Determinant by cofactor expansion.
MultiPoly determinant(const PolyMatrix& m);

}  // namespace bbd
