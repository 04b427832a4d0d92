#include "bbd/bb.hpp"

#include <algorithm>

#include "bbd/error.hpp"

namespace bbd {

MultiPoly AlgebraMap::apply(const MultiPoly& f) const {
  require_same_ring(f.ring(), source.ring(), "algebra map");
  return target.reduce(f.substitute(images, target.ring()));
}

bool AlgebraMap::well_defined() const {
  return std::all_of(source.generators().begin(), source.generators().end(),
                     [&](const MultiPoly& g) { return apply(g).is_zero(); });
}

AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& second) {
  AlgebraMap out{first.source, second.target, {}};
  for (const auto& img : first.images) out.images.push_back(second.apply(img.in_ring(second.source.ring())));
  return out;
}

bool same_map(const AlgebraMap& a, const AlgebraMap& b) {
  if (a.images.size() != b.images.size()) return false;
  for (std::size_t i = 0; i < a.images.size(); ++i)
    if (a.target.reduce(a.images[i]) != a.target.reduce(b.images[i].in_ring(a.target.ring()))) return false;
  return true;
}

AlgebraMap identity_map(const Ideal& ideal) {
  AlgebraMap out{ideal, ideal, {}};
  for (std::size_t i = 0; i < ideal.ring()->size(); ++i)
    out.images.push_back(ideal.reduce(MultiPoly::variable(ideal.ring(), i)));
  return out;
}

unsigned default_degree_bound(const Ideal& ideal) {
  unsigned d = 0;
  for (const auto& g : ideal.generators()) d = std::max<unsigned>(d, g.total_degree());
  return d + 2;
}

Ideal fixed_ideal(const GradedAlgebra& kempf_graded) {
  const auto& action = kempf_graded.action();
  if (action.rank() != 1) throw PreconditionError("fixed ideal needs a rank-one Kempf grading");
  const Ideal& j = kempf_graded.defining_ideal();
  const RingPtr& ring = j.ring();
  std::vector<MultiPoly> extra;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    const std::int64_t w = action.weight(i)[0];
    MultiPoly x = MultiPoly::variable(ring, i);
    if (w > 0) extra.push_back(x);
    if (w < 0 && !j.contains(x))
      throw PreconditionError("variable " + ring->variables()[i] + " has Kempf weight " + std::to_string(w) +
                              "; the one-parameter subgroup is not Kempf for this presentation");
  }
  return Ideal(ring, j.groebner()).with(extra);
}

Ideal attractor_ideal_torus(const GradedAlgebra& alg, const WeightMonoid& s, std::optional<unsigned> degree_bound) {
  if (s.rank() != alg.action().rank()) throw PreconditionError("weight monoid rank differs from torus rank");
  const RingPtr& ring = alg.ring();
  const unsigned bound = degree_bound.value_or(default_degree_bound(alg.defining_ideal()));
  const auto monomials = monomials_up_to_degree(ring->size(), bound);
  Ideal current = alg.defining_ideal();
  for (;;) {
    std::vector<MultiPoly> fresh;
    for (const auto& m : monomials) {
      MultiPoly nf = current.reduce(MultiPoly::monomial(ring, m));
      if (nf.is_zero()) continue;
      for (auto& [w, piece] : homogeneous_components(nf, alg.action()))
        if (!s.contains(w)) fresh.push_back(std::move(piece));
    }
    if (fresh.empty()) return Ideal(ring, current.groebner());
    current = current.with(fresh);
  }
}

Ideal attractor_ideal_reductive(const GradedAlgebra& alg, const GroupPresentation& group,
                                const MonoidPresentation& monoid, const BBOptions& options) {
  Ideal torus = attractor_ideal_torus(alg, monoid.tbar, options.degree_bound);
  return g_saturate(torus, group, options.saturation_cap);
}

Ideal attractor_ideal_general(const GradedAlgebra& alg, const GroupPresentation& group,
                              const MonoidPresentation& monoid, unsigned degree) {
  const RingPtr& ring = alg.ring();
  Coaction c(group, ring);
  const auto basis = monomials_up_to_degree(ring->size(), degree);
  std::map<Monomial, std::size_t> index;
  for (std::size_t a = 0; a < basis.size(); ++a) index.emplace(basis[a], a);
  // act(m_a) = sum_b M[a][b] m_b; the dual coaction matrix is the transpose.
  const std::size_t n = basis.size();
  PolyMatrix rho(n, std::vector<MultiPoly>(n, MultiPoly(group.ring)));
  for (std::size_t a = 0; a < n; ++a)
    for (auto& [m, p] : c.split_by_space(c.act(MultiPoly::monomial(ring, basis[a]))))
      rho[index.at(m)][a] = std::move(p);
  UniversalQuotient uq = universal_quotient(rho, monoid);
  std::vector<MultiPoly> k;
  for (const auto& row : uq.kernel.basis()) {
    std::vector<Term> terms;
    for (std::size_t a = 0; a < n; ++a)
      if (row[a] != 0) terms.push_back({basis[a], row[a]});
    k.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  Ideal out = alg.defining_ideal().with(k);
  return Ideal(ring, out.groebner());
}

std::vector<std::int64_t> kempf_weights(const GradedAlgebra& alg, const MonoidPresentation& monoid,
                                        const KempfOnePSG& kempf) {
  WeightVector lam = cochar_in_maximal(monoid, kempf);
  if (lam.size() != alg.action().rank())
    throw PreconditionError("maximal torus rank of the monoid differs from the weight data of the algebra");
  return alg.action().paired_with(lam);
}

bool action_trivial_on(const Ideal& ideal, const GroupPresentation& group) {
  Coaction c(group, ideal.ring());
  std::vector<MultiPoly> gens;
  for (const auto& r : group.relations.generators()) gens.push_back(c.lift_group(r));
  for (const auto& g : ideal.generators()) gens.push_back(c.lift_space(g));
  Ideal both(c.product_ring(), std::move(gens));
  for (std::size_t j = 0; j < ideal.ring()->size(); ++j) {
    MultiPoly x = MultiPoly::variable(ideal.ring(), j);
    if (!both.contains(c.coact(x) - c.lift_space(x))) return false;
  }
  return true;
}

BBResult assemble_bb(const GradedAlgebra& alg, const GroupPresentation& group, const MonoidPresentation& monoid,
                     const KempfOnePSG& kempf, const BBOptions& options) {
  BBResult out;
  const RingPtr& ring = alg.ring();
  out.kempf = kempf;
  out.kempf_weights = kempf_weights(alg, monoid, kempf);
  out.degree_bound = options.degree_bound.value_or(default_degree_bound(alg.defining_ideal()));
  BBOptions opts = options;
  opts.degree_bound = out.degree_bound;
  out.attractor = attractor_ideal_reductive(alg, group, monoid, opts);

  std::vector<WeightVector> kw;
  for (auto w : out.kempf_weights) kw.push_back({w});
  const TorusAction kempf_grading(1, kw);
  out.fixed = Ideal(ring, fixed_ideal(GradedAlgebra(out.attractor, kempf_grading)).groebner());

  auto& v = out.verification;
  v.fixed_contains_attractor = out.fixed.contains(out.attractor);
  if (!v.fixed_contains_attractor)
    throw InvariantError("fixed-point ideal does not contain the attractor ideal");

  const Ideal& defining = alg.defining_ideal();
  out.unit_map = {defining, out.attractor, {}};
  out.limit_map = {out.fixed, out.attractor, {}};
  out.section_map = {out.attractor, out.fixed, {}};
  for (std::size_t j = 0; j < ring->size(); ++j) {
    MultiPoly x = MultiPoly::variable(ring, j);
    MultiPoly nf = out.attractor.reduce(x);
    out.unit_map.images.push_back(nf);
    auto parts = homogeneous_components(nf, kempf_grading);
    auto zero = parts.find(WeightVector{0});
    out.limit_map.images.push_back(zero == parts.end() ? MultiPoly(ring) : zero->second);
    out.section_map.images.push_back(out.fixed.reduce(x));
  }

  v.attractor_g_stable = is_g_stable(out.attractor, group);
  v.attractor_gbar_stable = v.attractor_g_stable && is_gbar_stable(out.attractor, monoid);
  v.fixed_action_trivial = action_trivial_on(out.fixed, group);
  v.limit_map_well_defined = out.limit_map.well_defined();
  v.unit_map_well_defined = out.unit_map.well_defined() && out.section_map.well_defined();
  v.section_identity = same_map(compose(out.limit_map, out.section_map), identity_map(out.fixed));
  return out;
}

}  // namespace bbd
