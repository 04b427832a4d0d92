#include "bbd/coaction.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "bbd/error.hpp"

namespace bbd {

namespace {

bool is_identity_matrix(const PolyMatrix& m) {
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m[j].size(); ++i) {
      const MultiPoly& e = m[j][i];
      if (i == j ? !(e.is_constant() && e.constant_value() == 1) : !e.is_zero()) return false;
    }
  return true;
}

PolyMatrix reduce_matrix(const PolyMatrix& m, const Ideal& relations) {
  PolyMatrix out = m;
  for (auto& row : out)
    for (auto& e : row) e = relations.reduce(e);
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  PolyMatrix out(a.size(), std::vector<MultiPoly>(b.empty() ? 0 : b[0].size(), MultiPoly(ring)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < out[r].size(); ++c)
      for (std::size_t k = 0; k < b.size(); ++k) out[r][c] += a[r][k] * b[k][c];
  return out;
}

PolyMatrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point, const RingPtr& ring) {
  PolyMatrix out = m;
  for (auto& row : out)
    for (auto& e : row) e = MultiPoly::constant(ring, e.evaluate(point));
  return out;
}

MultiPoly laurent_monomial(const RingPtr& ring, std::size_t rank, const WeightVector& w) {
  Monomial m(ring->size());
  for (std::size_t k = 0; k < rank; ++k) {
    if (w[k] > 0) m.set(k, static_cast<Exponent>(w[k]));
    if (w[k] < 0) m.set(rank + k, static_cast<Exponent>(-w[k]));
  }
  return MultiPoly::monomial(ring, m);
}

}  // namespace

void validate_group(const GroupPresentation& group) {
  const std::string who = "group '" + group.name + "': ";
  if (!group.ring) throw InvariantError(who + "missing coordinate ring");
  require_same_ring(group.relations.ring(), group.ring, "group relations");
  if (group.relations.is_unit()) throw InvariantError(who + "relations generate the unit ideal");
  if (group.identity.size() != group.ring->size()) throw InvariantError(who + "identity has wrong length");
  for (const auto& r : group.relations.generators())
    if (r.evaluate(group.identity) != 0) throw InvariantError(who + "identity violates relation " + r.to_string());
  const std::size_t n = group.action.size();
  if (group.inverse_action.size() != n) throw InvariantError(who + "action matrices differ in size");
  for (const auto* m : {&group.action, &group.inverse_action})
    for (const auto& row : *m) {
      if (row.size() != n) throw InvariantError(who + "action matrix is not square");
      for (const auto& e : row) require_same_ring(e.ring(), group.ring, "action matrix");
    }
  if (!is_identity_matrix(evaluate_matrix(group.action, group.identity, group.ring)))
    throw InvariantError(who + "action is not the identity at the identity element");
  if (!is_identity_matrix(reduce_matrix(multiply(group.inverse_action, group.action, group.ring), group.relations)) ||
      !is_identity_matrix(reduce_matrix(multiply(group.action, group.inverse_action, group.ring), group.relations)))
    throw InvariantError(who + "inverse action is not inverse to the action modulo relations");
}

void validate_monoid(const MonoidPresentation& monoid) {
  validate_group(monoid.group);
  const std::string who = "monoid over '" + monoid.group.name + "': ";
  for (const auto& h : monoid.generators) require_same_ring(h.ring(), monoid.group.ring, "monoid generators");
  if (monoid.central.size() != monoid.generators.size())
    throw InvariantError(who + "need one central weight per monoid generator");
  for (const auto& row : monoid.central_to_maximal)
    if (row.size() != monoid.central.rank()) throw InvariantError(who + "central_to_maximal has wrong width");
  if (!monoid.central_to_maximal.empty() && monoid.central_to_maximal.size() != monoid.tbar.rank())
    throw InvariantError(who + "central_to_maximal height differs from the maximal torus rank");
  if (!monoid.zero_point) return;
  const auto& z = *monoid.zero_point;
  if (z.size() != monoid.generators.size()) throw InvariantError(who + "zero point has wrong length");
  auto kempf = find_kempf_opsg(monoid);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const bool moving = !is_zero(monoid.central.weight(i));
    if (moving && z[i] != 0)
      throw InvariantError(who + "zero point is not fixed by the central torus at generator " + std::to_string(i + 1));
    // The Kempf line at 0 sends weight-0 generators to their value at e.
    if (kempf && !moving && z[i] != monoid.generators[i].evaluate(monoid.group.identity))
      throw InvariantError(who + "zero point is not the limit of the Kempf line");
  }
}

// ---------------------------------------------------------------------------

Coaction::Coaction(GroupPresentation group, RingPtr space) : group_(std::move(group)), space_(std::move(space)) {
  if (group_.dim() != space_->size())
    throw PreconditionError("group '" + group_.name + "' acts on dimension " + std::to_string(group_.dim()) +
                            " but the ring has " + std::to_string(space_->size()) + " variables");
  std::vector<std::string> names = group_.ring->variables();
  for (const auto& v : space_->variables()) {
    if (group_.ring->index_of(v)) throw PreconditionError("variable '" + v + "' is used by both group and space");
    names.push_back(v);
  }
  product_ = Ring::make(names);
  std::vector<MultiPoly> rel;
  for (const auto& r : group_.relations.generators()) rel.push_back(r.in_ring(product_));
  relations_ = Ideal(product_, std::move(rel));
}

MultiPoly Coaction::substitute_linear(const MultiPoly& f, const PolyMatrix& m) const {
  require_same_ring(f.ring(), space_, "coaction");
  const std::size_t ng = group_.ring->size();
  std::vector<MultiPoly> images;
  images.reserve(space_->size());
  for (std::size_t j = 0; j < space_->size(); ++j) {
    MultiPoly img(product_);
    for (std::size_t i = 0; i < space_->size(); ++i) {
      if (m[j][i].is_zero()) continue;
      img += lift_group(m[j][i]) * MultiPoly::variable(product_, ng + i);
    }
    images.push_back(std::move(img));
  }
  return reduce(f.substitute(images, product_));
}

MultiPoly Coaction::coact(const MultiPoly& f) const { return substitute_linear(f, group_.inverse_action); }
MultiPoly Coaction::act(const MultiPoly& f) const { return substitute_linear(f, group_.action); }

std::map<Monomial, MultiPoly> Coaction::split_by_group(const MultiPoly& F) const {
  require_same_ring(F.ring(), product_, "coaction split");
  const std::size_t ng = group_.ring->size();
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& t : F.terms()) {
    Monomial g(ng), x(space_->size());
    for (std::size_t i = 0; i < ng; ++i) g.set(i, t.monomial[i]);
    for (std::size_t i = 0; i < space_->size(); ++i) x.set(i, t.monomial[ng + i]);
    parts[g].push_back({x, t.coeff});
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [g, terms] : parts) out.emplace(g, MultiPoly::from_terms(space_, std::move(terms)));
  return out;
}

std::map<Monomial, MultiPoly> Coaction::split_by_space(const MultiPoly& F) const {
  require_same_ring(F.ring(), product_, "coaction split");
  const std::size_t ng = group_.ring->size();
  std::map<Monomial, std::vector<Term>> parts;
  for (const auto& t : F.terms()) {
    Monomial g(ng), x(space_->size());
    for (std::size_t i = 0; i < ng; ++i) g.set(i, t.monomial[i]);
    for (std::size_t i = 0; i < space_->size(); ++i) x.set(i, t.monomial[ng + i]);
    parts[x].push_back({g, t.coeff});
  }
  std::map<Monomial, MultiPoly> out;
  for (auto& [x, terms] : parts) out.emplace(x, MultiPoly::from_terms(group_.ring, std::move(terms)));
  return out;
}

MultiPoly Coaction::at_identity(const MultiPoly& F) const {
  const std::size_t ng = group_.ring->size();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < ng; ++i) images.push_back(MultiPoly::constant(space_, group_.identity[i]));
  for (std::size_t i = 0; i < space_->size(); ++i) images.push_back(MultiPoly::variable(space_, i));
  return F.substitute(images, space_);
}

MultiPoly coact(const MultiPoly& f, const GroupPresentation& group) { return Coaction(group, f.ring()).coact(f); }

// ---------------------------------------------------------------------------

namespace {

std::vector<MultiPoly> orbit_coefficients(const Coaction& c, const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> out;
  for (const auto& f : gens)
    for (auto& [mu, coeff] : c.split_by_group(c.coact(f))) out.push_back(std::move(coeff));
  return out;
}

}  // namespace

Ideal g_saturate(const Ideal& seed, const GroupPresentation& group, unsigned cap) {
  Coaction c(group, seed.ring());
  Ideal current = seed;
  for (unsigned round = 0; round < cap; ++round) {
    std::vector<MultiPoly> fresh;
    for (auto& p : orbit_coefficients(c, current.groebner()))
      if (!current.contains(p)) fresh.push_back(std::move(p));
    if (fresh.empty()) return Ideal(seed.ring(), current.groebner());
    current = Ideal(seed.ring(), current.groebner()).with(fresh);
  }
  throw ResourceError("G-saturation did not reach a fixed point within " + std::to_string(cap) +
                      " rounds; the group presentation is likely malformed");
}

bool is_g_stable(const Ideal& ideal, const GroupPresentation& group) {
  Coaction c(group, ideal.ring());
  for (const auto& p : orbit_coefficients(c, ideal.groebner()))
    if (!ideal.contains(p)) return false;
  return true;
}

bool is_gbar_stable(const Ideal& ideal, const MonoidPresentation& monoid) {
  const GroupPresentation& group = monoid.group;
  if (!is_g_stable(ideal, group)) throw PreconditionError("ideal is not G-stable");
  if (ideal.is_unit()) return true;
  const RingPtr& space = ideal.ring();
  if (group.dim() != space->size()) throw PreconditionError("group dimension differs from the number of variables");
  SubalgebraMembership member(group.relations, monoid.generators);
  std::vector<MultiPoly> nf;
  for (std::size_t i = 0; i < space->size(); ++i) nf.push_back(ideal.reduce(MultiPoly::variable(space, i)));
  for (std::size_t j = 0; j < space->size(); ++j) {
    std::map<Monomial, MultiPoly> coeffs;
    for (std::size_t i = 0; i < space->size(); ++i) {
      if (group.action[j][i].is_zero()) continue;
      for (const auto& t : nf[i].terms()) {
        auto it = coeffs.try_emplace(t.monomial, MultiPoly(group.ring)).first;
        it->second += group.action[j][i] * t.coeff;
      }
    }
    for (const auto& [m, p] : coeffs)
      if (!member.contains(p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

UniversalQuotient universal_quotient(const PolyMatrix& rho, const MonoidPresentation& monoid) {
  const GroupPresentation& group = monoid.group;
  const std::size_t n = rho.size();
  for (const auto& row : rho) {
    if (row.size() != n) throw PreconditionError("coaction matrix is not square");
    for (const auto& e : row) require_same_ring(e.ring(), group.ring, "coaction matrix");
  }
  if (!is_identity_matrix(evaluate_matrix(rho, group.identity, group.ring)))
    throw InvariantError("coaction matrix is not the identity at the identity element");

  SubalgebraMembership member(group.relations, monoid.generators);
  const std::size_t base = member.base_size();
  // Per entry: normal form modulo relations, and the part of the tagged normal
  // form that still involves group variables (zero iff the entry is in O(Gbar)).
  std::vector<std::vector<MultiPoly>> reduced(n), outside(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      reduced[j].push_back(group.relations.reduce(rho[j][i]));
      MultiPoly t = member.tagged_normal_form(rho[j][i]);
      std::vector<Term> keep;
      for (const auto& term : t.terms()) {
        bool uses_base = false;
        for (std::size_t v = 0; v < base && !uses_base; ++v) uses_base = term.monomial[v] != 0;
        if (uses_base) keep.push_back(term);
      }
      outside[j].push_back(MultiPoly::from_terms(member.tagged_ring(), std::move(keep)));
    }

  UniversalQuotient out;
  LinearSubspace current = LinearSubspace::full(n);
  out.tower_dims.push_back(current.dim());
  for (;;) {
    const Matrix& basis = current.basis();
    const std::size_t d = basis.size();
    if (d == 0) break;
    std::map<std::pair<std::size_t, Monomial>, Vector> eqs_outside;
    std::map<std::pair<std::size_t, Monomial>, Vector> eqs_stable;
    auto add_eq = [d](auto& eqs, std::size_t tag, const MultiPoly& p, std::size_t k, const Rational& s) {
      for (const auto& t : p.terms()) {
        auto it = eqs.try_emplace({tag, t.monomial}, Vector(d, 0)).first;
        it->second[k] += s * t.coeff;
      }
    };
    // q_i(u) = sum_j u_j rho[j][i] must lie in O(Gbar) ...
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (basis[k][j] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) add_eq(eqs_outside, i, outside[j][i], k, basis[k][j]);
      }
    // ... and sum_i phi_i q_i must vanish for phi in the annihilator of U.
    const Matrix ann = current.annihilator().basis();
    for (std::size_t a = 0; a < ann.size(); ++a)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          if (basis[k][j] == 0) continue;
          for (std::size_t i = 0; i < n; ++i)
            if (ann[a][i] != 0) add_eq(eqs_stable, a, reduced[j][i], k, basis[k][j] * ann[a][i]);
        }
    Matrix rows;
    for (auto& [key, row] : eqs_outside) rows.push_back(std::move(row));
    for (auto& [key, row] : eqs_stable) rows.push_back(std::move(row));
    Matrix coeffs = rows.empty() ? LinearSubspace::full(d).basis() : kernel(rows, d);
    Matrix next;
    for (const auto& c : coeffs) {
      Vector v(n, 0);
      for (std::size_t k = 0; k < d; ++k)
        if (c[k] != 0)
          for (std::size_t j = 0; j < n; ++j) v[j] += c[k] * basis[k][j];
      next.push_back(std::move(v));
    }
    LinearSubspace refined(n, std::move(next));
    out.tower_dims.push_back(refined.dim());
    const bool stable = refined.dim() == current.dim();
    current = std::move(refined);
    if (stable) break;
  }
  out.u = current;
  out.kernel = current.annihilator();
  return out;
}

UniversalQuotient universal_quotient(const MonoidPresentation& monoid) {
  return universal_quotient(monoid.group.action, monoid);
}

// ---------------------------------------------------------------------------

std::optional<KempfOnePSG> find_kempf_opsg(const MonoidPresentation& monoid) {
  const auto& weights = monoid.central.weights();
  if (weights.empty() || monoid.central.rank() == 0)
    throw InvariantError("monoid has no central-torus weight data");
  const std::size_t r = monoid.central.rank();
  std::vector<WeightVector> nonzero;
  for (const auto& w : weights)
    if (!is_zero(w)) nonzero.push_back(w);
  if (nonzero.empty()) return std::nullopt;
  auto phi = strictly_positive_functional(r, nonzero);
  if (!phi) return std::nullopt;
  std::int64_t bound = 0;
  for (auto x : *phi) bound = std::max<std::int64_t>(bound, x < 0 ? -x : x);

  auto valid = [&](const WeightVector& lam) {
    return std::all_of(nonzero.begin(), nonzero.end(), [&](const WeightVector& w) { return pairing(lam, w) > 0; });
  };
  WeightVector lam(r);
  for (std::int64_t norm = 1; norm <= bound; ++norm) {
    // Lexicographic sweep of [-norm, norm]^r keeping vectors of max-norm `norm`.
    std::function<bool(std::size_t, bool)> rec = [&](std::size_t pos, bool at_norm) -> bool {
      if (pos == r) return at_norm && valid(lam);
      for (std::int64_t v = -norm; v <= norm; ++v) {
        lam[pos] = v;
        if (rec(pos + 1, at_norm || v == norm || v == -norm)) return true;
      }
      return false;
    };
    if (rec(0, false)) return KempfOnePSG{lam};
  }
  throw InvariantError("Kempf search missed the cocharacter provided by the cone analysis");
}

WeightVector cochar_in_maximal(const MonoidPresentation& monoid, const KempfOnePSG& kempf) {
  if (kempf.cochar.size() != monoid.central.rank())
    throw PreconditionError("cocharacter length differs from the central torus rank");
  WeightVector out;
  for (const auto& row : monoid.central_to_maximal) out.push_back(pairing(row, kempf.cochar));
  return out;
}

bool center_invariants_trivial(const MonoidPresentation& monoid, unsigned degree_bound) {
  if (degree_bound < 1) throw PreconditionError("degree bound must be at least 1");
  const std::size_t k = monoid.generators.size();
  const Ideal& rel = monoid.group.relations;
  for (unsigned d = 1; d <= degree_bound; ++d)
    for (const auto& m : monomials_of_degree(k, d)) {
      if (!is_zero(weight_of(m, monoid.central))) continue;
      MultiPoly p = MultiPoly::constant(monoid.group.ring, 1);
      for (std::size_t i = 0; i < k; ++i)
        if (m[i]) p *= monoid.generators[i].pow(m[i]);
      if (!rel.reduce(p).is_constant()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Builders

GroupPresentation torus_group(std::size_t rank, const std::vector<WeightVector>& point_weights) {
  if (rank == 0) throw PreconditionError("torus rank must be positive");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < rank; ++k) names.push_back(rank == 1 ? "t" : "t" + std::to_string(k + 1));
  for (std::size_t k = 0; k < rank; ++k) names.push_back(names[k] + "_inv");
  GroupPresentation g;
  g.name = rank == 1 ? "G_m" : "G_m^" + std::to_string(rank);
  g.ring = Ring::make(names);
  std::vector<MultiPoly> rel;
  for (std::size_t k = 0; k < rank; ++k)
    rel.push_back(MultiPoly::variable(g.ring, k) * MultiPoly::variable(g.ring, rank + k) -
                  MultiPoly::constant(g.ring, 1));
  g.relations = Ideal(g.ring, std::move(rel));
  const std::size_t n = point_weights.size();
  g.action.assign(n, std::vector<MultiPoly>(n, MultiPoly(g.ring)));
  g.inverse_action = g.action;
  for (std::size_t j = 0; j < n; ++j) {
    if (point_weights[j].size() != rank) throw PreconditionError("weight length differs from torus rank");
    g.action[j][j] = laurent_monomial(g.ring, rank, point_weights[j]);
    g.inverse_action[j][j] = laurent_monomial(g.ring, rank, scale(point_weights[j], -1));
  }
  g.identity.assign(2 * rank, 1);
  return g;
}

MonoidPresentation torus_monoid(const GroupPresentation& torus, std::size_t rank,
                                const std::vector<WeightVector>& monoid_gens) {
  MonoidPresentation m;
  m.group = torus;
  for (const auto& s : monoid_gens) m.generators.push_back(laurent_monomial(torus.ring, rank, s));
  m.central = TorusAction(rank, monoid_gens);
  for (std::size_t a = 0; a < rank; ++a) {
    WeightVector row(rank, 0);
    row[a] = 1;
    m.central_to_maximal.push_back(row);
  }
  m.tbar = WeightMonoid(rank, monoid_gens);
  std::vector<WeightVector> nonzero;
  for (const auto& s : monoid_gens)
    if (!is_zero(s)) nonzero.push_back(s);
  if (nonzero.empty() || strictly_positive_functional(rank, nonzero)) {
    std::vector<Rational> z;
    for (const auto& s : monoid_gens) z.emplace_back(is_zero(s) ? 1 : 0);
    m.zero_point = std::move(z);
  }
  return m;
}

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  const RingPtr& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  MultiPoly det(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][c] * determinant(minor);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

namespace {

PolyMatrix transpose(const PolyMatrix& m) {
  PolyMatrix out(m.empty() ? 0 : m[0].size(), std::vector<MultiPoly>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c) out[c][r] = m[r][c];
  return out;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b, const RingPtr& ring) {
  const std::size_t n = a.size() + b.size();
  PolyMatrix out(n, std::vector<MultiPoly>(n, MultiPoly(ring)));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out[r][c] = a[r][c];
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) out[a.size() + r][a.size() + c] = b[r][c];
  return out;
}

}  // namespace

GroupPresentation general_linear_group(std::size_t n, LinearRep rep) {
  if (n == 0 || n > 9) throw PreconditionError("GL_n builder supports 1 <= n <= 9");
  std::vector<std::string> names;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c) names.push_back("g" + std::to_string(r) + std::to_string(c));
  names.push_back("dinv");
  GroupPresentation g;
  g.ring = Ring::make(names);
  PolyMatrix mat(n, std::vector<MultiPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mat[r][c] = MultiPoly::variable(g.ring, r * n + c);
  const MultiPoly dinv = MultiPoly::variable(g.ring, n * n);
  const MultiPoly det = determinant(mat);
  g.relations = Ideal(g.ring, {dinv * det - MultiPoly::constant(g.ring, 1)});

  PolyMatrix inv(n, std::vector<MultiPoly>(n, MultiPoly(g.ring)));
  if (n == 1) {
    inv[0][0] = dinv;
  } else {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // inverse[r][c] = dinv * (-1)^(r+c) * minor(c, r)
        PolyMatrix minor;
        for (std::size_t a = 0; a < n; ++a) {
          if (a == c) continue;
          std::vector<MultiPoly> row;
          for (std::size_t b = 0; b < n; ++b)
            if (b != r) row.push_back(mat[a][b]);
          minor.push_back(std::move(row));
        }
        MultiPoly cof = dinv * determinant(minor);
        inv[r][c] = (r + c) % 2 ? -cof : cof;
      }
  }
  switch (rep) {
    case LinearRep::Standard:
      g.action = mat;
      g.inverse_action = inv;
      g.name = "GL_" + std::to_string(n) + " standard";
      break;
    case LinearRep::Dual:
      g.action = transpose(inv);
      g.inverse_action = transpose(mat);
      g.name = "GL_" + std::to_string(n) + " dual";
      break;
    case LinearRep::StandardPlusDual:
      g.action = block_diagonal(mat, transpose(inv), g.ring);
      g.inverse_action = block_diagonal(inv, transpose(mat), g.ring);
      g.name = "GL_" + std::to_string(n) + " standard plus dual";
      break;
  }
  g.identity.assign(n * n + 1, 0);
  for (std::size_t r = 0; r < n; ++r) g.identity[r * n + r] = 1;
  g.identity[n * n] = 1;
  return g;
}

MonoidPresentation matrix_monoid(const GroupPresentation& gl, std::size_t n) {
  if (gl.ring->size() != n * n + 1) throw PreconditionError("matrix monoid needs a GL_n presentation");
  MonoidPresentation m;
  m.group = gl;
  for (std::size_t i = 0; i < n * n; ++i) m.generators.push_back(MultiPoly::variable(gl.ring, i));
  m.zero_point = std::vector<Rational>(n * n, Rational(0));
  m.central = TorusAction(1, std::vector<WeightVector>(n * n, WeightVector{1}));
  m.central_to_maximal.assign(n, WeightVector{1});
  m.tbar = WeightMonoid::positive_orthant(n);
  return m;
}

MonoidPresentation upper_triangular_monoid() {
  GroupPresentation g;
  g.name = "upper triangular B_2";
  g.ring = Ring::make({"b11", "b12", "b22", "i11", "i22"});
  auto v = [&](const char* name) { return MultiPoly::variable(g.ring, name); };
  const MultiPoly one = MultiPoly::constant(g.ring, 1);
  const MultiPoly zero(g.ring);
  g.relations = Ideal(g.ring, {v("b11") * v("i11") - one, v("b22") * v("i22") - one});
  g.action = {{v("b11"), v("b12")}, {zero, v("b22")}};
  g.inverse_action = {{v("i11"), -(v("b12") * v("i11") * v("i22"))}, {zero, v("i22")}};
  g.identity = {1, 0, 1, 1, 1};

  MonoidPresentation m;
  m.group = g;
  m.generators = {v("b11"), v("b12"), v("b22")};
  m.zero_point = std::vector<Rational>(3, Rational(0));
  m.central = TorusAction(2, {{1, 0}, {1, 0}, {0, 1}});
  m.central_to_maximal = {{1, 0}, {0, 1}};
  m.tbar = WeightMonoid::positive_orthant(2);
  return m;
}

}  // namespace bbd
