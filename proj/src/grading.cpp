#include "bbd/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "bbd/error.hpp"

namespace bbd {

WeightVector add(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw PreconditionError("weight length mismatch");
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

WeightVector scale(const WeightVector& a, std::int64_t k) {
  WeightVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

std::int64_t pairing(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw PreconditionError("weight length mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const WeightVector& w) {
  return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
}

std::string format_weight(const WeightVector& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------

TorusAction::TorusAction(std::size_t rank, std::vector<WeightVector> variable_weights)
    : rank_(rank), weights_(std::move(variable_weights)) {
  for (const auto& w : weights_)
    if (w.size() != rank_) throw PreconditionError("weight vector length differs from torus rank");
}

TorusAction TorusAction::trivial(std::size_t nvars, std::size_t rank) {
  return TorusAction(rank, std::vector<WeightVector>(nvars, WeightVector(rank, 0)));
}

std::vector<std::int64_t> TorusAction::paired_with(const WeightVector& cochar) const {
  if (cochar.size() != rank_) throw PreconditionError("cocharacter length differs from torus rank");
  std::vector<std::int64_t> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) out.push_back(pairing(w, cochar));
  return out;
}

WeightVector weight_of(const Monomial& m, const TorusAction& action) {
  if (m.size() != action.size()) throw PreconditionError("monomial length differs from number of weighted variables");
  WeightVector w(action.rank(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    const auto& wi = action.weight(i);
    for (std::size_t k = 0; k < w.size(); ++k) w[k] += static_cast<std::int64_t>(m[i]) * wi[k];
  }
  return w;
}

std::map<WeightVector, MultiPoly> homogeneous_components(const MultiPoly& f, const TorusAction& action) {
  std::map<WeightVector, std::vector<Term>> buckets;
  for (const auto& t : f.terms()) buckets[weight_of(t.monomial, action)].push_back(t);
  std::map<WeightVector, MultiPoly> out;
  for (auto& [w, terms] : buckets) out.emplace(w, MultiPoly::from_terms(f.ring(), std::move(terms)));
  return out;
}

bool is_homogeneous(const MultiPoly& f, const TorusAction& action) {
  if (f.is_zero()) return true;
  WeightVector w0 = weight_of(f.leading_monomial(), action);
  for (const auto& t : f.terms())
    if (weight_of(t.monomial, action) != w0) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(Ideal defining, TorusAction action)
    : ideal_(std::move(defining)), action_(std::move(action)) {
  if (action_.size() != ideal_.ring()->size())
    throw PreconditionError("torus action assigns " + std::to_string(action_.size()) + " weights to a ring with " +
                            std::to_string(ideal_.ring()->size()) + " variables");
  for (const auto& g : ideal_.generators())
    if (!is_homogeneous(g, action_))
      throw PreconditionError("inhomogeneous defining ideal: generator " + g.to_string() +
                              " mixes torus weights");
}

// ---------------------------------------------------------------------------
// Cones

namespace {

Vector to_vector(const WeightVector& w) {
  Vector v;
  v.reserve(w.size());
  for (auto x : w) v.emplace_back(static_cast<long>(x));
  return v;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) -> bool {
    if (pos == k) return fn(idx);
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      if (rec(pos + 1, i + 1)) return true;
    }
    return false;
  };
  rec(0, 0);
}

/// v in the rational cone spanned by gens (Caratheodory: check linearly
/// independent subsets).
bool cone_contains(const std::vector<Vector>& gens, const Vector& v, std::size_t dim) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
  const std::size_t rk = rank(gens, dim);
  bool found = false;
  for (std::size_t s = 1; s <= rk && !found; ++s) {
    for_each_subset(gens.size(), s, [&](const std::vector<std::size_t>& sub) {
      Matrix rows;
      for (auto i : sub) rows.push_back(gens[i]);
      if (rank(rows, dim) != s) return false;
      Matrix aug(dim, Vector(s + 1));
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < s; ++c) aug[r][c] = gens[sub[c]][r];
        aug[r][s] = v[r];
      }
      auto piv = rref(aug, s + 1);
      if (!piv.empty() && piv.back() == s) return false;
      for (std::size_t r = 0; r < piv.size(); ++r)
        if (aug[r][s] < 0) return false;
      found = true;
      return true;
    });
  }
  return found;
}

}  // namespace

ConeSplit split_cone(std::size_t dim, const std::vector<WeightVector>& generators) {
  ConeSplit out;
  out.in_lineality.assign(generators.size(), false);
  out.functional.assign(dim, 0);
  std::vector<Vector> all;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != dim) throw PreconditionError("weight length differs from rank");
    if (is_zero(generators[i])) {
      out.in_lineality[i] = true;
      continue;
    }
    nonzero.push_back(i);
    all.push_back(to_vector(generators[i]));
  }
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    Vector neg = all[k];
    for (auto& x : neg) x = -x;
    out.in_lineality[nonzero[k]] = cone_contains(all, neg, dim);
  }
  std::vector<Vector> lineality, pointed;
  for (std::size_t k = 0; k < nonzero.size(); ++k)
    (out.in_lineality[nonzero[k]] ? lineality : pointed).push_back(all[k]);
  if (pointed.empty()) return out;

  const std::size_t rk = rank(all, dim);
  for (std::size_t s = 0; s + 1 <= rk; ++s) {
    for_each_subset(pointed.size(), s, [&](const std::vector<std::size_t>& sub) {
      Matrix eq = lineality;
      for (auto i : sub) eq.push_back(pointed[i]);
      if (rank(eq, dim) + 1 != rk) return false;
      Matrix ker = eq.empty() ? LinearSubspace::full(dim).basis() : kernel(eq, dim);
      for (const auto& k : ker) {
        bool any = false, pos = true, neg = true;
        for (const auto& g : all) {
          Rational p = dot(k, g);
          if (p != 0) any = true;
          if (p < 0) pos = false;
          if (p > 0) neg = false;
        }
        if (!any) continue;
        if (pos || neg) {
          for (std::size_t c = 0; c < dim; ++c) out.functional[c] += pos ? k[c] : Rational(-k[c]);
        }
        break;
      }
      return false;
    });
  }
  for (std::size_t k = 0; k < nonzero.size(); ++k) {
    Rational p = dot(out.functional, all[k]);
    bool lin = out.in_lineality[nonzero[k]];
    if ((lin && p != 0) || (!lin && p <= 0))
      throw InvariantError("cone analysis failed to separate the lineality space");
  }
  return out;
}

std::optional<WeightVector> strictly_positive_functional(std::size_t rank,
                                                         const std::vector<WeightVector>& weights) {
  std::vector<WeightVector> nz;
  for (const auto& w : weights)
    if (!is_zero(w)) nz.push_back(w);
  if (nz.empty()) return std::nullopt;
  ConeSplit split = split_cone(rank, nz);
  if (std::any_of(split.in_lineality.begin(), split.in_lineality.end(), [](bool b) { return b; }))
    return std::nullopt;
  Integer den = 1;
  for (const auto& x : split.functional) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : split.functional) {
    Integer v = Integer(x.get_num()) * (den / Integer(x.get_den()));
    ints.push_back(v);
    g = gcd(g, v);
  }
  WeightVector out;
  for (auto& v : ints) {
    Integer q = v / g;
    if (!q.fits_slong_p()) throw ResourceError("positive functional exceeds machine integers");
    out.push_back(q.get_si());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight monoids

namespace {

/// Integer row echelon basis of the lattice spanned by the given vectors.
std::vector<std::vector<Integer>> lattice_basis(std::vector<std::vector<Integer>> rows, std::size_t dim) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t col = 0; col < dim && !rows.empty(); ++col) {
    // Euclid on column `col` across rows until one row has a nonzero entry.
    for (;;) {
      std::size_t best = rows.size();
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        ++nonzero;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        if (rows[best][col] < 0)
          for (auto& x : rows[best]) x = -x;
        out.push_back(rows[best]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == best || rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t());
        for (std::size_t c = 0; c < dim; ++c) rows[r][c] -= q * rows[best][c];
      }
    }
    // Drop rows that became zero.
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<Integer>& r) {
                                return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
                              }),
               rows.end());
  }
  return out;
}

std::size_t pivot_of(const std::vector<Integer>& row) {
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) return c;
  return row.size();
}

bool in_lattice(std::vector<Integer> v, const std::vector<std::vector<Integer>>& basis) {
  for (const auto& row : basis) {
    std::size_t p = pivot_of(row);
    for (std::size_t c = 0; c < p; ++c)
      if (v[c] != 0) return false;
    if (v[p] % row[p] != 0) return false;
    Integer q = v[p] / row[p];
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= q * row[c];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

struct WeightMonoid::Analysis {
  std::vector<WeightVector> pointed;
  std::vector<Rational> pointed_values;  // functional on each pointed generator
  Vector functional;
  std::vector<std::vector<Integer>> lattice;
};

WeightMonoid::WeightMonoid(std::size_t rank, std::vector<WeightVector> generators)
    : rank_(rank), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != rank_) throw PreconditionError("monoid generator length differs from rank");
  auto a = std::make_shared<Analysis>();
  ConeSplit split = split_cone(rank_, gens_);
  a->functional = split.functional;
  std::vector<std::vector<Integer>> lat;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (split.in_lineality[i]) {
      std::vector<Integer> row;
      for (auto x : gens_[i]) row.emplace_back(static_cast<long>(x));
      lat.push_back(std::move(row));
    } else {
      a->pointed.push_back(gens_[i]);
      a->pointed_values.push_back(dot(split.functional, to_vector(gens_[i])));
    }
  }
  a->lattice = lattice_basis(std::move(lat), rank_);
  analysis_ = std::move(a);
}

WeightMonoid WeightMonoid::positive_orthant(std::size_t rank) {
  std::vector<WeightVector> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    WeightVector e(rank, 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return WeightMonoid(rank, std::move(gens));
}

bool WeightMonoid::contains(const WeightVector& chi) const {
  if (chi.size() != rank_) throw PreconditionError("character length differs from monoid rank");
  if (!analysis_) return is_zero(chi);
  const auto& a = *analysis_;
  Rational target = dot(a.functional, to_vector(chi));
  if (target < 0) return false;
  // Every pointed coefficient c_i satisfies c_i * value_i <= target; enumerate
  // those boxes and test the remainder against the lattice of the lineality
  // generators (which form a group inside the monoid).
  std::vector<Integer> residual;
  for (auto x : chi) residual.emplace_back(static_cast<long>(x));
  std::function<bool(std::size_t, Rational)> rec = [&](std::size_t i, Rational left) -> bool {
    if (i == a.pointed.size()) {
      if (left != 0) return false;
      return in_lattice(residual, a.lattice);
    }
    const auto& g = a.pointed[i];
    long taken = 0;
    bool hit = false;
    for (Rational used = 0; used <= left; used += a.pointed_values[i], ++taken) {
      if (rec(i + 1, left - used)) {
        hit = true;
        break;
      }
      for (std::size_t k = 0; k < rank_; ++k) residual[k] -= g[k];
    }
    for (std::size_t k = 0; k < rank_; ++k) residual[k] += Integer(taken) * g[k];
    return hit;
  };
  return rec(0, target);
}

bool monoid_membership(const WeightVector& chi, const WeightMonoid& monoid) { return monoid.contains(chi); }

// ---------------------------------------------------------------------------
// Isotypic components

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, unsigned degree_bound) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= degree_bound; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

IsotypicComponent isotypic_component(const GradedAlgebra& alg, const CharacterSet& chi, unsigned degree_bound) {
  IsotypicComponent out;
  out.characters = chi;
  out.degree_bound = degree_bound;
  const RingPtr& ring = alg.ring();
  for (const auto& c : chi)
    if (c.size() != alg.action().rank()) throw PreconditionError("character length differs from torus rank");

  std::vector<MultiPoly> forms;
  for (const auto& m : monomials_up_to_degree(ring->size(), degree_bound)) {
    if (!chi.count(weight_of(m, alg.action()))) continue;
    MultiPoly nf = alg.defining_ideal().reduce(MultiPoly::monomial(ring, m));
    if (!nf.is_zero()) forms.push_back(std::move(nf));
  }
  std::vector<Monomial> coords;
  for (const auto& f : forms)
    for (const auto& t : f.terms()) coords.push_back(t.monomial);
  const auto& order = ring->order();
  std::sort(coords.begin(), coords.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  Matrix rows;
  for (const auto& f : forms) {
    Vector v(coords.size(), 0);
    for (const auto& t : f.terms()) {
      auto it = std::lower_bound(coords.begin(), coords.end(), t.monomial,
                                 [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
      v[static_cast<std::size_t>(it - coords.begin())] = t.coeff;
    }
    rows.push_back(std::move(v));
  }
  out.span = LinearSubspace(coords.size(), std::move(rows));
  for (const auto& row : out.span.basis()) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (row[i] != 0) terms.push_back({coords[i], row[i]});
    out.basis.push_back(MultiPoly::from_terms(ring, std::move(terms)));
  }
  out.coordinates = std::move(coords);
  return out;
}

}  // namespace bbd
