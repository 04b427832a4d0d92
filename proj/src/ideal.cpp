#include "bbd/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bbd/error.hpp"

namespace bbd {

// ---------------------------------------------------------------------------
// Reduction

MultiPoly reduce_by(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  const RingPtr& ring = f.ring();
  const auto& order = ring->order();
  auto desc = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(desc)> work(desc);
  for (const auto& t : f.terms()) work.emplace(t.monomial, t.coeff);

  std::vector<Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    const MultiPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(it->first)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      rem.push_back({it->first, it->second});
      work.erase(it);
      continue;
    }
    Rational factor = -it->second / divisor->leading_coeff();
    Monomial shift = it->first.quotient(divisor->leading_monomial());
    work.erase(it);
    const auto& terms = divisor->terms();
    for (std::size_t k = 1; k < terms.size(); ++k) {
      Monomial m = terms[k].monomial * shift;
      Rational c = terms[k].coeff * factor;
      auto [pos, inserted] = work.try_emplace(std::move(m), c);
      if (!inserted) {
        pos->second += c;
        if (pos->second == 0) work.erase(pos);
      }
    }
  }
  return MultiPoly::from_terms(ring, std::move(rem));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const Monomial& lcm) {
  MultiPoly a = f.mul_term(lcm.quotient(f.leading_monomial()), 1 / f.leading_coeff());
  a.add_scaled(g, -1 / g.leading_coeff(), lcm.quotient(g.leading_monomial()));
  return a;
}

}  // namespace

std::vector<MultiPoly> reduced_groebner_basis(const RingPtr& ring, std::vector<MultiPoly> gens) {
  const auto& order = ring->order();
  std::vector<MultiPoly> basis;
  for (auto& g : gens) {
    require_same_ring(g.ring(), ring, "groebner basis");
    if (g.is_zero()) continue;
    if (g.is_constant()) return {MultiPoly::constant(ring, 1)};
    basis.push_back(g.monic());
  }
  if (basis.empty()) return {};

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    pending.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
    pending_keys.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k)
      if (order.compare(pending[k].lcm, pending[best].lcm) < 0) best = k;
    Pair pair = std::move(pending[best]);
    pending[best] = std::move(pending.back());
    pending.pop_back();
    pending_keys.erase({pair.i, pair.j});

    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    // Product criterion.
    if (fi.leading_monomial().coprime(fj.leading_monomial())) continue;
    // Chain criterion.
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending_keys.count(key(pair.i, k)) && !pending_keys.count(key(pair.j, k))) chain = true;
    }
    if (chain) continue;

    MultiPoly r = reduce_by(s_polynomial(fi, fj, pair.lcm), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MultiPoly::constant(ring, 1)};
    basis.push_back(r.monic());
    std::size_t n = basis.size() - 1;
    for (std::size_t i = 0; i < n; ++i) add_pair(i, n);
  }

  // Minimize: drop elements whose leading monomial is a multiple of another's.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (!(li == lj) || j < i)) keep[i] = false;
    }
  }
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Interreduce tails.
  std::vector<MultiPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_by(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return reduced;
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (!g.ring()) g = MultiPoly(ring_);
    require_same_ring(g.ring(), ring_, "ideal construction");
  }
}

bool Ideal::has_groebner() const { return cache_->ready.load(std::memory_order_acquire); }

const std::vector<MultiPoly>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = reduced_groebner_basis(ring_, gens_);
    cache_->ready.store(true, std::memory_order_release);
  });
  return cache_->basis;
}

MultiPoly Ideal::reduce(const MultiPoly& f) const {
  require_same_ring(f.ring(), ring_, "normal form");
  return reduce_by(f, groebner());
}

bool Ideal::contains(const MultiPoly& f) const { return reduce(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(other.ring(), ring_, "ideal containment");
  for (const auto& g : other.groebner())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero() const { return groebner().empty(); }

Ideal Ideal::with(const std::vector<MultiPoly>& more) const {
  std::vector<MultiPoly> gens = gens_;
  gens.insert(gens.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<MultiPoly> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

Ideal buchberger(const Ideal& ideal, const MonomialOrder& order) {
  for (const auto& g : ideal.generators())
    require_same_ring(g.ring(), ideal.ring(), "buchberger");
  RingPtr ring = Ring::make(ideal.ring()->variables(), order);
  Ideal result = ideal.in_ring(ring);
  result.groebner();
  return result;
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal) {
  if (!ideal.has_groebner()) throw PreconditionError("normal form requested without a cached Groebner basis");
  return ideal.reduce(f);
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ring()->variables() != b.ring()->variables())
    throw PreconditionError("ring mismatch in ideal comparison");
  Ideal bb = same_ring(a.ring(), b.ring()) ? b : b.in_ring(a.ring());
  return a.groebner() == bb.groebner();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal sum");
  return a.with(b.generators());
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring(), "ideal product");
  std::vector<MultiPoly> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned e) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned k = 0; k < e; ++k) {
    result = ideal_product(result, a);
    // Keep generator lists small between multiplications.
    result = Ideal(a.ring(), result.groebner());
  }
  return result;
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& drop_vars) {
  const auto& names = ideal.ring()->variables();
  std::vector<std::string> reordered;
  for (const auto& d : drop_vars) {
    if (!ideal.ring()->index_of(d)) throw PreconditionError("cannot eliminate unknown variable '" + d + "'");
    if (std::find(reordered.begin(), reordered.end(), d) == reordered.end()) reordered.push_back(d);
  }
  const std::size_t k = reordered.size();
  for (const auto& n : names)
    if (std::find(reordered.begin(), reordered.begin() + k, n) == reordered.begin() + k)
      reordered.push_back(n);
  RingPtr elim = Ring::make(reordered, MonomialOrder::elimination(k));
  Ideal moved = ideal.in_ring(elim);
  std::vector<MultiPoly> kept;
  for (const auto& g : moved.groebner())
    if (g.uses_only([k](std::size_t i) { return i >= k; })) kept.push_back(g.in_ring(ideal.ring()));
  return Ideal(ideal.ring(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Subalgebra membership

SubalgebraMembership::SubalgebraMembership(const Ideal& relations, std::vector<MultiPoly> subalg_gens)
    : base_(relations.ring()), gens_(std::move(subalg_gens)) {
  for (const auto& g : gens_) require_same_ring(g.ring(), base_, "subalgebra membership");
  if (relations.is_unit())
    throw InvariantError("presentation ideal is the unit ideal; malformed group presentation");

  std::vector<std::string> names = base_->variables();
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::string t = "T" + std::to_string(i + 1);
    while (base_->index_of(t)) t = "_" + t;
    tags.push_back(t);
  }
  names.insert(names.end(), tags.begin(), tags.end());
  tagged_ring_ = Ring::make(names, MonomialOrder::elimination(base_->size()));
  tag_ring_ = Ring::make(tags);

  std::vector<MultiPoly> gens;
  for (const auto& r : relations.generators()) gens.push_back(r.in_ring(tagged_ring_));
  for (std::size_t i = 0; i < gens_.size(); ++i)
    gens.push_back(MultiPoly::variable(tagged_ring_, base_->size() + i) - gens_[i].in_ring(tagged_ring_));
  tagged_ = Ideal(tagged_ring_, std::move(gens));
}

MultiPoly SubalgebraMembership::tagged_normal_form(const MultiPoly& f) const {
  require_same_ring(f.ring(), base_, "subalgebra membership");
  return tagged_.reduce(f.in_ring(tagged_ring_));
}

std::optional<MultiPoly> SubalgebraMembership::express(const MultiPoly& f) const {
  MultiPoly nf = tagged_normal_form(f);
  const std::size_t k = base_->size();
  if (!nf.uses_only([k](std::size_t i) { return i >= k; })) return std::nullopt;
  return nf.in_ring(tag_ring_);
}

std::optional<MultiPoly> subalgebra_membership(const MultiPoly& f, const Ideal& relations,
                                               const std::vector<MultiPoly>& subalg_gens) {
  return SubalgebraMembership(relations, subalg_gens).express(f);
}

}  // namespace bbd
