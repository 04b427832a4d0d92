#include "bbd/formal.hpp"

#include <algorithm>
#include <functional>

#include "bbd/error.hpp"

namespace bbd {

namespace {

struct MonomialBox {
  std::vector<std::int64_t> kempf;
  /// Variables that may appear (negative-weight variables are zero in A).
  std::vector<bool> usable;
  bool has_zero_weight = false;
  unsigned cap = 0;
};

MonomialBox make_box(const std::vector<std::int64_t>& kempf, std::size_t usable_prefix, unsigned cap) {
  MonomialBox box{kempf, std::vector<bool>(kempf.size(), false), false, cap};
  for (std::size_t i = 0; i < usable_prefix; ++i) {
    box.usable[i] = kempf[i] >= 0;
    if (kempf[i] == 0) box.has_zero_weight = true;
  }
  return box;
}

// Monomials in the usable variables with Kempf weight exactly `target`; the
// total degree is capped only when weight-zero variables are present.
std::vector<Monomial> monomials_of_kempf_weight(const MonomialBox& box, std::int64_t target) {
  std::vector<Monomial> out;
  if (target < 0) return out;
  const std::size_t n = box.kempf.size();
  Monomial current(n);
  std::function<void(std::size_t, std::int64_t, unsigned)> rec = [&](std::size_t i, std::int64_t left,
                                                                      unsigned degree) {
    if (i == n) {
      if (left == 0) out.push_back(current);
      return;
    }
    if (!box.usable[i]) {
      rec(i + 1, left, degree);
      return;
    }
    const std::int64_t k = box.kempf[i];
    for (unsigned e = 0;; ++e) {
      if (k > 0 && std::int64_t(e) * k > left) break;
      if (box.has_zero_weight && degree + e > box.cap) break;
      if (k == 0 && !box.has_zero_weight) break;
      current.set(i, Exponent(e));
      rec(i + 1, left - std::int64_t(e) * k, degree + e);
    }
    current.set(i, 0);
  };
  rec(0, target, 0);
  return out;
}

bool is_standard(const Monomial& m, const std::vector<MultiPoly>& basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const MultiPoly& g) { return g.leading_monomial().divides(m); });
}

std::size_t count_standard(const std::vector<Monomial>& candidates, const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  return std::size_t(std::count_if(candidates.begin(), candidates.end(),
                                   [&](const Monomial& m) { return is_standard(m, gb); }));
}

// Candidates of torus weight chi for a single extra variable (or none).
std::vector<Monomial> weight_candidates(const MonomialBox& box, const TorusAction& action, const WeightVector& chi,
                                        std::int64_t target) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_kempf_weight(box, target))
    if (weight_of(m, action) == chi) out.push_back(std::move(m));
  return out;
}

std::vector<MultiPoly> power_of_variables(const RingPtr& ring, const std::vector<std::size_t>& vars, unsigned e) {
  std::vector<MultiPoly> out;
  for (const auto& small : monomials_of_degree(vars.size(), e)) {
    Monomial m(ring->size());
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(vars[k], small[k]);
    out.push_back(MultiPoly::monomial(ring, m));
  }
  return out;
}

std::vector<std::size_t> positive_variables(const std::vector<std::int64_t>& kempf) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kempf.size(); ++i)
    if (kempf[i] > 0) out.push_back(i);
  return out;
}

void require_rank(const WeightVector& chi, std::size_t rank) {
  if (chi.size() != rank)
    throw PreconditionError("character " + format_weight(chi) + " does not match torus rank " + std::to_string(rank));
}

StabilizationRow make_row(const WeightVector& chi, std::int64_t predicted, std::vector<std::size_t> dims,
                          unsigned depth) {
  StabilizationRow row;
  row.chi = chi;
  row.predicted = predicted;
  row.observed = stabilization_onset(dims);
  row.dims = std::move(dims);
  const std::int64_t bound = std::max<std::int64_t>(predicted, 0);
  if (std::int64_t(depth) <= bound)
    row.status = StabilizationStatus::Inconclusive;
  else if (std::int64_t(row.observed) > bound)
    row.status = StabilizationStatus::Violated;
  else
    row.status = StabilizationStatus::Confirmed;
  return row;
}

void require_no_violation(const StabilizationReport& report) {
  for (const auto& row : report.rows)
    if (row.status == StabilizationStatus::Violated)
      throw InvariantError("character " + format_weight(row.chi) + " stabilizes at level " +
                           std::to_string(row.observed) + ", beyond the bound " + std::to_string(row.predicted));
}

}  // namespace

std::int64_t TruncatedAlgebra::stabilization_index(const WeightVector& chi) const {
  require_rank(chi, base.action().rank());
  return pairing(chi, cochar);
}

TruncatedAlgebra truncate(const GradedAlgebra& alg, const WeightVector& cochar, unsigned depth,
                          const TruncationOptions& options) {
  if (cochar.size() != alg.action().rank())
    throw PreconditionError("cocharacter length differs from torus rank");
  const RingPtr& ring = alg.ring();
  const Ideal& j = alg.defining_ideal();
  TruncatedAlgebra out;
  out.base = alg;
  out.cochar = cochar;
  out.depth = depth;
  out.options = options;
  out.kempf_weights = alg.action().paired_with(cochar);
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (out.kempf_weights[i] < 0 && !j.contains(MultiPoly::variable(ring, i)))
      throw PreconditionError("variable " + ring->variables()[i] + " has negative Kempf weight " +
                              std::to_string(out.kempf_weights[i]) + " but is nonzero in A");

  const auto pos = positive_variables(out.kempf_weights);
  const Ideal base(ring, j.groebner());
  out.ideal_i = Ideal(ring, base.with(power_of_variables(ring, pos, 1)).groebner());
  for (unsigned n = 0; n <= depth; ++n)
    out.levels.push_back(Ideal(ring, base.with(power_of_variables(ring, pos, n + 1)).groebner()));

  if (options.verify_adic_identity) {
    const Ideal& top = out.levels[depth];
    Ideal power = Ideal::unit(ring);
    for (unsigned n = 0; n <= depth; ++n) {
      power = Ideal(ring, ideal_product(power, out.ideal_i).with(top.groebner()).groebner());
      if (!ideal_equal(power, out.levels[n]))
        throw InvariantError("ker(A_" + std::to_string(depth) + " -> A_" + std::to_string(n) +
                             ") differs from the " + std::to_string(n + 1) + "-th power of ker(A_" +
                             std::to_string(depth) + " -> A_0)");
    }
  }
  return out;
}

std::vector<std::size_t> isotypic_dims(const TruncatedAlgebra& trunc, const WeightVector& chi) {
  const std::int64_t target = trunc.stabilization_index(chi);
  const MonomialBox box =
      make_box(trunc.kempf_weights, trunc.kempf_weights.size(), trunc.options.zero_weight_degree_cap);
  const auto candidates = weight_candidates(box, trunc.base.action(), chi, target);
  std::vector<std::size_t> dims;
  for (const auto& level : trunc.levels) dims.push_back(count_standard(candidates, level));
  return dims;
}

MultiPoly AdicModule::generator(std::size_t i) const {
  if (i >= rank()) throw PreconditionError("generator index out of range");
  return MultiPoly::variable(ring, algebra.base.ring()->size() + i);
}

MultiPoly AdicModule::element(const std::vector<MultiPoly>& coeffs) const {
  if (coeffs.size() != rank()) throw PreconditionError("module element needs one coefficient per generator");
  MultiPoly out(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i].in_ring(ring) * generator(i);
  return out;
}

std::int64_t AdicModule::stabilization_index(const WeightVector& chi) const {
  return algebra.stabilization_index(chi) + (minimal_weight < 0 ? -minimal_weight : minimal_weight);
}

AdicModule truncate_module(const TruncatedAlgebra& trunc, ModulePresentation presentation) {
  const RingPtr& base_ring = trunc.base.ring();
  const std::size_t n = base_ring->size();
  const std::size_t s = presentation.generator_weights.size();
  const std::size_t rank = trunc.base.action().rank();
  for (const auto& w : presentation.generator_weights) require_rank(w, rank);
  for (const auto& rel : presentation.relations)
    if (rel.size() != s) throw PreconditionError("module relation needs one coefficient per generator");

  std::string prefix = "e";
  auto clashes = [&](const std::string& p) {
    for (std::size_t i = 0; i < s; ++i)
      if (base_ring->index_of(p + std::to_string(i + 1))) return true;
    return false;
  };
  while (clashes(prefix)) prefix += "e";
  std::vector<std::string> names = base_ring->variables();
  for (std::size_t i = 0; i < s; ++i) names.push_back(prefix + std::to_string(i + 1));

  AdicModule out;
  out.algebra = trunc;
  out.presentation = std::move(presentation);
  out.ring = Ring::make(names, base_ring->order());
  std::vector<WeightVector> weights = trunc.base.action().weights();
  for (const auto& w : out.presentation.generator_weights) weights.push_back(w);
  out.weights = TorusAction(rank, weights);
  out.kempf_weights = out.weights.paired_with(trunc.cochar);

  std::vector<MultiPoly> common;
  for (const auto& g : trunc.base.defining_ideal().groebner()) common.push_back(g.in_ring(out.ring));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a; b < s; ++b) common.push_back(out.generator(a) * out.generator(b));
  for (const auto& rel : out.presentation.relations) {
    MultiPoly r = out.element(rel);
    if (!is_homogeneous(r, out.weights))
      throw PreconditionError("inhomogeneous module relation " + r.to_string());
    common.push_back(std::move(r));
  }

  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i)
    if (trunc.kempf_weights[i] > 0) pos.push_back(i);
  for (unsigned level = 0; level <= trunc.depth; ++level) {
    std::vector<MultiPoly> gens = common;
    for (const auto& m : power_of_variables(out.ring, pos, level + 1))
      for (std::size_t i = 0; i < s; ++i) gens.push_back(m * out.generator(i));
    out.levels.push_back(Ideal(out.ring, Ideal(out.ring, std::move(gens)).groebner()));
  }

  std::optional<std::int64_t> m;
  for (std::size_t i = 0; i < s; ++i)
    if (!out.levels[0].contains(out.generator(i))) {
      const std::int64_t k = out.kempf_weights[n + i];
      m = m ? std::min(*m, k) : k;
    }
  out.minimal_weight = m.value_or(0);
  return out;
}

namespace {

// Weight-chi monomials linear in the generators.
std::vector<Monomial> module_candidates(const AdicModule& module, const WeightVector& chi) {
  require_rank(chi, module.weights.rank());
  const std::size_t n = module.algebra.base.ring()->size();
  const std::int64_t nchi = module.algebra.stabilization_index(chi);
  const MonomialBox box = make_box(module.kempf_weights, n, module.algebra.options.zero_weight_degree_cap);
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < module.rank(); ++i) {
    for (auto m : monomials_of_kempf_weight(box, nchi - module.kempf_weights[n + i])) {
      m.set(n + i, 1);
      if (weight_of(m, module.weights) == chi) out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> isotypic_dims(const AdicModule& module, const WeightVector& chi) {
  const auto candidates = module_candidates(module, chi);
  std::vector<std::size_t> dims;
  for (const auto& level : module.levels) dims.push_back(count_standard(candidates, level));
  return dims;
}

std::string to_string(StabilizationStatus s) {
  switch (s) {
    case StabilizationStatus::Confirmed: return "confirmed";
    case StabilizationStatus::Inconclusive: return "inconclusive";
    case StabilizationStatus::Violated: return "violated";
  }
  return "unknown";
}

bool StabilizationReport::has_violation() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const StabilizationRow& r) { return r.status == StabilizationStatus::Violated; });
}

unsigned stabilization_onset(const std::vector<std::size_t>& dims) {
  if (dims.empty()) return 0;
  unsigned onset = unsigned(dims.size() - 1);
  while (onset > 0 && dims[onset - 1] == dims[onset]) --onset;
  return onset;
}

StabilizationReport check_stabilization(const TruncatedAlgebra& trunc, const CharacterSet& chars) {
  StabilizationReport report{trunc.depth, {}};
  for (const auto& chi : chars)
    report.rows.push_back(make_row(chi, trunc.stabilization_index(chi), isotypic_dims(trunc, chi), trunc.depth));
  require_no_violation(report);
  return report;
}

StabilizationReport check_stabilization(const AdicModule& module, const CharacterSet& chars) {
  StabilizationReport report{module.algebra.depth, {}};
  for (const auto& chi : chars)
    report.rows.push_back(
        make_row(chi, module.stabilization_index(chi), isotypic_dims(module, chi), module.algebra.depth));
  require_no_violation(report);
  return report;
}

std::vector<AlgebraizedPiece> algebraize(const TruncatedAlgebra& trunc, const CharacterSet& chars) {
  const MonomialBox box =
      make_box(trunc.kempf_weights, trunc.kempf_weights.size(), trunc.options.zero_weight_degree_cap);
  std::vector<AlgebraizedPiece> out;
  for (const auto& chi : chars) {
    const std::int64_t nchi = trunc.stabilization_index(chi);
    const unsigned level = unsigned(std::max<std::int64_t>(nchi, 0) + 1);
    if (level > trunc.depth)
      throw PreconditionError("character " + format_weight(chi) + " needs truncation depth at least " +
                              std::to_string(level) + ", have " + std::to_string(trunc.depth));
    AlgebraizedPiece piece{chi, level, {}};
    const auto& gb = trunc.levels[level].groebner();
    for (const auto& m : weight_candidates(box, trunc.base.action(), chi, nchi))
      if (is_standard(m, gb)) piece.basis.push_back(MultiPoly::monomial(trunc.base.ring(), m));
    out.push_back(std::move(piece));
  }
  return out;
}

std::size_t direct_isotypic_dim(const TruncatedAlgebra& trunc, const WeightVector& chi) {
  const std::int64_t nchi = trunc.stabilization_index(chi);
  if (nchi < 0) return 0;
  const bool has_zero = std::any_of(trunc.kempf_weights.begin(), trunc.kempf_weights.end(),
                                    [](std::int64_t k) { return k == 0; });
  // Every usable variable without Kempf weight zero contributes at least one
  // to the Kempf weight, so nchi bounds the degree.
  const unsigned bound = has_zero ? trunc.options.zero_weight_degree_cap : unsigned(nchi);
  return isotypic_component(trunc.base, {chi}, bound).dimension();
}

bool check_generation(const AdicModule& module, const std::vector<MultiPoly>& lifted, const CharacterSet& chars) {
  std::vector<MultiPoly> lifts;
  for (const auto& f : lifted) lifts.push_back(f.in_ring(module.ring));
  const Ideal base = module.levels[0].with(lifts);
  for (std::size_t i = 0; i < module.rank(); ++i)
    if (!base.contains(module.generator(i)))
      throw PreconditionError("the given elements do not generate M_0: generator " +
                              module.ring->variables()[module.algebra.base.ring()->size() + i] + " is missing");
  for (const auto& chi : chars) {
    const std::int64_t index = module.stabilization_index(chi);
    const unsigned level = unsigned(std::max<std::int64_t>(index, 0) + 1);
    if (level > module.algebra.depth)
      throw PreconditionError("character " + format_weight(chi) + " needs truncation depth at least " +
                              std::to_string(level) + ", have " + std::to_string(module.algebra.depth));
    const Ideal quotient = module.levels[level].with(lifts);
    if (count_standard(module_candidates(module, chi), quotient) != 0) return false;
  }
  return true;
}

Groundedness classify_groundedness(const std::vector<GeneratorFamily>& families, const WeightVector& cochar) {
  Groundedness out;
  std::optional<std::int64_t> m;
  for (const auto& fam : families) {
    if (fam.weight.size() != cochar.size() || (fam.infinite && fam.step.size() != cochar.size()))
      throw PreconditionError("generator family does not match the cocharacter rank");
    if (fam.infinite && !is_zero(fam.step)) {
      const std::int64_t drift = pairing(fam.step, cochar);
      const std::string family = format_weight(fam.weight) + " + i*" + format_weight(fam.step);
      if (drift < 0)
        out.diagnostic = "unbounded-below: Kempf weights of " + family + " decrease without bound";
      else if (drift > 0)
        out.diagnostic = "unbounded-above: Kempf weights of " + family + " increase without bound";
      else
        out.diagnostic = "infinitely many characters: " + family + " has constant Kempf weight " +
                         std::to_string(pairing(fam.weight, cochar));
      return out;
    }
    const std::int64_t k = pairing(fam.weight, cochar);
    m = m ? std::min(*m, k) : k;
  }
  out.grounded = true;
  out.minimal_weight = m;
  out.diagnostic = "grounded";
  return out;
}

}  // namespace bbd
