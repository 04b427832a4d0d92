// Acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bbd/bb.hpp"
#include "bbd/cli.hpp"
#include "bbd/error.hpp"
#include "bbd/formal.hpp"

using namespace bbd;

namespace {

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

bool report(int number, const std::string& title, const Tally& t, const std::string& extra = "") {
  const bool ok = t.failures == 0 && t.cases > 0;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " (" << t.cases << " checks";
  if (!extra.empty()) std::cout << ", " << extra;
  if (!ok) std::cout << ", " << t.failures << " failed; first: " << t.first_failure;
  std::cout << ")" << std::endl;
  return ok;
}

MultiPoly P(const RingPtr& r, const std::string& s) { return parse_poly(s, r); }

Ideal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<MultiPoly> g;
  for (const auto& s : gens) g.push_back(P(r, s));
  return Ideal(r, g);
}

std::vector<std::string> names(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string describe(const std::vector<WeightVector>& ws) {
  std::string s;
  for (const auto& w : ws) s += format_weight(w);
  return s;
}

// ---------------------------------------------------------------------------
// Corpus of BB problems shared by criteria 4 and 7.

struct BBCase {
  std::string label;
  GradedAlgebra alg;
  MonoidPresentation monoid;
};

std::vector<BBCase> bb_corpus() {
  std::vector<BBCase> out;
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> w(-3, 3), nv(1, 4), coin(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = nv(rng);
    auto ring = Ring::make(names("x", n));
    std::vector<WeightVector> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back({w(rng)});
    // a monomial relation keeps the ideal homogeneous
    std::vector<MultiPoly> gens;
    if (coin(rng)) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, Exponent(coin(rng) + (i == 0)));
      gens.push_back(MultiPoly::monomial(ring, m));
    }
    out.push_back({"gm-random-" + std::to_string(trial), GradedAlgebra(Ideal(ring, gens), TorusAction(1, weights)),
                   torus_monoid(torus_group(1, weights), 1, {{1}})});
  }
  auto xy = Ring::make({"x", "y"});
  out.push_back({"hyperbola", GradedAlgebra(ideal_of(xy, {"x*y - 1"}), TorusAction(1, {{1}, {-1}})),
                 torus_monoid(torus_group(1, {{1}, {-1}}), 1, {{1}})});
  out.push_back({"cusp-trivial", GradedAlgebra(ideal_of(xy, {"x^2 - y^3"}), TorusAction(1, {{0}, {0}})),
                 torus_monoid(torus_group(1, {{0}, {0}}), 1, {{1}})});
  out.push_back({"weighted-cusp", GradedAlgebra(ideal_of(xy, {"x^3 - y^2"}), TorusAction(1, {{2}, {3}})),
                 torus_monoid(torus_group(1, {{2}, {3}}), 1, {{1}})});
  auto xyz = Ring::make({"x", "y", "z"});
  std::vector<WeightVector> t2 = {{1, 0}, {0, 1}, {-1, 1}};
  out.push_back({"t2-plane", GradedAlgebra(ideal_of(xyz, {"x*z - y"}), TorusAction(2, t2)),
                 torus_monoid(torus_group(2, t2), 2, {{1, 0}, {0, 1}})});
  out.push_back({"t2-toric", GradedAlgebra(Ideal::zero(xyz), TorusAction(2, t2)),
                 torus_monoid(torus_group(2, t2), 2, {{1, 0}, {1, 1}})});
  auto a2 = Ring::make(names("x", 2));
  const std::vector<WeightVector> e2 = {{1, 0}, {0, 1}};
  out.push_back({"gl2-std", GradedAlgebra(Ideal::zero(a2), TorusAction(2, e2)),
                 matrix_monoid(general_linear_group(2, LinearRep::Standard), 2)});
  out.push_back({"gl2-std-conic", GradedAlgebra(ideal_of(a2, {"x1^2", "x1*x2", "x2^2"}), TorusAction(2, e2)),
                 matrix_monoid(general_linear_group(2, LinearRep::Standard), 2)});
  out.push_back({"gl2-dual", GradedAlgebra(Ideal::zero(a2), TorusAction(2, {{-1, 0}, {0, -1}})),
                 matrix_monoid(general_linear_group(2, LinearRep::Dual), 2)});
  auto a4 = Ring::make({"x1", "x2", "y1", "y2"});
  out.push_back({"gl2-sum", GradedAlgebra(Ideal::zero(a4), TorusAction(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}})),
                 matrix_monoid(general_linear_group(2, LinearRep::StandardPlusDual), 2)});
  out.push_back({"gl2-sum-pairing",
                 GradedAlgebra(ideal_of(a4, {"x1*y1 + x2*y2"}), TorusAction(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}})),
                 matrix_monoid(general_linear_group(2, LinearRep::StandardPlusDual), 2)});
  auto a3 = Ring::make(names("x", 3));
  out.push_back({"gl3-std", GradedAlgebra(Ideal::zero(a3), TorusAction(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                 matrix_monoid(general_linear_group(3, LinearRep::Standard), 3)});
  out.push_back({"upper-tri", GradedAlgebra(ideal_of(a2, {"x2^2"}), TorusAction(2, e2)), upper_triangular_monoid()});
  out.push_back({"upper-tri-plane", GradedAlgebra(Ideal::zero(a2), TorusAction(2, e2)), upper_triangular_monoid()});
  return out;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  Tally t;
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> w(-3, 3), nv(1, 4);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = nv(rng);
    auto ring = Ring::make(names("x", n));
    std::vector<WeightVector> weights;
    std::vector<MultiPoly> negative, nonzero;
    for (std::size_t i = 0; i < n; ++i) {
      const int wi = w(rng);
      weights.push_back({wi});
      if (wi < 0) negative.push_back(MultiPoly::variable(ring, i));
      if (wi != 0) nonzero.push_back(MultiPoly::variable(ring, i));
    }
    auto monoid = torus_monoid(torus_group(1, weights), 1, {{1}});
    auto k = find_kempf_opsg(monoid);
    const std::string label = "weights " + describe(weights);
    t.check(k.has_value(), label + ": no Kempf subgroup");
    if (!k) continue;
    BBResult r = assemble_bb(GradedAlgebra(Ideal::zero(ring), TorusAction(1, weights)), monoid.group, monoid, *k);
    t.check(ideal_equal(r.attractor, Ideal(ring, negative)), label + ": attractor");
    t.check(ideal_equal(r.fixed, Ideal(ring, nonzero)), label + ": fixed");
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(seconds < 10.0, "runtime " + std::to_string(seconds) + " s");
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << seconds << " s of 10 s";
  return report(1, "classical BB on affine space, 200 random G_m cases", t, time.str());
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-2, 2);
  for (;;) {
    Matrix m(n, Vector(n));
    for (auto& row : m)
      for (auto& x : row) x = c(rng);
    if (rank(m, n) == n) return m;
  }
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug(n, Vector(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m[r][c];
    aug[r][n + r] = 1;
  }
  rref(aug, 2 * n);
  Matrix out(n, Vector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
  return out;
}

bool criterion2() {
  Tally t;
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> w(-2, 2), dim(1, 5), rk(1, 2), shape(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = dim(rng), r = rk(rng);
    std::vector<WeightVector> weights;
    for (std::size_t i = 0; i < n; ++i) {
      WeightVector v;
      for (std::size_t a = 0; a < r; ++a) v.push_back(w(rng));
      weights.push_back(v);
    }
    // closed-form membership for each weight monoid
    std::vector<WeightVector> gens;
    std::function<bool(const WeightVector&)> in_s;
    const int kind = r == 1 ? shape(rng) % 2 : shape(rng);
    if (r == 1 && kind == 0) {
      gens = {{1}};
      in_s = [](const WeightVector& v) { return v[0] >= 0; };
    } else if (r == 1) {
      gens = {{2}, {3}};
      in_s = [](const WeightVector& v) { return v[0] >= 0 && v[0] != 1; };
    } else if (kind == 0) {
      gens = {{1, 0}, {0, 1}};
      in_s = [](const WeightVector& v) { return v[0] >= 0 && v[1] >= 0; };
    } else if (kind == 1) {
      gens = {{1, 0}, {1, 1}};
      in_s = [](const WeightVector& v) { return v[0] >= v[1] && v[1] >= 0; };
    } else {
      gens = {{1, 0}, {-1, 0}, {0, 1}};
      in_s = [](const WeightVector& v) { return v[1] >= 0; };
    }
    auto torus = torus_group(r, weights);
    auto monoid = torus_monoid(torus, r, gens);
    Matrix p = random_invertible(rng, n), q = inverse(p);
    // rho = P D P^-1 mixes the weight lines; the invariant coordinates are the rows of P^-1
    PolyMatrix rho(n, std::vector<MultiPoly>(n, MultiPoly(torus.ring)));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) rho[j][i] += torus.action[k][k] * (p[j][k] * q[k][i]);
    Matrix expect;
    for (std::size_t k = 0; k < n; ++k)
      if (in_s(weights[k])) expect.push_back(q[k]);
    UniversalQuotient uq = universal_quotient(rho, monoid);
    t.check(uq.u == LinearSubspace(n, expect), "weights " + describe(weights) + " monoid " + describe(gens));
    t.check(uq.kernel == uq.u.annihilator(), "kernel is the annihilator");
  }
  return report(2, "universal quotient equals the weight spaces in S, 100 split-torus cases", t);
}

bool criterion3() {
  Tally t;
  auto a2 = Ring::make(names("x", 2));
  auto a4 = Ring::make({"x1", "x2", "y1", "y2"});
  struct Case {
    const char* label;
    LinearRep rep;
    GradedAlgebra alg;
    Ideal expected;
  };
  const std::vector<Case> cases = {
      {"standard", LinearRep::Standard, GradedAlgebra(Ideal::zero(a2), TorusAction(2, {{1, 0}, {0, 1}})),
       Ideal::zero(a2)},
      {"dual", LinearRep::Dual, GradedAlgebra(Ideal::zero(a2), TorusAction(2, {{-1, 0}, {0, -1}})),
       ideal_of(a2, {"x1", "x2"})},
      {"standard plus dual", LinearRep::StandardPlusDual,
       GradedAlgebra(Ideal::zero(a4), TorusAction(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}})),
       ideal_of(a4, {"y1", "y2"})},
  };
  for (const auto& c : cases) {
    auto m = matrix_monoid(general_linear_group(2, c.rep), 2);
    Ideal a = attractor_ideal_reductive(c.alg, m.group, m);
    t.check(ideal_equal(a, c.expected), std::string(c.label) + ": hand-derived ideal");
    t.check(ideal_equal(g_saturate(a, m.group), a), std::string(c.label) + ": saturation fixed point");
    t.check(is_g_stable(a, m.group), std::string(c.label) + ": G-stable");
    t.check(is_gbar_stable(a, m), std::string(c.label) + ": monoid-stable");
  }
  return report(3, "reductive recipe for (GL_2, M_2) on standard, dual and sum", t);
}

std::vector<std::pair<std::string, BBResult>> solve_corpus(const std::vector<BBCase>& corpus, Tally& t) {
  std::vector<std::pair<std::string, BBResult>> out;
  for (const auto& c : corpus) {
    auto k = find_kempf_opsg(c.monoid);
    t.check(k.has_value(), c.label + ": no Kempf subgroup");
    if (!k) continue;
    try {
      out.emplace_back(c.label, assemble_bb(c.alg, c.monoid.group, c.monoid, *k));
    } catch (const Error& e) {
      t.check(false, c.label + ": " + e.what());
    }
  }
  return out;
}

bool criterion4(const std::vector<std::pair<std::string, BBResult>>& solved, std::size_t corpus_size) {
  Tally t;
  t.check(solved.size() == corpus_size, "every corpus case assembles");
  for (const auto& [label, r] : solved) {
    t.check(same_map(compose(r.limit_map, r.section_map), identity_map(r.fixed)), label + ": section identity");
    t.check(r.fixed.contains(r.attractor), label + ": fixed contains attractor");
    t.check(r.limit_map.well_defined() && r.section_map.well_defined(), label + ": maps well defined");
  }
  return report(4, "limit after section is the identity over the BB corpus", t,
                std::to_string(solved.size()) + " cases");
}

bool criterion7(const std::vector<BBCase>& corpus, const std::vector<std::pair<std::string, BBResult>>& solved) {
  Tally t;
  for (const auto& [label, r] : solved) {
    const BBCase* c = nullptr;
    for (const auto& cand : corpus)
      if (cand.label == label) c = &cand;
    Coaction co(c->monoid.group, r.fixed.ring());
    std::vector<MultiPoly> gens;
    for (const auto& g : c->monoid.group.relations.generators()) gens.push_back(co.lift_group(g));
    for (const auto& g : r.fixed.generators()) gens.push_back(co.lift_space(g));
    Ideal both(co.product_ring(), gens);
    for (std::size_t j = 0; j < r.fixed.ring()->size(); ++j) {
      MultiPoly x = MultiPoly::variable(r.fixed.ring(), j);
      t.check(both.contains(co.coact(x) - co.lift_space(x)), label + ": variable " + std::to_string(j));
    }
  }
  return report(7, "coaction is the identity on every fixed-point quotient", t,
                std::to_string(solved.size()) + " cases");
}

// ---------------------------------------------------------------------------
// Formal corpus for criteria 5 and 6.

struct FormalCase {
  std::string label;
  GradedAlgebra alg;
};

std::vector<FormalCase> formal_corpus() {
  std::vector<FormalCase> out;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nv(1, 3), wt(1, 3), coeff(1, 3);
  const std::vector<std::string> all{"x", "y", "z"};
  auto x = Ring::make({"x"});
  out.push_back({"line", GradedAlgebra(Ideal::zero(x), TorusAction(1, {{1}}))});
  while (out.size() < 100) {
    const std::size_t n = nv(rng);
    auto ring = Ring::make({all.begin(), all.begin() + n});
    std::vector<WeightVector> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back({wt(rng)});
    TorusAction action(1, w);
    const auto mons = monomials_up_to_degree(n, 4);
    std::uniform_int_distribution<std::size_t> pick(1, mons.size() - 1);
    std::vector<MultiPoly> gens;
    const Monomial a = mons[pick(rng)];
    if (a.degree() >= 2) gens.push_back(MultiPoly::monomial(ring, a));
    const Monomial b = mons[pick(rng)];
    for (std::size_t tries = 0; tries < 4 * mons.size(); ++tries) {
      const Monomial c = mons[pick(rng)];
      if (!(c == b) && weight_of(c, action) == weight_of(b, action)) {
        gens.push_back(MultiPoly::monomial(ring, b) - MultiPoly::monomial(ring, c, coeff(rng)));
        break;
      }
    }
    Ideal j(ring, gens);
    out.push_back({"algebra " + std::to_string(out.size()) + " " + describe(w) + " J=" +
                       [&] {
                         std::string s;
                         for (const auto& g : gens) s += "[" + g.to_string() + "]";
                         return s;
                       }(),
                   GradedAlgebra(j, action)});
  }
  return out;
}

constexpr unsigned kDepth = 8;

bool criterion5(const std::vector<FormalCase>& corpus) {
  Tally t;
  std::size_t attained_alg = 0, attained_mod = 0, conclusive = 0;
  bool line_attained = false;
  CharacterSet chars;
  for (std::int64_t c = 0; c <= std::int64_t(kDepth); ++c) chars.insert({c});
  for (const auto& fc : corpus) {
    TruncatedAlgebra tr = truncate(fc.alg, {1}, kDepth);
    try {
      StabilizationReport rep = check_stabilization(tr, chars);
      for (const auto& row : rep.rows) {
        if (row.status == StabilizationStatus::Inconclusive) continue;
        ++conclusive;
        t.check(std::int64_t(row.observed) <= row.predicted,
                fc.label + " chi " + format_weight(row.chi) + ": onset " + std::to_string(row.observed));
        if (row.attained() && row.predicted > 0) ++attained_alg;
        if (fc.label == "line" && row.chi == WeightVector{2} && row.attained()) line_attained = true;
      }
    } catch (const InvariantError& e) {
      t.check(false, fc.label + ": " + e.what());
    }
  }
  t.check(line_attained, "k[x] attains its bound at chi = 2");
  t.check(attained_alg > 0, "no algebra attains its bound");

  std::mt19937 rng(55);
  std::uniform_int_distribution<int> rankd(1, 2), mpick(0, 2), spread(0, 2), coin(0, 1);
  std::size_t modules = 0;
  for (std::size_t i = 0; modules < 50; ++i) {
    const FormalCase& fc = corpus[i % corpus.size()];
    TruncatedAlgebra tr = truncate(fc.alg, {1}, kDepth, {8, false});
    const std::int64_t m = -mpick(rng);
    const std::size_t s = rankd(rng);
    ModulePresentation pres;
    for (std::size_t g = 0; g < s; ++g) pres.generator_weights.push_back({g == 0 ? m : m + spread(rng)});
    // one relation per generator: a positive-degree monomial times it
    const RingPtr& ring = fc.alg.ring();
    for (std::size_t g = 0; g < s; ++g) {
      if (!coin(rng)) continue;
      std::vector<MultiPoly> rel(s, MultiPoly(ring));
      Monomial mono(ring->size());
      mono.set(std::size_t(spread(rng)) % ring->size(), Exponent(1 + coin(rng)));
      rel[g] = MultiPoly::monomial(ring, mono);
      pres.relations.push_back(rel);
    }
    AdicModule mod = truncate_module(tr, pres);
    ++modules;
    const std::string label = fc.label + " module m=" + std::to_string(m);
    t.check(mod.minimal_weight == m, label + ": minimal weight " + std::to_string(mod.minimal_weight));
    try {
      StabilizationReport rep = check_stabilization(mod, chars);
      for (const auto& row : rep.rows) {
        if (row.status == StabilizationStatus::Inconclusive) continue;
        ++conclusive;
        t.check(std::int64_t(row.observed) <= row.predicted,
                label + " chi " + format_weight(row.chi) + ": onset " + std::to_string(row.observed));
        if (row.attained() && row.predicted > 0) ++attained_mod;
      }
    } catch (const InvariantError& e) {
      t.check(false, label + ": " + e.what());
    }
  }
  t.check(attained_mod > 0, "no module attains its bound");
  return report(5, "stabilization onsets within n_chi and n_chi + |m|, 100 algebras and 50 modules at depth 8", t,
                std::to_string(conclusive) + " conclusive rows, bound attained in " + std::to_string(attained_alg) +
                    " algebra rows and " + std::to_string(attained_mod) + " module rows");
}

bool criterion6(const std::vector<FormalCase>& corpus) {
  Tally t;
  for (const auto& fc : corpus) {
    TruncatedAlgebra tr = truncate(fc.alg, {1}, kDepth, {8, false});
    CharacterSet chars;
    for (std::int64_t c = 0; c + 1 <= std::int64_t(kDepth); ++c) chars.insert({c});
    for (const auto& piece : algebraize(tr, chars)) {
      // independent count: normal forms modulo J in the untruncated algebra
      const std::size_t direct = isotypic_component(fc.alg, {piece.chi}, unsigned(piece.chi[0])).dimension();
      t.check(piece.basis.size() == direct, fc.label + " chi " + format_weight(piece.chi) + ": " +
                                                std::to_string(piece.basis.size()) + " vs " + std::to_string(direct));
    }
  }
  return report(6, "algebraize after truncate reproduces every isotypic dimension", t);
}

bool criterion8() {
  Tally t;
  auto m2 = matrix_monoid(general_linear_group(2, LinearRep::Standard), 2);
  auto m3 = matrix_monoid(general_linear_group(3, LinearRep::Standard), 3);
  auto k2 = find_kempf_opsg(m2), k3 = find_kempf_opsg(m3), kb = find_kempf_opsg(upper_triangular_monoid());
  t.check(k2 && k2->cochar == WeightVector{1}, "M_2");
  t.check(k3 && k3->cochar == WeightVector{1}, "M_3");
  t.check(kb && kb->cochar == WeightVector{1, 1}, "upper triangular");
  auto opposite = torus_monoid(torus_group(1, {{1}}), 1, {{1}, {-1}});
  t.check(!find_kempf_opsg(opposite), "opposite weights");
  for (unsigned d = 1; d <= 4; ++d)
    t.check(center_invariants_trivial(m2, d), "center invariants of M_2 up to degree " + std::to_string(d));
  return report(8, "Kempf search on M_2, M_3, upper triangular and opposite weights", t);
}

bool criterion9() {
  Tally t;
  auto run = [](const std::vector<std::string>& args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
  };
  const std::vector<std::string> commands = {"bb", "kempf", "stabilize", "algebraize", "universal-quotient", "fixed"};
  t.check(run({"catalog", "list"}, "") == run({"catalog", "list"}, ""), "catalog list");
  for (const auto& e : cli::catalog()) {
    t.check(run({"catalog", "show", e.key}, "") == run({"catalog", "show", e.key}, ""), "catalog show " + e.key);
    const std::string doc = "{\"catalog\": \"" + e.key + "\"}";
    for (const auto& c : commands) {
      const std::string first = run({c}, doc);
      for (int rep = 0; rep < 2; ++rep) t.check(run({c}, doc) == first, c + " on " + e.key);
    }
  }
  return report(9, "byte-identical CLI output on the full catalog", t,
                std::to_string(cli::catalog().size()) + " entries");
}

}  // namespace

int main() {
  bool ok = true;
  try {
    ok &= criterion1();
    ok &= criterion2();
    ok &= criterion3();
    const auto corpus = bb_corpus();
    Tally solving;
    const auto solved = solve_corpus(corpus, solving);
    if (solving.failures) std::cout << "corpus: " << solving.first_failure << std::endl;
    ok &= criterion4(solved, corpus.size());
    const auto formal = formal_corpus();
    ok &= criterion5(formal);
    ok &= criterion6(formal);
    ok &= criterion7(corpus, solved);
    ok &= criterion8();
    ok &= criterion9();
  } catch (const std::exception& e) {
    std::cout << "FAIL unexpected error: " << e.what() << std::endl;
    return 1;
  }
  return ok ? 0 : 1;
}
