#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bbd/error.hpp"
#include "bbd/ideal.hpp"
#include "bbd/linalg.hpp"
#include "bbd/poly.hpp"

using namespace bbd;

namespace {

MultiPoly P(const RingPtr& r, const char* s) { return parse_poly(s, r); }

MultiPoly random_poly(std::mt19937& rng, const RingPtr& ring, unsigned max_deg, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  MultiPoly f(ring);
  for (int k = 0; k < terms; ++k) {
    auto choices = monomials_of_degree(ring->size(), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    f += MultiPoly::monomial(ring, choices[pick(rng)], coeff(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  Rational q = parse_rational("-6/4");
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(make_rational(0, 5)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("polynomial parsing and printing") {
  auto r = Ring::make({"x1", "x2", "x3"});
  CHECK(P(r, "3/2*x1^2*x2 - x3 + 1").to_string() == "3/2*x1^2*x2 - x3 + 1");
  CHECK(P(r, "(x1 + x2)^2").to_string() == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(P(r, "x1*x2 - x2*x1").is_zero());
  CHECK(P(r, "x1/2").to_string() == "1/2*x1");
  CHECK_THROWS_AS(P(r, "x4"), ParseError);
  CHECK_THROWS_AS(P(r, "x1 +"), ParseError);
  CHECK_THROWS_AS(P(r, "x1/x2"), ParseError);
}

TEST_CASE("monomial orders") {
  auto grevlex = MonomialOrder::grevlex();
  // grevlex: x*z^... compare x^2 vs x*y at equal degree, and y^2 vs x*z
  CHECK(grevlex.compare(Monomial{2, 0, 0}, Monomial{1, 1, 0}) > 0);
  CHECK(grevlex.compare(Monomial{0, 2, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(grevlex.compare(Monomial{0, 0, 1}, Monomial{1, 0, 0}) < 0);
  auto lex = MonomialOrder::lex();
  CHECK(lex.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}) > 0);
  auto elim = MonomialOrder::elimination(1);
  CHECK(elim.compare(Monomial{1, 0, 0}, Monomial{0, 9, 9}) > 0);
  CHECK(elim.compare(Monomial{0, 2, 0}, Monomial{0, 1, 0}) > 0);
}

TEST_CASE("buchberger on the hand example") {
  auto r = Ring::make({"x", "y"}, MonomialOrder::lex());
  Ideal I(r, {P(r, "x^2 - 1"), P(r, "x*y - 1")});
  const auto& gb = I.groebner();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].to_string() == "x - y");
  CHECK(gb[1].to_string() == "y^2 - 1");
  // Membership certificates written out by hand.
  CHECK(P(r, "x*(x*y - 1) - y*(x^2 - 1)") == P(r, "-(x - y)"));
  CHECK(P(r, "y*(y - x) + (x*y - 1)") == P(r, "y^2 - 1"));
  for (const auto& g : I.generators()) CHECK(reduce_by(g, gb).is_zero());
  CHECK(normal_form(P(r, "x^2"), I).to_string() == "1");
}

TEST_CASE("trivial ideals") {
  auto r = Ring::make({"x", "y"});
  CHECK(Ideal::zero(r).groebner().empty());
  Ideal one = Ideal::unit(r);
  REQUIRE(one.groebner().size() == 1);
  CHECK(one.groebner()[0].to_string() == "1");
  CHECK(one.is_unit());
  Ideal I(r, {P(r, "x*y"), P(r, "x^2")});
  CHECK(I.reduce(MultiPoly::constant(r, 1)).to_string() == "1");
  CHECK(I.contains(P(r, "x^2*y + x*y^5")));
}

TEST_CASE("normal_form requires a cached basis") {
  auto r = Ring::make({"x"});
  Ideal I(r, {P(r, "x^2")});
  CHECK_THROWS_AS(normal_form(P(r, "x"), I), PreconditionError);
  I.groebner();
  CHECK(normal_form(P(r, "x^3 + x"), I).to_string() == "x");
}

TEST_CASE("ring mismatch is rejected") {
  auto r = Ring::make({"x", "y"});
  auto s = Ring::make({"u"});
  CHECK_THROWS_AS(Ideal(r, {P(r, "x"), P(s, "u")}), PreconditionError);
  CHECK_THROWS_AS(ideal_equal(Ideal(r, {P(r, "x")}), Ideal(s, {P(s, "u")})), PreconditionError);
}

TEST_CASE("ideal equality") {
  auto r = Ring::make({"x", "y"});
  CHECK(ideal_equal(Ideal(r, {P(r, "x"), P(r, "y")}), Ideal(r, {P(r, "y"), P(r, "x")})));
  CHECK_FALSE(ideal_equal(Ideal(r, {P(r, "x")}), Ideal(r, {P(r, "x^2")})));
  CHECK(ideal_equal(Ideal(r, {P(r, "x + y"), P(r, "y")}), Ideal(r, {P(r, "x"), P(r, "y")})));
}

TEST_CASE("elimination") {
  auto r = Ring::make({"t", "x", "y"});
  Ideal cusp(r, {P(r, "x - t^2"), P(r, "y - t^3")});
  Ideal e = elimination_ideal(cusp, {"t"});
  CHECK(ideal_equal(e, Ideal(r, {P(r, "y^2 - x^3")})));
  // substitution check: every generator vanishes on (t^2, t^3)
  for (const auto& g : e.generators()) {
    auto img = g.substitute({P(r, "t"), P(r, "t^2"), P(r, "t^3")});
    CHECK(img.is_zero());
  }
  CHECK(elimination_ideal(Ideal(r, {P(r, "x - t")}), {"t"}).is_zero());
  CHECK(elimination_ideal(Ideal::unit(r), {"t", "x"}).is_unit());
}

TEST_CASE("subalgebra membership") {
  auto g = Ring::make({"t", "t_inv"});
  Ideal rel(g, {P(g, "t*t_inv - 1")});
  auto e = subalgebra_membership(P(g, "t^2"), rel, {P(g, "t")});
  REQUIRE(e);
  CHECK(e->to_string() == "T1^2");
  CHECK_FALSE(subalgebra_membership(P(g, "t_inv"), rel, {P(g, "t")}));

  auto gl = Ring::make({"x11", "x12", "x21", "x22", "d"});
  Ideal relgl(gl, {P(gl, "d*(x11*x22 - x12*x21) - 1")});
  std::vector<MultiPoly> gens = {P(gl, "x11"), P(gl, "x12"), P(gl, "x21"), P(gl, "x22")};
  auto one = subalgebra_membership(P(gl, "(x11*x22 - x12*x21)*d"), relgl, gens);
  REQUIRE(one);
  CHECK(one->to_string() == "1");
  CHECK_FALSE(subalgebra_membership(P(gl, "d"), relgl, gens));

  CHECK_THROWS_AS(subalgebra_membership(P(g, "t"), Ideal::unit(g), {P(g, "t")}), InvariantError);
}

TEST_CASE("subalgebra expressions evaluate back") {
  auto g = Ring::make({"a", "b", "c"});
  Ideal rel(g, {P(g, "a*c - 1")});
  std::vector<MultiPoly> gens = {P(g, "a + b"), P(g, "b^2")};
  SubalgebraMembership sm(rel, gens);
  MultiPoly f = P(g, "(a + b)^3 - 2*b^4 + 5");
  auto e = sm.express(f);
  REQUIRE(e);
  CHECK(rel.reduce(e->substitute(gens, g) - f).is_zero());
}

TEST_CASE("subspace intersection") {
  auto e = [](int i) {
    Vector v(3, 0);
    v[i] = 1;
    return v;
  };
  LinearSubspace a(3, {e(0), e(1)}), b(3, {e(1), e(2)});
  CHECK(subspace_intersect(a, b) == LinearSubspace(3, {e(1)}));
  CHECK(subspace_intersect(a, a) == a);
  Vector p = {1, 1, 0}, m = {1, -1, 0};
  CHECK(subspace_intersect(LinearSubspace(3, {p}), LinearSubspace(3, {m})).dim() == 0);
  CHECK_THROWS_AS(subspace_intersect(LinearSubspace(3, {p}), LinearSubspace(2, {})), PreconditionError);
}

TEST_CASE("property: normal forms respect multiplication") {
  std::mt19937 rng(11);
  auto r = Ring::make({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly(rng, r, 3, 3));
    Ideal I(r, gens);
    MultiPoly f = random_poly(rng, r, 2, 3), g = random_poly(rng, r, 2, 3);
    CHECK(I.reduce(f * g) == I.reduce(I.reduce(f) * I.reduce(g)));
    for (const auto& h : gens) CHECK(I.reduce(h).is_zero());
    // generator order and scaling do not change the reduced basis
    std::vector<MultiPoly> shuffled(gens.rbegin(), gens.rend());
    for (auto& h : shuffled) h *= Rational(-2);
    Ideal J(r, shuffled);
    CHECK(I.groebner() == J.groebner());
    CHECK(ideal_equal(I, J));
  }
}

TEST_CASE("property: intersections are maximal common subspaces") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  std::uniform_int_distribution<int> cnt(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4;
    auto rnd = [&](int k) {
      Matrix m;
      for (int i = 0; i < k; ++i) {
        Vector v(n);
        for (auto& x : v) x = c(rng);
        m.push_back(v);
      }
      return m;
    };
    Matrix ma = rnd(cnt(rng)), mb = rnd(cnt(rng));
    LinearSubspace a(n, ma), b(n, mb);
    LinearSubspace meet = subspace_intersect(a, b);
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    // brute force: solve sum s_i a_i - sum t_j b_j = 0, image of s is the meet
    Matrix stack;
    for (std::size_t col = 0; col < n; ++col) {
      Vector row;
      for (const auto& v : a.basis()) row.push_back(v[col]);
      for (const auto& v : b.basis()) row.push_back(-v[col]);
      stack.push_back(row);
    }
    const std::size_t unknowns = a.dim() + b.dim();
    std::size_t expect = unknowns == 0 ? 0 : unknowns - rank(stack, unknowns);
    CHECK(meet.dim() == expect);
  }
}
