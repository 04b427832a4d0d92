// Exact multivariate polynomials over the rationals.
//
// A Ring is an ordered list of variable names together with a monomial
// order. Polynomials keep their terms sorted in descending order under the
// ring's order and never store zero coefficients, so structural equality is
// mathematical equality and printing is canonical.
#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);
/// Parses "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);

using Exponent = std::uint16_t;
using ExponentVector = boost::container::small_vector<Exponent, 12>;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(ExponentVector exps);
  Monomial(std::initializer_list<unsigned> exps);

  std::size_t size() const { return exp_.size(); }
  Exponent operator[](std::size_t i) const { return exp_[i]; }
  const ExponentVector& exponents() const { return exp_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

 private:
  ExponentVector exp_;
  std::uint32_t degree_ = 0;
};

enum class OrderKind { Grevlex, Lex, Elimination };

/// Elimination(k): the first k variables form a block compared first by
/// grevlex; ties are broken by grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::Elimination, k}; }

  /// Returns <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(std::vector<std::string> names, MonomialOrder order);

  static RingPtr make(std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

/// Same variables and same order.
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

struct Term {
  Monomial monomial;
  Rational coeff;
};

class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const RingPtr& ring, const Rational& c);
  static MultiPoly variable(const RingPtr& ring, std::size_t i);
  static MultiPoly variable(const RingPtr& ring, std::string_view name);
  static MultiPoly monomial(const RingPtr& ring, Monomial m, const Rational& c = 1);
  /// Sorts and merges arbitrary terms.
  static MultiPoly from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value when is_constant().
  Rational constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  /// this + c * m * other
  void add_scaled(const MultiPoly& other, const Rational& c, const Monomial& m);
  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;
  MultiPoly monic() const;

  /// Ring homomorphism k[vars] -> target sending variable i to images[i].
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  MultiPoly substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Re-expresses the polynomial in a ring with (a superset of) the same
  /// variable names, possibly ordered differently.
  MultiPoly in_ring(const RingPtr& target) const;
  /// True if every term only involves variables for which `allowed` holds.
  bool uses_only(const std::function<bool(std::size_t)>& allowed) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Grammar: sums of products of rational numbers, variables, powers and
/// parenthesized subexpressions, e.g. `3/2*x1^2*x2 - x3 + 1`.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

/// All monomials in `nvars` variables of total degree exactly `degree`,
/// in ascending lexicographic exponent order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace bbd
