#include "bbd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

#include "bbd/error.hpp"

namespace bbd {

Rational make_rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational");
  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  auto slash = s.find('/', pos);
  auto digits = [&](std::string_view d) {
    if (d.empty() || !std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    return Integer(std::string(d));
  };
  Integer num = digits(std::string_view(s).substr(pos, slash == std::string::npos ? std::string::npos : slash - pos));
  Integer den = 1;
  if (slash != std::string::npos) {
    den = digits(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(ExponentVector exps) : exp_(std::move(exps)) {
  for (auto e : exp_) degree_ += e;
}

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  exp_.reserve(exps.size());
  for (auto e : exps) {
    exp_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += other.exp_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  r.degree_ = 0;
  for (auto e : r.exp_) r.degree_ += e;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= divisor.exp_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

// ---------------------------------------------------------------------------
// Orders

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::Elimination: {
      std::size_t k = std::min(block, a.size());
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
    case OrderKind::Grevlex:
    default:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
  }
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Elimination:
      return "elimination(" + std::to_string(block) + ")";
    case OrderKind::Grevlex:
    default:
      return "grevlex";
  }
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
      throw ParseError("invalid variable name '" + n + "'");
    for (char c : n)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw ParseError("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == n) throw ParseError("duplicate variable name '" + n + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), order);
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (!same_ring(a, b)) throw PreconditionError(std::string("ring mismatch in ") + where);
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(const RingPtr& ring, const Rational& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::size_t i) {
  Monomial m(ring->size());
  m.set(i, 1);
  return monomial(ring, std::move(m));
}

MultiPoly MultiPoly::variable(const RingPtr& ring, std::string_view name) {
  auto i = ring->index_of(name);
  if (!i) throw ParseError("unknown variable '" + std::string(name) + "'");
  return variable(ring, *i);
}

MultiPoly MultiPoly::monomial(const RingPtr& ring, Monomial m, const Rational& c) {
  MultiPoly p(ring);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

MultiPoly MultiPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  MultiPoly p(ring);
  const auto& order = ring->order();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  const auto& last = terms_.back();
  return last.monomial.is_one() ? last.coeff : Rational(0);
}

std::uint32_t MultiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

void MultiPoly::add_scaled(const MultiPoly& other, const Rational& c, const Monomial& m) {
  if (c == 0 || other.terms_.empty()) return;
  if (!ring_) ring_ = other.ring_;
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = b->monomial * m;
    if (a == terms_.end()) {
      out.push_back({std::move(bm), b->coeff * c});
      ++b;
      continue;
    }
    int cmp = order.compare(a->monomial, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({std::move(bm), b->coeff * c});
      ++b;
    } else {
      Rational s = a->coeff + b->coeff * c;
      if (s != 0) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (ring_ && other.ring_) require_same_ring(ring_, other.ring_, "addition");
  if (!other.ring_) return *this;
  add_scaled(other, 1, Monomial(other.ring_->size()));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (ring_ && other.ring_) require_same_ring(ring_, other.ring_, "subtraction");
  if (!other.ring_) return *this;
  add_scaled(other, -1, Monomial(other.ring_->size()));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring_ && b.ring_) require_same_ring(a.ring_, b.ring_, "multiplication");
  const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.is_zero() || b.is_zero()) return MultiPoly(ring);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return MultiPoly::from_terms(ring, std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.empty()) throw PreconditionError("substitution without a target ring");
  return substitute(images, images.front().ring());
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const {
  if (images.size() != ring_->size())
    throw PreconditionError("substitution needs one image per variable");
  for (const auto& img : images) require_same_ring(img.ring(), target, "substitution");
  MultiPoly result(target);
  // Cache powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& t : terms_) {
    MultiPoly term = MultiPoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < t.monomial.size(); ++v)
      if (t.monomial[v] != 0) term *= power(v, t.monomial[v]);
    result += term;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw PreconditionError("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      for (Exponent k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::in_ring(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    MultiPoly r(*this);
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map(ring_->size());
  std::vector<bool> used(ring_->size(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i]) used[i] = true;
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto j = target->index_of(ring_->variables()[i]);
    if (!j) {
      if (used[i])
        throw PreconditionError("variable '" + ring_->variables()[i] + "' missing in target ring");
      map[i] = static_cast<std::size_t>(-1);
    } else {
      map[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i]) m.set(map[i], t.monomial[i]);
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(out));
}

bool MultiPoly::uses_only(const std::function<bool(std::size_t)>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] && !allowed(i)) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = sgn(t.coeff) < 0;
    Rational mag = abs(t.coeff);
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool is_one = t.monomial.is_one();
    bool wrote = false;
    if (is_one || mag != 1) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (!t.monomial[i]) continue;
      if (wrote) out << "*";
      out << ring_->variables()[i];
      if (t.monomial[i] > 1) out << "^" << t.monomial[i];
      wrote = true;
    }
  }
  return out.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  }
  return a.terms_.empty() || same_ring(a.ring_, b.ring_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial '" + std::string(text_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    MultiPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1 / d.constant_value());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(ring_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return MultiPoly::variable(ring_, *idx);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == nvars) {
      e[i] = static_cast<Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace bbd
