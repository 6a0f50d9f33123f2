#include "casdsl/poly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

#include "casdsl/error.hpp"

namespace casdsl {

// ---------------------------------------------------------------------------
// Monomials and orders

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > UINT32_MAX) {
      throw Error(ErrorKind::UnsupportedExponent, "exponent overflow");
    }
    out[i] = static_cast<Monomial::Exponent>(e);
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out[i] = a[i] - b[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::Lex: return "lex";
    case Kind::Graded: return "graded";
    case Kind::Elim: return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

namespace {

std::strong_ordering lex_range(const Monomial& a, const Monomial& b,
                               std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

// Total degree first; ties go to the monomial with the smaller exponent in
// the last variable where they differ.
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                   std::size_t from, std::size_t to) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = from; i < to; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = to; i-- > from;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering monomial_compare(const MonomialOrder& order,
                                      const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorKind::ArityMismatch,
                "cannot compare monomials of arity " +
                    std::to_string(a.arity()) + " and " +
                    std::to_string(b.arity()));
  }
  const std::size_t n = a.arity();
  switch (order.kind) {
    case MonomialOrder::Kind::Lex: return lex_range(a, b, 0, n);
    case MonomialOrder::Kind::Graded: return grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::Elim: {
      const std::size_t k = std::min(order.block, n);
      if (auto c = lex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Rings

Ring::Ring(NumberType domain, std::vector<std::string> variables,
           MonomialOrder order)
    : domain_(domain), variables_(std::move(variables)), order_(order) {
  std::unordered_set<std::string> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) {
      throw Error(ErrorKind::BadSymbolName,
                  "invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::BadSymbolName, "duplicate variable '" + v + "'");
    }
  }
}

Ring Ring::with_elimination_variable(const Ring& base, std::string aux) {
  Ring r;
  r.domain_ = base.domain_;
  r.variables_.reserve(base.arity() + 1);
  r.variables_.push_back(std::move(aux));
  r.variables_.insert(r.variables_.end(), base.variables_.begin(),
                      base.variables_.end());
  r.order_ = MonomialOrder::elim(1);
  return r;
}

long Ring::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  return it == variables_.end() ? -1 : it - variables_.begin();
}

Ring Ring::with_domain(NumberType domain) const {
  Ring r = *this;
  r.domain_ = domain;
  return r;
}

Ring Ring::with_order(MonomialOrder order) const {
  Ring r = *this;
  r.order_ = order;
  return r;
}

std::string Ring::to_string() const {
  std::string out = domain_ == NumberType::Rat ? "Q[" : "Z[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i > 0) out += ',';
    out += variables_[i];
  }
  out += ']';
  if (order_.kind != MonomialOrder::Kind::Graded) {
    out += ' ';
    out += order_.to_string();
  }
  return out;
}

Ring unify_rings(const Ring& a, const Ring& b) {
  std::vector<std::string> vars = a.variables();
  if (a.variables() != b.variables()) {
    std::set<std::string> all(a.variables().begin(), a.variables().end());
    all.insert(b.variables().begin(), b.variables().end());
    vars.assign(all.begin(), all.end());
  }
  return Ring(most_general_number_type(a.domain(), b.domain()),
              std::move(vars), a.order());
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ptr() != b.ring_ptr() && a.ring() != b.ring()) {
    throw Error(ErrorKind::RingMismatch, "polynomials live in different rings: " +
                                             a.ring().to_string() + " and " +
                                             b.ring().to_string());
  }
}

Number fit_domain(const Number& c, NumberType domain) {
  if (domain == NumberType::Int && !c.has_integral_value()) {
    throw Error(ErrorKind::ConversionError,
                "coefficient " + c.to_string() + " is not an integer");
  }
  return c.is_integer() ? c : Number::canonical(c.to_rational());
}

std::string monomial_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, const Number& c) {
  const std::size_t n = ring->arity();
  return term(std::move(ring), Monomial(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->arity());
  m[index] = 1;
  return term(std::move(ring), std::move(m), Number(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial mono, const Number& c) {
  Number coef = fit_domain(c, ring->domain());
  std::vector<Term> terms;
  if (!coef.is_zero()) terms.push_back({std::move(mono), std::move(coef)});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const MonomialOrder& order = ring->order();
  for (Term& t : terms) {
    if (t.mono.arity() != ring->arity()) {
      throw Error(ErrorKind::ArityMismatch, "monomial arity does not match " +
                                                ring->to_string());
    }
    t.coef = fit_domain(t.coef, ring->domain());
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const Term& a, const Term& b) {
                     return monomial_compare(order, a.mono, b.mono) > 0;
                   });
  std::vector<Term> out;
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = out.back().coef + t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef.is_zero(); });
  return Polynomial(std::move(ring), std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Number Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coef;
  }
  return Number(0);
}

Polynomial Polynomial::scaled(const Number& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  const Number k = fit_domain(c, ring_->domain());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.push_back({t.mono * m, fit_domain(t.coef * k, ring_->domain())});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Number& c) const {
  return scaled(c, Monomial(ring_->arity()));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(Number(1) / leading_coefficient());
}

Polynomial Polynomial::embed(RingPtr target) const {
  if (ring_ == target || *ring_ == *target) return Polynomial(target, terms_);
  std::vector<long> map(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    map[i] = target->index_of(ring_->variables()[i]);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m(target->arity());
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0) {
        throw Error(ErrorKind::ConversionError,
                    "variable '" + ring_->variables()[i] + "' is not in " +
                        target->to_string());
      }
      m[static_cast<std::size_t>(map[i])] = t.mono[i];
    }
    out.push_back({std::move(m), t.coef});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    const bool negative = t.coef.sign() < 0;
    if (negative) {
      out += '-';
    } else if (i > 0) {
      out += '+';
    }
    const Number mag = negative ? -t.coef : t.coef;
    if (t.mono.is_one()) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.to_string();
      out += '*';
    }
    out += monomial_string(*ring_, t.mono);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && *a.ring_ != *b.ring_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono ||
        a.terms_[i].coef != b.terms_[i].coef) {
      return false;
    }
  }
  return true;
}

Polynomial axpy(const Polynomial& a, const Number& c, const Monomial& m,
                const Polynomial& b) {
  require_same_ring(a, b);
  if (c.is_zero() || b.is_zero()) return a;
  const MonomialOrder& order = a.ring().order();
  const NumberType domain = a.ring().domain();
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial shifted = b.terms_.empty() ? Monomial() : b.terms_[0].mono * m;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    std::strong_ordering cmp = std::strong_ordering::equal;
    if (i == a.terms_.size()) {
      cmp = std::strong_ordering::less;
    } else if (j == b.terms_.size()) {
      cmp = std::strong_ordering::greater;
    } else {
      cmp = monomial_compare(order, a.terms_[i].mono, shifted);
    }
    if (cmp > 0) {
      out.push_back(a.terms_[i++]);
      continue;
    }
    Number scaled = fit_domain(b.terms_[j].coef * c, domain);
    if (cmp == 0) {
      Number sum = a.terms_[i].coef + scaled;
      if (!sum.is_zero()) out.push_back({a.terms_[i].mono, std::move(sum)});
      ++i;
    } else {
      out.push_back({shifted, std::move(scaled)});
    }
    if (++j < b.terms_.size()) shifted = b.terms_[j].mono * m;
  }
  return Polynomial(a.ring_, std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  return axpy(a, Number(1), Monomial(a.ring().arity()), b);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  return axpy(a, Number(-1), Monomial(a.ring().arity()), b);
}

Polynomial poly_neg(const Polynomial& a) {
  std::vector<Term> out = a.terms_;
  for (Term& t : out) t.coef = -t.coef;
  return Polynomial(a.ring_, std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.ring_);
  // Iterating the shorter operand keeps the number of merges small.
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  for (const Term& t : outer.terms_) out = axpy(out, t.coef, t.mono, inner);
  return out;
}

Polynomial poly_pow(const Polynomial& a, const Integer& n) {
  if (n.sign() < 0) {
    throw Error(ErrorKind::UnsupportedExponent,
                "negative exponent " + n.to_string());
  }
  if (!n.fits_ulong()) {
    throw Error(ErrorKind::UnsupportedExponent,
                "exponent too large: " + n.to_string());
  }
  unsigned long e = n.to_ulong();
  Polynomial result = Polynomial::constant(a.ring_ptr(), Number(1));
  Polynomial base = a;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Expressions <-> polynomials

namespace {

void collect(const Expr& e, std::set<std::string>& out) {
  if (e.is_symbol()) {
    out.insert(e.as_symbol().name());
  } else if (const auto* n = e.as_neg()) {
    collect(n->operand, out);
  } else if (const auto* b = e.as_binary()) {
    collect(b->lhs, out);
    collect(b->rhs, out);
  } else if (const auto* c = e.as_call()) {
    for (const Expr& a : c->args) collect(a, out);
  }
}

}  // namespace

std::vector<std::string> collect_symbols(const Expr& e) {
  std::set<std::string> names;
  collect(e, names);
  return {names.begin(), names.end()};
}

NumberType most_general_number_type_of(const Expr& e) {
  if (e.is_number()) return e.as_number().type();
  if (const auto* n = e.as_neg()) return most_general_number_type_of(n->operand);
  if (const auto* b = e.as_binary()) {
    if (b->op == ArithOp::Div) return NumberType::Rat;
    return most_general_number_type(most_general_number_type_of(b->lhs),
                                    most_general_number_type_of(b->rhs));
  }
  if (const auto* c = e.as_call()) {
    NumberType t = NumberType::Int;
    for (const Expr& a : c->args) {
      t = most_general_number_type(t, most_general_number_type_of(a));
    }
    return t;
  }
  return NumberType::Int;
}

Ring infer_ring(std::span<const Expr> es, MonomialOrder order) {
  if (es.empty()) {
    throw Error(ErrorKind::EmptyInput, "cannot infer a ring from no expressions");
  }
  std::set<std::string> names;
  NumberType domain = NumberType::Int;
  for (const Expr& e : es) {
    collect(e, names);
    domain = most_general_number_type(domain, most_general_number_type_of(e));
  }
  return Ring(domain, {names.begin(), names.end()}, order);
}

Polynomial expr_to_poly(const RingPtr& ring, const Expr& e) {
  if (e.is_number()) {
    const Number& n = e.as_number();
    if (ring->domain() == NumberType::Int && !n.is_integer()) {
      throw Error(ErrorKind::ConversionError,
                  "coefficient " + n.to_string() + " is not in " +
                      ring->to_string());
    }
    return Polynomial::constant(ring, n);
  }
  if (e.is_symbol()) {
    const long i = ring->index_of(e.as_symbol().name());
    if (i < 0) {
      throw Error(ErrorKind::ConversionError,
                  "symbol '" + e.as_symbol().name() + "' is not a variable of " +
                      ring->to_string());
    }
    return Polynomial::variable(ring, static_cast<std::size_t>(i));
  }
  if (const auto* n = e.as_neg()) return -expr_to_poly(ring, n->operand);
  if (e.as_call() != nullptr) {
    throw Error(ErrorKind::ConversionError,
                "function application '" + expr_to_string(e) +
                    "' is not a polynomial");
  }
  const BinaryNode& b = *e.as_binary();
  switch (b.op) {
    case ArithOp::Add: return expr_to_poly(ring, b.lhs) + expr_to_poly(ring, b.rhs);
    case ArithOp::Sub: return expr_to_poly(ring, b.lhs) - expr_to_poly(ring, b.rhs);
    case ArithOp::Mul: return expr_to_poly(ring, b.lhs) * expr_to_poly(ring, b.rhs);
    case ArithOp::Div: {
      const Polynomial den = expr_to_poly(ring, b.rhs);
      if (!den.is_constant()) {
        throw Error(ErrorKind::ConversionError,
                    "symbolic denominator in '" + expr_to_string(e) + "'");
      }
      if (den.is_zero()) {
        throw Error(ErrorKind::DivisionByZero,
                    "division by zero in '" + expr_to_string(e) + "'");
      }
      const Number inv = Number(1) / den.leading_coefficient();
      try {
        return expr_to_poly(ring, b.lhs).scaled(inv);
      } catch (const Error&) {
        throw Error(ErrorKind::ConversionError,
                    "'" + expr_to_string(e) + "' has coefficients outside " +
                        ring->to_string());
      }
    }
    case ArithOp::Pow: {
      if (!b.rhs.is_number()) {
        throw Error(ErrorKind::ConversionError,
                    "symbolic exponent in '" + expr_to_string(e) + "'");
      }
      const Number& k = b.rhs.as_number();
      if (!k.is_integer() || k.sign() < 0) {
        throw Error(ErrorKind::ConversionError,
                    "exponent " + k.to_string() + " in '" + expr_to_string(e) +
                        "' is not a nonnegative integer");
      }
      return poly_pow(expr_to_poly(ring, b.lhs), k.as_integer());
    }
  }
  return Polynomial(ring);
}

Expr poly_to_expr(const Polynomial& p) {
  if (p.is_zero()) return Expr(0);
  const Ring& ring = p.ring();
  std::optional<Expr> acc;
  for (const Term& t : p.terms()) {
    std::vector<Expr> factors;
    for (std::size_t i = 0; i < t.mono.arity(); ++i) {
      if (t.mono[i] == 0) continue;
      Expr factor = Expr(Sym(ring.variables()[i]));
      if (t.mono[i] != 1) factor = pow(factor, Expr(long{t.mono[i]}));
      factors.push_back(std::move(factor));
    }
    // Later terms carry their sign on the connecting operator.
    const bool subtract = acc && t.coef.sign() < 0;
    const Number coef = subtract ? -t.coef : t.coef;
    std::optional<Expr> term;
    if (factors.empty() || !(coef.is_one() || (-coef).is_one())) {
      term = Expr(coef);
    } else if (coef.sign() < 0) {
      factors.front() = -factors.front();
    }
    for (const Expr& f : factors) term = term ? *term * f : f;
    if (!acc) {
      acc = *term;
    } else {
      acc = subtract ? *acc - *term : *acc + *term;
    }
  }
  return *acc;
}

}  // namespace casdsl
