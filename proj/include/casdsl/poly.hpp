#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "casdsl/expr.hpp"
#include "casdsl/number.hpp"

namespace casdsl {

/// Exponent vector; its length is the arity of the owning ring.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;

  /// True when `other` divides this monomial.
  bool divisible_by(const Monomial& other) const;
  /// Coprime: no variable occurs in both.
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; `b` must divide `a`.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// LEX, graded reverse lexicographic, or ELIM(k): lex on the first k
/// variables, ties broken by grevlex on the rest. Variable 0 is the most
/// significant.
struct MonomialOrder {
  enum class Kind { Lex, Graded, Elim };

  Kind kind = Kind::Graded;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder graded() { return {Kind::Graded, 0}; }
  static MonomialOrder elim(std::size_t k) { return {Kind::Elim, k}; }

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Throws ArityMismatch when the exponent vectors differ in length.
std::strong_ordering monomial_compare(const MonomialOrder& order,
                                      const Monomial& a, const Monomial& b);

/// Coefficient domain, ordered variable list and monomial order.
class Ring {
 public:
  /// Validates that names are distinct identifiers.
  Ring(NumberType domain, std::vector<std::string> variables,
       MonomialOrder order = MonomialOrder::graded());

  /// `base` with an auxiliary variable prepended as the greatest variable
  /// under ELIM(1). The auxiliary name need not be an identifier.
  static Ring with_elimination_variable(const Ring& base, std::string aux);

  NumberType domain() const { return domain_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  const MonomialOrder& order() const { return order_; }

  /// Index of `name`, or -1.
  long index_of(const std::string& name) const;

  Ring with_domain(NumberType domain) const;
  Ring with_order(MonomialOrder order) const;

  /// `Q[w,x,y,z]`, with ` lex` appended for non-graded orders.
  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring() = default;

  NumberType domain_ = NumberType::Int;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Ring r) { return std::make_shared<const Ring>(std::move(r)); }

struct Term {
  Monomial mono;
  Number coef;
};

/// Sparse multivariate polynomial. Terms are kept sorted strictly descending
/// in the ring's order with no zero coefficients, so the leading term is the
/// first one.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Number& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, Monomial mono, const Number& c);
  /// Sorts, combines like terms and drops zeros. Coefficients must lie in
  /// the ring's domain (ConversionError otherwise).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Preconditions: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Number& leading_coefficient() const { return terms_.front().coef; }

  /// Everything but the leading term.
  Polynomial tail() const;

  /// Coefficient of `m`, zero when absent.
  Number coefficient(const Monomial& m) const;

  Polynomial scaled(const Number& c, const Monomial& m) const;
  Polynomial scaled(const Number& c) const;
  /// Divides through by the leading coefficient. Precondition: nonzero and
  /// ring domain RAT.
  Polynomial monic() const;

  /// Same terms viewed in `target`; variables are matched by name. Throws
  /// ConversionError when a used variable is missing or a coefficient does
  /// not fit the target domain.
  Polynomial embed(RingPtr target) const;

  /// Canonical form such as `x^3*y+x^2*z-5/9`.
  std::string to_string() const;

  /// Same ring signature and identical terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  friend Polynomial poly_add(const Polynomial&, const Polynomial&);
  friend Polynomial poly_sub(const Polynomial&, const Polynomial&);
  friend Polynomial poly_mul(const Polynomial&, const Polynomial&);
  friend Polynomial poly_neg(const Polynomial&);
  friend Polynomial axpy(const Polynomial&, const Number&, const Monomial&,
                         const Polynomial&);

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// All throw RingMismatch when the ring signatures differ.
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
/// Repeated squaring; `a^0` is 1.
Polynomial poly_pow(const Polynomial& a, const Integer& n);
/// `a + c*m*b`, the update step of reduction.
Polynomial axpy(const Polynomial& a, const Number& c, const Monomial& m,
                const Polynomial& b);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return poly_add(a, b);
}
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return poly_sub(a, b);
}
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return poly_mul(a, b);
}
inline Polynomial operator-(const Polynomial& a) { return poly_neg(a); }

/// Every symbol name in `e` (including inside call arguments), sorted
/// ascending without duplicates.
std::vector<std::string> collect_symbols(const Expr& e);

/// RAT if `e` contains a rational literal or any `/` node, INT otherwise.
NumberType most_general_number_type_of(const Expr& e);

/// Union of the symbols (sorted) and join of the number types over `es`.
/// Throws EmptyInput for an empty list.
Ring infer_ring(std::span<const Expr> es,
                MonomialOrder order = MonomialOrder::graded());

/// Polynomial image of `e` in `ring`. Throws ConversionError naming the
/// offending symbol or subterm: unknown symbols, function calls, symbolic or
/// negative exponents, non-constant denominators, and coefficients outside
/// the ring's domain.
Polynomial expr_to_poly(const RingPtr& ring, const Expr& e);

/// Expression tree of a polynomial: a sum of `coef*monomial` terms in
/// descending order.
Expr poly_to_expr(const Polynomial& p);

/// Smallest ring containing both: union of variables (sorted ascending
/// unless the lists are identical), joined domain, and `a`'s order.
Ring unify_rings(const Ring& a, const Ring& b);

}  // namespace casdsl
