#include <set>

#include "casdsl/error.hpp"
#include "casdsl/interpreter.hpp"

namespace casdsl {

Value Value::from_expr(const Expr& e) {
  if (e.is_number()) return Value(e.as_number());
  if (e.is_symbol()) return Value(e.as_symbol());
  return Value(e);
}

bool Value::is_symbolic() const {
  return is<Number>() || is<Sym>() || is<Expr>();
}

Expr Value::to_expr() const {
  if (const auto* n = get_if<Number>()) return Expr(*n);
  if (const auto* s = get_if<Sym>()) return Expr(*s);
  return as<Expr>();
}

std::string_view Value::type_name() const {
  struct Visitor {
    std::string_view operator()(const Number&) const { return "number"; }
    std::string_view operator()(const Sym&) const { return "symbol"; }
    std::string_view operator()(const Expr&) const { return "expression"; }
    std::string_view operator()(const Polynomial&) const { return "polynomial"; }
    std::string_view operator()(const RingPtr&) const { return "ring"; }
    std::string_view operator()(const IdealPtr&) const { return "ideal"; }
    std::string_view operator()(const ListValue&) const { return "list"; }
    std::string_view operator()(const OrderKeyword&) const { return "order"; }
    std::string_view operator()(const DomainKeyword&) const { return "domain"; }
    std::string_view operator()(const StringValue&) const { return "string"; }
    std::string_view operator()(const BuiltinPtr&) const { return "builtin"; }
  };
  return std::visit(Visitor{}, rep_);
}

std::string Value::to_string() const {
  struct Visitor {
    std::string operator()(const Number& n) const { return n.to_string(); }
    std::string operator()(const Sym& s) const { return s.name(); }
    std::string operator()(const Expr& e) const { return expr_to_string(e); }
    std::string operator()(const Polynomial& p) const { return p.to_string(); }
    std::string operator()(const RingPtr& r) const { return r->to_string(); }
    std::string operator()(const IdealPtr& i) const { return i->to_string(); }
    std::string operator()(const ListValue& l) const {
      std::string out = "[";
      for (std::size_t i = 0; i < l.items.size(); ++i) {
        if (i > 0) out += ", ";
        out += l.items[i].to_string();
      }
      return out + "]";
    }
    std::string operator()(const OrderKeyword& o) const {
      return o.order.to_string();
    }
    std::string operator()(const DomainKeyword& d) const {
      return d.domain == NumberType::Rat ? "Q" : "Z";
    }
    std::string operator()(const StringValue& s) const {
      return "'" + s.text + "'";
    }
    std::string operator()(const BuiltinPtr& b) const {
      return "<builtin " + b->name + ">";
    }
  };
  return std::visit(Visitor{}, rep_);
}

Ring common_ring(std::span<const Value> items,
                 std::optional<MonomialOrder> order, NumberType min_domain) {
  std::vector<Expr> exprs;
  std::optional<Ring> ring;
  for (const Value& v : items) {
    if (v.is_symbolic()) {
      exprs.push_back(v.to_expr());
    } else if (const auto* p = v.get_if<Polynomial>()) {
      ring = ring ? unify_rings(*ring, p->ring()) : p->ring();
    } else {
      throw Error(ErrorKind::TypeError,
                  "expected a polynomial or expression, got " +
                      std::string(v.type_name()));
    }
  }
  if (!ring && exprs.empty()) {
    throw Error(ErrorKind::EmptyInput, "no polynomials or expressions given");
  }
  const MonomialOrder chosen =
      order ? *order : ring ? ring->order() : MonomialOrder::graded();
  if (!exprs.empty()) {
    Ring inferred = infer_ring(exprs, chosen);
    ring = ring ? unify_rings(*ring, inferred) : inferred;
  }
  return ring->with_domain(most_general_number_type(ring->domain(), min_domain))
      .with_order(chosen);
}

Polynomial to_polynomial(const RingPtr& ring, const Value& v) {
  if (const auto* p = v.get_if<Polynomial>()) return p->embed(ring);
  if (!v.is_symbolic()) {
    throw Error(ErrorKind::TypeError, "cannot convert a " +
                                          std::string(v.type_name()) +
                                          " to a polynomial");
  }
  const Expr e = v.to_expr();
  if (most_general_number_type_of(e) > ring->domain()) {
    throw Error(ErrorKind::ConversionError,
                "'" + expr_to_string(e) + "' needs rational coefficients, not " +
                    ring->to_string());
  }
  return expr_to_poly(ring, e);
}

namespace {

[[noreturn]] void unsupported(ArithOp op, const Value& a, const Value& b) {
  throw Error(ErrorKind::TypeError,
              "unsupported operand types for " + std::string(symbol_of(op)) +
                  ": " + std::string(a.type_name()) + " and " +
                  std::string(b.type_name()));
}

// Constant divisor as a number, if it is one.
std::optional<Number> constant_of(const Value& v) {
  if (const auto* n = v.get_if<Number>()) return *n;
  if (const auto* p = v.get_if<Polynomial>(); p && p->is_constant()) {
    return p->is_zero() ? Number(0) : p->leading_coefficient();
  }
  return std::nullopt;
}

Value polynomial_binop(ArithOp op, const Value& a, const Value& b) {
  const auto* pa = a.get_if<Polynomial>();
  const auto* pb = b.get_if<Polynomial>();
  if (op == ArithOp::Pow) {
    const auto* k = b.get_if<Number>();
    if (pa == nullptr || k == nullptr || !k->is_integer()) unsupported(op, a, b);
    return Value(poly_pow(*pa, k->as_integer()));
  }
  if (op == ArithOp::Div) {
    const std::optional<Number> d = constant_of(b);
    if (pa == nullptr || !d) {
      throw Error(ErrorKind::ConversionError,
                  "division of a polynomial must be by a nonzero constant");
    }
    if (d->is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
    return Value(pa->scaled(Number(1) / *d));
  }
  RingPtr ring;
  if (pa != nullptr && pb != nullptr) {
    ring = pa->ring() == pb->ring()
               ? pa->ring_ptr()
               : make_ring(unify_rings(pa->ring(), pb->ring()));
  } else {
    ring = (pa != nullptr ? pa : pb)->ring_ptr();
  }
  const Polynomial x = to_polynomial(ring, a);
  const Polynomial y = to_polynomial(ring, b);
  switch (op) {
    case ArithOp::Add: return Value(x + y);
    case ArithOp::Sub: return Value(x - y);
    default: return Value(x * y);
  }
}

}  // namespace

Value value_binop(ArithOp op, const Value& a, const Value& b) {
  if (a.is_symbolic() && b.is_symbolic()) {
    return Value::from_expr(expr_binop(op, a.to_expr(), b.to_expr()));
  }
  const bool poly_involved = a.is<Polynomial>() || b.is<Polynomial>();
  const bool other_ok = (a.is_symbolic() || a.is<Polynomial>()) &&
                        (b.is_symbolic() || b.is<Polynomial>());
  if (!poly_involved || !other_ok) unsupported(op, a, b);
  return polynomial_binop(op, a, b);
}

Value value_neg(const Value& a) {
  if (a.is_symbolic()) return Value::from_expr(expr_neg(a.to_expr()));
  if (const auto* p = a.get_if<Polynomial>()) return Value(-*p);
  throw Error(ErrorKind::TypeError,
              "unsupported operand type for unary -: " +
                  std::string(a.type_name()));
}

}  // namespace casdsl
