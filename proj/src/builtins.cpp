#include <algorithm>
#include <cctype>

#include "casdsl/error.hpp"
#include "casdsl/interpreter.hpp"

namespace casdsl {

namespace {

[[noreturn]] void type_error(const std::string& message) {
  throw Error(ErrorKind::TypeError, message);
}

void expect_arity(const std::string& fn, const std::vector<Value>& args,
                  std::size_t min, std::size_t max) {
  if (args.size() < min || args.size() > max) {
    const std::string want = min == max ? std::to_string(min)
                                        : std::to_string(min) + " to " +
                                              std::to_string(max);
    type_error(fn + "() takes " + want + " argument(s), got " +
               std::to_string(args.size()));
  }
}

std::optional<MonomialOrder> order_arg(const std::string& fn,
                                       const std::vector<Value>& args,
                                       std::size_t i) {
  if (i >= args.size()) return std::nullopt;
  const auto* o = args[i].get_if<OrderKeyword>();
  if (o == nullptr) {
    type_error(fn + "() expects an order (lex or graded) as argument " +
               std::to_string(i + 1) + ", got " +
               std::string(args[i].type_name()));
  }
  return o->order;
}

// A single list argument, or the arguments themselves.
std::vector<Value> items_of(const std::vector<Value>& args) {
  if (args.size() == 1) {
    if (const auto* l = args[0].get_if<ListValue>()) return l->items;
  }
  return args;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<Polynomial> polynomials_in(const RingPtr& ring,
                                       std::span<const Value> items) {
  std::vector<Polynomial> out;
  out.reserve(items.size());
  for (const Value& v : items) out.push_back(to_polynomial(ring, v));
  return out;
}

Value builtin_symbols(Interpreter&, std::vector<Value>& args) {
  ListValue out;
  for (const Value& a : args) {
    const auto* s = a.get_if<StringValue>();
    if (s == nullptr) {
      type_error("symbols() expects string names, got " +
                 std::string(a.type_name()));
    }
    const std::vector<std::string> names = split_names(s->text);
    if (names.empty()) {
      throw Error(ErrorKind::BadSymbolName, "empty symbol name");
    }
    for (const std::string& n : names) out.items.emplace_back(Sym(n));
  }
  if (out.items.empty()) {
    throw Error(ErrorKind::EmptyInput, "symbols() needs at least one name");
  }
  return Value(std::move(out));
}

Value builtin_groebner(Interpreter& interp, std::vector<Value>& args) {
  expect_arity("groebner", args, 1, 2);
  const auto* list = args[0].get_if<ListValue>();
  if (list == nullptr) {
    type_error("groebner() expects a list of polynomials, got " +
               std::string(args[0].type_name()));
  }
  if (list->items.empty()) {
    throw Error(ErrorKind::EmptyInput, "groebner() of an empty list");
  }
  const MonomialOrder order =
      order_arg("groebner", args, 1).value_or(MonomialOrder::graded());
  const RingPtr ring =
      make_ring(common_ring(list->items, order, NumberType::Rat));
  const std::vector<Polynomial> gens = polynomials_in(ring, list->items);
  ListValue out;
  for (Polynomial& p : buchberger(gens, order, interp.gb_observer())) {
    out.items.emplace_back(std::move(p));
  }
  return Value(std::move(out));
}

Value builtin_ideal(Interpreter&, std::vector<Value>& args) {
  const std::vector<Value> items = items_of(args);
  if (items.empty()) {
    throw Error(ErrorKind::EmptyInput, "ideal() needs at least one generator");
  }
  const RingPtr ring =
      make_ring(common_ring(items, std::nullopt, NumberType::Rat));
  return Value(std::make_shared<const Ideal>(ring, polynomials_in(ring, items)));
}

Value builtin_polynomial_ring(Interpreter&, std::vector<Value>& args) {
  expect_arity("PolynomialRing", args, 1, 3);
  if (const auto* domain = args[0].get_if<DomainKeyword>()) {
    expect_arity("PolynomialRing", args, 2, 3);
    const auto* names = args[1].get_if<StringValue>();
    if (names == nullptr) {
      type_error("PolynomialRing() expects variable names as a string, got " +
                 std::string(args[1].type_name()));
    }
    std::vector<std::string> vars = split_names(names->text);
    if (vars.empty()) {
      throw Error(ErrorKind::EmptyInput, "PolynomialRing() needs variables");
    }
    const MonomialOrder order = order_arg("PolynomialRing", args, 2)
                                    .value_or(MonomialOrder::graded());
    return Value(make_ring(Ring(domain->domain, std::move(vars), order)));
  }
  expect_arity("PolynomialRing", args, 1, 2);
  const auto* list = args[0].get_if<ListValue>();
  if (list == nullptr) {
    type_error(
        "PolynomialRing() expects a domain and names, or a list of "
        "expressions");
  }
  if (list->items.empty()) {
    throw Error(ErrorKind::EmptyInput, "PolynomialRing() of an empty list");
  }
  return Value(make_ring(
      common_ring(list->items, order_arg("PolynomialRing", args, 1))));
}

Value builtin_polynomial(Interpreter&, std::vector<Value>& args) {
  expect_arity("Polynomial", args, 1, 2);
  if (args.size() == 2) {
    const auto* ring = args[1].get_if<RingPtr>();
    if (ring == nullptr) {
      type_error("Polynomial() expects a ring as second argument, got " +
                 std::string(args[1].type_name()));
    }
    return Value(to_polynomial(*ring, args[0]));
  }
  const RingPtr ring = make_ring(common_ring(std::span(args).first(1)));
  return Value(to_polynomial(ring, args[0]));
}

void define(Environment& env, const std::string& name, Builtin::Fn fn) {
  env.bind(name, Value(std::make_shared<const Builtin>(Builtin{name, std::move(fn)})));
}

// ---------------------------------------------------------------------------
// Methods

Value ring_method(const RingPtr& ring, const std::string& name,
                  std::vector<Value>& args) {
  if (name == "valueOf") {
    expect_arity("valueOf", args, 1, 1);
    return Value(to_polynomial(ring, args[0]));
  }
  if (name == "gens") {
    expect_arity("gens", args, 0, 0);
    ListValue out;
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      out.items.emplace_back(Polynomial::variable(ring, i));
    }
    return Value(std::move(out));
  }
  type_error("ring has no method '" + name + "'");
}

Value ideal_method(Interpreter& interp, const IdealPtr& ideal,
                   const std::string& name, std::vector<Value>& args) {
  if (name == "GB") {
    expect_arity("GB", args, 0, 0);
    return Value(std::make_shared<const Ideal>(
        ideal->with_gb_generators(interp.gb_observer())));
  }
  if (name == "intersect") {
    expect_arity("intersect", args, 1, 1);
    const auto* other = args[0].get_if<IdealPtr>();
    if (other == nullptr) {
      type_error("intersect() expects an ideal, got " +
                 std::string(args[0].type_name()));
    }
    const Ideal& a = *ideal;
    const Ideal& b = **other;
    if (a.ring() == b.ring()) {
      return Value(std::make_shared<const Ideal>(
          ideal_intersect(a, b, interp.gb_observer())));
    }
    // Re-embed both into the smallest common ring.
    const RingPtr joint = make_ring(unify_rings(a.ring(), b.ring()));
    const Ideal ja(joint, a.generators());
    const Ideal jb(joint, b.generators());
    return Value(std::make_shared<const Ideal>(
        ideal_intersect(ja, jb, interp.gb_observer())));
  }
  if (name == "contains") {
    expect_arity("contains", args, 1, 1);
    const Polynomial p = to_polynomial(ideal->ring_ptr(), args[0]);
    const auto& gb = ideal->groebner_basis(interp.gb_observer());
    return Value(Number(normal_form(p, gb).is_zero() ? 1 : 0));
  }
  if (name == "gens") {
    expect_arity("gens", args, 0, 0);
    ListValue out;
    for (const Polynomial& g : ideal->generators()) out.items.emplace_back(g);
    return Value(std::move(out));
  }
  type_error("ideal has no method '" + name + "'");
}

}  // namespace

Value call_method(Interpreter& interp, const Value& receiver,
                  const std::string& name, std::vector<Value>& args) {
  if (const auto* r = receiver.get_if<RingPtr>()) {
    return ring_method(*r, name, args);
  }
  if (const auto* i = receiver.get_if<IdealPtr>()) {
    return ideal_method(interp, *i, name, args);
  }
  if (const auto* p = receiver.get_if<Polynomial>(); p && name == "ring") {
    expect_arity("ring", args, 0, 0);
    return Value(p->ring_ptr());
  }
  type_error(std::string(receiver.type_name()) + " has no method '" + name +
             "'");
}

void install_builtins(Environment& env) {
  define(env, "symbols", builtin_symbols);
  define(env, "groebner", builtin_groebner);
  define(env, "ideal", builtin_ideal);
  define(env, "PolynomialRing", builtin_polynomial_ring);
  define(env, "Polynomial", builtin_polynomial);
  env.bind("lex", Value(OrderKeyword{MonomialOrder::lex()}));
  env.bind("graded", Value(OrderKeyword{MonomialOrder::graded()}));
  env.bind("Q", Value(DomainKeyword{NumberType::Rat}));
  env.bind("Z", Value(DomainKeyword{NumberType::Int}));
}

}  // namespace casdsl
