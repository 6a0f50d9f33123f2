#pragma once

#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casdsl/expr.hpp"
#include "casdsl/ideal.hpp"
#include "casdsl/parser.hpp"
#include "casdsl/poly.hpp"

namespace casdsl {

class Value;
class Interpreter;

struct OrderKeyword {
  MonomialOrder order;
};

struct DomainKeyword {
  NumberType domain;
};

struct StringValue {
  std::string text;
};

struct ListValue {
  std::vector<Value> items;
};

struct Builtin {
  using Fn = std::function<Value(Interpreter&, std::vector<Value>&)>;
  std::string name;
  Fn fn;
};

using IdealPtr = std::shared_ptr<const Ideal>;
using BuiltinPtr = std::shared_ptr<const Builtin>;

/// Runtime value. Numbers and symbols are degenerate expressions but stay
/// distinct kinds; `from_expr` keeps that normalization.
class Value {
 public:
  using Rep = std::variant<Number, Sym, Expr, Polynomial, RingPtr, IdealPtr,
                           ListValue, OrderKeyword, DomainKeyword, StringValue,
                           BuiltinPtr>;

  Value(Rep rep) : rep_(std::move(rep)) {}  // NOLINT(implicit)

  static Value from_expr(const Expr& e);

  const Rep& rep() const { return rep_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(rep_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(rep_);
  }
  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&rep_);
  }

  /// Number, symbol or expression.
  bool is_symbolic() const;
  /// Precondition: is_symbolic().
  Expr to_expr() const;

  /// Human-readable kind for error messages.
  std::string_view type_name() const;

  /// Printed form used by the REPL.
  std::string to_string() const;

 private:
  Rep rep_;
};

/// Arithmetic on values. Symbolic operands build expression trees (with
/// numeric folding); a polynomial operand pulls the other operand into its
/// ring. Throws TypeError for unsupported operand kinds.
Value value_binop(ArithOp op, const Value& a, const Value& b);
Value value_neg(const Value& a);

struct SessionFlags {
  bool auto_symbols = true;
  bool implicit_mul = false;
};

/// Global name bindings plus the session flags.
class Environment {
 public:
  explicit Environment(SessionFlags flags = {}) : flags_(flags) {}

  const SessionFlags& flags() const { return flags_; }

  const Value* find(const std::string& name) const;
  void bind(const std::string& name, Value value);

 private:
  std::map<std::string, Value> bindings_;
  SessionFlags flags_;
};

/// Evaluates parsed statements against one environment. Builtins
/// (`symbols`, `groebner`, `ideal`, `PolynomialRing`, `Polynomial`, `lex`,
/// `graded`, `Q`, `Z`) are pre-bound and may be shadowed.
class Interpreter {
 public:
  explicit Interpreter(SessionFlags flags = {});

  Environment& env() { return env_; }
  const Environment& env() const { return env_; }

  /// Tokenizes and parses with this session's implicit-multiplication
  /// setting; a name counts as callable when it is bound to a builtin.
  std::vector<Stmt> parse(std::string_view src, int first_line = 1) const;

  Value eval_stmt(const Stmt& stmt);
  Value eval(const Ast& ast);

  /// Parses and evaluates every statement; returns the last value.
  Value run(std::string_view src);

  /// Bound value, else a fresh symbol when auto-symbols are on (not stored
  /// in the environment), else NameError.
  Value resolve_identifier(const std::string& name) const;

  /// Called after every Groebner basis computation.
  void set_gb_observer(GbObserver observer) { gb_observer_ = std::move(observer); }
  const GbObserver& gb_observer() const { return gb_observer_; }

 private:
  Value eval_call(const Ast& ast);
  Value eval_method(const Ast& ast);
  Value eval_index(const Ast& ast);

  Environment env_;
  GbObserver gb_observer_;
};

/// Pre-binds the builtin functions and keywords.
void install_builtins(Environment& env);

/// Dispatches `receiver.name(args)`.
Value call_method(Interpreter& interp, const Value& receiver,
                  const std::string& name, std::vector<Value>& args);

/// Common ring of the polynomials and expressions in `items`, with the
/// given domain floor. Without an explicit order the first polynomial's
/// order is used, else graded.
Ring common_ring(std::span<const Value> items,
                 std::optional<MonomialOrder> order = std::nullopt,
                 NumberType min_domain = NumberType::Int);

/// Converts a number, symbol, expression or polynomial into `ring`.
Polynomial to_polynomial(const RingPtr& ring, const Value& v);

}  // namespace casdsl
