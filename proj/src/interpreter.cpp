#include "casdsl/interpreter.hpp"

#include "casdsl/error.hpp"

namespace casdsl {

const Value* Environment::find(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Environment::bind(const std::string& name, Value value) {
  bindings_.insert_or_assign(name, std::move(value));
}

Interpreter::Interpreter(SessionFlags flags) : env_(flags) {
  install_builtins(env_);
}

std::vector<Stmt> Interpreter::parse(std::string_view src,
                                     int first_line) const {
  ParseOptions options;
  options.implicit_mul = env_.flags().implicit_mul;
  options.is_callable = [this](std::string_view name) {
    const Value* v = env_.find(std::string(name));
    return v != nullptr && v->is<BuiltinPtr>();
  };
  return parse_source(src, options, first_line);
}

Value Interpreter::run(std::string_view src) {
  Value last = Value(Number(0));
  for (const Stmt& s : parse(src)) last = eval_stmt(s);
  return last;
}

Value Interpreter::resolve_identifier(const std::string& name) const {
  if (const Value* v = env_.find(name)) return *v;
  if (env_.flags().auto_symbols) return Value(Sym(name));
  throw Error(ErrorKind::NameError, "name '" + name + "' is not defined");
}

Value Interpreter::eval_stmt(const Stmt& stmt) {
  try {
    Value v = eval(stmt.value);
    switch (stmt.kind) {
      case Stmt::Kind::Expr:
        break;
      case Stmt::Kind::Assign:
        env_.bind(stmt.targets.front(), v);
        break;
      case Stmt::Kind::Destructure: {
        const auto* list = v.get_if<ListValue>();
        if (list == nullptr || list->items.size() != stmt.targets.size()) {
          throw Error(ErrorKind::TypeError,
                      "cannot unpack " + std::string(v.type_name()) +
                          " into " + std::to_string(stmt.targets.size()) +
                          " names");
        }
        for (std::size_t i = 0; i < stmt.targets.size(); ++i) {
          env_.bind(stmt.targets[i], list->items[i]);
        }
        break;
      }
    }
    return v;
  } catch (Error& e) {
    e.locate(stmt.pos);
    throw;
  }
}

Value Interpreter::eval(const Ast& ast) {
  try {
    switch (ast.kind) {
      case Ast::Kind::IntLit:
        return Value(Number(Integer::from_string(ast.text)));
      case Ast::Kind::Ident:
        return resolve_identifier(ast.text);
      case Ast::Kind::StrLit:
        return Value(StringValue{ast.text});
      case Ast::Kind::UnaryNeg:
        return value_neg(eval(ast.children[0]));
      case Ast::Kind::BinOp: {
        Value lhs = eval(ast.children[0]);
        Value rhs = eval(ast.children[1]);
        return value_binop(ast.op, lhs, rhs);
      }
      case Ast::Kind::ListLit: {
        ListValue list;
        for (const Ast& c : ast.children) list.items.push_back(eval(c));
        return Value(std::move(list));
      }
      case Ast::Kind::Call:
        return eval_call(ast);
      case Ast::Kind::MethodCall:
        return eval_method(ast);
      case Ast::Kind::Index:
        return eval_index(ast);
    }
  } catch (Error& e) {
    e.locate(ast.pos);
    throw;
  }
  return Value(Number(0));
}

Value Interpreter::eval_call(const Ast& ast) {
  std::vector<Value> args;
  args.reserve(ast.children.size());
  for (const Ast& c : ast.children) args.push_back(eval(c));

  const Value* callee = env_.find(ast.text);
  if (callee == nullptr) {
    if (!env_.flags().auto_symbols) {
      throw Error(ErrorKind::NameError,
                  "name '" + ast.text + "' is not defined", ast.pos);
    }
    // Unknown functions stay unevaluated, like unknown symbols.
    std::vector<Expr> exprs;
    for (const Value& a : args) {
      if (!a.is_symbolic()) {
        throw Error(ErrorKind::TypeError,
                    "argument of " + ast.text + "() must be an expression, got " +
                        std::string(a.type_name()));
      }
      exprs.push_back(a.to_expr());
    }
    return Value::from_expr(expr_call(ast.text, std::move(exprs)));
  }
  const auto* fn = callee->get_if<BuiltinPtr>();
  if (fn == nullptr) {
    throw Error(ErrorKind::TypeError, "'" + ast.text + "' is a " +
                                          std::string(callee->type_name()) +
                                          ", not a function");
  }
  // Keep the builtin alive even if the call rebinds its name.
  const BuiltinPtr keep = *fn;
  return keep->fn(*this, args);
}

Value Interpreter::eval_method(const Ast& ast) {
  Value receiver = eval(ast.children[0]);
  std::vector<Value> args;
  for (std::size_t i = 1; i < ast.children.size(); ++i) {
    args.push_back(eval(ast.children[i]));
  }
  return call_method(*this, receiver, ast.text, args);
}

Value Interpreter::eval_index(const Ast& ast) {
  Value target = eval(ast.children[0]);
  Value index = eval(ast.children[1]);
  const auto* list = target.get_if<ListValue>();
  if (list == nullptr) {
    throw Error(ErrorKind::TypeError,
                "cannot index a " + std::string(target.type_name()));
  }
  const auto* n = index.get_if<Number>();
  if (n == nullptr || !n->is_integer() || n->sign() < 0 ||
      !n->as_integer().fits_ulong() ||
      n->as_integer().to_ulong() >= list->items.size()) {
    throw Error(ErrorKind::TypeError,
                "list index " + index.to_string() + " out of range for a list of " +
                    std::to_string(list->items.size()) + " elements");
  }
  return list->items[n->as_integer().to_ulong()];
}

}  // namespace casdsl
