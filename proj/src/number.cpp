#include "casdsl/number.hpp"

#include <algorithm>
#include <cctype>

#include "casdsl/error.hpp"

namespace casdsl {

std::string_view symbol_of(ArithOp op) {
  switch (op) {
    case ArithOp::Add: return "+";
    case ArithOp::Sub: return "-";
    case ArithOp::Mul: return "*";
    case ArithOp::Div: return "/";
    case ArithOp::Pow: return "^";
  }
  return "?";
}

std::string_view to_string(NumberType t) {
  return t == NumberType::Int ? "INT" : "RAT";
}

Integer Integer::from_string(std::string_view digits) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  bool ok = !body.empty();
  for (char c : body) ok = ok && std::isdigit(static_cast<unsigned char>(c));
  if (!ok) {
    throw Error(ErrorKind::ConversionError,
                "not an integer literal: '" + std::string(digits) + "'");
  }
  mpz_class v(std::string(body), 10);
  if (digits.front() == '-') v = -v;
  return Integer(std::move(v));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(g));
}

Integer abs(const Integer& a) { return Integer(mpz_class(::abs(a.mpz()))); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ = mpq_class(num.mpz(), den.mpz());
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw Error(ErrorKind::DivisionByZero, "division by zero");
  }
  value_.canonicalize();
}

std::string Rational::to_string() const {
  if (is_integral()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Number Number::canonical(const Rational& q) {
  if (q.is_integral()) return Number(q.numerator());
  return Number(q);
}

Rational Number::to_rational() const {
  if (const auto* i = std::get_if<Integer>(&rep_)) return Rational(*i);
  return std::get<Rational>(rep_);
}

int Number::sign() const {
  return std::visit([](const auto& v) { return v.sign(); }, rep_);
}

bool Number::is_one() const {
  if (const auto* i = std::get_if<Integer>(&rep_)) return i->is_one();
  return std::get<Rational>(rep_).mpq() == 1;
}

bool Number::has_integral_value() const {
  if (is_integer()) return true;
  return std::get<Rational>(rep_).is_integral();
}

std::string Number::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, rep_);
}

bool operator==(const Number& a, const Number& b) {
  return num_compare(a, b) == 0;
}

std::strong_ordering operator<=>(const Number& a, const Number& b) {
  return num_compare(a, b);
}

std::strong_ordering num_compare(const Number& a, const Number& b) {
  if (a.is_integer() && b.is_integer()) return a.as_integer() <=> b.as_integer();
  return a.to_rational() <=> b.to_rational();
}

Number promote(const Number& a, NumberType t) {
  if (t < a.type()) {
    throw Error(ErrorKind::DemotionError,
                "cannot demote " + a.to_string() + " from " +
                    std::string(to_string(a.type())) + " to " +
                    std::string(to_string(t)));
  }
  if (t == NumberType::Rat) return Number(a.to_rational());
  return a;
}

namespace {

Number power(const Number& base, const Number& exponent) {
  if (!exponent.has_integral_value() || exponent.sign() < 0) {
    throw Error(ErrorKind::UnsupportedExponent,
                "exponent must be a nonnegative integer, got " +
                    exponent.to_string());
  }
  const Integer e = exponent.to_rational().numerator();
  if (!e.fits_ulong()) {
    throw Error(ErrorKind::UnsupportedExponent,
                "exponent too large: " + e.to_string());
  }
  const unsigned long n = e.to_ulong();
  const Rational b = base.to_rational();
  const std::size_t bits = std::max(mpz_sizeinbase(b.mpq().get_num_mpz_t(), 2),
                                    mpz_sizeinbase(b.mpq().get_den_mpz_t(), 2));
  const bool unit = abs(b.numerator()).is_one() && b.denominator().is_one();
  if (!b.is_zero() && !unit && n > kMaxPowerBits / (bits == 0 ? 1 : bits)) {
    throw Error(ErrorKind::UnsupportedExponent,
                "result of " + base.to_string() + "^" + e.to_string() +
                    " would exceed " + std::to_string(kMaxPowerBits) + " bits");
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), b.mpq().get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), b.mpq().get_den_mpz_t(), n);
  return Number::canonical(Rational(Integer(num), Integer(den)));
}

}  // namespace

Number num_binop(ArithOp op, const Number& a, const Number& b) {
  if (op == ArithOp::Pow) return power(a, b);
  if (a.is_integer() && b.is_integer() && op != ArithOp::Div) {
    const Integer& x = a.as_integer();
    const Integer& y = b.as_integer();
    switch (op) {
      case ArithOp::Add: return x + y;
      case ArithOp::Sub: return x - y;
      case ArithOp::Mul: return x * y;
      default: break;
    }
  }
  const Rational ra = a.to_rational();
  const Rational rb = b.to_rational();
  const mpq_class& x = ra.mpq();
  const mpq_class& y = rb.mpq();
  switch (op) {
    case ArithOp::Add: return Number::canonical(Rational(mpq_class(x + y)));
    case ArithOp::Sub: return Number::canonical(Rational(mpq_class(x - y)));
    case ArithOp::Mul: return Number::canonical(Rational(mpq_class(x * y)));
    case ArithOp::Div:
      if (b.is_zero()) {
        throw Error(ErrorKind::DivisionByZero,
                    "division of " + a.to_string() + " by zero");
      }
      return Number::canonical(Rational(mpq_class(x / y)));
    case ArithOp::Pow: break;
  }
  return Number();
}

Number operator-(const Number& a) {
  if (a.is_integer()) return -a.as_integer();
  return Number(Rational(mpq_class(-a.to_rational().mpq())));
}

}  // namespace casdsl
