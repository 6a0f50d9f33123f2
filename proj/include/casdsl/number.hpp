#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace casdsl {

/// Arithmetic operators shared by numbers, expression trees and the parser.
enum class ArithOp { Add, Sub, Mul, Div, Pow };

/// Surface spelling; power is always rendered as `^`.
std::string_view symbol_of(ArithOp op);

/// Arbitrary-precision integer. Zero has a single representation.
class Integer {
 public:
  Integer() = default;
  Integer(long value) : value_(value) {}  // NOLINT(implicit)
  explicit Integer(mpz_class value) : value_(std::move(value)) {}

  /// Parses an optionally signed run of decimal digits.
  static Integer from_string(std::string_view digits);

  const mpz_class& mpz() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool fits_ulong() const { return value_.fits_ulong_p(); }
  unsigned long to_ulong() const { return value_.get_ui(); }
  std::string to_string() const { return value_.get_str(); }

  Integer operator-() const { return Integer(mpz_class(-value_)); }
  friend Integer operator+(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ + b.value_));
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ - b.value_));
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    return Integer(mpz_class(a.value_ * b.value_));
  }
  friend bool operator==(const Integer& a, const Integer& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(const Integer& n) : value_(n.mpz()) {}  // NOLINT(implicit)
  /// Throws DivisionByZero when `den` is zero.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  Integer numerator() const { return Integer(value_.get_num()); }
  Integer denominator() const { return Integer(value_.get_den()); }
  const mpq_class& mpq() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integral() const { return value_.get_den() == 1; }
  /// `a/b`, or just `a` when the denominator is 1.
  std::string to_string() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

/// The numeric lattice INT < RAT.
enum class NumberType { Int = 0, Rat = 1 };

std::string_view to_string(NumberType t);

/// Least upper bound of two numeric domains.
constexpr NumberType most_general_number_type(NumberType a, NumberType b) {
  return a < b ? b : a;
}

/// An exact number: Integer or Rational.
///
/// Arithmetic results are always canonical: a Rational whose denominator is 1
/// is demoted to Integer. The only way to hold `n/1` as a Rational is an
/// explicit `promote(n, NumberType::Rat)`.
class Number {
 public:
  Number() : rep_(Integer()) {}
  Number(long value) : rep_(Integer(value)) {}  // NOLINT(implicit)
  Number(Integer value) : rep_(std::move(value)) {}  // NOLINT(implicit)
  Number(Rational value) : rep_(std::move(value)) {}  // NOLINT(implicit)

  /// Rational with denominator 1 becomes Integer.
  static Number canonical(const Rational& q);

  NumberType type() const {
    return std::holds_alternative<Integer>(rep_) ? NumberType::Int
                                                 : NumberType::Rat;
  }
  bool is_integer() const { return type() == NumberType::Int; }
  const Integer& as_integer() const { return std::get<Integer>(rep_); }
  Rational to_rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_one() const;
  /// True when the value is integral, whatever the stored type.
  bool has_integral_value() const;

  std::string to_string() const;

  friend bool operator==(const Number& a, const Number& b);
  friend std::strong_ordering operator<=>(const Number& a, const Number& b);

 private:
  std::variant<Integer, Rational> rep_;
};

/// Largest result size accepted by `**`, in bits.
inline constexpr std::size_t kMaxPowerBits = std::size_t{1} << 24;

/// Exact `+ - * / **`. `/` is field division; `**` needs a nonnegative
/// integral exponent and a result of at most kMaxPowerBits bits. Results are
/// canonical.
Number num_binop(ArithOp op, const Number& a, const Number& b);

/// Total order by value; operands of different type are promoted first.
std::strong_ordering num_compare(const Number& a, const Number& b);

/// Value-preserving embedding into a type at or above `a`'s own.
Number promote(const Number& a, NumberType t);

inline Number operator+(const Number& a, const Number& b) {
  return num_binop(ArithOp::Add, a, b);
}
inline Number operator-(const Number& a, const Number& b) {
  return num_binop(ArithOp::Sub, a, b);
}
inline Number operator*(const Number& a, const Number& b) {
  return num_binop(ArithOp::Mul, a, b);
}
inline Number operator/(const Number& a, const Number& b) {
  return num_binop(ArithOp::Div, a, b);
}
Number operator-(const Number& a);

}  // namespace casdsl
