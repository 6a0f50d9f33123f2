#include <doctest.h>

#include <random>
#include <set>

#include "casdsl/error.hpp"
#include "casdsl/interpreter.hpp"
#include "casdsl/poly.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace casdsl;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::TypeError;
}

Expr ex(std::string_view src) {
  Interpreter interp;
  return interp.run(src).to_expr();
}

RingPtr ring_of(NumberType d, std::vector<std::string> vars,
                MonomialOrder o = MonomialOrder::graded()) {
  return make_ring(Ring(d, std::move(vars), o));
}

Polynomial poly(const RingPtr& r, std::string_view src) {
  return expr_to_poly(r, ex(src));
}

Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

Monomial to_mono(const std::vector<int>& e) {
  std::vector<Monomial::Exponent> out(e.begin(), e.end());
  return Monomial(std::move(out));
}

int sign_of(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

oracle::NaivePoly to_naive(const Polynomial& p) {
  oracle::NaivePoly out;
  for (const Term& t : p.terms()) {
    std::vector<int> e(t.mono.exponents().begin(), t.mono.exponents().end());
    out[e] = std::stoll(t.coef.to_string());
  }
  return out;
}

const char* const kF = "x**3 * y + x**2 * z - 5/9";
const char* const kG = "y**4 - z**6 + 7 * w";

}  // namespace

TEST_CASE("collect_symbols examples") {
  CHECK(collect_symbols(ex(kF)) == std::vector<std::string>{"x", "y", "z"});
  CHECK(collect_symbols(ex("7")).empty());
  CHECK(collect_symbols(ex(kG)) == std::vector<std::string>{"w", "y", "z"});
  CHECK(collect_symbols(ex("sin(b) + a*b")) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("most_general_number_type_of examples") {
  CHECK(most_general_number_type_of(ex(kF)) == NumberType::Rat);
  CHECK(most_general_number_type_of(ex(kG)) == NumberType::Int);
  CHECK(most_general_number_type_of(ex("x")) == NumberType::Int);
  CHECK(most_general_number_type_of(ex("x/y")) == NumberType::Rat);
  CHECK(most_general_number_type_of(ex("x*4/2")) == NumberType::Rat);
  CHECK(most_general_number_type_of(ex("x+4/2")) == NumberType::Int);
}

TEST_CASE("infer_ring examples") {
  const std::vector<Expr> fg = {ex(kF), ex(kG)};
  const Ring r = infer_ring(fg);
  CHECK(r.domain() == NumberType::Rat);
  CHECK(r.variables() == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(r.to_string() == "Q[w,x,y,z]");

  const std::vector<Expr> just_x = {ex("x")};
  CHECK(infer_ring(just_x).to_string() == "Z[x]");
  const std::vector<Expr> mixed = {ex("1+x"), ex("y/2")};
  // Join oracle: per-expression domains joined by hand.
  const NumberType joined =
      most_general_number_type(most_general_number_type_of(mixed[0]),
                               most_general_number_type_of(mixed[1]));
  CHECK(joined == NumberType::Rat);
  CHECK(infer_ring(mixed).domain() == joined);
  CHECK(infer_ring(mixed).to_string() == "Q[x,y]");
  CHECK(kind_of([] { infer_ring(std::span<const Expr>()); }) ==
        ErrorKind::EmptyInput);
  CHECK(infer_ring(fg, MonomialOrder::lex()).to_string() == "Q[w,x,y,z] lex");
}

TEST_CASE("poly arithmetic examples") {
  const RingPtr r = ring_of(NumberType::Int, {"x", "y"});
  const Polynomial a = poly(r, "x+y");
  const Polynomial b = poly(r, "x-y");
  CHECK((a + b).to_string() == "2*x");
  CHECK((a * b).to_string() == "x^2-y^2");
  CHECK(to_naive(a * b) == oracle::naive_mul(to_naive(a), to_naive(b)));
  const RingPtr q = ring_of(NumberType::Rat, {"w", "x", "y", "z"});
  const Polynomial f = poly(q, kF);
  CHECK((f - f).is_zero());
  CHECK((f - f).to_string() == "0");
  CHECK(f.to_string() == "x^3*y+x^2*z-5/9");
  CHECK(f.size() == 3);
  CHECK(poly(q, kG).to_string() == "-z^6+y^4+7*w");
  CHECK(kind_of([&] { a + f; }) == ErrorKind::RingMismatch);
  CHECK(kind_of([&] { a * f; }) == ErrorKind::RingMismatch);
}

TEST_CASE("poly_pow examples") {
  const RingPtr r = ring_of(NumberType::Int, {"x"});
  const Polynomial p = poly(r, "x+1");
  const Polynomial p20 = poly_pow(p, 20);
  CHECK(p20.size() == 21);
  const std::vector<long long> row = oracle::pascal_row(20);
  CHECK(row[10] == 184756);
  for (unsigned k = 0; k <= 20; ++k) {
    CHECK(p20.coefficient(mono({k})) == Number(static_cast<long>(row[k])));
  }
  CHECK(poly_pow(p, 0) == Polynomial::constant(r, 1));
  CHECK(poly_pow(p, 1) == p);
  CHECK(poly_pow(Polynomial(r), 0) == Polynomial::constant(r, 1));
  CHECK(kind_of([&] { poly_pow(p, -1); }) == ErrorKind::UnsupportedExponent);
}

TEST_CASE("monomial_compare examples") {
  const MonomialOrder gr = MonomialOrder::graded();
  const MonomialOrder lx = MonomialOrder::lex();
  CHECK(monomial_compare(gr, mono({1, 2}), mono({2, 0})) > 0);
  CHECK(monomial_compare(lx, mono({1, 0}), mono({0, 5})) > 0);
  // x*z vs y^2 in x > y > z.
  CHECK(monomial_compare(gr, mono({0, 2, 0}), mono({1, 0, 1})) > 0);
  CHECK(oracle::grevlex({0, 2, 0}, {1, 0, 1}) > 0);
  CHECK(kind_of([&] { monomial_compare(gr, mono({1}), mono({1, 0})); }) ==
        ErrorKind::ArityMismatch);
  // ELIM(1): the first variable dominates regardless of degree.
  const MonomialOrder el = MonomialOrder::elim(1);
  CHECK(monomial_compare(el, mono({1, 0, 0}), mono({0, 5, 5})) > 0);
  CHECK(monomial_compare(el, mono({0, 0, 2}), mono({0, 1, 0})) > 0);
}

TEST_CASE("graded order agrees with brute-force grevlex") {
  for (std::size_t arity = 1; arity <= 4; ++arity) {
    const auto all = oracle::monomials_up_to(arity, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        CHECK(sign_of(monomial_compare(MonomialOrder::graded(), to_mono(a),
                                       to_mono(b))) == oracle::grevlex(a, b));
        CHECK(sign_of(monomial_compare(MonomialOrder::lex(), to_mono(a),
                                       to_mono(b))) == oracle::lex(a, b));
      }
    }
  }
  // Degree-2 monomials in x > y > z, descending.
  const std::vector<std::vector<int>> expected = {
      {2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) {
    CHECK(monomial_compare(MonomialOrder::graded(), to_mono(expected[i]),
                           to_mono(expected[i + 1])) > 0);
  }
}

TEST_CASE("order laws hold exhaustively for arity <= 3, degree <= 4") {
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    std::vector<MonomialOrder> orders = {MonomialOrder::lex(),
                                         MonomialOrder::graded()};
    for (std::size_t k = 1; k <= arity; ++k) orders.push_back(MonomialOrder::elim(k));
    const auto all = oracle::monomials_up_to(arity, 4);
    const auto small = oracle::monomials_up_to(arity, 2);
    const Monomial one(arity);
    for (const MonomialOrder& o : orders) {
      for (const auto& a : all) {
        const Monomial ma = to_mono(a);
        CHECK(monomial_compare(o, one, ma) <= 0);
        for (const auto& b : all) {
          const Monomial mb = to_mono(b);
          const auto ab = monomial_compare(o, ma, mb);
          CHECK(sign_of(ab) == -sign_of(monomial_compare(o, mb, ma)));
          CHECK((ab == 0) == (a == b));
          if (ab < 0) {
            for (const auto& c : small) {
              const Monomial mc = to_mono(c);
              CHECK(monomial_compare(o, ma * mc, mb * mc) < 0);
            }
          }
        }
      }
      // Transitivity over the degree <= 2 set.
      for (const auto& a : small) {
        for (const auto& b : small) {
          for (const auto& c : small) {
            if (monomial_compare(o, to_mono(a), to_mono(b)) < 0 &&
                monomial_compare(o, to_mono(b), to_mono(c)) < 0) {
              CHECK(monomial_compare(o, to_mono(a), to_mono(c)) < 0);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("expr_to_poly conversions and errors") {
  const RingPtr q = ring_of(NumberType::Rat, {"x", "y", "z"});
  CHECK(poly(q, kF).size() == 3);
  CHECK(poly(q, "-(x - y)").to_string() == "-x+y");
  CHECK(poly(q, "x/2 + 3/4").to_string() == "1/2*x+3/4");
  CHECK(poly(q, "(x+y)/(1+1)").to_string() == "1/2*x+1/2*y");
  CHECK(poly(q, "(x+1)^2").to_string() == "x^2+2*x+1");
  const RingPtr qx = ring_of(NumberType::Rat, {"x"});
  CHECK(poly(qx, "7") == Polynomial::constant(qx, 7));
  CHECK(kind_of([&] { poly(qx, "y"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "1/x"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "x^y"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "x^(-1)"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "x^(1/2)"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "sin(x)"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(q, "x/(y-y)"); }) == ErrorKind::DivisionByZero);
  CHECK(kind_of([&] { poly(q, "x/(1-1)"); }) == ErrorKind::DivisionByZero);
  const RingPtr zx = ring_of(NumberType::Int, {"x"});
  CHECK(kind_of([&] { poly(zx, "x/2"); }) == ErrorKind::ConversionError);
  CHECK(kind_of([&] { poly(zx, "2*x/2"); }) == ErrorKind::ConversionError);
  CHECK(poly(zx, "2*x*(4/2)").to_string() == "4*x");
}

TEST_CASE("embed, unify and printing") {
  const RingPtr xy = ring_of(NumberType::Int, {"x", "y"});
  const RingPtr wxyz = ring_of(NumberType::Rat, {"w", "x", "y", "z"});
  const Polynomial p = poly(xy, "x*y + 2");
  const Polynomial e = p.embed(wxyz);
  CHECK(e.to_string() == "x*y+2");
  CHECK(e.ring() == *wxyz);
  CHECK(kind_of([&] { poly(wxyz, "w").embed(xy); }) == ErrorKind::ConversionError);
  const Ring u = unify_rings(Ring(NumberType::Int, {"y", "x"}),
                             Ring(NumberType::Rat, {"z", "x"}));
  CHECK(u.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(u.domain() == NumberType::Rat);
  CHECK(kind_of([] { Ring(NumberType::Rat, {"x", "x"}); }) == ErrorKind::BadSymbolName);
  CHECK(kind_of([] { Ring(NumberType::Rat, {"1x"}); }) == ErrorKind::BadSymbolName);
  CHECK(Ring(NumberType::Int, {"x"}).to_string() == "Z[x]");
}

TEST_CASE("property: ring laws on random small polynomials") {
  std::mt19937 rng(41);
  const RingPtr r = ring_of(NumberType::Rat, {"x", "y", "z"});
  const Polynomial zero(r);
  const Polynomial one = Polynomial::constant(r, 1);
  for (int i = 0; i < 150; ++i) {
    const Polynomial a = gen::polynomial(rng, r, 3, 4);
    const Polynomial b = gen::polynomial(rng, r, 3, 4);
    const Polynomial c = gen::polynomial(rng, r, 2, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a * zero).is_zero());
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == zero);
    CHECK(to_naive(a * b) == oracle::naive_mul(to_naive(a), to_naive(b)));
    CHECK(to_naive(a + b) == oracle::naive_add(to_naive(a), to_naive(b)));
    CHECK(poly_pow(a, 3) == a * a * a);
    // Terms stay strictly descending with no zeros.
    const Polynomial prod = a * b;
    for (std::size_t k = 0; k < prod.size(); ++k) {
      CHECK_FALSE(prod.terms()[k].coef.is_zero());
      if (k + 1 < prod.size()) {
        CHECK(monomial_compare(r->order(), prod.terms()[k].mono,
                               prod.terms()[k + 1].mono) > 0);
      }
    }
  }
}

TEST_CASE("property: expr_to_poly is a homomorphism") {
  std::mt19937 rng(42);
  gen::SourceGen sources(rng);
  const RingPtr r = ring_of(NumberType::Rat, {"a_1", "t2", "w", "x", "y", "z"});
  int checked = 0;
  for (int i = 0; i < 600 && checked < 150; ++i) {
    Expr a = Expr(0);
    Expr b = Expr(0);
    Polynomial pa(r);
    Polynomial pb(r);
    try {
      a = ex(sources.both(3).first);
      b = ex(sources.both(3).first);
      pa = expr_to_poly(r, a);
      pb = expr_to_poly(r, b);
    } catch (const Error&) {
      continue;
    }
    CHECK(expr_to_poly(r, a + b) == pa + pb);
    CHECK(expr_to_poly(r, a - b) == pa - pb);
    CHECK(expr_to_poly(r, a * b) == pa * pb);
    CHECK(expr_to_poly(r, -a) == -pa);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("property: symbols of a rebuilt expression are the used variables") {
  std::mt19937 rng(43);
  const RingPtr r = ring_of(NumberType::Rat, {"x", "y", "z"});
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = gen::polynomial(rng, r, 3, 4);
    std::set<std::string> used;
    for (const Term& t : p.terms()) {
      for (std::size_t v = 0; v < r->arity(); ++v) {
        if (t.mono[v] != 0) used.insert(r->variables()[v]);
      }
    }
    const Expr e = poly_to_expr(p);
    CHECK(collect_symbols(e) == std::vector<std::string>(used.begin(), used.end()));
    CHECK(expr_to_poly(r, e) == p);
    CHECK(expr_to_string(e) == p.to_string());
  }
}
