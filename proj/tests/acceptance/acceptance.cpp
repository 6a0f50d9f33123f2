// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "casdsl/error.hpp"
#include "casdsl/ideal.hpp"
#include "casdsl/interpreter.hpp"
#include "casdsl/parser.hpp"
#include "casdsl/poly.hpp"
#include "casdsl/repl.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace casdsl;

namespace {

constexpr double kSessionBudgetSeconds = 5.0;
constexpr double kGbBudgetSeconds = 60.0;
constexpr int kGbIdeals = 60;
constexpr int kGbMaxVars = 3;
constexpr int kGbMaxDegree = 3;
constexpr int kGbMaxGenerators = 3;
constexpr int kIntersectionPairs = 20;
constexpr int kRoundTripExpressions = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = std::to_string(total_ - failed_) + "/" +
                    std::to_string(total_) + " checks";
    for (const std::string& f : failures_) s += "\n      failed: " + f;
    return s;
  }
  void note(const std::string& n) { notes_ += n; }
  const std::string& notes() const { return notes_; }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string eval(Interpreter& interp, const std::string& src) {
  return interp.run(src).to_string();
}

std::string eval(const std::string& src) {
  Interpreter interp;
  return eval(interp, src);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Polynomial> polys_of(const Value& list) {
  std::vector<Polynomial> out;
  for (const Value& v : list.as<ListValue>().items) out.push_back(v.as<Polynomial>());
  return out;
}

void criterion_session(Check& c) {
  const std::filesystem::path dir = CASDSL_TEST_DATA_DIR;
  const auto start = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_script({}, (dir / "session.cas").string(), out, err);
  const double elapsed = seconds_since(start);
  c.expect(status == 0, "exit status " + std::to_string(status) + ": " + err.str());
  c.expect(err.str().empty(), "stderr: " + err.str());
  const std::vector<std::string> lines = lines_of(out.str());
  c.expect(lines.size() == 7, "7 echoed lines, got " + std::to_string(lines.size()));
  c.expect(!lines.empty() && lines[0] == "x^3*y+x^2*z-5/9", "f echo");
  c.expect(lines.size() > 3 && lines[3] == "Q[w,x,y,z]", "PolynomialRing([f, g])");
  c.expect(out.str() == slurp(dir / "session.golden"), "golden transcript");
  c.expect(elapsed < kSessionBudgetSeconds,
           "runtime " + std::to_string(elapsed) + "s");

  // Independent verification of the transcript's algebra.
  Interpreter interp;
  interp.run(slurp(dir / "session.cas"));
  const std::vector<Polynomial> g = polys_of(interp.run("G"));
  c.expect(is_groebner_basis(g), "every S-polynomial of G reduces to 0");
  c.expect(is_reduced(g), "G reduced and monic");
  for (const char* src : {"f", "g"}) {
    const Polynomial p = to_polynomial(g[0].ring_ptr(), interp.run(src));
    c.expect(normal_form(p, g).is_zero(), std::string(src) + " reduces to 0 mod G");
  }
  const IdealPtr K = interp.run("K").as<IdealPtr>();
  const Ideal I(K->ring_ptr(), interp.run("I").as<IdealPtr>()->generators());
  const Ideal J(K->ring_ptr(), interp.run("J").as<IdealPtr>()->generators());
  for (const Polynomial& k : K->generators()) {
    c.expect(ideal_membership(k, I), "K generator in I");
    c.expect(ideal_membership(k, J), "K generator in J");
  }
  for (const Polynomial& a : I.generators()) {
    for (const Polynomial& b : J.generators()) {
      c.expect(ideal_membership(a * b, *K), "I*J contained in K");
    }
  }
  c.note(" runtime " + std::to_string(elapsed) + "s");
}

void criterion_toy(Check& c) {
  const std::pair<const char*, const char*> cases[] = {
      {"1+2", "3"}, {"1+x", "1+x"}, {"x+y", "x+y"}, {"2*3+x", "6+x"}};
  for (const auto& [src, want] : cases) {
    const std::string got = eval(src);
    c.expect(got == want, std::string(src) + " -> " + got);
  }
}

void criterion_fractions(Check& c) {
  const std::pair<const char*, const char*> cases[] = {
      {"5/9", "5/9"}, {"1/2", "1/2"}, {"4/2", "2"}};
  for (const auto& [src, want] : cases) {
    const std::string got = eval(src);
    c.expect(got == want, std::string(src) + " -> " + got);
    c.expect(got != "0" && got.find('.') == std::string::npos,
             std::string(src) + " is exact");
  }
}

void criterion_power(Check& c) {
  c.expect(eval("2^3^2") == "512", "2^3^2");
  c.expect(eval("2**3**2") == "512", "2**3**2");

  const Ast t = parse_expression("2*x^3");
  const bool shape = t.kind == Ast::Kind::BinOp && t.op == ArithOp::Mul &&
                     t.children[0].kind == Ast::Kind::IntLit &&
                     t.children[0].text == "2" &&
                     t.children[1].kind == Ast::Kind::BinOp &&
                     t.children[1].op == ArithOp::Pow &&
                     t.children[1].children[0].kind == Ast::Kind::Ident &&
                     t.children[1].children[0].text == "x" &&
                     t.children[1].children[1].text == "3";
  c.expect(shape, "2*x^3 parses as 2*(x^3)");

  const std::string big = eval("2**200");
  const std::string want = oracle::power(2, 200).str();
  c.expect(big == want, "2**200 = " + big);
  c.expect(big.size() == 61, "61 digits");
  c.expect(big != "1.6069380442589903E60", "not a float");
}

void criterion_groebner(Check& c) {
  std::mt19937 rng(20240501);
  const auto start = Clock::now();
  int proper = 0;
  std::size_t largest = 0;
  for (int i = 0; i < kGbIdeals; ++i) {
    const RingPtr ring = gen::small_ring(rng, kGbMaxVars);
    std::vector<Polynomial> gens =
        gen::generators(rng, ring, kGbMaxGenerators, kGbMaxDegree, 4);
    const std::vector<Polynomial> gb = buchberger(gens, ring->order());
    const std::string tag = "ideal #" + std::to_string(i);
    if (!(gb.size() == 1 && gb[0].is_constant())) ++proper;
    largest = std::max(largest, gb.size());
    c.expect(is_groebner_basis(gb), tag + ": S-polynomials reduce to 0");
    for (const Polynomial& f : gens) {
      c.expect(normal_form(f, gb).is_zero(), tag + ": generator reduces to 0");
    }
    c.expect(is_reduced(gb), tag + ": reduced");
    for (const Polynomial& g : gb) {
      c.expect(g.leading_coefficient().is_one(), tag + ": monic");
    }
    std::vector<std::size_t> idx(gens.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    while (std::next_permutation(idx.begin(), idx.end())) {
      std::vector<Polynomial> perm;
      for (std::size_t k : idx) perm.push_back(gens[k]);
      c.expect(buchberger(perm, ring->order()) == gb, tag + ": permutation invariant");
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kGbBudgetSeconds, "runtime " + std::to_string(elapsed) + "s");
  c.note(" " + std::to_string(kGbIdeals) + " ideals (" + std::to_string(proper) +
         " proper, largest basis " + std::to_string(largest) + "), runtime " +
         std::to_string(elapsed) + "s");
}

void criterion_intersection(Check& c) {
  const RingPtr xy =
      make_ring(Ring(NumberType::Rat, {"x", "y"}, MonomialOrder::graded()));
  const Ideal ix(xy, std::vector{Polynomial::variable(xy, 0)});
  const Ideal iy(xy, std::vector{Polynomial::variable(xy, 1)});
  const Ideal expected(xy, std::vector{Polynomial::variable(xy, 0) *
                                       Polynomial::variable(xy, 1)});
  const Ideal k = ideal_intersect(ix, iy);
  c.expect(k.groebner_basis() == expected.groebner_basis(),
           "(x) cap (y) = (x*y), got " + k.to_string());

  std::mt19937 rng(20240502);
  for (int i = 0; i < kIntersectionPairs; ++i) {
    const RingPtr ring = gen::small_ring(rng, 2);
    const Ideal a(ring, gen::generators(rng, ring, 2, 2, 3));
    const Ideal b(ring, gen::generators(rng, ring, 2, 2, 3));
    const Ideal r = ideal_intersect(a, b);
    const std::string tag = "pair #" + std::to_string(i);
    for (const Polynomial& g : r.generators()) {
      c.expect(ideal_membership(g, a), tag + ": generator in first ideal");
      c.expect(ideal_membership(g, b), tag + ": generator in second ideal");
    }
    for (const Polynomial& f : a.generators()) {
      for (const Polynomial& g : b.generators()) {
        c.expect(ideal_membership(f * g, r), tag + ": cross product in result");
      }
    }
  }
}

void criterion_lattice(Check& c) {
  constexpr NumberType kAll[] = {NumberType::Int, NumberType::Rat};
  for (NumberType a : kAll) {
    c.expect(most_general_number_type(a, a) == a, "idempotent");
    for (NumberType b : kAll) {
      const NumberType j = most_general_number_type(a, b);
      c.expect(j == most_general_number_type(b, a), "commutative");
      c.expect(j == std::max(a, b), "least upper bound");
      for (NumberType d : kAll) {
        c.expect(most_general_number_type(j, d) ==
                     most_general_number_type(a, most_general_number_type(b, d)),
                 "associative");
      }
    }
  }

  Interpreter interp;
  interp.run("f = x**3 * y + x**2 * z - 5/9\ng = y**4 - z**6 + 7 * w");
  const std::vector<Expr> fg = {interp.run("f").to_expr(), interp.run("g").to_expr()};
  const Ring r = infer_ring(fg);
  c.expect(r.to_string() == "Q[w,x,y,z]", "infer_ring([f,g]) = " + r.to_string());
  c.expect(r.domain() == NumberType::Rat, "domain RAT");

  // Domain is RAT exactly when a division node or rational literal occurs;
  // both are the only constructs printed with '/'.
  std::mt19937 rng(20240503);
  gen::SourceGen sources(rng);
  int seen_rat = 0;
  int seen_int = 0;
  for (int i = 0; i < 300; ++i) {
    Expr e = Expr(0);
    Expr e2 = Expr(0);
    try {
      Interpreter fresh;
      e = fresh.run(sources.both(3).first).to_expr();
      e2 = fresh.run(sources.both(2).first).to_expr();
    } catch (const Error&) {
      continue;
    }
    const bool has_slash = expr_to_string(e).find('/') != std::string::npos;
    const NumberType t = most_general_number_type_of(e);
    c.expect((t == NumberType::Rat) == has_slash,
             "domain of " + expr_to_string(e));
    (t == NumberType::Rat ? seen_rat : seen_int)++;
    const bool any_slash =
        has_slash || expr_to_string(e2).find('/') != std::string::npos;
    const std::vector<Expr> pair = {e, e2};
    c.expect((infer_ring(pair).domain() == NumberType::Rat) == any_slash,
             "infer_ring domain of a pair");
  }
  c.expect(seen_rat > 0 && seen_int > 0, "both domains exercised");
}

void criterion_round_trip(Check& c) {
  std::mt19937 rng(20240504);
  gen::SourceGen sources(rng);
  for (int i = 0; i < kRoundTripExpressions; ++i) {
    const auto [caret, star] = sources.both(5);
    const Ast once = parse_expression(caret);
    const std::string printed = ast_to_string(once);
    c.expect(parse_expression(printed) == once, caret + " -> " + printed);
    c.expect(parse_expression(star) == once, star);
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
  };
  const Criterion criteria[] = {
      {1, "session transcript", criterion_session},
      {2, "toy semantics", criterion_toy},
      {3, "fraction contract", criterion_fractions},
      {4, "power contract", criterion_power},
      {5, "Groebner basis properties", criterion_groebner},
      {6, "ideal intersection", criterion_intersection},
      {7, "coercion lattice", criterion_lattice},
      {8, "print/parse round trip", criterion_round_trip},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("uncaught exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name
              << ": " << c.summary() << c.notes() << '\n';
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
