#include "casdsl/ideal.hpp"

#include <algorithm>
#include <set>

#include "casdsl/error.hpp"

namespace casdsl {

namespace {

constexpr const char* kEliminationVariable = "#t";

RingPtr rational_ring(const RingPtr& ring) {
  if (ring->domain() == NumberType::Rat) return ring;
  return make_ring(ring->with_domain(NumberType::Rat));
}

void require_ring(const Polynomial& p, const Ring& ring) {
  if (p.ring().variables() != ring.variables() ||
      p.ring().order() != ring.order()) {
    throw Error(ErrorKind::RingMismatch, "polynomial in " +
                                             p.ring().to_string() +
                                             " used with " + ring.to_string());
  }
}

}  // namespace

Division divide(const Polynomial& p, std::span<const Polynomial> divisors) {
  const RingPtr ring = rational_ring(p.ring_ptr());
  std::vector<Polynomial> gs;
  gs.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    require_ring(g, *ring);
    gs.push_back(g.embed(ring));
  }
  Division out{std::vector<Polynomial>(gs.size(), Polynomial(ring)),
               Polynomial(ring)};
  std::vector<Term> remainder;
  Polynomial current = p.embed(ring);
  while (!current.is_zero()) {
    const Term lead = current.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (gs[i].is_zero() || !lead.mono.divisible_by(gs[i].leading_monomial())) {
        continue;
      }
      const Number c = lead.coef / gs[i].leading_coefficient();
      const Monomial m = lead.mono / gs[i].leading_monomial();
      current = axpy(current, -c, m, gs[i]);
      out.quotients[i] = out.quotients[i] + Polynomial::term(ring, m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      current = current.tail();
    }
  }
  out.remainder = Polynomial::from_terms(ring, std::move(remainder));
  return out;
}

Polynomial normal_form(const Polynomial& p,
                       std::span<const Polynomial> divisors) {
  return divide(p, divisors).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw Error(ErrorKind::ZeroOperand, "S-polynomial of a zero polynomial");
  }
  require_ring(g, f.ring());
  const RingPtr ring = rational_ring(f.ring_ptr());
  const Polynomial a = f.embed(ring);
  const Polynomial b = g.embed(ring);
  const Monomial l = lcm(a.leading_monomial(), b.leading_monomial());
  const Polynomial left =
      a.scaled(Number(1) / a.leading_coefficient(), l / a.leading_monomial());
  return axpy(left, -(Number(1) / b.leading_coefficient()),
              l / b.leading_monomial(), b);
}

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairOrder {
  MonomialOrder order;

  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    if (auto c = monomial_compare(order, a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Drops elements whose leading monomial is divisible by another's (the
// lowest index wins among equal leading monomials), then reduces each
// survivor by the rest.
std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& lm = basis[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& other = basis[j].leading_monomial();
      redundant = lm.divisible_by(other) && (lm != other || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  const MonomialOrder order = basis.front().ring().order();
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return monomial_compare(order, a.leading_monomial(),
                                      b.leading_monomial()) > 0;
            });
  return reduced;
}

}  // namespace

std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order,
                                   const GbObserver& observer) {
  if (generators.empty()) {
    throw Error(ErrorKind::EmptyInput, "Groebner basis of an empty list");
  }
  const Ring& first = generators.front().ring();
  for (const Polynomial& g : generators) {
    if (g.ring().variables() != first.variables()) {
      throw Error(ErrorKind::RingMismatch,
                  "generators live in different rings: " + first.to_string() +
                      " and " + g.ring().to_string());
    }
  }
  const RingPtr ring =
      make_ring(first.with_domain(NumberType::Rat).with_order(order));

  GbStats stats;
  std::vector<Polynomial> basis;
  for (const Polynomial& g : generators) {
    if (!g.is_zero()) basis.push_back(g.embed(ring).monic());
  }

  std::set<CriticalPair, PairOrder> pairs{PairOrder{order}};
  auto add_pairs_with = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      pairs.insert({k, n,
                    lcm(basis[k].leading_monomial(),
                        basis[n].leading_monomial())});
    }
  };
  for (std::size_t n = 1; n < basis.size(); ++n) add_pairs_with(n);

  while (!pairs.empty()) {
    const CriticalPair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    ++stats.pairs_considered;
    if (basis[pair.i].leading_monomial().coprime(
            basis[pair.j].leading_monomial())) {
      ++stats.pairs_skipped_coprime;
      continue;
    }
    Polynomial r =
        normal_form(s_polynomial(basis[pair.i], basis[pair.j]), basis);
    if (r.is_zero()) {
      ++stats.pairs_reduced_to_zero;
      continue;
    }
    basis.push_back(r.monic());
    ++stats.basis_additions;
    add_pairs_with(basis.size() - 1);
  }

  std::vector<Polynomial> out =
      basis.empty() ? std::vector<Polynomial>{} : reduce_basis(basis);
  stats.basis_size = out.size();
  if (observer) observer(stats);
  return out;
}

bool is_groebner_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

bool is_reduced(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !basis[i].leading_coefficient().is_one()) {
      return false;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : basis[i].terms()) {
        if (t.mono.divisible_by(basis[j].leading_monomial())) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(const RingPtr& ring, std::span<const Polynomial> generators)
    : ring_(rational_ring(ring)) {
  generators_.reserve(generators.size());
  for (const Polynomial& g : generators) generators_.push_back(g.embed(ring_));
}

const std::vector<Polynomial>& Ideal::groebner_basis(
    const GbObserver& observer) const {
  if (!gb_) {
    if (generators_.empty()) {
      gb_.emplace();
    } else {
      gb_ = buchberger(generators_, ring_->order(), observer);
    }
  }
  return *gb_;
}

Ideal Ideal::with_gb_generators(const GbObserver& observer) const {
  Ideal out(ring_, groebner_basis(observer));
  out.gb_ = gb_;
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "ideal(";
  if (generators_.empty()) out += "0";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  out += ')';
  return out;
}

bool ideal_membership(const Polynomial& p, const Ideal& ideal) {
  require_ring(p, ideal.ring());
  return normal_form(p, ideal.groebner_basis()).is_zero();
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  return a.ring() == b.ring() && a.groebner_basis() == b.groebner_basis();
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b,
                      const GbObserver& observer) {
  if (a.ring() != b.ring()) {
    throw Error(ErrorKind::RingMismatch, "cannot intersect ideals of " +
                                             a.ring().to_string() + " and " +
                                             b.ring().to_string());
  }
  const RingPtr& ring = a.ring_ptr();
  auto nonzero = [](const Ideal& i) {
    return std::any_of(i.generators().begin(), i.generators().end(),
                       [](const Polynomial& g) { return !g.is_zero(); });
  };
  if (!nonzero(a) || !nonzero(b)) return Ideal(ring, {});

  const RingPtr aux = make_ring(
      Ring::with_elimination_variable(*ring, kEliminationVariable));
  const Polynomial t = Polynomial::variable(aux, 0);
  const Polynomial one_minus_t = Polynomial::constant(aux, Number(1)) - t;

  std::vector<Polynomial> joint;
  for (const Polynomial& f : a.generators()) joint.push_back(t * f.embed(aux));
  for (const Polynomial& g : b.generators()) {
    joint.push_back(one_minus_t * g.embed(aux));
  }
  const std::vector<Polynomial> gb = buchberger(joint, aux->order(), observer);

  std::vector<Polynomial> eliminated;
  for (const Polynomial& p : gb) {
    const bool free_of_t =
        std::all_of(p.terms().begin(), p.terms().end(),
                    [](const Term& term) { return term.mono[0] == 0; });
    if (free_of_t) eliminated.push_back(p.embed(ring));
  }
  if (eliminated.empty()) return Ideal(ring, {});
  return Ideal(ring, eliminated).with_gb_generators(observer);
}

}  // namespace casdsl
