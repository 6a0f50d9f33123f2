#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casdsl/poly.hpp"

namespace casdsl {

/// Quotients and remainder of multivariate division:
/// `p = sum(quotients[i] * divisors[i]) + remainder`.
struct Division {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Full reduction of `p`: the remainder has no term divisible by a leading
/// monomial of a divisor. At each step the first divisor (by index) whose
/// leading monomial divides the current leading term is used. Integer rings
/// are promoted to Q first; throws RingMismatch on differing rings.
Division divide(const Polynomial& p, std::span<const Polynomial> divisors);

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);

/// lcm/lt(f)*f - lcm/lt(g)*g with leading coefficients divided out.
/// Throws ZeroOperand if either input is zero.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Counters from one Buchberger run.
struct GbStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_reduced_to_zero = 0;
  std::size_t basis_additions = 0;
  std::size_t basis_size = 0;
};

using GbObserver = std::function<void(const GbStats&)>;

/// Reduced Groebner basis of the ideal generated by `generators`, computed
/// in their common ring promoted to Q and re-sorted under `order`.
///
/// Critical pairs are taken in ascending order of the lcm of their leading
/// monomials (ties by index); pairs with coprime leading monomials are
/// skipped. The result is monic, inter-reduced and sorted descending by
/// leading monomial; it is empty for the zero ideal. Throws EmptyInput for
/// an empty list and RingMismatch for mixed rings.
std::vector<Polynomial> buchberger(std::span<const Polynomial> generators,
                                   const MonomialOrder& order,
                                   const GbObserver& observer = {});

/// True when every pair's S-polynomial reduces to zero modulo `basis`.
bool is_groebner_basis(std::span<const Polynomial> basis);

/// Monic and no term of any element divisible by another element's leading
/// monomial.
bool is_reduced(std::span<const Polynomial> basis);

/// An ideal of a Q-polynomial ring. The reduced Groebner basis is computed
/// on first use and cached; the cache is not synchronized.
class Ideal {
 public:
  /// Generators are embedded into `ring` promoted to Q.
  Ideal(const RingPtr& ring, std::span<const Polynomial> generators);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& groebner_basis(
      const GbObserver& observer = {}) const;

  /// The ideal generated by this one's reduced Groebner basis.
  Ideal with_gb_generators(const GbObserver& observer = {}) const;

  /// `ideal(g1, ..., gk)`; the zero ideal prints as `ideal(0)`.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  mutable std::optional<std::vector<Polynomial>> gb_;
};

/// Membership via normal form modulo the reduced Groebner basis.
bool ideal_membership(const Polynomial& p, const Ideal& ideal);

/// Same ring and equal reduced Groebner bases.
bool same_ideal(const Ideal& a, const Ideal& b);

/// Intersection by elimination: with an auxiliary variable `#t` greatest
/// under ELIM(1), the elements free of `#t` in a Groebner basis of
/// t*I + (1-t)*J generate I and J's intersection. The result's generators
/// are its reduced Groebner basis in the common ring. Throws RingMismatch
/// when the rings differ.
Ideal ideal_intersect(const Ideal& a, const Ideal& b,
                      const GbObserver& observer = {});

}  // namespace casdsl
