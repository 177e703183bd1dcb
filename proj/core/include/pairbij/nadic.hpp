#pragma once

// Pairing bijections built on b-adic valuations.
//
// For a base b >= 2 every z >= 1 factors uniquely as b^x * y with y not
// divisible by b. Writing y = b*q + m (0 < m < b) and y' = y - q - 1 maps the
// non-multiples of b onto N, so (x, y') <-> z is a bijection N^2 <-> N+.
// Shifting by one gives a pairing bijection N^2 <-> N for every base.

#include <span>
#include <vector>

#include "pairbij/nat.hpp"
#include "pairbij/streams.hpp"

namespace pairbij::nadic {

class Base {
 public:
  /// Throws InvalidBase when b < 2.
  explicit Base(Nat b);

  const Nat& value() const noexcept { return b_; }

  friend bool operator==(const Base&, const Base&) = default;

 private:
  Nat b_;
};

/// b^x * (y' + y' div (b-1) + 1); always >= 1.
Nat cons(const Base& b, const NatPair& p);

/// Inverse of cons. Throws ZeroArgument for z = 0.
NatPair decons(const Base& b, const Nat& z);

/// The b-adic valuation of z, computed by repeated division.
Nat head(const Base& b, const Nat& z);
Nat tail(const Base& b, const Nat& z);

Nat pair(const Base& b, const NatPair& p);
NatPair unpair(const Base& b, const Nat& n);

/// 0 -> []; n -> head n : nat_to_nats (tail n). Terminates since tail n < n.
std::vector<Nat> nat_to_nats(const Base& b, Nat n);
Nat nats_to_nat(const Base& b, std::span<const Nat> xs);

/// nats_to_nat(l) . nat_to_nats(k); a permutation of N whose inverse is
/// bij(l, k, .).
Nat bij(const Base& k, const Base& l, const Nat& n);

// Mixed-base codecs: recursion level i uses the i-th element of `bases`.
// Both directions open the base stream from its start. Elements below 2
// (or a base stream that ends early) raise InvalidBase.
std::vector<Nat> nat_to_nats_mixed(const NatStream& bases, Nat n, Fuel fuel = Fuel::standard());
Nat nats_to_nat_mixed(const NatStream& bases, std::span<const Nat> xs,
                      Fuel fuel = Fuel::standard());

}  // namespace pairbij::nadic
