#pragma once

// Pairing bijections induced by characteristic functions of subsets of N.
//
// A guide bit stream routes the binary digits of n to the first (bit 1) or
// second (bit 0) component. Whenever every block of equal bits in the guide is
// finite, the split/merge pair is a bijection N <-> N^2. Guides are given as a
// seed value plus the encoder that turns it into a bit stream (e.g. the set
// {0,2,4,...} through `set`, or the bits 1,0,1,0,... through `bins`).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pairbij/nadic.hpp"
#include "pairbij/nat.hpp"
#include "pairbij/streams.hpp"

namespace pairbij::charpair {

struct Split {
  NatStream first;   // elements under guide bit 1
  NatStream second;  // elements under guide bit 0
};

/// Lazy guide-driven partition. Throws GuideExhausted if the guide ends while
/// elements remain.
Split bsplit(BitStream guide, NatStream ns);

/// Guide-driven merge with the original clause order:
///   ([],[])  -> end
///   ([],[y]) -> y, end         (guide not consulted)
///   ([x],[]) -> x, end         (guide not consulted)
///   ([],ys)  -> continue with ([0],ys)
///   (xs,[])  -> continue with (xs,[0])
///   0:guide  -> head of ys
///   1:guide  -> head of xs
/// Inverts bsplit on its own output, but the singleton shortcuts make it
/// non-injective on arbitrary (xs, ys), so pairing uses bmerge_exact.
NatStream bmerge(BitStream guide, NatStream xs, NatStream ys);

/// Every output position consumes one guide bit; a side with no elements
/// left contributes 0. Ends once both sides are exhausted. This is the exact
/// inverse of bsplit up to trailing zeros.
NatStream bmerge_exact(BitStream guide, NatStream xs, NatStream ys);

namespace seed {
struct Arith {
  Nat start;
  Nat step;
};
struct Cycle {
  std::vector<Nat> items;
};
struct Squares {};
struct Powers2 {};
struct Syracuse {};
struct BitsOfNaturals {};
struct Explicit {
  std::vector<Nat> items;
};
/// ASCII 0/1 for the bins encoder, decimal naturals otherwise. The contents
/// are a finite prefix of an infinite sequence: reading past the end raises
/// GuideExhausted.
struct File {
  std::filesystem::path path;
};
}  // namespace seed

using SeedPayload = std::variant<seed::Arith, seed::Cycle, seed::Squares, seed::Powers2,
                                 seed::Syracuse, seed::BitsOfNaturals, seed::Explicit, seed::File>;

struct SeedSpec {
  std::string encoder_name;  // list, mset, set or bins
  SeedPayload payload;
};

std::string describe(const SeedSpec& seed);

/// The seed's value sequence, before encoding.
NatStream seed_values(const SeedPayload& payload);

/// as(bins, encoder, values): the guide bit stream of the seed.
BitStream characteristic_function(const SeedSpec& seed);

Nat generic_pair(const SeedSpec& seed, const NatPair& p, Fuel fuel = Fuel::standard());
NatPair generic_unpair(const SeedSpec& seed, const Nat& n, Fuel fuel = Fuel::standard());

class PairingFamily {
 public:
  using PairFn = std::function<Nat(const NatPair&, Fuel)>;
  using UnpairFn = std::function<NatPair(const Nat&, Fuel)>;

  PairingFamily(std::string name, PairFn pair, UnpairFn unpair, Fuel fuel = Fuel::standard());

  const std::string& name() const noexcept { return name_; }
  Fuel fuel() const noexcept { return fuel_; }

  Nat pair(const NatPair& p) const { return pair_(p, fuel_); }
  NatPair unpair(const Nat& n) const { return unpair_(n, fuel_); }

  PairingFamily with_fuel(Fuel fuel) const;

  const PairFn& pair_fn() const noexcept { return pair_; }
  const UnpairFn& unpair_fn() const noexcept { return unpair_; }

 private:
  std::string name_;
  PairFn pair_;
  UnpairFn unpair_;
  Fuel fuel_;
};

PairingFamily seed_family(std::string name, SeedSpec seed, Fuel fuel = Fuel::standard());
PairingFamily nadic_family(const nadic::Base& b);
PairingFamily cantor_family();

/// morton, arith-set (k >= 1), squares, powers2, syracuse, bits-of-naturals.
/// Throws UnknownPreset, or ParseError when arith-set has no k.
PairingFamily preset_family(std::string_view name, std::optional<Nat> k = std::nullopt,
                            Fuel fuel = Fuel::standard());

const std::vector<std::string>& preset_names();

/// pair'(p) = pair(p) xor mask, unpair'(n) = unpair(n xor mask).
PairingFamily twist_family(const PairingFamily& f, const Nat& mask);

/// The 2-adic tail of 6n+4: maps the index of an odd m to that of the next
/// odd number on m's Collatz trajectory.
Nat syracuse(const Nat& n);

/// n, syracuse(n), ... down to and including 0. Each step costs one unit of
/// fuel.
std::vector<Nat> nsyr(const Nat& n, Fuel fuel = Fuel::standard());

Nat cantor_pair(const NatPair& p);
NatPair cantor_unpair(const Nat& n);

}  // namespace pairbij::charpair
