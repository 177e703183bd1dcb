#pragma once

// Isomorphisms between data representations, routed through a common hub of
// natural-number sequences. An Encoder<A> is an Iso<A, Hub>; `as` converts
// between any two encoders by going source -> hub -> target.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pairbij/nadic.hpp"
#include "pairbij/nat.hpp"
#include "pairbij/streams.hpp"

namespace pairbij {

template <class A, class B>
class Iso {
 public:
  using Forward = std::function<B(const A&)>;
  using Backward = std::function<A(const B&)>;

  Iso(Forward forward, Backward backward)
      : forward_(std::move(forward)), backward_(std::move(backward)) {}

  B forward(const A& a) const { return forward_(a); }
  A backward(const B& b) const { return backward_(b); }

 private:
  Forward forward_;
  Backward backward_;
};

template <class A>
Iso<A, A> identity() {
  return Iso<A, A>([](const A& a) { return a; }, [](const A& a) { return a; });
}

template <class A, class B, class C>
Iso<A, C> compose(const Iso<A, B>& f, const Iso<B, C>& g) {
  return Iso<A, C>([f, g](const A& a) { return g.forward(f.forward(a)); },
                   [f, g](const C& c) { return f.backward(g.backward(c)); });
}

template <class A, class B>
Iso<B, A> invert(const Iso<A, B>& f) {
  return Iso<B, A>([f](const B& b) { return f.backward(b); },
                   [f](const A& a) { return f.forward(a); });
}

using Hub = NatStream;

template <class A>
struct Encoder {
  std::string name;
  Iso<A, Hub> iso;
};

/// Routes x from the source representation to the target one.
template <class A, class B>
A as(const Encoder<A>& target, const Encoder<B>& source, const B& x) {
  return compose(target.iso, invert(source.iso)).backward(x);
}

// Sequence transforms. All are lazy and work on infinite input; validation
// errors surface when the offending element is pulled.

/// Prefix sums.
NatStream list_to_mset(NatStream ns);
/// Consecutive differences; throws NotNonDecreasing.
NatStream mset_to_list(NatStream ms);
NatStream list_to_set(NatStream ns);
/// Throws NotStrictlyIncreasing.
NatStream set_to_list(NatStream xs);

/// Each n becomes n zeros followed by a one; the empty list becomes [0].
BitStream list_to_bins(NatStream ns);
/// Counts zeros between ones; zeros after the last one produce nothing.
/// Throws InvalidBit.
NatStream bins_to_list(BitStream bs);

/// Least-significant-first binary digits of n ([0] for zero), i.e. the
/// bins image of n under the base-2 codec.
std::vector<Nat> bins_of(const Nat& n);
/// Inverse of bins_of; trailing zeros are ignored.
Nat nat_of_bins(std::span<const Nat> bits);

Encoder<NatStream> encoder_list();
Encoder<NatStream> encoder_mset();
Encoder<NatStream> encoder_set();
Encoder<NatStream> encoder_bins();

// Natural-number encoders. The backward direction drains the hub, which
// is charged against `fuel`.
Encoder<Nat> encoder_nadic_nat(const nadic::Base& b, Fuel fuel = Fuel::standard());
Encoder<Nat> encoder_nat(Fuel fuel = Fuel::standard());
Encoder<Nat> encoder_nat_prime(Fuel fuel = Fuel::standard());

// Runtime-selected encoders, for tools that pick encoders by name.

enum class ValueKind { natural, sequence };

using Value = std::variant<Nat, NatStream>;

struct AnyEncoder {
  Encoder<Value> encoder;
  ValueKind domain;

  const std::string& name() const noexcept { return encoder.name; }
};

AnyEncoder erase(Encoder<Nat> e);
AnyEncoder erase(Encoder<NatStream> e);

/// One of list, mset, set, bins, nat, nadic:<b>, nat-prime.
/// Throws UnknownEncoder (or InvalidBase for nadic:<b> with b < 2).
AnyEncoder encoder_by_name(std::string_view name, Fuel fuel = Fuel::standard());

Value as(const AnyEncoder& target, const AnyEncoder& source, const Value& x);

}  // namespace pairbij
