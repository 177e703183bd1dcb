#include "pairbij/nadic.hpp"

#include "pairbij/errors.hpp"

namespace pairbij::nadic {

Base::Base(Nat b) : b_(std::move(b)) {
  if (b_ < Nat(2)) throw InvalidBase("base must be at least 2, got " + b_.str());
}

Nat cons(const Base& b, const NatPair& p) {
  const Nat& base = b.value();
  const Nat q = p.second / (base - 1);
  const Nat y = p.second + q + 1;
  return pow(base, p.first) * y;
}

NatPair decons(const Base& b, const Nat& z) {
  if (z.is_zero()) throw ZeroArgument("n-adic decons is undefined at 0");
  const Nat& base = b.value();
  Nat x = 0;
  Nat y = z;
  for (;;) {
    auto [quot, rem] = divmod(y, base);
    if (!rem.is_zero()) break;
    y = std::move(quot);
    x += 1;
  }
  const Nat q = y / base;
  return {std::move(x), y - q - 1};
}

Nat head(const Base& b, const Nat& z) { return decons(b, z).first; }

Nat tail(const Base& b, const Nat& z) { return decons(b, z).second; }

Nat pair(const Base& b, const NatPair& p) { return cons(b, p) - 1; }

NatPair unpair(const Base& b, const Nat& n) { return decons(b, n + 1); }

std::vector<Nat> nat_to_nats(const Base& b, Nat n) {
  std::vector<Nat> out;
  while (!n.is_zero()) {
    auto [h, t] = decons(b, n);
    out.push_back(std::move(h));
    n = std::move(t);
  }
  return out;
}

Nat nats_to_nat(const Base& b, std::span<const Nat> xs) {
  Nat acc = 0;
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) acc = cons(b, {*it, acc});
  return acc;
}

Nat bij(const Base& k, const Base& l, const Nat& n) {
  const auto xs = nat_to_nats(k, n);
  return nats_to_nat(l, xs);
}

namespace {

Base next_base(Cursor<Nat>& bases) {
  auto v = bases.next();
  if (!v) throw InvalidBase("base stream ended before the value was exhausted");
  return Base(std::move(*v));
}

}  // namespace

std::vector<Nat> nat_to_nats_mixed(const NatStream& bases, Nat n, Fuel fuel) {
  FuelMeter meter(fuel, "mixed-base expansion");
  auto cursor = bases.open(meter);
  std::vector<Nat> out;
  while (!n.is_zero()) {
    auto [h, t] = decons(next_base(cursor), n);
    out.push_back(std::move(h));
    n = std::move(t);
  }
  return out;
}

Nat nats_to_nat_mixed(const NatStream& bases, std::span<const Nat> xs, Fuel fuel) {
  FuelMeter meter(fuel, "mixed-base contraction");
  auto cursor = bases.open(meter);
  std::vector<Base> used;
  used.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) used.push_back(next_base(cursor));
  Nat acc = 0;
  for (std::size_t i = xs.size(); i-- > 0;) acc = cons(used[i], {xs[i], acc});
  return acc;
}

}  // namespace pairbij::nadic
