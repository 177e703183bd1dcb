#include "pairbij/streams.hpp"

#include <stdexcept>

namespace pairbij {

Fuel::Fuel(std::uint64_t budget) : budget_(budget) {
  if (budget == 0) throw std::invalid_argument("fuel budget must be positive");
}

bool require_bit(const Nat& v) {
  if (v.is_zero()) return false;
  if (v == Nat(1)) return true;
  throw InvalidBit("expected a bit (0 or 1), got " + v.str());
}

namespace stream {

NatStream from_list(std::vector<Nat> xs) {
  const auto size = xs.size();
  auto shared = std::make_shared<const std::vector<Nat>>(std::move(xs));
  return NatStream(
      [shared](FuelMeter&) {
        return NatStream::Pull([shared, i = std::size_t{0}]() mutable -> std::optional<Nat> {
          if (i >= shared->size()) return std::nullopt;
          return (*shared)[i++];
        });
      },
      size);
}

NatStream cycle(std::vector<Nat> xs) {
  if (xs.empty()) throw EmptyCycle();
  auto shared = std::make_shared<const std::vector<Nat>>(std::move(xs));
  return NatStream([shared](FuelMeter&) {
    return NatStream::Pull([shared, i = std::size_t{0}]() mutable -> std::optional<Nat> {
      const Nat& v = (*shared)[i];
      i = (i + 1) % shared->size();
      return v;
    });
  });
}

NatStream arith(Nat start, Nat step) {
  if (step.is_zero()) throw ZeroStep();
  return NatStream([start = std::move(start), step = std::move(step)](FuelMeter&) {
    return NatStream::Pull([step, next = start]() mutable -> std::optional<Nat> {
      Nat v = next;
      next += step;
      return v;
    });
  });
}

NatStream iterate(Nat start, std::function<Nat(const Nat&)> f) {
  return NatStream([start = std::move(start), f = std::move(f)](FuelMeter&) {
    return NatStream::Pull([f, next = start]() mutable -> std::optional<Nat> {
      Nat v = next;
      next = f(next);
      return v;
    });
  });
}

}  // namespace stream
}  // namespace pairbij
