#include "pairbij/encoders.hpp"

#include "pairbij/errors.hpp"

namespace pairbij {

NatStream list_to_mset(NatStream ns) {
  return NatStream(
      [ns](FuelMeter& meter) {
        return NatStream::Pull([cursor = ns.open(meter), sum = Nat(0)]() mutable -> std::optional<Nat> {
          auto v = cursor.next();
          if (!v) return std::nullopt;
          sum += *v;
          return sum;
        });
      },
      ns.finite_hint());
}

NatStream mset_to_list(NatStream ms) {
  return NatStream(
      [ms](FuelMeter& meter) {
        return NatStream::Pull([cursor = ms.open(meter), prev = Nat(0)]() mutable -> std::optional<Nat> {
          auto v = cursor.next();
          if (!v) return std::nullopt;
          if (*v < prev) {
            throw NotNonDecreasing("multiset element " + v->str() + " follows " + prev.str());
          }
          Nat diff = *v - prev;
          prev = std::move(*v);
          return diff;
        });
      },
      ms.finite_hint());
}

NatStream list_to_set(NatStream ns) {
  auto succ = stream::map([](const Nat& n) { return n + 1; }, std::move(ns));
  return stream::map([](const Nat& n) { return n - 1; }, list_to_mset(std::move(succ)));
}

NatStream set_to_list(NatStream xs) {
  return NatStream(
      [xs](FuelMeter& meter) {
        return NatStream::Pull([cursor = xs.open(meter),
                                floor = Nat(0)]() mutable -> std::optional<Nat> {
          auto v = cursor.next();
          if (!v) return std::nullopt;
          // floor is one past the previous element (0 at the start).
          if (*v < floor) {
            throw NotStrictlyIncreasing("set element " + v->str() + " is not above " +
                                        (floor.is_zero() ? std::string("the start")
                                                         : (floor - 1).str()));
          }
          Nat gap = *v - floor;
          floor = *v + 1;
          return gap;
        });
      },
      xs.finite_hint());
}

BitStream list_to_bins(NatStream ns) {
  return BitStream([ns](FuelMeter& meter) {
    return BitStream::Pull([cursor = ns.open(meter), started = false, done = false,
                            zeros_left = Nat(0), one_pending = false]() mutable -> std::optional<Nat> {
      if (done) return std::nullopt;
      if (zeros_left > Nat(0)) {
        zeros_left -= 1;
        return Nat(0);
      }
      if (one_pending) {
        one_pending = false;
        return Nat(1);
      }
      auto v = cursor.next();
      if (!v) {
        done = true;
        if (started) return std::nullopt;
        return Nat(0);
      }
      started = true;
      if (v->is_zero()) return Nat(1);
      zeros_left = *v - 1;
      one_pending = true;
      return Nat(0);
    });
  });
}

NatStream bins_to_list(BitStream bs) {
  return NatStream([bs](FuelMeter& meter) {
    return NatStream::Pull([cursor = bs.open(meter)]() mutable -> std::optional<Nat> {
      Nat zeros = 0;
      while (auto bit = cursor.next()) {
        if (require_bit(*bit)) return zeros;
        zeros += 1;
      }
      return std::nullopt;
    });
  });
}

std::vector<Nat> bins_of(const Nat& n) {
  if (n.is_zero()) return {Nat(0)};
  std::vector<Nat> bits;
  for (const Nat& zeros : nadic::nat_to_nats(nadic::Base(2), n)) {
    for (Nat i = 0; i < zeros; i += 1) bits.emplace_back(0);
    bits.emplace_back(1);
  }
  return bits;
}

Nat nat_of_bins(std::span<const Nat> bits) {
  std::vector<Nat> counts;
  Nat zeros = 0;
  for (const Nat& b : bits) {
    if (require_bit(b)) {
      counts.push_back(zeros);
      zeros = 0;
    } else {
      zeros += 1;
    }
  }
  return nadic::nats_to_nat(nadic::Base(2), counts);
}

Encoder<NatStream> encoder_list() { return {"list", identity<NatStream>()}; }

Encoder<NatStream> encoder_mset() {
  return {"mset", Iso<NatStream, Hub>(mset_to_list, list_to_mset)};
}

Encoder<NatStream> encoder_set() {
  return {"set", Iso<NatStream, Hub>(set_to_list, list_to_set)};
}

Encoder<NatStream> encoder_bins() {
  return {"bins", Iso<NatStream, Hub>(bins_to_list, list_to_bins)};
}

Encoder<Nat> encoder_nadic_nat(const nadic::Base& b, Fuel fuel) {
  return {"nadic:" + b.value().str(),
          Iso<Nat, Hub>([b](const Nat& n) { return stream::from_list(nadic::nat_to_nats(b, n)); },
                        [b, fuel](const Hub& hub) {
                          const auto xs = stream::drain(hub, fuel);
                          return nadic::nats_to_nat(b, xs);
                        })};
}

Encoder<Nat> encoder_nat(Fuel fuel) {
  auto e = encoder_nadic_nat(nadic::Base(2), fuel);
  e.name = "nat";
  return e;
}

Encoder<Nat> encoder_nat_prime(Fuel fuel) {
  const NatStream bases = stream::arith(2, 1);
  return {"nat-prime",
          Iso<Nat, Hub>(
              [bases, fuel](const Nat& n) {
                return stream::from_list(nadic::nat_to_nats_mixed(bases, n, fuel));
              },
              [bases, fuel](const Hub& hub) {
                const auto xs = stream::drain(hub, fuel);
                return nadic::nats_to_nat_mixed(bases, xs, fuel);
              })};
}

namespace {

template <class A>
const A& expect(const Value& v, const std::string& encoder) {
  if (const A* a = std::get_if<A>(&v)) return *a;
  throw ParseError("value has the wrong shape for encoder '" + encoder + "'");
}

}  // namespace

AnyEncoder erase(Encoder<Nat> e) {
  const std::string name = e.name;
  Iso<Value, Hub> iso(
      [iso = e.iso, name](const Value& v) { return iso.forward(expect<Nat>(v, name)); },
      [iso = e.iso](const Hub& h) { return Value(iso.backward(h)); });
  return {{std::move(e.name), std::move(iso)}, ValueKind::natural};
}

AnyEncoder erase(Encoder<NatStream> e) {
  const std::string name = e.name;
  Iso<Value, Hub> iso(
      [iso = e.iso, name](const Value& v) { return iso.forward(expect<NatStream>(v, name)); },
      [iso = e.iso](const Hub& h) { return Value(iso.backward(h)); });
  return {{std::move(e.name), std::move(iso)}, ValueKind::sequence};
}

AnyEncoder encoder_by_name(std::string_view name, Fuel fuel) {
  if (name == "list") return erase(encoder_list());
  if (name == "mset") return erase(encoder_mset());
  if (name == "set") return erase(encoder_set());
  if (name == "bins") return erase(encoder_bins());
  if (name == "nat") return erase(encoder_nat(fuel));
  if (name == "nat-prime") return erase(encoder_nat_prime(fuel));
  constexpr std::string_view kNadic = "nadic:";
  if (name.starts_with(kNadic)) {
    const auto digits = name.substr(kNadic.size());
    Nat b;
    try {
      b = Nat::parse(digits);
    } catch (const ParseError&) {
      throw UnknownEncoder("bad base in encoder name '" + std::string(name) + "'");
    }
    return erase(encoder_nadic_nat(nadic::Base(b), fuel));
  }
  throw UnknownEncoder("unknown encoder '" + std::string(name) + "'");
}

Value as(const AnyEncoder& target, const AnyEncoder& source, const Value& x) {
  return as(target.encoder, source.encoder, x);
}

}  // namespace pairbij
