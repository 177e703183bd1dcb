#include "pairbij/charpair.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "pairbij/encoders.hpp"
#include "pairbij/errors.hpp"

namespace pairbij::charpair {

namespace {

NatStream routed(BitStream guide, NatStream ns, bool want) {
  return NatStream([guide = std::move(guide), ns = std::move(ns), want](FuelMeter& meter) {
    return NatStream::Pull([g = guide.open(meter), c = ns.open(meter),
                            pos = std::uint64_t{0}, want]() mutable -> std::optional<Nat> {
      for (;;) {
        auto v = c.next();
        if (!v) return std::nullopt;
        auto bit = g.next();
        if (!bit) {
          throw GuideExhausted("bsplit provides no guidance at: " + v->str(), pos);
        }
        ++pos;
        if (require_bit(*bit) == want) return v;
      }
    });
  });
}

// One side of a merge: a lookahead over the source plus an optional padding
// element standing in front of it.
class MergeSide {
 public:
  explicit MergeSide(Cursor<Nat> cursor) : src_(std::move(cursor)) {}

  bool empty() { return !pad_ && src_.empty(); }
  bool singleton() { return pad_ ? src_.empty() : src_.singleton(); }
  void pad_with_zero() { pad_ = Nat(0); }

  Nat pop() {
    if (pad_) {
      Nat v = std::move(*pad_);
      pad_.reset();
      return v;
    }
    return *src_.next();
  }

 private:
  Lookahead<Nat> src_;
  std::optional<Nat> pad_;
};

bool pull_guide(Cursor<Nat>& guide, std::uint64_t& pos) {
  auto bit = guide.next();
  if (!bit) throw GuideExhausted("bmerge ran out of guide bits", pos);
  ++pos;
  return require_bit(*bit);
}

std::string join(const std::vector<Nat>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += xs[i].str();
  }
  return s + "]";
}

std::vector<Nat> read_seed_file(const std::filesystem::path& path, bool bits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open seed file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<Nat> out;
  if (bits) {
    for (char c : text) {
      if (c == '0' || c == '1') {
        out.emplace_back(c - '0');
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError("seed file " + path.string() + " contains non-bit character '" +
                         std::string(1, c) + "'");
      }
    }
    return out;
  }
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(Nat::parse(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']') {
      flush();
    } else {
      throw ParseError("seed file " + path.string() + " contains unexpected character '" +
                       std::string(1, c) + "'");
    }
  }
  flush();
  return out;
}

NatStream file_stream(const std::filesystem::path& path, bool bits) {
  auto data = std::make_shared<const std::vector<Nat>>(read_seed_file(path, bits));
  const std::string name = path.string();
  return NatStream([data, name](FuelMeter&) {
    return NatStream::Pull([data, name, i = std::size_t{0}]() mutable -> std::optional<Nat> {
      if (i >= data->size()) {
        throw GuideExhausted("seed file " + name + " exhausted at element " + std::to_string(i),
                             i);
      }
      return (*data)[i++];
    });
  });
}

Encoder<NatStream> seed_encoder(const std::string& name) {
  if (name == "list") return encoder_list();
  if (name == "mset") return encoder_mset();
  if (name == "set") return encoder_set();
  if (name == "bins") return encoder_bins();
  throw UnknownEncoder("seed encoder must be list, mset, set or bins, got '" + name + "'");
}

// Pulls the guide past its first `consumed` bits until the block holding the
// last consumed bit ends. An infinite block (e.g. all ones) exhausts the fuel,
// which is how guides violating the finite-block condition are reported.
void require_block_end(const BitStream& guide, std::uint64_t consumed, FuelMeter& meter) {
  if (consumed == 0) return;
  auto cursor = guide.open(meter);
  bool last = false;
  for (std::uint64_t i = 0; i < consumed; ++i) {
    auto bit = cursor.next();
    if (!bit) throw GuideExhausted("characteristic function shorter than its use", i);
    last = require_bit(*bit);
  }
  for (std::uint64_t pos = consumed;; ++pos) {
    auto bit = cursor.next();
    if (!bit) {
      throw GuideExhausted("characteristic function ends inside a block of " +
                               std::string(last ? "ones" : "zeros"),
                           pos);
    }
    if (require_bit(*bit) != last) return;
  }
}

Nat nat_from_bit_stream(const BitStream& bits, FuelMeter& meter) {
  const auto counts = stream::drain(bins_to_list(bits), meter);
  return nadic::nats_to_nat(nadic::Base(2), counts);
}

}  // namespace

Split bsplit(BitStream guide, NatStream ns) {
  return {routed(guide, ns, true), routed(guide, ns, false)};
}

NatStream bmerge(BitStream guide, NatStream xs, NatStream ys) {
  return NatStream([guide = std::move(guide), xs = std::move(xs), ys = std::move(ys)](FuelMeter& meter) {
    return NatStream::Pull([g = guide.open(meter), left = MergeSide(xs.open(meter)),
                            right = MergeSide(ys.open(meter)), pos = std::uint64_t{0},
                            done = false]() mutable -> std::optional<Nat> {
      if (done) return std::nullopt;
      if (left.empty() && right.empty()) {
        done = true;
        return std::nullopt;
      }
      if (left.empty() && right.singleton()) {
        done = true;
        return right.pop();
      }
      if (left.singleton() && right.empty()) {
        done = true;
        return left.pop();
      }
      if (left.empty()) left.pad_with_zero();
      if (right.empty()) right.pad_with_zero();
      return pull_guide(g, pos) ? left.pop() : right.pop();
    });
  });
}

NatStream bmerge_exact(BitStream guide, NatStream xs, NatStream ys) {
  return NatStream([guide = std::move(guide), xs = std::move(xs), ys = std::move(ys)](FuelMeter& meter) {
    return NatStream::Pull([g = guide.open(meter), left = MergeSide(xs.open(meter)),
                            right = MergeSide(ys.open(meter)),
                            pos = std::uint64_t{0}]() mutable -> std::optional<Nat> {
      if (left.empty() && right.empty()) return std::nullopt;
      MergeSide& side = pull_guide(g, pos) ? left : right;
      return side.empty() ? Nat(0) : side.pop();
    });
  });
}

std::string describe(const SeedSpec& seed) {
  struct Visitor {
    std::string operator()(const seed::Arith& a) const {
      return "arith(" + a.start.str() + "," + a.step.str() + ")";
    }
    std::string operator()(const seed::Cycle& c) const { return "cycle " + join(c.items); }
    std::string operator()(const seed::Squares&) const { return "squares"; }
    std::string operator()(const seed::Powers2&) const { return "powers2"; }
    std::string operator()(const seed::Syracuse&) const { return "syracuse values"; }
    std::string operator()(const seed::BitsOfNaturals&) const { return "bits of naturals"; }
    std::string operator()(const seed::Explicit& e) const { return "list " + join(e.items); }
    std::string operator()(const seed::File& f) const { return "file " + f.path.string(); }
  };
  return "seed " + std::visit(Visitor{}, seed.payload) + " via " + seed.encoder_name;
}

NatStream seed_values(const SeedPayload& payload) {
  struct Visitor {
    NatStream operator()(const seed::Arith& a) const { return stream::arith(a.start, a.step); }
    NatStream operator()(const seed::Cycle& c) const { return stream::cycle(c.items); }
    NatStream operator()(const seed::Squares&) const {
      return stream::map([](const Nat& n) { return n * n; }, stream::naturals());
    }
    NatStream operator()(const seed::Powers2&) const {
      return stream::iterate(1, [](const Nat& n) { return n * 2; });
    }
    NatStream operator()(const seed::Syracuse&) const {
      return stream::map([](const Nat& n) { return syracuse(n); }, stream::naturals());
    }
    NatStream operator()(const seed::BitsOfNaturals&) const {
      return stream::concat_map([](const Nat& n) { return bins_of(n); }, stream::naturals());
    }
    NatStream operator()(const seed::Explicit& e) const { return stream::from_list(e.items); }
    NatStream operator()(const seed::File&) const {
      throw std::logic_error("file seeds are resolved with their encoder");
    }
  };
  return std::visit(Visitor{}, payload);
}

BitStream characteristic_function(const SeedSpec& seed) {
  const auto encoder = seed_encoder(seed.encoder_name);
  NatStream values = std::holds_alternative<seed::File>(seed.payload)
                         ? file_stream(std::get<seed::File>(seed.payload).path,
                                       seed.encoder_name == "bins")
                         : seed_values(seed.payload);
  return as(encoder_bins(), encoder, values);
}

Nat generic_pair(const SeedSpec& seed, const NatPair& p, Fuel fuel) {
  FuelMeter meter(fuel, describe(seed));
  const BitStream guide = characteristic_function(seed);
  std::uint64_t consumed = 0;
  auto counted = stream::map(
      [&consumed](const Nat& b) {
        ++consumed;
        return b;
      },
      guide);
  auto merged = bmerge_exact(counted, stream::from_list(bins_of(p.first)),
                             stream::from_list(bins_of(p.second)));
  Nat n = nat_from_bit_stream(merged, meter);
  require_block_end(guide, consumed, meter);
  return n;
}

NatPair generic_unpair(const SeedSpec& seed, const Nat& n, Fuel fuel) {
  FuelMeter meter(fuel, describe(seed));
  const BitStream guide = characteristic_function(seed);
  const auto bits = bins_of(n);
  auto [ls, rs] = bsplit(guide, stream::from_list(bits));
  NatPair result{nat_from_bit_stream(ls, meter), nat_from_bit_stream(rs, meter)};
  require_block_end(guide, bits.size(), meter);
  return result;
}

PairingFamily::PairingFamily(std::string name, PairFn pair, UnpairFn unpair, Fuel fuel)
    : name_(std::move(name)), pair_(std::move(pair)), unpair_(std::move(unpair)), fuel_(fuel) {}

PairingFamily PairingFamily::with_fuel(Fuel fuel) const {
  return PairingFamily(name_, pair_, unpair_, fuel);
}

PairingFamily seed_family(std::string name, SeedSpec seed, Fuel fuel) {
  return PairingFamily(
      std::move(name),
      [seed](const NatPair& p, Fuel f) { return generic_pair(seed, p, f); },
      [seed](const Nat& n, Fuel f) { return generic_unpair(seed, n, f); }, fuel);
}

PairingFamily nadic_family(const nadic::Base& b) {
  return PairingFamily(
      "nadic:" + b.value().str(), [b](const NatPair& p, Fuel) { return nadic::pair(b, p); },
      [b](const Nat& n, Fuel) { return nadic::unpair(b, n); });
}

PairingFamily cantor_family() {
  return PairingFamily(
      "cantor", [](const NatPair& p, Fuel) { return cantor_pair(p); },
      [](const Nat& n, Fuel) { return cantor_unpair(n); });
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"morton",  "arith-set", "squares",
                                                 "powers2", "syracuse",  "bits-of-naturals"};
  return names;
}

PairingFamily preset_family(std::string_view name, std::optional<Nat> k, Fuel fuel) {
  if (name == "morton") {
    return seed_family("morton", {"bins", seed::Cycle{{1, 0}}}, fuel);
  }
  if (name == "arith-set") {
    if (!k) throw ParseError("arith-set needs a step k");
    if (k->is_zero()) throw ZeroStep();
    return seed_family("arith-set:" + k->str(), {"set", seed::Arith{0, *k}}, fuel);
  }
  if (name == "squares") return seed_family("squares", {"set", seed::Squares{}}, fuel);
  if (name == "powers2") return seed_family("powers2", {"set", seed::Powers2{}}, fuel);
  if (name == "syracuse") return seed_family("syracuse", {"list", seed::Syracuse{}}, fuel);
  if (name == "bits-of-naturals") {
    return seed_family("bits-of-naturals", {"bins", seed::BitsOfNaturals{}}, fuel);
  }
  throw UnknownPreset("unknown preset '" + std::string(name) + "'");
}

PairingFamily twist_family(const PairingFamily& f, const Nat& mask) {
  auto pair = f.pair_fn();
  auto unpair = f.unpair_fn();
  return PairingFamily(
      "xor:" + mask.str() + ":" + f.name(),
      [pair, mask](const NatPair& p, Fuel fuel) { return pair(p, fuel) ^ mask; },
      [unpair, mask](const Nat& n, Fuel fuel) { return unpair(n ^ mask, fuel); }, f.fuel());
}

Nat syracuse(const Nat& n) { return nadic::tail(nadic::Base(2), n * 6 + 4); }

std::vector<Nat> nsyr(const Nat& n, Fuel fuel) {
  FuelMeter meter(fuel, "syracuse trajectory of " + n.str());
  std::vector<Nat> out{n};
  while (!out.back().is_zero()) {
    meter.charge();
    out.push_back(syracuse(out.back()));
  }
  return out;
}

Nat cantor_pair(const NatPair& p) {
  const Nat s = p.first + p.second;
  return s * (s + 1) / 2 + p.second;
}

NatPair cantor_unpair(const Nat& n) {
  const Nat w = (isqrt(n * 8 + 1) - 1) / 2;
  const Nat t = w * (w + 1) / 2;
  Nat y = n - t;
  Nat x = w - y;
  return {std::move(x), std::move(y)};
}

}  // namespace pairbij::charpair
