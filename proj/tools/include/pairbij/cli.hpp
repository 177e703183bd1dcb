#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairbij/charpair.hpp"
#include "pairbij/encoders.hpp"
#include "pairbij/errors.hpp"

namespace pairbij::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

/// Family specs: nadic:<b>, cantor, morton, arith-set:<k>, squares, powers2,
/// syracuse, bits-of-naturals, seed-file:<path>[:<encoder>], each optionally
/// prefixed with xor:<mask>: (nestable).
charpair::PairingFamily parse_family(std::string_view spec, Fuel fuel = Fuel::standard());

/// "[2,0,1,2]" style literals; whitespace is ignored.
std::vector<Nat> parse_nat_list(std::string_view literal);
std::string format_list(std::span<const Nat> xs);

Value parse_value(const AnyEncoder& encoder, std::string_view literal);
std::string format_value(const Value& v, Fuel fuel = Fuel::standard());

/// Point i is unpair(i).
using CurvePath = std::vector<NatPair>;

class CurveError : public Error {
 public:
  CurveError(std::uint64_t index, const std::string& cause)
      : Error("unpair failed at n=" + std::to_string(index) + ": " + cause), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

CurvePath curve_path(const charpair::PairingFamily& family, std::uint64_t count);
void write_csv(const CurvePath& path, std::ostream& out);
/// A single polyline in a 1000x1000 viewBox with a 10px margin.
void write_svg(const CurvePath& path, std::ostream& out);

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::optional<std::string> counterexample;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

SelftestReport selftest(std::uint64_t range, Fuel fuel = Fuel::standard());

/// Entry point shared by the executable and the tests. Reads PAIRBIJ_FUEL
/// from the environment; --fuel overrides it.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pairbij::cli
