#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pairbij/cli.hpp"

namespace pairbij::cli {

namespace {

struct Options {
  std::optional<std::uint64_t> fuel;
  std::string family;
  std::string x, y, n;
  std::string from, to, literal;
  std::string k, l, upto;
  std::string count, format = "csv", out_path;
  std::uint64_t range = 1000;
};

std::uint64_t parse_u64(std::string_view what, const std::string& text) {
  const Nat v = Nat::parse(text);
  if (!v.fits_u64()) throw ParseError(std::string(what) + " is too large: " + text);
  return v.to_u64();
}

Fuel resolve_fuel(const Options& opt) {
  if (opt.fuel) return Fuel(*opt.fuel);
  if (const char* env = std::getenv("PAIRBIJ_FUEL"); env && *env) {
    return Fuel(parse_u64("PAIRBIJ_FUEL", env));
  }
  return Fuel::standard();
}

int cmd_curve(const Options& opt, Fuel fuel, std::ostream& out) {
  if (opt.format != "csv" && opt.format != "svg") {
    throw ParseError("curve format must be csv or svg, got '" + opt.format + "'");
  }
  const auto path = curve_path(parse_family(opt.family, fuel), parse_u64("count", opt.count));
  std::ostringstream body;
  if (opt.format == "csv") {
    write_csv(path, body);
  } else {
    write_svg(path, body);
  }
  if (opt.out_path.empty()) {
    out << body.str();
    return kExitOk;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file || !(file << body.str())) throw ParseError("cannot write " + opt.out_path);
  return kExitOk;
}

int cmd_selftest(const Options& opt, Fuel fuel, std::ostream& out, std::ostream& err) {
  const auto report = selftest(opt.range, fuel);
  for (const auto& suite : report.suites) {
    if (suite.counterexample) {
      out << "FAIL " << suite.name << ": " << *suite.counterexample << '\n';
    } else {
      out << "ok   " << suite.name << " (" << suite.checks << " checks)\n";
    }
  }
  if (!report.ok()) {
    err << "selftest failed\n";
    return kExitInvariant;
  }
  out << "selftest passed at range " << opt.range << '\n';
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Pairing bijections between N x N and N", "pairbij"};
  app.require_subcommand(1);
  app.add_option("--fuel", opt.fuel, "Step budget for lazy computations (overrides PAIRBIJ_FUEL)")
      ->check(CLI::PositiveNumber);

  auto* pair = app.add_subcommand("pair", "Pair x and y with a family");
  pair->add_option("family", opt.family)->required();
  pair->add_option("x", opt.x)->required();
  pair->add_option("y", opt.y)->required();

  auto* unpair = app.add_subcommand("unpair", "Unpair n with a family, printing \"x y\"");
  unpair->add_option("family", opt.family)->required();
  unpair->add_option("n", opt.n)->required();

  auto* encode = app.add_subcommand("encode", "Route a value from one encoder to another");
  encode->add_option("--from", opt.from, "Source encoder")->required();
  encode->add_option("--to", opt.to, "Target encoder")->required();
  encode->add_option("value", opt.literal)->required();

  auto* permute = app.add_subcommand("permute", "Print n and bij(k,l,n) for n in [0..upto]");
  permute->add_option("k", opt.k)->required();
  permute->add_option("l", opt.l)->required();
  permute->add_option("upto", opt.upto)->required();

  auto* curve = app.add_subcommand("curve", "Export the path unpair(0..count)");
  curve->add_option("family", opt.family)->required();
  curve->add_option("count", opt.count)->required();
  curve->add_option("format", opt.format, "csv or svg");
  curve->add_option("--out", opt.out_path, "Output file (default stdout)");

  auto* self = app.add_subcommand("selftest", "Run the invariant suites");
  self->add_option("--range", opt.range, "Upper end of the sampled range");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Fuel fuel = resolve_fuel(opt);
    if (pair->parsed()) {
      const auto family = parse_family(opt.family, fuel);
      out << family.pair({Nat::parse(opt.x), Nat::parse(opt.y)}) << '\n';
    } else if (unpair->parsed()) {
      const auto [x, y] = parse_family(opt.family, fuel).unpair(Nat::parse(opt.n));
      out << x << ' ' << y << '\n';
    } else if (encode->parsed()) {
      const auto source = encoder_by_name(opt.from, fuel);
      const auto target = encoder_by_name(opt.to, fuel);
      out << format_value(as(target, source, parse_value(source, opt.literal)), fuel) << '\n';
    } else if (permute->parsed()) {
      const nadic::Base k(Nat::parse(opt.k));
      const nadic::Base l(Nat::parse(opt.l));
      const auto upto = parse_u64("upto", opt.upto);
      for (std::uint64_t n = 0; n <= upto; ++n) out << n << ' ' << nadic::bij(k, l, n) << '\n';
    } else if (curve->parsed()) {
      return cmd_curve(opt, fuel, out);
    } else if (self->parsed()) {
      return cmd_selftest(opt, fuel, out, err);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pairbij::cli
