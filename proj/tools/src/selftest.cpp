#include <set>
#include <sstream>

#include "pairbij/cli.hpp"

namespace pairbij::cli {

namespace {

using charpair::PairingFamily;
using nadic::Base;

std::string show(const Nat& n) { return n.str(); }
std::string show(const NatPair& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}
std::string show(const std::vector<Nat>& xs) { return format_list(xs); }

std::vector<Nat> nats(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Records the first failed check; later checks still count but are skipped.
class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  bool failed() const { return result_.counterexample.has_value(); }

  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    ++result_.checks;
    if (failed() || got == want) return;
    result_.counterexample = what + ": got " + show(got) + ", expected " + show(want);
  }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!failed() && !ok) result_.counterexample = what;
  }

  template <class F>
  void guarded(F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      if (!failed()) result_.counterexample = std::string("unexpected error: ") + e.what();
    }
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

SuiteResult transcripts() {
  Suite s("golden transcripts");
  s.guarded([&] {
    s.expect_eq(nadic::cons(Base(3), {10, 20}), Nat(1830519), "nAdicCons 3 (10,20)");
    s.expect_eq(nadic::decons(Base(3), 1830519), NatPair{10, 20}, "nAdicDeCons 3 1830519");
    const std::vector<NatPair> base3 = {{0, 0}, {0, 1}, {1, 0}, {0, 2},
                                        {0, 3}, {1, 1}, {0, 4}, {0, 5}};
    for (int n = 0; n < 8; ++n) {
      s.expect_eq(nadic::unpair(Base(3), n), base3[n], "nAdicUnPair 3 " + std::to_string(n));
      s.expect_eq(nadic::pair(Base(3), base3[n]), Nat(n), "nAdicPair 3 " + show(base3[n]));
    }
    s.expect_eq(nadic::nat_to_nats(Base(3), 2012), nats({0, 2, 2, 0, 0, 0, 0}), "nat2nats 3 2012");
    const auto list = encoder_list();
    const auto sample = stream::from_list(nats({2, 0, 1, 2}));
    s.expect_eq(as(encoder_nadic_nat(Base(3)), list, sample), Nat(873), "as (nAdicNat 3) list");
    s.expect_eq(as(encoder_nadic_nat(Base(7)), list, sample), Nat(27146), "as (nAdicNat 7) list");
    s.expect_eq(as(encoder_nat(), list, sample), Nat(300), "as nat list");
    s.expect_eq(as(encoder_nat_prime(), list, sample), Nat(1644), "as nat' list");

    const std::vector<int> two_three = {0,  1,  3,  2,  9,  5,  6,  4,  27, 14, 15,
                                        8,  18, 10, 12, 7,  81, 41, 42, 22, 45, 23,
                                        24, 13, 54, 28, 30, 16, 36, 19, 21, 11};
    const std::vector<int> three_two = {0,  1,  3,  2,  7,  5,  6,  15,  11, 4,  13,
                                        31, 14, 23, 9,  10, 27, 63, 12,  29, 47, 30,
                                        19, 21, 22, 55, 127, 8, 25, 59, 26, 95};
    for (int n = 0; n < 32; ++n) {
      s.expect_eq(nadic::bij(Base(2), Base(3), n), Nat(two_three[n]),
                  "nAdicBij 2 3 " + std::to_string(n));
      s.expect_eq(nadic::bij(Base(3), Base(2), n), Nat(three_two[n]),
                  "nAdicBij 3 2 " + std::to_string(n));
    }

    s.expect_eq(stream::drain(list_to_bins(sample)), nats({0, 0, 1, 1, 0, 1, 0, 0, 1}),
                "list2bins [2,0,1,2]");
    s.expect_eq(stream::take(list_to_bins(stream::arith(0, 2)), 20),
                nats({1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}),
                "take 20 (list2bins [0,2..])");
    s.expect_eq(stream::drain(as(encoder_bins(), encoder_set(),
                                 stream::from_list(nats({0, 2, 4, 5, 7, 8, 9})))),
                nats({1, 0, 1, 0, 1, 1, 0, 1, 1, 1}), "as bins set");

    const auto guide = stream::from_list(nats({0, 1, 0, 1, 0, 1}));
    auto [ls, rs] = charpair::bsplit(guide, stream::from_list(nats({10, 20, 30, 40, 50, 60})));
    s.expect_eq(stream::drain(ls), nats({20, 40, 60}), "bsplit members");
    s.expect_eq(stream::drain(rs), nats({10, 30, 50}), "bsplit non-members");
    s.expect_eq(stream::drain(charpair::bmerge(guide, ls, rs)), nats({10, 20, 30, 40, 50, 60}),
                "bmerge transcript");

    const std::vector<NatPair> morton = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0},
                                         {2, 1}, {3, 1}, {0, 2}, {1, 2}, {0, 3}};
    const auto bpair2 = charpair::preset_family("morton");
    const auto bpair_k2 = charpair::preset_family("arith-set", Nat(2));
    for (int n = 0; n <= 10; ++n) {
      s.expect_eq(bpair2.unpair(n), morton[n], "bunpair2 " + std::to_string(n));
      s.expect_eq(bpair2.pair(morton[n]), Nat(n), "bpair2 " + show(morton[n]));
      s.expect_eq(bpair_k2.unpair(n), morton[n], "bunpair 2 " + std::to_string(n));
    }
  });
  return s.result();
}

SuiteResult nadic_roundtrips(std::uint64_t range) {
  Suite s("n-adic roundtrips (b in 2..16)");
  s.guarded([&] {
    for (int b = 2; b <= 16 && !s.failed(); ++b) {
      const Base base(b);
      for (std::uint64_t n = 0; n <= range && !s.failed(); ++n) {
        const auto tag = "b=" + std::to_string(b) + " n=" + std::to_string(n);
        s.expect_eq(nadic::pair(base, nadic::unpair(base, n)), Nat(n), "pair . unpair " + tag);
        s.expect_eq(nadic::nats_to_nat(base, nadic::nat_to_nats(base, n)), Nat(n),
                    "nats2nat . nat2nats " + tag);
      }
    }
  });
  return s.result();
}

SuiteResult permutation_law(std::uint64_t range) {
  Suite s("n-adic permutation inverse law (k,l in 2..8)");
  s.guarded([&] {
    for (int k = 2; k <= 8 && !s.failed(); ++k) {
      for (int l = 2; l <= 8 && !s.failed(); ++l) {
        for (std::uint64_t n = 0; n <= range && !s.failed(); ++n) {
          s.expect_eq(nadic::bij(Base(l), Base(k), nadic::bij(Base(k), Base(l), n)), Nat(n),
                      "bij " + std::to_string(l) + " " + std::to_string(k) + " . bij " +
                          std::to_string(k) + " " + std::to_string(l) + " at " +
                          std::to_string(n));
        }
      }
    }
  });
  return s.result();
}

SuiteResult encoder_roundtrips(std::uint64_t range, Fuel fuel) {
  Suite s("encoder roundtrips");
  s.guarded([&] {
    const auto nat = encoder_nat(fuel);
    const auto bins = encoder_bins();
    for (std::uint64_t n = 0; n <= range && !s.failed(); ++n) {
      const auto tag = std::to_string(n);
      s.expect_eq(as(nat, bins, as(bins, nat, Nat(n))), Nat(n), "nat -> bins -> nat " + tag);
      const auto xs = nadic::nat_to_nats(Base(2), n);
      const auto as_set = stream::drain(list_to_set(stream::from_list(xs)), fuel);
      const auto as_mset = stream::drain(list_to_mset(stream::from_list(xs)), fuel);
      s.expect_eq(stream::drain(as(encoder_set(), encoder_mset(),
                                   as(encoder_mset(), encoder_set(), stream::from_list(as_set))),
                                fuel),
                  as_set, "set -> mset -> set " + tag);
      s.expect_eq(stream::drain(as(encoder_list(), encoder_mset(), stream::from_list(as_mset)),
                                fuel),
                  xs, "mset -> list " + tag);
      s.expect_eq(stream::drain(as(encoder_list(), encoder_bins(),
                                   as(encoder_bins(), encoder_list(), stream::from_list(xs))),
                                fuel),
                  xs, "list -> bins -> list " + tag);
    }
  });
  return s.result();
}

SuiteResult family_roundtrip(const PairingFamily& f, std::uint64_t range) {
  Suite s("roundtrip " + f.name());
  s.guarded([&] {
    std::set<NatPair> seen;
    for (std::uint64_t n = 0; n <= range && !s.failed(); ++n) {
      const auto p = f.unpair(n);
      s.expect_eq(f.pair(p), Nat(n), "pair(unpair(" + std::to_string(n) + "))");
      s.expect(seen.insert(p).second, "unpair repeats " + show(p) + " at " + std::to_string(n));
    }
  });
  return s.result();
}

SuiteResult divergence(Fuel fuel) {
  Suite s("divergence detection");
  auto raises_fuel = [&](auto&& call, const std::string& what) {
    try {
      call();
      s.expect(false, what + " terminated");
    } catch (const FuelExhausted&) {
      s.expect(true, what);
    } catch (const std::exception& e) {
      s.expect(false, what + " raised " + e.what());
    }
  };
  using namespace charpair;
  raises_fuel([&] { generic_pair({"bins", seed::Cycle{{0}}}, {10, 20}, fuel); },
              "genericPair bins (cycle [0]) (10,20)");
  raises_fuel([&] { generic_unpair({"bins", seed::Cycle{{1}}}, 42, fuel); },
              "genericUnpair bins (cycle [1]) 42");
  return s.result();
}

}  // namespace

bool SelftestReport::ok() const {
  for (const auto& suite : suites) {
    if (suite.counterexample) return false;
  }
  return true;
}

SelftestReport selftest(std::uint64_t range, Fuel fuel) {
  SelftestReport report;
  report.suites.push_back(transcripts());
  report.suites.push_back(nadic_roundtrips(range));
  report.suites.push_back(permutation_law(range));
  report.suites.push_back(encoder_roundtrips(range, fuel));
  report.suites.push_back(family_roundtrip(charpair::cantor_family(), range));
  std::vector<PairingFamily> presets = {charpair::preset_family("morton", std::nullopt, fuel)};
  // arith-set:1 is excluded: its set is all of N and leaves no room for the
  // second component.
  for (int k = 2; k <= 8; ++k) presets.push_back(charpair::preset_family("arith-set", Nat(k), fuel));
  for (const char* name : {"squares", "powers2", "syracuse", "bits-of-naturals"}) {
    presets.push_back(charpair::preset_family(name, std::nullopt, fuel));
  }
  for (const auto& f : presets) report.suites.push_back(family_roundtrip(f, range));
  report.suites.push_back(divergence(fuel));
  return report;
}

}  // namespace pairbij::cli
