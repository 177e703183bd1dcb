// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pairbij/cli.hpp"
#include "pairbij/pairbij.hpp"

namespace {

using namespace pairbij;
using nadic::Base;

std::string show(const Nat& n) { return n.str(); }
std::string show(const NatPair& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}
std::string show(const std::vector<Nat>& xs) { return cli::format_list(xs); }

std::vector<Nat> nats(std::initializer_list<std::uint64_t> xs) { return {xs.begin(), xs.end()}; }

std::vector<Nat> all(const NatStream& s) { return stream::drain(s); }

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  template <class T>
  void eq(const T& got, const T& want, const std::string& what) {
    ++checks_;
    if (got == want) return;
    fail(what + ": got " + show(got) + ", expected " + show(want));
  }

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }

  void fail(const std::string& detail) {
    if (failures_++ == 0) first_ = detail;
  }

  // Runs a block; an escaping exception counts as one failure.
  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(what + " raised: " + e.what());
    }
  }

  bool report() const {
    if (failures_ == 0) {
      std::cout << "PASS " << id_ << ": " << title_ << " (" << checks_ << " checks)\n";
    } else {
      std::cout << "FAIL " << id_ << ": " << title_ << " (" << failures_ << " of " << checks_
                << " checks failed; first: " << first_ << ")\n";
    }
    return failures_ == 0;
  }

 private:
  int id_;
  std::string title_;
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

bool golden_transcripts() {
  Criterion c(1, "golden transcripts");
  c.guarded("transcripts", [&] {
    const Base b3(3);
    c.eq(nadic::cons(b3, {10, 20}), Nat(1830519), "nAdicCons 3 (10,20)");
    c.eq(nadic::head(b3, 1830519), Nat(10), "nAdicHead 3 1830519");
    c.eq(nadic::tail(b3, 1830519), Nat(20), "nAdicTail 3 1830519");

    const std::vector<NatPair> unpair3 = {{0, 0}, {0, 1}, {1, 0}, {0, 2},
                                          {0, 3}, {1, 1}, {0, 4}, {0, 5}};
    for (std::uint64_t n = 0; n < 8; ++n) {
      c.eq(nadic::unpair(b3, n), unpair3[n], "nAdicUnPair 3 " + std::to_string(n));
      c.eq(nadic::pair(b3, unpair3[n]), Nat(n), "nAdicPair 3 " + show(unpair3[n]));
    }

    const auto digits = nats({0, 2, 2, 0, 0, 0, 0});
    c.eq(nadic::nat_to_nats(b3, 2012), digits, "nat2nats 3 2012");
    c.eq(nadic::nats_to_nat(b3, digits), Nat(2012), "nats2nat 3 [0,2,2,0,0,0,0]");

    const auto list = encoder_list();
    const auto sample = stream::from_list(nats({2, 0, 1, 2}));
    c.eq(as(encoder_nadic_nat(b3), list, sample), Nat(873), "as (nAdicNat 3) list");
    c.eq(as(encoder_nadic_nat(Base(7)), list, sample), Nat(27146), "as (nAdicNat 7) list");
    c.eq(as(encoder_nat(), list, sample), Nat(300), "as nat list");
    c.eq(all(as(list, encoder_nat(), Nat(300))), nats({2, 0, 1, 2}), "as list nat 300");

    const auto two_three = nats({0,  1,  3,  2,  9,  5,  6,  4,  27, 14, 15, 8,  18, 10, 12, 7,
                                 81, 41, 42, 22, 45, 23, 24, 13, 54, 28, 30, 16, 36, 19, 21, 11});
    const auto three_two = nats({0,  1,  3,  2,  7,  5,  6,   15, 11, 4,  13, 31, 14, 23, 9,  10,
                                 27, 63, 12, 29, 47, 30, 19, 21, 22, 55, 127, 8,  25, 59, 26, 95});
    for (std::uint64_t n = 0; n < 32; ++n) {
      c.eq(nadic::bij(Base(2), b3, n), two_three[n], "nAdicBij 2 3 " + std::to_string(n));
      c.eq(nadic::bij(b3, Base(2), n), three_two[n], "nAdicBij 3 2 " + std::to_string(n));
    }

    c.eq(as(encoder_nat_prime(), list, sample), Nat(1644), "as nat' list");
    c.eq(all(as(list, encoder_nat_prime(), Nat(1644))), nats({2, 0, 1, 2}), "as list nat' 1644");
    const auto nat_prime_table = nats({0, 1, 2, 3, 4, 7, 6, 5, 8, 19, 14, 15, 12, 13, 10, 9});
    for (std::uint64_t n = 0; n < 16; ++n) {
      c.eq(as(encoder_nat_prime(), encoder_nat(), Nat(n)), nat_prime_table[n],
           "as nat' nat " + std::to_string(n));
    }

    const auto bits = nats({0, 0, 1, 1, 0, 1, 0, 0, 1});
    c.eq(all(list_to_bins(sample)), bits, "list2bins [2,0,1,2]");
    c.eq(all(bins_to_list(stream::from_list(bits))), nats({2, 0, 1, 2}), "bins2list");
    const auto evens = stream::take(list_to_bins(stream::arith(0, 2)), 20);
    c.eq(evens, nats({1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}),
         "take 20 (list2bins [0,2..])");
    c.eq(all(bins_to_list(stream::from_list(evens))), nats({0, 2, 4, 6}), "bins2list prefix");

    const auto set = nats({0, 2, 4, 5, 7, 8, 9});
    const auto set_bits = nats({1, 0, 1, 0, 1, 1, 0, 1, 1, 1});
    c.eq(all(as(encoder_bins(), encoder_set(), stream::from_list(set))), set_bits,
         "as bins set");
    c.eq(all(as(encoder_set(), encoder_bins(), stream::from_list(set_bits))), set,
         "as set bins");

    const auto guide = stream::from_list(nats({0, 1, 0, 1, 0, 1}));
    const auto [ls, rs] =
        charpair::bsplit(guide, stream::from_list(nats({10, 20, 30, 40, 50, 60})));
    c.eq(all(ls), nats({20, 40, 60}), "bsplit first");
    c.eq(all(rs), nats({10, 30, 50}), "bsplit second");
    c.eq(all(charpair::bmerge(guide, ls, rs)), nats({10, 20, 30, 40, 50, 60}), "bmerge");

    const std::vector<NatPair> bunpair2 = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0},
                                           {2, 1}, {3, 1}, {0, 2}, {1, 2}, {0, 3}};
    const auto morton = charpair::preset_family("morton");
    const auto arith2 = charpair::preset_family("arith-set", Nat(2));
    for (std::uint64_t n = 0; n <= 10; ++n) {
      c.eq(morton.unpair(n), bunpair2[n], "bunpair2 " + std::to_string(n));
      c.eq(morton.pair(bunpair2[n]), Nat(n), "bpair2 " + show(bunpair2[n]));
      c.eq(arith2.unpair(n), bunpair2[n], "bunpair 2 " + std::to_string(n));
      c.eq(arith2.pair(bunpair2[n]), Nat(n), "bpair 2 " + show(bunpair2[n]));
    }
  });
  return c.report();
}

bool roundtrip_suites() {
  Criterion c(2, "roundtrip property suites");
  for (std::uint64_t b = 2; b <= 16; ++b) {
    const Base base(b);
    const auto tag = "b=" + std::to_string(b);
    c.guarded("nadic " + tag, [&] {
      for (std::uint64_t n = 0; n <= 10000; ++n) {
        c.eq(nadic::pair(base, nadic::unpair(base, n)), Nat(n), "pair.unpair " + tag);
        c.eq(nadic::decons(base, nadic::cons(base, nadic::decons(base, n + 1))),
             nadic::decons(base, n + 1), "decons.cons " + tag);
        c.eq(nadic::cons(base, nadic::decons(base, n + 1)), Nat(n + 1), "cons.decons " + tag);
        c.eq(nadic::nats_to_nat(base, nadic::nat_to_nats(base, n)), Nat(n), "nats " + tag);
      }
      for (std::uint64_t x = 0; x <= 40; ++x) {
        for (std::uint64_t y = 0; y <= 40; ++y) {
          c.eq(nadic::unpair(base, nadic::pair(base, {x, y})), NatPair{x, y},
               "unpair.pair " + tag);
          c.eq(nadic::decons(base, nadic::cons(base, {x, y})), NatPair{x, y},
               "decons.cons " + tag);
        }
      }
    });
  }

  std::vector<std::pair<std::string, std::optional<Nat>>> presets = {{"morton", std::nullopt}};
  for (std::uint64_t k = 1; k <= 8; ++k) presets.emplace_back("arith-set", Nat(k));
  for (const char* name : {"squares", "powers2", "syracuse", "bits-of-naturals"}) {
    presets.emplace_back(name, std::nullopt);
  }
  for (const auto& [name, k] : presets) {
    const auto tag = name + (k ? ":" + k->str() : "");
    // Stop a preset at its first error so a degenerate seed cannot stall the run.
    c.guarded(tag, [&] {
      const auto family = charpair::preset_family(name, k);
      for (std::uint64_t n = 0; n <= 10000; ++n) {
        c.eq(family.pair(family.unpair(n)), Nat(n), tag + " pair.unpair " + std::to_string(n));
      }
      for (std::uint64_t x = 0; x <= 63; ++x) {
        for (std::uint64_t y = 0; y <= 63; ++y) {
          c.eq(family.unpair(family.pair({x, y})), NatPair{x, y}, tag + " unpair.pair");
        }
      }
    });
  }
  return c.report();
}

bool permutation_law() {
  Criterion c(3, "permutation law");
  c.guarded("bij", [&] {
    for (std::uint64_t k = 2; k <= 8; ++k) {
      for (std::uint64_t l = 2; l <= 8; ++l) {
        for (std::uint64_t n = 0; n <= 1000; ++n) {
          c.eq(nadic::bij(Base(l), Base(k), nadic::bij(Base(k), Base(l), n)), Nat(n),
               "bij " + std::to_string(l) + " " + std::to_string(k) + " inverse at " +
                   std::to_string(n));
        }
      }
    }
    std::set<Nat> image;
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      c.check(image.insert(nadic::bij(Base(2), Base(3), n)).second,
              "bij 2 3 repeats a value at " + std::to_string(n));
    }
  });
  return c.report();
}

bool oracle_equivalences() {
  Criterion c(4, "oracle equivalences");
  c.guarded("oracles", [&] {
    for (std::uint64_t z = 1; z <= 10000; ++z) {
      c.eq(nadic::head(Base(2), z), Nat(oracle::valuation(2, z)), "2-adic valuation");
    }
    for (std::uint64_t x = 0; x <= 20; ++x) {
      for (std::uint64_t y = 0; y <= 40; ++y) {
        c.eq(nadic::pair(Base(2), {x, y}), Nat(oracle::pepis_kalmar_pair(x, y)),
             "2^x(2y+1)-1 at " + show(NatPair{x, y}));
      }
    }
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      std::vector<Nat> expected;
      for (int bit : oracle::lsb_binary(n)) expected.emplace_back(bit);
      c.eq(all(as(encoder_bins(), encoder_nat(), Nat(n))), expected, "as bins nat");
    }
    const auto morton = charpair::preset_family("morton");
    for (std::uint64_t l = 0; l <= 255; ++l) {
      for (std::uint64_t r = 0; r <= 255; ++r) {
        c.eq(morton.pair({l, r}), Nat(oracle::interleave(l, r)), "morton " + show(NatPair{l, r}));
      }
    }
    for (std::uint64_t x = 0; x <= 200; ++x) {
      for (std::uint64_t y = 0; y <= 200; ++y) {
        const auto n = oracle::cantor(x, y);
        c.eq(charpair::cantor_pair({x, y}), Nat(n), "cantor pair");
        const auto [ox, oy] = oracle::cantor_inverse(n);
        c.check(ox == x && oy == y, "cantor oracle inverse at " + show(NatPair{x, y}));
      }
    }
    for (std::uint64_t n = 0; n <= 10000; ++n) {
      const auto [x, y] = oracle::cantor_inverse(n);
      c.eq(charpair::cantor_unpair(n), NatPair{x, y}, "cantor unpair " + std::to_string(n));
      c.check(oracle::cantor(x, y) == n, "cantor oracle at " + std::to_string(n));
    }
  });
  return c.report();
}

bool divergence_detection() {
  Criterion c(5, "divergence detection");
  auto expect_fuel = [&](const std::string& what, auto&& call) {
    try {
      call();
      c.fail(what + " returned instead of exhausting fuel");
    } catch (const FuelExhausted&) {
      c.check(true, what);
    } catch (const std::exception& e) {
      c.fail(what + " raised the wrong error: " + e.what());
    }
  };
  using namespace charpair;
  expect_fuel("genericPair bins (cycle [0]) (10,20)",
              [] { generic_pair({"bins", seed::Cycle{{0}}}, {10, 20}); });
  expect_fuel("genericUnpair bins (cycle [1]) 42",
              [] { generic_unpair({"bins", seed::Cycle{{1}}}, 42); });
  return c.report();
}

bool encoder_laws() {
  Criterion c(6, "encoder laws");
  c.guarded("encoders", [&] {
    std::mt19937_64 rng(20240611);
    const auto nat = encoder_nat();
    const auto set = encoder_set();
    const auto mset = encoder_mset();

    const auto id = identity<Nat>();
    const auto f = nat.iso;                                    // Nat -> hub
    const auto g = compose(invert(set.iso), mset.iso);            // hub -> hub
    const auto h = compose(invert(mset.iso), encoder_list().iso);  // hub -> hub
    const auto left = compose(compose(f, g), h);
    const auto right = compose(f, compose(g, h));
    for (int i = 0; i < 200; ++i) {
      const Nat n(rng() % 100000);
      c.eq(compose(id, f).backward(f.forward(n)), n, "identity then f");
      c.eq(all(compose(id, f).forward(n)), all(f.forward(n)), "identity . f");
      c.eq(compose(f, invert(f)).forward(n), n, "f . f^-1");
      c.eq(all(left.forward(n)), all(right.forward(n)), "associativity forward");
      c.eq(left.backward(left.forward(n)), n, "associativity backward");
      c.eq(right.backward(left.forward(n)), n, "associativity mixed");
    }

    auto random_list = [&] {
      std::vector<Nat> xs(rng() % 12);
      for (auto& x : xs) x = Nat(rng() % 20);
      return xs;
    };
    auto as_nats = [](const std::vector<Nat>& xs) { return stream::from_list(xs); };
    const auto list = encoder_list();
    const auto bins = encoder_bins();
    for (int i = 0; i < 1000; ++i) {
      const auto xs = random_list();
      std::vector<Nat> prefix, strict;
      Nat acc = 0, acc_strict = 0;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        acc += xs[j];
        acc_strict += xs[j] + 1;
        prefix.push_back(acc);
        strict.push_back(acc_strict - 1);
      }
      c.eq(all(as(mset, list, as_nats(xs))), prefix, "list -> mset");
      c.eq(all(as(set, list, as_nats(xs))), strict, "list -> set");
      c.eq(all(as(list, mset, as(mset, list, as_nats(xs)))), xs, "list -> mset -> list");
      c.eq(all(as(list, set, as(set, list, as_nats(xs)))), xs, "list -> set -> list");
      c.eq(all(as(list, bins, as(bins, list, as_nats(xs)))), xs, "list -> bins -> list");

      std::vector<Nat> ms = random_list();
      std::sort(ms.begin(), ms.end());
      c.eq(all(as(mset, list, as(list, mset, as_nats(ms)))), ms, "mset -> list -> mset");
      c.eq(all(as(mset, set, as(set, mset, as_nats(ms)))), ms, "mset -> set -> mset");

      std::vector<Nat> st = random_list();
      std::sort(st.begin(), st.end());
      st.erase(std::unique(st.begin(), st.end()), st.end());
      c.eq(all(as(set, list, as(list, set, as_nats(st)))), st, "set -> list -> set");
      c.eq(all(as(set, bins, as(bins, set, as_nats(st)))), st, "set -> bins -> set");

      std::vector<Nat> bs(rng() % 16);
      for (auto& b : bs) b = Nat(rng() % 2);
      bs.emplace_back(1);
      c.eq(all(as(bins, list, as(list, bins, as_nats(bs)))), bs, "bins -> list -> bins");
      c.eq(all(as(bins, mset, as(mset, bins, as_nats(bs)))), bs, "bins -> mset -> bins");
    }
    c.eq(all(list_to_bins(stream::from_list({}))), nats({0}), "list2bins []");
    c.eq(all(as(bins, list, stream::from_list({}))), nats({0}), "as bins list []");
  });
  return c.report();
}

std::string run_cli(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + err.str();
}

bool curve_export() {
  Criterion c(7, "curve export");
  c.guarded("curve", [&] {
    int code = -1;
    const auto csv = run_cli({"curve", "morton", "10", "csv"}, code);
    c.check(code == 0, "curve morton 10 csv exit code " + std::to_string(code));
    std::string expected = "n,x,y\n";
    const std::vector<std::pair<int, int>> rows = {{0, 0}, {1, 0}, {0, 1}, {1, 1},
                                                   {2, 0}, {3, 0}, {2, 1}, {3, 1},
                                                   {0, 2}, {1, 2}, {0, 3}};
    for (std::size_t n = 0; n < rows.size(); ++n) {
      expected += std::to_string(n) + ',' + std::to_string(rows[n].first) + ',' +
                  std::to_string(rows[n].second) + '\n';
    }
    c.check(csv == expected, "curve morton 10 csv mismatch:\n" + csv);

    for (const char* spec : {"morton", "arith-set:3", "syracuse"}) {
      const auto path = cli::curve_path(cli::parse_family(spec), 1000);
      c.check(path.size() == 1001, std::string(spec) + " path length");
      const std::set<NatPair> distinct(path.begin(), path.end());
      c.check(distinct.size() == path.size(), std::string(spec) + " path repeats a point");
      for (const char* format : {"csv", "svg"}) {
        int a = -1, b = -1;
        const auto first = run_cli({"curve", spec, "1000", format}, a);
        const auto second = run_cli({"curve", spec, "1000", format}, b);
        c.check(a == 0 && b == 0 && first == second,
                std::string(spec) + " " + format + " output differs between runs");
      }
    }
  });
  return c.report();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= golden_transcripts();
  ok &= roundtrip_suites();
  ok &= permutation_law();
  ok &= oracle_equivalences();
  ok &= divergence_detection();
  ok &= encoder_laws();
  ok &= curve_export();
  return ok ? 0 : 1;
}
