#pragma once

// Pull-based, possibly infinite sequences.
//
// A Stream is an immutable *description*: opening it yields a fresh Cursor
// that starts from the first element. Every pull through a Cursor is charged
// to a FuelMeter, so a computation over a non-terminating stream fails with
// FuelExhausted instead of hanging. Descriptions may be shared across threads;
// cursors are single-consumer.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pairbij/errors.hpp"
#include "pairbij/nat.hpp"

namespace pairbij {

class Fuel {
 public:
  static constexpr std::uint64_t kDefaultBudget = 1'000'000;

  explicit Fuel(std::uint64_t budget);
  static Fuel standard() { return Fuel(kDefaultBudget); }

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

class FuelMeter {
 public:
  explicit FuelMeter(Fuel fuel = Fuel::standard(), std::string context = {})
      : budget_(fuel.budget()), context_(std::move(context)) {}

  FuelMeter(const FuelMeter&) = delete;
  FuelMeter& operator=(const FuelMeter&) = delete;

  void charge() {
    if (used_ >= budget_) throw FuelExhausted(budget_, context_);
    ++used_;
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::string context_;
};

// The meter must outlive the cursor.
template <class T>
class Cursor {
 public:
  using Pull = std::function<std::optional<T>()>;

  Cursor(Pull pull, FuelMeter& meter) : pull_(std::move(pull)), meter_(&meter) {}

  std::optional<T> next() {
    meter_->charge();
    return pull_();
  }

  FuelMeter& meter() const noexcept { return *meter_; }

 private:
  Pull pull_;
  FuelMeter* meter_;
};

// Cursor with an unbounded lookahead buffer; pattern matching on "exactly one
// element left" needs to see two elements ahead.
template <class T>
class Lookahead {
 public:
  explicit Lookahead(Cursor<T> cursor) : cursor_(std::move(cursor)) {}

  const T* peek(std::size_t k = 0) {
    while (buffer_.size() <= k && !ended_) {
      auto v = cursor_.next();
      if (!v) {
        ended_ = true;
        break;
      }
      buffer_.push_back(std::move(*v));
    }
    return k < buffer_.size() ? &buffer_[k] : nullptr;
  }

  bool empty() { return peek(0) == nullptr; }
  bool singleton() { return peek(0) != nullptr && peek(1) == nullptr; }

  std::optional<T> next() {
    if (!peek(0)) return std::nullopt;
    T v = std::move(buffer_.front());
    buffer_.pop_front();
    return v;
  }

 private:
  Cursor<T> cursor_;
  std::deque<T> buffer_;
  bool ended_ = false;
};

template <class T>
class Stream {
 public:
  using value_type = T;
  using Pull = std::function<std::optional<T>()>;
  using Source = std::function<Pull(FuelMeter&)>;

  /// The empty stream.
  Stream()
      : Stream([](FuelMeter&) { return Pull([] { return std::optional<T>(); }); },
               std::size_t{0}) {}

  explicit Stream(Source source, std::optional<std::size_t> finite_hint = std::nullopt)
      : source_(std::make_shared<const Source>(std::move(source))), finite_hint_(finite_hint) {}

  Cursor<T> open(FuelMeter& meter) const { return Cursor<T>((*source_)(meter), meter); }

  /// Advisory only.
  std::optional<std::size_t> finite_hint() const noexcept { return finite_hint_; }

 private:
  std::shared_ptr<const Source> source_;
  std::optional<std::size_t> finite_hint_;
};

using NatStream = Stream<Nat>;

// Characteristic function of a subset of N: every element is 0 or 1.
// Shares the NatStream representation so bit lists can travel through the
// encoder hub; consumers validate with require_bit().
using BitStream = Stream<Nat>;

/// Returns true for 1, false for 0, throws InvalidBit otherwise.
bool require_bit(const Nat& v);

namespace stream {

NatStream from_list(std::vector<Nat> xs);

/// Infinite repetition of xs. Throws EmptyCycle for an empty list.
NatStream cycle(std::vector<Nat> xs);

/// start, start+step, start+2*step, ... Throws ZeroStep when step = 0.
NatStream arith(Nat start, Nat step);

inline NatStream naturals() { return arith(0, 1); }

/// start, f(start), f(f(start)), ...
NatStream iterate(Nat start, std::function<Nat(const Nat&)> f);

template <class T>
std::vector<T> take(const Stream<T>& s, std::size_t n, FuelMeter& meter) {
  std::vector<T> out;
  if (n == 0) return out;
  auto cursor = s.open(meter);
  while (out.size() < n) {
    auto v = cursor.next();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

template <class T>
std::vector<T> take(const Stream<T>& s, std::size_t n, Fuel fuel = Fuel::standard()) {
  FuelMeter meter(fuel);
  return take(s, n, meter);
}

/// Collects a stream that is expected to end. An infinite stream exhausts
/// the fuel.
template <class T>
std::vector<T> drain(const Stream<T>& s, FuelMeter& meter) {
  std::vector<T> out;
  auto cursor = s.open(meter);
  while (auto v = cursor.next()) out.push_back(std::move(*v));
  return out;
}

template <class T>
std::vector<T> drain(const Stream<T>& s, Fuel fuel = Fuel::standard()) {
  FuelMeter meter(fuel);
  return drain(s, meter);
}

/// Lazy element-wise application; pulls the source exactly once per pull.
template <class F, class T>
auto map(F f, Stream<T> s) {
  using U = std::decay_t<std::invoke_result_t<F&, const T&>>;
  auto hint = s.finite_hint();
  return Stream<U>(
      [f = std::move(f), s = std::move(s)](FuelMeter& meter) {
        return typename Stream<U>::Pull(
            [f, cursor = s.open(meter)]() mutable -> std::optional<U> {
              auto v = cursor.next();
              if (!v) return std::nullopt;
              return f(*v);
            });
      },
      hint);
}

/// Flattens f(x) for each x of s; f returns a finite vector.
template <class F, class T>
auto concat_map(F f, Stream<T> s) {
  using V = std::decay_t<std::invoke_result_t<F&, const T&>>;
  using U = typename V::value_type;
  return Stream<U>([f = std::move(f), s = std::move(s)](FuelMeter& meter) {
    return typename Stream<U>::Pull(
        [f, cursor = s.open(meter), chunk = V{}, pos = std::size_t{0}]() mutable
        -> std::optional<U> {
          while (pos >= chunk.size()) {
            auto v = cursor.next();
            if (!v) return std::nullopt;
            chunk = f(*v);
            pos = 0;
          }
          return chunk[pos++];
        });
  });
}

}  // namespace stream
}  // namespace pairbij
