#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pairbij {

// Arbitrary-precision natural number. Every operation that could leave N
// (subtraction below zero, construction from a negative) throws
// std::domain_error instead.
class Nat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Nat() = default;

  template <std::integral I>
  Nat(I v) : rep_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (v < 0) throw std::domain_error("negative value is not a natural");
    }
  }

  explicit Nat(Rep v);

  /// Parses a plain decimal literal (no sign, no whitespace).
  static Nat parse(std::string_view decimal);

  const Rep& rep() const noexcept { return rep_; }

  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_odd() const;
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error
  double to_double() const;
  std::string str() const;

  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  Nat& operator+=(const Nat& o);
  Nat& operator-=(const Nat& o);
  Nat& operator*=(const Nat& o);
  Nat& operator/=(const Nat& o);
  Nat& operator%=(const Nat& o);
  Nat& operator^=(const Nat& o);

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }
  friend Nat operator^(Nat a, const Nat& b) { return a ^= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    if (a.rep_ < b.rep_) return std::strong_ordering::less;
    if (a.rep_ > b.rep_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n);

 private:
  Rep rep_;
};

/// base^exponent. The exponent must fit in 32 bits.
Nat pow(const Nat& base, const Nat& exponent);

/// floor(sqrt(n)).
Nat isqrt(const Nat& n);

struct DivMod {
  Nat quot;
  Nat rem;
};
DivMod divmod(const Nat& a, const Nat& b);

struct NatPair {
  Nat first;
  Nat second;

  friend bool operator==(const NatPair&, const NatPair&) = default;
  friend auto operator<=>(const NatPair&, const NatPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const NatPair& p);

}  // namespace pairbij
