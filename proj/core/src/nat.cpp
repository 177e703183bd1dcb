#include "pairbij/nat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "pairbij/errors.hpp"

namespace pairbij {

namespace mp = boost::multiprecision;

Nat::Nat(Rep v) : rep_(std::move(v)) {
  if (rep_.sign() < 0) throw std::domain_error("negative value is not a natural");
}

Nat Nat::parse(std::string_view decimal) {
  if (decimal.empty()) throw ParseError("empty natural literal");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw ParseError("not a natural number: '" + std::string(decimal) + "'");
    }
  }
  return Nat(Rep(std::string(decimal)));
}

bool Nat::is_odd() const { return mp::bit_test(rep_, 0); }

bool Nat::fits_u64() const { return rep_ <= std::numeric_limits<std::uint64_t>::max(); }

std::uint64_t Nat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("natural does not fit in 64 bits: " + str());
  return rep_.convert_to<std::uint64_t>();
}

double Nat::to_double() const { return rep_.convert_to<double>(); }

std::string Nat::str() const { return rep_.str(); }

std::size_t Nat::bit_length() const {
  if (rep_.is_zero()) return 0;
  return mp::msb(rep_) + 1;
}

bool Nat::bit(std::size_t i) const { return mp::bit_test(rep_, static_cast<unsigned>(i)); }

Nat& Nat::operator+=(const Nat& o) {
  rep_ += o.rep_;
  return *this;
}

Nat& Nat::operator-=(const Nat& o) {
  if (rep_ < o.rep_) {
    throw std::domain_error("natural subtraction underflow: " + str() + " - " + o.str());
  }
  rep_ -= o.rep_;
  return *this;
}

Nat& Nat::operator*=(const Nat& o) {
  rep_ *= o.rep_;
  return *this;
}

Nat& Nat::operator/=(const Nat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  rep_ /= o.rep_;
  return *this;
}

Nat& Nat::operator%=(const Nat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  rep_ %= o.rep_;
  return *this;
}

Nat& Nat::operator^=(const Nat& o) {
  rep_ ^= o.rep_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.rep_; }

std::ostream& operator<<(std::ostream& os, const NatPair& p) {
  return os << '(' << p.first << ',' << p.second << ')';
}

Nat pow(const Nat& base, const Nat& exponent) {
  if (exponent.rep() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("exponent too large: " + exponent.str());
  }
  return Nat(mp::pow(base.rep(), exponent.rep().convert_to<unsigned>()));
}

Nat isqrt(const Nat& n) { return Nat(mp::sqrt(n.rep())); }

DivMod divmod(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Nat::Rep q;
  Nat::Rep r;
  mp::divide_qr(a.rep(), b.rep(), q, r);
  return {Nat(std::move(q)), Nat(std::move(r))};
}

}  // namespace pairbij
