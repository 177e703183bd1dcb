#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace pairbij {

// Root of every error raised by the library. Callers that only care about
// "something was wrong with the input" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidBase : public Error {
 public:
  using Error::Error;
};

class ZeroArgument : public Error {
 public:
  using Error::Error;
};

class EmptyCycle : public Error {
 public:
  EmptyCycle() : Error("cycle over an empty list") {}
};

class ZeroStep : public Error {
 public:
  ZeroStep() : Error("arithmetic stream with step 0") {}
};

class InvalidBit : public Error {
 public:
  using Error::Error;
};

class NotNonDecreasing : public Error {
 public:
  using Error::Error;
};

class NotStrictlyIncreasing : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

class UnknownEncoder : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when a top-level operation pulls more stream elements than its
/// fuel budget allows. This is how non-terminating seeds are reported.
class FuelExhausted : public Error {
 public:
  FuelExhausted(std::uint64_t budget, const std::string& context)
      : Error(context.empty()
                  ? "fuel exhausted after " + std::to_string(budget) + " pulls"
                  : "fuel exhausted after " + std::to_string(budget) +
                        " pulls (" + context + ")"),
        budget_(budget),
        context_(context) {}

  std::uint64_t budget() const noexcept { return budget_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::uint64_t budget_;
  std::string context_;
};

/// A finite characteristic function ran out while elements still needed a
/// routing decision.
class GuideExhausted : public Error {
 public:
  explicit GuideExhausted(const std::string& what,
                          std::optional<std::uint64_t> position = {})
      : Error(what), position_(position) {}

  std::optional<std::uint64_t> position() const noexcept { return position_; }

 private:
  std::optional<std::uint64_t> position_;
};

}  // namespace pairbij
