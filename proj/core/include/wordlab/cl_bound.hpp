#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace wordlab {

// A commutator length value: a natural number or infinity.
class ClBound {
 public:
  static ClBound finite(std::uint64_t n) { return ClBound(n); }
  static ClBound infinite() { return ClBound(); }

  bool is_infinite() const noexcept { return !value_; }
  // Precondition: finite.
  std::uint64_t value() const { return value_.value(); }
  std::string format() const { return value_ ? std::to_string(*value_) : "inf"; }

  bool operator==(const ClBound&) const = default;

 private:
  ClBound() = default;
  explicit ClBound(std::uint64_t n) : value_(n) {}

  std::optional<std::uint64_t> value_;
};

}  // namespace wordlab
