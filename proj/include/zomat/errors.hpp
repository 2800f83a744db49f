#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace zomat {

/// Malformed matrix text or word text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold (P1, P2,
/// boundedness, membership in D_M). Carries a 1-based witness index when
/// one exists.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what,
                             std::optional<int> witness = std::nullopt)
      : std::domain_error(what), witness_(witness) {}

  std::optional<int> witness() const { return witness_; }

 private:
  std::optional<int> witness_;
};

/// A word enumeration would exceed the configured cap. The exact count is
/// carried as a decimal string.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, std::string count)
      : std::length_error(what), count_(std::move(count)) {}

  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

}  // namespace zomat
