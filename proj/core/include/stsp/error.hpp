#pragma once

#include <stdexcept>
#include <string>

namespace stsp {

/// Two operands live over different rings. Never coerced.
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A stated hypothesis of a construction does not hold. `hypothesis()` names
/// it in the library's notation, e.g. "v_{-i} = 0".
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(std::string construction, std::string hypothesis)
      : std::invalid_argument(construction + ": hypothesis violated: " + hypothesis),
        construction_(std::move(construction)),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& construction() const noexcept { return construction_; }
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string construction_;
  std::string hypothesis_;
};

/// A matrix is not in the image of the requested unipotent radical.
class RecognitionError : public std::runtime_error {
 public:
  enum class Reason { not_unipotent, membership };

  RecognitionError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace stsp
