#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scs {

enum class ErrorKind {
  UnknownElement,
  UnknownAgent,
  FrameRequired,
  EmptyGroup,
  CapExceeded,
  NotSurjective,
  NotMeetPreserving,
  NotRightInverse,
  CarrierMismatch,
  GroupMismatch,
  TableNotTotal,
  InvalidArgument,
  Schema,
  Validation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Violation {
  std::string rule;
  std::vector<std::string> witness;
};

// ok() holds exactly when there are no violations.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string rule, std::vector<std::string> witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }
  std::string to_string() const;
};

/// Either a successfully built value or the report explaining why it was not
/// built. Never holds a partially built value.
/// Thrown when a whole model fails property validation; carries the report.
class ValidationFailed : public Error {
 public:
  explicit ValidationFailed(ValidationReport report)
      : Error(ErrorKind::Validation, report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

template <typename T>
class Outcome {
 public:
  Outcome(T value) : value_(std::move(value)) {}
  Outcome(ValidationReport report) : report_(std::move(report)) {}

  bool ok() const noexcept { return report_.ok(); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const& {
    require();
    return *value_;
  }
  T&& value() && {
    require();
    return std::move(*value_);
  }
  const ValidationReport& report() const noexcept { return report_; }

 private:
  void require() const {
    if (!ok()) throw ValidationFailed(report_);
  }

  std::optional<T> value_;
  ValidationReport report_;
};

}  // namespace scs
