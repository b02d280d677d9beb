#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

// Domain error carrying a machine-readable kind (SyntaxError, ValidityError, NotClassical, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }
  std::string detail() const { return what(); }

 private:
  std::string kind_;
};

namespace errc {
inline constexpr const char* kSyntax = "SyntaxError";
inline constexpr const char* kValidity = "ValidityError";
inline constexpr const char* kNotClassical = "NotClassical";
inline constexpr const char* kNotFound = "NotFound";
inline constexpr const char* kNotSingular = "NotSingular";
inline constexpr const char* kNotFlatSingular = "NotFlatSingular";
inline constexpr const char* kNoPreferred = "NoPreferred";
inline constexpr const char* kNotApplicable = "NotApplicable";
inline constexpr const char* kSizeLimit = "SizeLimit";
inline constexpr const char* kStaleMove = "StaleMove";
inline constexpr const char* kComponentCount = "ComponentCountError";
inline constexpr const char* kUnsupported = "Unsupported";
inline constexpr const char* kInconsistentLabeling = "InconsistentLabeling";
inline constexpr const char* kOutOfRange = "OutOfRange";
inline constexpr const char* kPrecondition = "PreconditionError";
}  // namespace errc

[[noreturn]] inline void raise(const char* kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace knotoid
