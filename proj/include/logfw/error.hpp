#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logfw {

// Coarse classification used by the CLI to pick an exit code.
enum class ErrorClass {
  input,     // parse / validation / unsupported instance  -> exit 1
  budget,    // a configured search or size budget ran out -> exit 2
  internal,  // an invariant the code relies on failed     -> exit 4
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), class_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return class_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorClass class_;
  std::string kind_;
};

#define LOGFW_DEFINE_ERROR(Name, Class)                                         \
  class Name : public Error {                                                   \
   public:                                                                      \
    explicit Name(const std::string& message) : Error(Class, #Name, message) {} \
  };

LOGFW_DEFINE_ERROR(ParseError, ErrorClass::input)
LOGFW_DEFINE_ERROR(ValidationError, ErrorClass::input)
LOGFW_DEFINE_ERROR(Unsupported, ErrorClass::input)
LOGFW_DEFINE_ERROR(NotAHomomorphism, ErrorClass::input)
LOGFW_DEFINE_ERROR(NotLocalPrelog, ErrorClass::input)
LOGFW_DEFINE_ERROR(ImperfectBaseUnsupported, ErrorClass::input)
LOGFW_DEFINE_ERROR(NonLiftableCoefficient, ErrorClass::input)
LOGFW_DEFINE_ERROR(SearchBudgetExceeded, ErrorClass::budget)
LOGFW_DEFINE_ERROR(BudgetExceeded, ErrorClass::budget)
LOGFW_DEFINE_ERROR(OracleTooLarge, ErrorClass::budget)
LOGFW_DEFINE_ERROR(IntegerOverflow, ErrorClass::budget)
LOGFW_DEFINE_ERROR(SectionVerificationFailed, ErrorClass::internal)
LOGFW_DEFINE_ERROR(InternalError, ErrorClass::internal)

#undef LOGFW_DEFINE_ERROR

}  // namespace logfw
