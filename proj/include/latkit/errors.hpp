// errors.hpp -- exception hierarchy shared by all latkit modules.
#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

/// Base of every latkit error. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define LATKIT_ERROR(Name)                                    \
  class Name : public Error {                                 \
  public:                                                     \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

LATKIT_ERROR(CycleDetected);
LATKIT_ERROR(DuplicateLabel);
LATKIT_ERROR(UnknownLabel);
LATKIT_ERROR(DuplicateCover);
LATKIT_ERROR(NotALattice);
LATKIT_ERROR(SearchBudgetExceeded);
LATKIT_ERROR(EmptyBlockList);
LATKIT_ERROR(UnknownName);
LATKIT_ERROR(BadParams);
LATKIT_ERROR(ProductNotClosed);
LATKIT_ERROR(OutOfRange);
LATKIT_ERROR(ClosureBudgetExceeded);
LATKIT_ERROR(DimensionTooLarge);
LATKIT_ERROR(InvolutionViolated);
LATKIT_ERROR(NotImplicative);
LATKIT_ERROR(NotOrthomodular);
LATKIT_ERROR(SyntaxError);
LATKIT_ERROR(UnboundVariable);
LATKIT_ERROR(SemanticsUnavailable);
LATKIT_ERROR(UnsupportedConnective);
LATKIT_ERROR(IoError);

#undef LATKIT_ERROR

}  // namespace latkit
