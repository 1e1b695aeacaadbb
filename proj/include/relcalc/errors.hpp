#pragma once

#include <stdexcept>
#include <string>

#include "relcalc/types.hpp"

namespace relcalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

/// zeta is not a regular point; carries which half of the definition failed.
struct NotInRegularSet : Error {
  NotInRegularSet(Complex zeta_, bool injective_, bool surjective_)
      : Error("zeta not in regular set (injective=" + std::to_string(injective_) +
              ", surjective=" + std::to_string(surjective_) + ")"),
        zeta(zeta_),
        injective(injective_),
        surjective(surjective_) {}
  Complex zeta;
  bool injective;   // ker(T - zeta I) == {0}
  bool surjective;  // ran(T - zeta I) == C^n
};

struct NotSelfadjoint : Error {
  using Error::Error;
};

struct NotSymmetric : Error {
  using Error::Error;
};

struct NotALacuna : Error {
  using Error::Error;
};

/// A claimed extension relationship S ⊆ T does not hold.
struct ExtensionCheckFailed : Error {
  using Error::Error;
};

/// A theorem hypothesis failed; the message names the violated hypothesis.
struct PreconditionFailed : Error {
  using Error::Error;
};

struct LambdaNotQuasiRegular : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace relcalc
