// Copyright (c) 2026 the mordell authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <stdexcept>
#include <string>

namespace mordell {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical input failed (point off the curve,
// malformed coordinates, shift width too small, zero discriminant, ...).
struct DomainError : Error {
  using Error::Error;
};

// An explicitly budgeted computation (factorization, divisor enumeration)
// ran out of budget.  Raising the budget may make the call succeed.
struct BudgetError : Error {
  using Error::Error;
};

// Interval arithmetic could not certify the requested fact at the working
// precision (an enclosure touched zero, a comparison was undecidable).
// Retrying at higher precision may make the call succeed.
struct PrecisionError : Error {
  using Error::Error;
};

}  // namespace mordell
