#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Work-unit or closure budget exhausted; callers may retry with a larger one.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

} // namespace wreath
