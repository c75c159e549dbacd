#pragma once

#include <stdexcept>
#include <string>

namespace isbt {

// Filesystem / stream failures. The CLI maps these to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent data (parse errors, referential errors,
// digest mismatches). The CLI maps these to exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace isbt
