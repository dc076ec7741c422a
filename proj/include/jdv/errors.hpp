#pragma once

#include <stdexcept>
#include <string>

namespace jdv {

/// Raised for malformed or out-of-range input: bad indices, unparsable files,
/// violated operation preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace jdv
