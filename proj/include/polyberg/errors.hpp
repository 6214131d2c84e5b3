#pragma once

#include <stdexcept>

namespace polyberg {

// Symbol falls outside the classes the boundary formulas cover.
class unsupported_class_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A functional was asked for a value that only members of the algebra possess.
class non_member_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace polyberg
