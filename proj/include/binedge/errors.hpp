#pragma once

#include <stdexcept>
#include <string>

namespace binedge {

// Malformed textual input (graphs, polynomials, ideals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search or Groebner computation exceeded its configured budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its mathematical domain
// (e.g. a closed-graph formula on a non-closed graph).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binedge
