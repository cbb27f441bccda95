#pragma once

#include <stdexcept>
#include <string>

namespace affinoid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions, variable counts or slot counts do not line up.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for a degree it is not defined at.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// The TG|_M = TM + A splitting data is singular or inconsistent.
class SplittingError : public Error {
 public:
  using Error::Error;
};

/// Source/target mismatch in one of the 2-vector space compositions, or a
/// non-composable pair of arrows.
class ComposabilityError : public Error {
 public:
  using Error::Error;
};

/// An internal structural identity failed; signals bad groupoid data or a
/// non-affine input where affineness was required.
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace affinoid
