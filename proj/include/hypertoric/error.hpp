#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypertoric {

/// Base of every error raised by the library. Anything derived from Error
/// other than InternalVerificationFailure signals bad input. Messages count
/// rows and columns from 1; index accessors are 0-based.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The presenting matrix A does not define a surjection Z^n -> Z^d.
class NotSurjective : public Error {
 public:
  NotSurjective()
      : Error("standing assumption violated: A must define a surjection Z^n -> Z^d "
              "(some invariant factor of A differs from 1)") {}
};

/// A row of a matrix that must have nonzero rows is zero.
class ZeroRow : public Error {
 public:
  explicit ZeroRow(std::size_t index)
      : Error("row " + std::to_string(index + 1) + " is zero; rows must be nonzero"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The Gale dual B of A has a zero row, i.e. some coordinate vanishes on ker(A).
class ZeroRowInB : public Error {
 public:
  explicit ZeroRowInB(std::size_t index)
      : Error("standing assumption violated: all rows of the Gale dual B must be "
              "nonzero, but row " +
              std::to_string(index + 1) + " is zero"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// B is not injective with saturated image; its cokernel has torsion or B has
/// more columns than rows.
class NotSaturated : public Error {
 public:
  NotSaturated()
      : Error("B must be injective with saturated image (all invariant factors 1)") {}
};

/// Column j0 does not satisfy the codimension-2 condition.
class NotSharp : public Error {
 public:
  enum class Reason { RankDrops, StillSurjective };

  NotSharp(std::size_t column, Reason reason)
      : Error(std::string("column ") + std::to_string(column + 1) +
              (reason == Reason::RankDrops
                   ? " fails condition (a): removing it drops the rank below d"
                   : " fails condition (b): the remaining columns still surject onto Z^d")),
        column_(column),
        reason_(reason) {}
  std::size_t column() const noexcept { return column_; }
  Reason reason() const noexcept { return reason_; }

 private:
  std::size_t column_;
  Reason reason_;
};

class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

class IterationLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A result failed a check that holds mathematically; indicates a bug.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hypertoric
