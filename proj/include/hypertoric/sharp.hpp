#pragma once

#include "hypertoric/error.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/intlinalg.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace hypertoric {

/// Why column j0 fails the codimension-2 condition, or nullopt when it
/// satisfies it: dropping j0 keeps rank d but the remaining columns no longer
/// surject onto Z^d. A must already be a lattice surjection.
inline std::optional<NotSharp::Reason> sharp_failure(const IntMatrix& a, std::size_t j0) {
  if (j0 >= a.cols())
    throw IndexOutOfRange("column " + std::to_string(j0 + 1) + " out of range for " + a.shape());
  const IntMatrix rest = a.without_column(j0);
  if (rank(rest) != a.rows()) return NotSharp::Reason::RankDrops;
  if (is_lattice_surjection(rest)) return NotSharp::Reason::StillSurjective;
  return std::nullopt;
}

/// True iff removing column j0 leaves rank d and breaks lattice surjectivity.
inline bool sharp_test_at(const IntMatrix& a, std::size_t j0) {
  if (!is_lattice_surjection(a)) throw NotSurjective();
  return !sharp_failure(a, j0).has_value();
}

}  // namespace hypertoric
