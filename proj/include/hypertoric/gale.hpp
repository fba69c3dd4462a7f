#pragma once

// Gale duality: the exact sequence 0 -> Z^{n-d} --B--> Z^n --A--> Z^d -> 0,
// built in either direction and checked independently.

#include "hypertoric/error.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/intlinalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hypertoric {

/// Each flag is computed on its own; the pair is exact iff all are true.
struct ExactnessCertificate {
  bool product_is_zero = false;      // A * B = 0
  bool a_surjective = false;         // A: Z^n -> Z^d onto
  bool b_saturated = false;          // B^t onto, i.e. B injective with saturated image
  bool ranks_complementary = false;  // rank A = d, rank B = n - d

  bool exact() const noexcept {
    return product_is_zero && a_surjective && b_saturated && ranks_complementary;
  }
  friend bool operator==(const ExactnessCertificate&, const ExactnessCertificate&) = default;
};

struct GalePair {
  IntMatrix A;  // d x n
  IntMatrix B;  // n x (n - d)
  ExactnessCertificate certificate;
};

/// Checks exactness of 0 -> Z^k --B--> Z^n --A--> Z^d -> 0. Mathematical
/// failure is reported in the certificate; only incompatible shapes throw.
inline ExactnessCertificate verify_exact(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("A is " + a.shape() + " but B is " + b.shape() +
                            "; need cols(A) = rows(B)");
  ExactnessCertificate c;
  c.product_is_zero = (a * b).is_zero();
  c.a_surjective = is_lattice_surjection(a);
  c.b_saturated = is_lattice_surjection(b.transpose());
  c.ranks_complementary = rank(a) == a.rows() && rank(b) == b.cols() &&
                          a.rows() + b.cols() == a.cols();
  return c;
}

/// Index of the first zero row of B, if B has columns. With no columns the
/// rows are empty and the check is vacuous.
inline std::optional<std::size_t> first_zero_row(const IntMatrix& b) {
  if (b.cols() == 0) return std::nullopt;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (is_zero(b.row(i))) return i;
  return std::nullopt;
}

/// Gale dual of a surjective A: B is the canonical kernel basis.
/// Throws NotSurjective, or ZeroRowInB when some coordinate vanishes on ker(A).
inline GalePair gale_dual(const IntMatrix& a) {
  if (!is_lattice_surjection(a)) throw NotSurjective();
  IntMatrix b = kernel_basis(a);
  if (auto z = first_zero_row(b)) throw ZeroRowInB(*z);
  auto cert = verify_exact(a, b);
  if (!cert.exact()) throw InternalVerificationFailure("kernel basis does not give an exact pair");
  return {a, std::move(b), cert};
}

/// A presentation of coker(B). With U * B * V = [I_k; 0] from the Smith form,
/// A is the last n - k rows of U. Unique only up to left multiplication by a
/// unimodular matrix; compare presentations through their kernel lattices.
inline IntMatrix cokernel_matrix(const IntMatrix& b) {
  const std::size_t n = b.rows();
  const std::size_t k = b.cols();
  if (k > n) throw NotSaturated();
  const auto d = snf(b);
  for (const auto& f : d.invariant_factors)
    if (f != 1) throw NotSaturated();
  std::vector<std::size_t> tail;
  for (std::size_t i = k; i < n; ++i) tail.push_back(i);
  IntMatrix a = d.U.select_rows(tail);
  if (!(a * b).is_zero())
    throw InternalVerificationFailure("cokernel rows do not annihilate B");
  return a;
}

}  // namespace hypertoric
