#pragma once

// Re-presentation of A whose generic quotient is a Q-factorial
// terminalization. Two routes are provided:
//
//  * Direct: primitivize the rows of the Gale dual B and take a cokernel
//    presentation of the result.
//  * Iterated: repeatedly bring A into a normal form at a codimension-2
//    column j0 and apply the single-step expansion A -> A', which splits row
//    j0 of B = m * b into m copies of b.
//
// Both routes yield the same B-sharp up to row order and row signs; the
// iterated route exists mainly as an independent check of the direct one.

#include "hypertoric/error.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/intlinalg.hpp"
#include "hypertoric/sharp.hpp"

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypertoric {

namespace detail {

// Multiplicities become row/column counts; anything this large could not be
// materialized anyway.
inline std::size_t to_count(const Integer& x, const char* what) {
  constexpr std::size_t kMaxCount = std::size_t{1} << 24;
  if (x < 0 || x > kMaxCount)
    throw InvalidArgument(std::string(what) + " " + to_string(x) + " is too large to expand");
  return static_cast<std::size_t>(x);
}

inline bool satisfies_normal_form(const IntMatrix& a, const Integer& m) {
  if (a.rows() == 0 || a.cols() == 0) return false;
  for (std::size_t j = 1; j < a.cols(); ++j)
    if (a(0, j) % m != 0) return false;
  if (gcd(a(0, 0), m) != 1) return false;
  IntMatrix reduced = a;
  reduced(0, 0) = 1;
  for (std::size_t j = 1; j < a.cols(); ++j) reduced(0, j) = a(0, j) / m;
  return is_lattice_surjection(reduced);
}

}  // namespace detail

/// A at a codimension-2 column j0, rewritten as A_nf = P * A * Pi where Pi
/// moves column j0 to the front. The first row of A_nf is
/// (a11, m*a12, ..., m*a1n) with gcd(a11, m) = 1, and replacing it by
/// (1, a12, ..., a1n) gives a lattice surjection.
struct Lemma5Form {
  IntMatrix P;                                 // d x d, unimodular
  std::vector<std::size_t> column_permutation; // column k of A * Pi is column perm[k] of A
  std::size_t j0 = 0;
  Integer m;
  IntMatrix A_nf;
};

/// Normal form at column j0. Uses P = identity whenever A (with j0 moved to
/// the front) already has the required shape; otherwise P comes from the
/// Smith form of A without column j0.
inline Lemma5Form lemma5_normal_form(const IntMatrix& a, std::size_t j0) {
  if (!is_lattice_surjection(a)) throw NotSurjective();
  if (auto why = sharp_failure(a, j0)) throw NotSharp(j0, *why);

  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  const auto bar = snf(a.without_column(j0));
  // Z^d / im(A-bar) is cyclic: all factors but the last are 1.
  for (std::size_t i = 0; i + 1 < d; ++i)
    if (bar.invariant_factors[i] != 1)
      throw InternalVerificationFailure("cokernel of A without column j0 is not cyclic");
  const Integer m = bar.invariant_factors[d - 1];

  std::vector<std::size_t> perm{j0};
  for (std::size_t j = 0; j < n; ++j)
    if (j != j0) perm.push_back(j);
  const IntMatrix permuted = a.select_columns(perm);

  Lemma5Form nf{IntMatrix::identity(d), perm, j0, m, permuted};
  if (detail::satisfies_normal_form(permuted, m)) return nf;

  // Row d of U * A-bar is m times a row of V^{-1}; move it to the top.
  std::vector<std::size_t> order{d - 1};
  for (std::size_t i = 0; i + 1 < d; ++i) order.push_back(i);
  nf.P = bar.U.select_rows(order);
  nf.A_nf = nf.P * permuted;
  if (!detail::satisfies_normal_form(nf.A_nf, m))
    throw InternalVerificationFailure("normal form construction failed at column " +
                                      std::to_string(j0));
  return nf;
}

struct ExpansionStep {
  Lemma5Form input;
  IntMatrix A_prime;  // (d+m-1) x (n+m-1)
  IntMatrix B_prime;  // (n+m-1) x (n-d)
  std::vector<std::size_t> column_origin;  // column of A' -> column of the original A
  ExactnessCertificate certificate;
};

/// One expansion step. B must be a Gale dual of the matrix nf was computed
/// from (rows in its original column order). Throws
/// InternalVerificationFailure if (A', B') is not exact or A' not onto.
inline ExpansionStep step_expand(const Lemma5Form& nf, const IntMatrix& b) {
  const IntMatrix& a = nf.A_nf;
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (b.rows() != n)
    throw DimensionMismatch("B has " + std::to_string(b.rows()) + " rows, A has " +
                            std::to_string(n) + " columns");
  const IntMatrix bp = b.select_rows(nf.column_permutation);
  if (!(a * bp).is_zero()) throw InvalidArgument("B is not a Gale dual of A");
  for (const auto& x : bp.row(0))
    if (x % nf.m != 0)
      throw InternalVerificationFailure("row j0 of B is not divisible by m");

  const std::size_t m = detail::to_count(nf.m, "multiplicity");
  const std::size_t k = b.cols();
  IntMatrix ap(d + m - 1, n + m - 1);
  ap(0, 0) = a(0, 0);
  for (std::size_t j = 1; j < n; ++j) ap(0, m + j - 1) = a(0, j) / nf.m;
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t c = 0; c < m; ++c) ap(i, c) = a(i, 0);
    for (std::size_t j = 1; j < n; ++j) ap(i, m + j - 1) = a(i, j);
  }
  for (std::size_t c = 0; c + 1 < m; ++c) {
    ap(d + c, c) = 1;
    ap(d + c, c + 1) = -1;
  }

  IntMatrix bq(n + m - 1, k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < k; ++c) bq(r, c) = bp(0, c) / nf.m;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) bq(m + i - 1, c) = bp(i, c);

  std::vector<std::size_t> origin(m, nf.column_permutation[0]);
  for (std::size_t j = 1; j < n; ++j) origin.push_back(nf.column_permutation[j]);

  auto cert = verify_exact(ap, bq);
  if (!cert.exact())
    throw InternalVerificationFailure("expanded pair (A', B') is not exact at column " +
                                      std::to_string(nf.j0));
  return {nf, std::move(ap), std::move(bq), std::move(origin), cert};
}

/// Rows of B grouped by primitive direction up to sign.
struct DirectionClass {
  IntVector direction;  // sign-normalized primitive vector
  IntVector multiplicities;
  std::vector<std::size_t> source_rows;

  Integer total() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), Integer(0));
  }
};

struct PrimitivizationResult {
  std::vector<DirectionClass> classes;     // in order of first appearance
  IntMatrix B_sharp;
  std::vector<std::size_t> row_provenance; // row of B_sharp -> row of B
};

/// Replaces each row m*b of B (b primitive) by m consecutive copies of b,
/// keeping row order and orientation. When B has no columns its rows are
/// empty; B is returned unchanged and no classes are formed.
inline PrimitivizationResult primitivize_rows(const IntMatrix& b) {
  PrimitivizationResult out;
  if (b.cols() == 0) {
    out.B_sharp = b;
    out.row_provenance.resize(b.rows());
    std::iota(out.row_provenance.begin(), out.row_provenance.end(), std::size_t{0});
    return out;
  }
  std::vector<IntVector> rows;
  std::map<IntVector, std::size_t> class_of;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto part = row_primitive_part(b.row(i), i);
    const std::size_t copies = detail::to_count(part.multiplicity, "row multiplicity");
    for (std::size_t c = 0; c < copies; ++c) {
      rows.push_back(part.direction);
      out.row_provenance.push_back(i);
    }
    IntVector key = sign_normalized(part.direction);
    auto [it, inserted] = class_of.try_emplace(key, out.classes.size());
    if (inserted) out.classes.push_back({std::move(key), {}, {}});
    out.classes[it->second].multiplicities.push_back(part.multiplicity);
    out.classes[it->second].source_rows.push_back(i);
  }
  out.B_sharp = IntMatrix::from_rows(rows, b.cols());
  return out;
}

enum class TerminalizationPath { Direct, Iterated };

struct TerminalizationResult {
  IntMatrix A_sharp;
  IntMatrix B_sharp;
  std::size_t n_sharp = 0;
  std::size_t d_sharp = 0;
  std::vector<ExpansionStep> steps;  // Iterated only
  TerminalizationPath path = TerminalizationPath::Direct;
};

namespace detail {

// Column j of A is codimension-2 exactly when row j of its Gale dual is
// non-primitive, and the row test is far cheaper. lemma5_normal_form
// re-checks the column on the A side.
inline std::optional<std::size_t> first_sharp_column(const IntMatrix& b) {
  if (b.cols() == 0) return std::nullopt;
  for (std::size_t j = 0; j < b.rows(); ++j)
    if (gcd(b.row(j)) > 1) return j;
  return std::nullopt;
}

inline void check_terminal(const IntMatrix& a, const IntMatrix& b) {
  if (!verify_exact(a, b).exact())
    throw InternalVerificationFailure("terminalized pair is not exact");
  if (b.cols() == 0) return;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (gcd(b.row(i)) != 1)
      throw InternalVerificationFailure("terminalized B has a non-primitive row");
}

}  // namespace detail

/// Terminalization of the presentation A. A must be a lattice surjection
/// whose Gale dual has no zero rows.
///
/// Direct: B# = primitivize_rows(B), A# = cokernel_matrix(B#).
/// Iterated: while some column j0 is codimension-2 (smallest first), apply
/// lemma5_normal_form and step_expand; every step is recorded.
///
/// A# is only defined up to unimodular row operations; compare results by
/// kernel lattice, not entrywise.
inline TerminalizationResult terminalize(const IntMatrix& a,
                                         TerminalizationPath path = TerminalizationPath::Direct) {
  const GalePair gale = gale_dual(a);
  TerminalizationResult out;
  out.path = path;

  if (path == TerminalizationPath::Direct) {
    out.B_sharp = primitivize_rows(gale.B).B_sharp;
    out.A_sharp = cokernel_matrix(out.B_sharp);
  } else {
    Integer excess = 0;
    if (gale.B.cols() > 0)
      for (std::size_t i = 0; i < gale.B.rows(); ++i) excess += gcd(gale.B.row(i)) - 1;
    const Integer limit = excess + 1;

    IntMatrix cur_a = a;
    IntMatrix cur_b = gale.B;
    while (auto j0 = detail::first_sharp_column(cur_b)) {
      if (Integer(out.steps.size()) >= limit)
        throw IterationLimitExceeded("more than " + to_string(limit) + " expansion steps");
      auto step = step_expand(lemma5_normal_form(cur_a, *j0), cur_b);
      cur_a = step.A_prime;
      cur_b = step.B_prime;
      out.steps.push_back(std::move(step));
    }
    out.A_sharp = std::move(cur_a);
    out.B_sharp = std::move(cur_b);
  }

  detail::check_terminal(out.A_sharp, out.B_sharp);
  out.n_sharp = out.A_sharp.cols();
  out.d_sharp = out.A_sharp.rows();
  if (out.n_sharp - out.d_sharp != a.cols() - a.rows())
    throw InternalVerificationFailure("terminalization changed the kernel rank");
  return out;
}

}  // namespace hypertoric
