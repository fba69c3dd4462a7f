#pragma once

// Exact linear algebra over Z: Hermite and Smith normal forms, integer
// kernels, maximal minors and canonical lattice bases.

#include "hypertoric/error.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hypertoric {

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic
/// order. Stops early when visit returns false. Returns false iff stopped.
inline bool for_each_combination(std::size_t n, std::size_t k,
                                 const std::function<bool(std::span<const std::size_t>)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Fraction-free (Bareiss) determinant. The 0x0 determinant is 1.
inline Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Rank over Q via fraction-free row echelon elimination.
inline std::size_t rank(const IntMatrix& a) {
  IntMatrix m = a;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

struct HNFResult {
  IntMatrix H;  ///< row Hermite normal form
  IntMatrix U;  ///< unimodular, U * A = H
};

/// Row Hermite normal form. H is in row echelon form, zero rows last, each
/// pivot positive, and entries above a pivot reduced into [0, pivot).
inline HNFResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool has_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      has_pivot = true;
      h.swap_rows(r, *best);
      u.swap_rows(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

struct SNFDecomposition {
  IntMatrix U;                   ///< rows x rows, unimodular
  IntMatrix V;                   ///< cols x cols, unimodular
  IntVector invariant_factors;   ///< min(rows, cols) entries, d_1 | d_2 | ..., zeros last
};

/// rows x cols matrix with the given diagonal.
inline IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols, std::span<const Integer> diag) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) d(i, i) = diag[i];
  return d;
}

/// Smith normal form U * A * V = diag(d_1, ..., d_k) with ascending
/// divisibility. The pivot at each stage is the nonzero entry of least
/// absolute value in the remaining block, ties broken by lowest (row, col).
inline SNFDecomposition snf(const IntMatrix& a) {
  IntMatrix m = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t k = std::min(a.rows(), a.cols());
  IntVector factors(k);

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j)
          if (m(i, j) != 0 && (!best || abs(m(i, j)) < abs(m(best->first, best->second))))
            best = {i, j};
      if (!best) break;  // remaining block is zero
      m.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      m.swap_columns(t, best->second);
      v.swap_columns(t, best->second);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        Integer q = m(i, t) / m(t, t);
        m.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (m(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        m.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (m(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the rest of the block; otherwise fold the
      // offending row into row t, which produces a smaller remainder.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (m(i, j) % m(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      m.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (m(t, t) < 0) {
      m.negate_row(t);
      u.negate_row(t);
    }
    factors[t] = m(t, t);
  }
  return {std::move(u), std::move(v), std::move(factors)};
}

/// True iff A: Z^cols -> Z^rows is onto. A 0 x n matrix is onto.
inline bool is_lattice_surjection(const IntMatrix& a) {
  const std::size_t d = a.rows();
  const std::size_t n = a.cols();
  if (d == 0) return true;
  if (n < d) return false;
  // Column echelon form without transforms; the image is Z^d iff every
  // pivot is a unit.
  IntMatrix m = a;
  for (std::size_t r = 0; r < d; ++r) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t c = r; c < n; ++c)
        if (m(r, c) != 0 && (!best || abs(m(r, c)) < abs(m(r, *best)))) best = c;
      if (!best) return false;
      m.swap_columns(r, *best);
      bool cleared = true;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (m(r, c) == 0) continue;
        m.add_column_multiple(c, r, -(m(r, c) / m(r, r)));
        if (m(r, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (abs(m(r, r)) != 1) return false;
  }
  return true;
}

/// Canonical basis of the lattice spanned by the columns of A: the column
/// Hermite form with zero columns dropped. Two matrices span the same column
/// lattice iff their canonical forms are equal.
inline IntMatrix column_lattice_canonical(const IntMatrix& a) {
  const IntMatrix h = hnf(a.transpose()).H;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!is_zero(h.row(i))) nonzero.push_back(i);
  return h.select_rows(nonzero).transpose();
}

/// Basis of ker(A: Z^n -> Z^d) as the columns of an n x k matrix, in
/// canonical column Hermite form. The kernel is always saturated.
inline IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  const auto [h, u] = hnf(a.transpose());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (is_zero(h.row(i))) zero_rows.push_back(i);
  if (zero_rows.empty()) return IntMatrix(n, 0);
  return column_lattice_canonical(u.select_rows(zero_rows).transpose());
}

/// Calls visit(indices, minor) for each maximal square submatrix in
/// lexicographic order of the index subset. The subset indexes columns when
/// rows <= cols and rows otherwise. Cost is C(max, min) determinants.
inline bool for_each_maximal_minor(
    const IntMatrix& a,
    const std::function<bool(std::span<const std::size_t>, const Integer&)>& visit) {
  const bool by_columns = a.rows() <= a.cols();
  const std::size_t n = by_columns ? a.cols() : a.rows();
  const std::size_t k = by_columns ? a.rows() : a.cols();
  return for_each_combination(n, k, [&](std::span<const std::size_t> idx) {
    const Integer det = determinant(by_columns ? a.select_columns(idx) : a.select_rows(idx));
    return visit(idx, det);
  });
}

inline IntVector maximal_minors(const IntMatrix& a) {
  IntVector out;
  for_each_maximal_minor(a, [&](std::span<const std::size_t>, const Integer& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

struct MinorWitness {
  std::vector<std::size_t> indices;
  Integer value;
};

/// First maximal minor (lexicographic order) outside {-1, 0, 1}, if any.
inline std::optional<MinorWitness> first_non_unimodular_minor(const IntMatrix& a) {
  std::optional<MinorWitness> w;
  for_each_maximal_minor(a, [&](std::span<const std::size_t> idx, const Integer& m) {
    if (abs(m) <= 1) return true;
    w = MinorWitness{{idx.begin(), idx.end()}, m};
    return false;
  });
  return w;
}

/// True iff every maximal minor lies in {-1, 0, 1} and at least one is
/// nonzero. Stops at the first violating minor.
inline bool is_unimodular(const IntMatrix& a) {
  if (rank(a) != std::min(a.rows(), a.cols())) return false;
  return !first_non_unimodular_minor(a).has_value();
}

struct PrimitivePart {
  IntVector direction;  ///< primitive, same orientation as the input
  Integer multiplicity; ///< gcd of the entries, > 0
};

/// Splits v = multiplicity * direction with direction primitive.
/// Throws ZeroRow(row_index) when v is zero.
inline PrimitivePart row_primitive_part(std::span<const Integer> v, std::size_t row_index = 0) {
  const Integer g = gcd(v);
  if (g == 0) throw ZeroRow(row_index);
  IntVector b(v.begin(), v.end());
  for (auto& x : b) x /= g;
  return {std::move(b), g};
}

/// True iff A and B have the same multiset of rows.
inline bool rows_match_up_to_permutation(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto sorted_rows = [](const IntMatrix& m) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    std::sort(rows.begin(), rows.end());
    return rows;
  };
  return sorted_rows(a) == sorted_rows(b);
}

/// Copy of A with each row sign-normalized (first nonzero entry positive).
inline IntMatrix rows_sign_normalized(const IntMatrix& a) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const IntVector r = sign_normalized(a.row(i));
    std::copy(r.begin(), r.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace hypertoric
