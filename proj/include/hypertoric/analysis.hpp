#pragma once

// Decision procedures on a presentation A: codimension-2 singularities,
// classification, crepant resolutions, the Weyl group, genericity of the
// GIT parameter, and the singular-stratum dimension report.

#include "hypertoric/error.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/int_matrix.hpp"
#include "hypertoric/intlinalg.hpp"
#include "hypertoric/sharp.hpp"
#include "hypertoric/terminalize.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypertoric {

/// Default cap on the number of subsets any enumeration may visit: C(24, 12).
inline constexpr std::uint64_t kDefaultMaxEnumeration = 2704156;

/// Throws EnumerationTooLarge when count exceeds limit.
inline void check_enumeration(const Integer& count, std::uint64_t limit, std::string_view what) {
  if (count > limit)
    throw EnumerationTooLarge(std::string(what) + " would visit " + to_string(count) +
                              " subsets, above the limit of " + std::to_string(limit) +
                              " (raise --max-enumeration to proceed)");
}

enum class Verdict { Smooth, TerminalQuotient, Codim2Singular };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Smooth: return "smooth";
    case Verdict::TerminalQuotient: return "terminal-quotient";
    case Verdict::Codim2Singular: return "codim2-singular";
  }
  return "unknown";
}

struct NonprimitiveRow {
  std::size_t row;
  Integer gcd;
};

struct Classification {
  Verdict verdict = Verdict::Smooth;
  std::vector<std::size_t> codim2_witnesses;  // columns j0 passing sharp_test_at
  std::vector<NonprimitiveRow> nonprimitive_rows;
};

/// Classifies the generic quotient of A. Witness columns and non-primitive
/// Gale rows are computed separately and must coincide index by index;
/// a mismatch throws InternalVerificationFailure.
inline Classification classify(const IntMatrix& a,
                               std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  const GalePair gale = gale_dual(a);
  Classification c;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!sharp_failure(a, j)) c.codim2_witnesses.push_back(j);
  if (gale.B.cols() > 0)
    for (std::size_t i = 0; i < gale.B.rows(); ++i) {
      Integer g = gcd(gale.B.row(i));
      if (g > 1) c.nonprimitive_rows.push_back({i, g});
    }

  std::vector<std::size_t> rows;
  for (const auto& r : c.nonprimitive_rows) rows.push_back(r.row);
  if (rows != c.codim2_witnesses)
    throw InternalVerificationFailure(
        "codimension-2 columns of A disagree with non-primitive rows of B");

  if (!c.codim2_witnesses.empty()) {
    c.verdict = Verdict::Codim2Singular;
  } else {
    check_enumeration(binomial(a.cols(), a.rows()), max_enumeration, "unimodularity check");
    c.verdict = is_unimodular(a) ? Verdict::Smooth : Verdict::TerminalQuotient;
  }
  return c;
}

struct CrepantDecision {
  bool exists = false;
  std::optional<MinorWitness> witness;  // rows of B# and the offending minor
  IntMatrix B_sharp;
};

/// A projective crepant resolution exists iff the primitivization B# of the
/// Gale dual is unimodular.
inline CrepantDecision crepant_resolution_exists(
    const IntMatrix& a, std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  const GalePair gale = gale_dual(a);
  CrepantDecision out;
  out.B_sharp = primitivize_rows(gale.B).B_sharp;
  check_enumeration(binomial(out.B_sharp.rows(), out.B_sharp.cols()), max_enumeration,
                    "crepant-resolution check");
  out.witness = first_non_unimodular_minor(out.B_sharp);
  out.exists = !out.witness && rank(out.B_sharp) == out.B_sharp.cols();
  return out;
}

struct WeylGroup {
  IntVector factors;  // one per parallel class, descending
  Integer order;      // product of factorials
};

/// Weyl group from the rows of a Gale dual B: one symmetric-group factor per
/// class of parallel rows (b ~ -b), of degree the sum of their gcds.
inline WeylGroup weyl_group_of_gale(const IntMatrix& b) {
  WeylGroup w;
  w.order = 1;
  for (const auto& cls : primitivize_rows(b).classes) {
    Integer f = cls.total();
    w.order *= factorial(detail::to_count(f, "Weyl factor"));
    w.factors.push_back(std::move(f));
  }
  std::sort(w.factors.begin(), w.factors.end(), std::greater<>());
  return w;
}

inline WeylGroup weyl_group(const IntMatrix& a) { return weyl_group_of_gale(gale_dual(a).B); }

/// Primitive, sign-normalized normals of the codimension-1 subspaces spanned
/// by columns of A, in order of first discovery.
struct HyperplaneSet {
  std::vector<IntVector> normals;
};

/// Every codimension-1 span of columns is spanned by d-1 independent columns,
/// so only (d-1)-subsets are visited. For d = 1 the empty set spans {0},
/// giving the single normal (1); for d = 0 there are no hyperplanes.
inline HyperplaneSet hyperplane_normals(const IntMatrix& a,
                                        std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  if (!is_lattice_surjection(a)) throw NotSurjective();
  const std::size_t d = a.rows();
  HyperplaneSet out;
  if (d == 0) return out;
  check_enumeration(binomial(a.cols(), d - 1), max_enumeration, "hyperplane enumeration");
  std::set<IntVector> seen;
  for_each_combination(a.cols(), d - 1, [&](std::span<const std::size_t> idx) {
    const IntMatrix span = a.select_columns(idx);
    if (rank(span) != d - 1) return true;
    const IntMatrix normal = kernel_basis(span.transpose());
    IntVector v = sign_normalized(normal.column(0));
    if (seen.insert(v).second) out.normals.push_back(std::move(v));
    return true;
  });
  return out;
}

inline bool is_generic(const HyperplaneSet& h, std::span<const Integer> alpha) {
  for (const auto& n : h.normals) {
    if (n.size() != alpha.size())
      throw DimensionMismatch("alpha has length " + std::to_string(alpha.size()) + ", expected " +
                              std::to_string(n.size()));
    Integer dot = 0;
    for (std::size_t i = 0; i < n.size(); ++i) dot += n[i] * alpha[i];
    if (dot == 0) return false;
  }
  return true;
}

/// True iff alpha lies on none of the hyperplanes spanned by columns of A.
inline bool is_generic(const IntMatrix& a, std::span<const Integer> alpha,
                       std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  if (alpha.size() != a.rows())
    throw DimensionMismatch("alpha has length " + std::to_string(alpha.size()) + ", expected " +
                            std::to_string(a.rows()));
  return is_generic(hyperplane_normals(a, max_enumeration), alpha);
}

/// First generic vector, scanning the shells of L-infinity radius 1, 2, ...
/// each in lexicographic order.
inline IntVector sample_generic(const IntMatrix& a,
                                std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  const HyperplaneSet h = hyperplane_normals(a, max_enumeration);
  const std::size_t d = a.rows();
  if (d == 0) return {};
  for (long r = 1;; ++r) {
    IntVector v(d, Integer(-r));
    while (true) {
      const bool on_shell =
          std::any_of(v.begin(), v.end(), [&](const Integer& x) { return abs(x) == r; });
      if (on_shell && is_generic(h, v)) return v;
      std::size_t i = d;
      while (i > 0 && v[i - 1] == r) v[--i] = -r;
      if (i == 0) break;
      ++v[i - 1];
    }
  }
}

struct Stratum {
  std::vector<std::size_t> columns;  // J
  std::size_t stratum_dim = 0;       // 2|J| - 2d
  std::size_t ambient_dim = 0;       // 2(n - d)
  std::size_t codim = 0;             // 2(n - |J|)
};

/// Candidate singular strata. The dimensions are formulas that hold when the
/// stratum is nonempty; nonemptiness is not certified.
struct StratumReport {
  std::vector<Stratum> strata;
  bool maximal_only = false;
  bool conditional_on_nonempty = true;
};

/// Column subsets J with rank(A_J) = d and A_J not onto, optionally only the
/// inclusion-maximal ones. Visits all 2^n subsets.
inline StratumReport stratify(const IntMatrix& a, bool maximal_only,
                              std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  if (!is_lattice_surjection(a)) throw NotSurjective();
  const std::size_t n = a.cols();
  const std::size_t d = a.rows();
  check_enumeration(Integer(1) << n, max_enumeration, "stratification");

  std::vector<std::uint64_t> qualifying;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    if (cols.size() < d) continue;
    const IntMatrix sub = a.select_columns(cols);
    if (rank(sub) == d && !is_lattice_surjection(sub)) qualifying.push_back(mask);
  }

  StratumReport out;
  out.maximal_only = maximal_only;
  for (std::uint64_t mask : qualifying) {
    if (maximal_only &&
        std::any_of(qualifying.begin(), qualifying.end(), [&](std::uint64_t other) {
          return other != mask && (other & mask) == mask;
        }))
      continue;
    Stratum s;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) s.columns.push_back(j);
    s.stratum_dim = 2 * s.columns.size() - 2 * d;
    s.ambient_dim = 2 * (n - d);
    s.codim = 2 * (n - s.columns.size());
    out.strata.push_back(std::move(s));
  }
  std::sort(out.strata.begin(), out.strata.end(),
            [](const Stratum& x, const Stratum& y) { return x.columns < y.columns; });
  return out;
}

}  // namespace hypertoric
