#pragma once

// JSON views of library results and the full analysis report. Row and
// column indices are 1-based in every JSON document.

#include "hypertoric/analysis.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/terminalize.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypertoric {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "hypertoric-report/1";

inline Json one_based(std::span<const std::size_t> idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push(Json::number(std::uint64_t{i + 1}));
  return a;
}

inline Json to_json(const ExactnessCertificate& c) {
  return Json::object()
      .set("exact", Json::boolean(c.exact()))
      .set("product_is_zero", Json::boolean(c.product_is_zero))
      .set("a_surjective", Json::boolean(c.a_surjective))
      .set("b_saturated", Json::boolean(c.b_saturated))
      .set("ranks_complementary", Json::boolean(c.ranks_complementary));
}

inline Json to_json(const PrimitivizationResult& p) {
  Json classes = Json::array();
  for (const auto& c : p.classes)
    classes.push(Json::object()
                     .set("direction", Json::numbers(c.direction))
                     .set("multiplicities", Json::numbers(c.multiplicities))
                     .set("source_rows", one_based(c.source_rows)));
  return Json::object()
      .set("classes", std::move(classes))
      .set("b_sharp", matrix_to_json(p.B_sharp))
      .set("row_provenance", one_based(p.row_provenance));
}

inline Json to_json(const Lemma5Form& nf) {
  return Json::object()
      .set("j0", Json::number(std::uint64_t{nf.j0 + 1}))
      .set("m", Json::number(nf.m))
      .set("column_permutation", one_based(nf.column_permutation))
      .set("P", matrix_to_json(nf.P))
      .set("A_nf", matrix_to_json(nf.A_nf));
}

inline Json to_json(const ExpansionStep& s) {
  return Json::object()
      .set("normal_form", to_json(s.input))
      .set("A_prime", matrix_to_json(s.A_prime))
      .set("B_prime", matrix_to_json(s.B_prime))
      .set("column_origin", one_based(s.column_origin))
      .set("certificate", to_json(s.certificate));
}

inline Json to_json(const TerminalizationResult& t, bool with_steps) {
  Json out = Json::object()
                 .set("path", Json::string(t.path == TerminalizationPath::Direct ? "direct"
                                                                                  : "iterated"))
                 .set("n_sharp", Json::number(std::uint64_t{t.n_sharp}))
                 .set("d_sharp", Json::number(std::uint64_t{t.d_sharp}))
                 .set("a_sharp", matrix_to_json(t.A_sharp))
                 .set("b_sharp", matrix_to_json(t.B_sharp));
  if (with_steps) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push(to_json(s));
    out.set("steps", std::move(steps));
  }
  return out;
}

inline Json to_json(const Classification& c) {
  Json rows = Json::array();
  for (const auto& r : c.nonprimitive_rows)
    rows.push(Json::object()
                  .set("row", Json::number(std::uint64_t{r.row + 1}))
                  .set("gcd", Json::number(r.gcd)));
  return Json::object()
      .set("verdict", Json::string(std::string(to_string(c.verdict))))
      .set("codim2_witnesses", one_based(c.codim2_witnesses))
      .set("nonprimitive_rows", std::move(rows));
}

inline Json to_json(const CrepantDecision& c) {
  Json witness = Json::null();
  if (c.witness)
    witness = Json::object()
                  .set("rows", one_based(c.witness->indices))
                  .set("minor", Json::number(c.witness->value));
  return Json::object().set("exists", Json::boolean(c.exists)).set("witness", std::move(witness));
}

inline Json to_json(const WeylGroup& w) {
  return Json::object()
      .set("factors", Json::numbers(w.factors))
      .set("order", Json::number(w.order));
}

inline Json to_json(const HyperplaneSet& h) {
  Json normals = Json::array();
  for (const auto& n : h.normals) normals.push(Json::numbers(n));
  return Json::object()
      .set("count", Json::number(std::uint64_t{h.normals.size()}))
      .set("normals", std::move(normals));
}

inline Json to_json(const StratumReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata)
    strata.push(Json::object()
                    .set("columns", one_based(s.columns))
                    .set("stratum_dim", Json::number(std::uint64_t{s.stratum_dim}))
                    .set("ambient_dim", Json::number(std::uint64_t{s.ambient_dim}))
                    .set("codim", Json::number(std::uint64_t{s.codim})));
  std::optional<std::size_t> min_codim;
  for (const auto& s : r.strata)
    if (!min_codim || s.codim < *min_codim) min_codim = s.codim;
  return Json::object()
      .set("maximal_only", Json::boolean(r.maximal_only))
      .set("conditional_on_nonempty", Json::boolean(r.conditional_on_nonempty))
      .set("min_codim", min_codim ? Json::number(std::uint64_t{*min_codim}) : Json::null())
      .set("strata", std::move(strata));
}

/// Everything known about A in one document. Field order is fixed and no
/// field depends on wall-clock time, so output is byte-stable.
inline Json build_report(const IntMatrix& a,
                         std::uint64_t max_enumeration = kDefaultMaxEnumeration) {
  const GalePair gale = gale_dual(a);
  const PrimitivizationResult prim = primitivize_rows(gale.B);
  const TerminalizationResult term = terminalize(a, TerminalizationPath::Direct);
  const Classification cls = classify(a, max_enumeration);
  const CrepantDecision crepant = crepant_resolution_exists(a, max_enumeration);
  const HyperplaneSet planes = hyperplane_normals(a, max_enumeration);
  const IntVector alpha = sample_generic(a, max_enumeration);

  Json strata;
  try {
    strata = to_json(stratify(a, true, max_enumeration));
  } catch (const EnumerationTooLarge& e) {
    strata = Json::object().set("skipped", Json::string(e.what()));
  }

  const WeylGroup weyl = weyl_group_of_gale(gale.B);
  return Json::object()
      .set("schema", Json::string(kReportSchema))
      .set("version", Json::string(kVersion))
      .set("input", matrix_to_json(a))
      .set("gale_dual",
           Json::object().set("B", matrix_to_json(gale.B)).set("certificate",
                                                                to_json(gale.certificate)))
      .set("primitivization", to_json(prim))
      .set("a_sharp", matrix_to_json(term.A_sharp))
      .set("classification", to_json(cls))
      .set("crepant", to_json(crepant))
      .set("weyl_factors", Json::numbers(weyl.factors))
      .set("weyl_order", Json::number(weyl.order))
      .set("hyperplanes", Json::object().set("count",
                                             Json::number(std::uint64_t{planes.normals.size()})))
      .set("generic_alpha", Json::numbers(alpha))
      .set("stratification", std::move(strata));
}

}  // namespace hypertoric
