#include "dcoset/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcoset/errors.hpp"

namespace dcoset {

std::string_view outcome_name(Outcome o) {
  return o == Outcome::AffineSpace ? "affine_space" : "singular";
}

std::string_view justification_name(Justification j) {
  return j == Justification::TheoremOne ? "theorem_one" : "necessary_condition_only";
}

Verdict classify_pair(const PairSpec& pair, const CompletionOptions& options) {
  Verdict v;
  v.certificate = freeness(slice_weight_system(pair), options);
  v.dimension = v.certificate.monoid_rank;
  v.outcome = v.certificate.free ? Outcome::AffineSpace : Outcome::Singular;
  if (pair.exceptional()) {
    v.justification = Justification::NecessaryConditionOnly;
    if (v.outcome == Outcome::AffineSpace) {
      throw std::logic_error(pair.name() +
                             ": free slice monoid for exceptional G; the converse is not available");
    }
  }
  return v;
}

std::vector<TableRow> theorem_table(const CatalogueBounds& bounds, const CompletionOptions& options) {
  std::vector<TableRow> rows;
  for (auto& pair : catalogue(bounds)) {
    Verdict v = classify_pair(pair, options);
    rows.push_back(TableRow{std::move(pair), std::move(v)});
  }
  return rows;
}

MonotonicityResult monotonicity_check(const WeightSystem& full, const std::vector<std::size_t>& t1,
                                      const CompletionOptions& options) {
  const std::size_t r = full.rank();
  std::vector<bool> in_t1(r, false);
  for (std::size_t k : t1) {
    if (k >= r) {
      throw InvalidParameters("coordinate " + std::to_string(k) + " is outside a lattice of rank " +
                              std::to_string(r));
    }
    if (in_t1[k]) throw InvalidParameters("coordinate " + std::to_string(k) + " listed twice");
    in_t1[k] = true;
  }

  std::vector<Weight> weights;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < full.size(); ++i) {
    const Weight& w = full[i];
    bool vanishes = true;
    for (std::size_t k = 0; k < r && vanishes; ++k) vanishes = !in_t1[k] || w[k] == 0;
    if (!vanishes) continue;
    Weight projected;
    for (std::size_t k = 0; k < r; ++k) {
      if (!in_t1[k]) projected.push_back(w[k]);
    }
    weights.push_back(std::move(projected));
    if (full.has_labels()) labels.push_back(full.labels()[i]);
  }

  MonotonicityResult result;
  result.sub = WeightSystem(r - t1.size(), std::move(weights), std::move(labels));
  result.applicable = !result.sub.empty();
  if (result.applicable) {
    result.sub_report = freeness(result.sub, options);
    if (!result.sub_report->free) result.conclusion = Outcome::Singular;
  }
  return result;
}

}  // namespace dcoset
