#ifndef DCOSET_CLASSIFY_HPP
#define DCOSET_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcoset/lattice.hpp"
#include "dcoset/monoid.hpp"
#include "dcoset/pairs.hpp"

namespace dcoset {

enum class Outcome { AffineSpace, Singular };

/// TheoremOne: classical G, where a free slice monoid is equivalent to an
/// affine quotient. NecessaryConditionOnly: exceptional G, where only the
/// implication "affine => free" is available, so only Singular is reported.
enum class Justification { TheoremOne, NecessaryConditionOnly };

std::string_view outcome_name(Outcome o);              // "affine_space" | "singular"
std::string_view justification_name(Justification j);  // "theorem_one" | ...

struct Verdict {
  Outcome outcome = Outcome::Singular;
  std::size_t dimension = 0;  // monoid rank of the slice relation monoid
  FreenessReport certificate;
  Justification justification = Justification::TheoremOne;
};

/// Freeness of the slice relation monoid. Throws std::logic_error if an
/// exceptional pair ever computes as free.
Verdict classify_pair(const PairSpec& pair, const CompletionOptions& options = {});

struct TableRow {
  PairSpec pair;
  Verdict verdict;
};

/// classify_pair over catalogue(bounds), in catalogue order.
std::vector<TableRow> theorem_table(const CatalogueBounds& bounds = {},
                                    const CompletionOptions& options = {});

/// One of the sixteen singular torus modules, with the invariant monomials
/// that any minimal generating set must contain.
struct AppendixCase {
  int id = 0;
  std::string title;
  WeightSystem system;
  std::vector<Relation> listed;  // distinct, in listing order
  std::vector<std::string> notes;
};

struct AppendixReport {
  int case_id = 0;
  std::string title;
  bool listed_all_invariant = false;
  bool listed_all_irreducible = false;
  bool listed_in_basis = false;
  std::size_t listed_count = 0;
  std::size_t hb_size = 0;
  std::size_t quotient_dim = 0;
  bool singular_confirmed = false;  // hb_size > quotient_dim
  std::vector<std::string> notes;
};

inline constexpr int kAppendixCases = 16;

/// Case 1 takes (n, m) with n >= m >= 2, default (2, 2); case 7 takes (n)
/// with n >= 1, default 2, passed as {n, 0}. Other cases take no
/// parameters. Throws InvalidParameters otherwise.
AppendixCase appendix_case(int id, std::optional<std::pair<int, int>> params = std::nullopt);

AppendixReport verify_appendix_case(int id,
                                    std::optional<std::pair<int, int>> params = std::nullopt,
                                    const CompletionOptions& options = {});

struct MonotonicityResult {
  bool applicable = false;
  /// Weights vanishing on the T1 coordinates, restricted to the T0
  /// coordinates, in their original order.
  WeightSystem sub;
  std::optional<FreenessReport> sub_report;
  /// Singular when the sub-module's monoid is not free.
  std::optional<Outcome> conclusion;
};

/// `t1` lists the weight-lattice coordinates spanning the subtorus T1; the
/// remaining coordinates span T0. Throws InvalidParameters on an index out
/// of range or a repeated index.
MonotonicityResult monotonicity_check(const WeightSystem& full, const std::vector<std::size_t>& t1,
                                      const CompletionOptions& options = {});

}  // namespace dcoset

#endif  // DCOSET_CLASSIFY_HPP
