#ifndef DCOSET_MONOID_HPP
#define DCOSET_MONOID_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcoset/lattice.hpp"

namespace dcoset {

/// A nonnegative exponent vector, i.e. the monomial prod X_i^{a_i}.
/// Ordering is lexicographic on the exponents.
struct Relation {
  std::vector<std::int32_t> exponents;

  std::int64_t degree() const;
  bool is_zero() const;
  std::size_t size() const { return exponents.size(); }

  auto operator<=>(const Relation&) const = default;
  bool operator==(const Relation&) const = default;
};

/// The minimal generating set of the relation monoid
/// A = { a in Z_{>=0}^n : sum a_i chi_i = 0 }.
struct HilbertBasis {
  WeightSystem context;
  std::vector<Relation> elements;  // sorted, pairwise distinct
  std::size_t monoid_rank = 0;     // rank of the group generated by A
  std::size_t quotient_dim = 0;    // equals monoid_rank
};

struct FreenessReport {
  bool free = true;
  std::size_t hb_size = 0;
  std::size_t monoid_rank = 0;
  /// Present iff not free: the lexicographically least basis element left
  /// out of the greedy maximal independent subset.
  std::optional<Relation> witness;
};

struct CompletionOptions {
  /// Upper bound on the number of partial vectors the completion may keep.
  std::uint64_t node_budget = 10'000'000;
};

/// Statistics of the last completion run on this thread, for diagnostics.
struct CompletionStats {
  std::uint64_t candidates = 0;
  std::uint64_t stored = 0;
};
CompletionStats last_completion_stats();

bool is_invariant(const WeightSystem& ws, const Relation& a);

/// Hilbert basis by incremental completion over linear forms.
///
/// The weight matrix is first rewritten in forms spanning the same row
/// space that vanish on as many weights as possible (the monoid depends
/// only on that row space). Forms are added one at a time. For each L the
/// current basis is closed under sums p + q with L(p) > 0 > L(q), keeping
/// only sums that no stored element g reduces (g <= s componentwise and
/// L(g) lies between 0 and L(s)). Sums are formed in increasing degree, so
/// the stored set is exactly the set of minimal elements for that order and
/// its L = 0 part is the Hilbert basis of the smaller monoid.
///
/// Throws ComputationLimit once more than options.node_budget partial
/// vectors have been kept.
HilbertBasis hilbert_basis(const WeightSystem& ws, const CompletionOptions& options = {});

/// Exhaustive enumeration of invariant vectors of degree <= max_degree,
/// filtered to those with no nonzero invariant vector strictly below them.
std::vector<Relation> brute_force_irreducibles(const WeightSystem& ws, int max_degree);

/// Decided by enumerating every b <= a componentwise.
/// Throws NotInvariant or ZeroRelation when the precondition fails.
bool is_irreducible(const WeightSystem& ws, const Relation& a);

FreenessReport freeness(const WeightSystem& ws, const CompletionOptions& options = {});
FreenessReport freeness(const HilbertBasis& hb);

}  // namespace dcoset

#endif  // DCOSET_MONOID_HPP
