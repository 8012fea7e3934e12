#ifndef DCOSET_LATTICE_HPP
#define DCOSET_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace dcoset {

/// Coordinates of a character in a fixed basis of the character lattice.
using Weight = std::vector<std::int64_t>;
using Rational = boost::rational<std::int64_t>;

/// An ordered multiset of torus weights over a free lattice of rank r.
///
/// Repeated weights are separate coordinates of the representation; the
/// position of a weight is the index of its exponent in every relation.
class WeightSystem {
 public:
  WeightSystem() = default;
  WeightSystem(std::size_t rank, std::vector<Weight> weights,
               std::vector<std::string> labels = {});

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// Every weight multiplied by `factor`; labels are kept.
  WeightSystem scaled(std::int64_t factor) const;
  /// Weight i of the result is weight perm[i] of this system.
  WeightSystem permuted(std::span<const std::size_t> perm) const;

  bool operator==(const WeightSystem& other) const {
    return rank_ == other.rank_ && weights_ == other.weights_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
};

/// Weights given over Z^k / (e_1 + ... + e_k = 0), rewritten in the free
/// basis e_1..e_{k-1} by substituting e_k = -(e_1 + ... + e_{k-1}).
WeightSystem from_e_basis(std::size_t ambient_rank,
                          const std::vector<std::vector<std::int64_t>>& combos,
                          std::vector<std::string> labels = {});

/// Scales rational weights by the least common denominator.
WeightSystem clear_denominators(std::size_t rank,
                                const std::vector<std::vector<Rational>>& weights,
                                std::vector<std::string> labels = {});

/// Rank over Q of the n x r weight matrix.
std::size_t weight_rank(const WeightSystem& ws);

/// True iff the weight multiset equals the multiset of negated weights.
bool closed_under_negation(const WeightSystem& ws);

/// Rank over Q of an integer matrix given by rows of equal length.
std::size_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows);

/// Incrementally maintained row echelon form over Q.
///
/// Rows are kept primitive in 64-bit arithmetic; if an intermediate value
/// would overflow, the tracker switches to arbitrary precision.
class RankTracker {
 public:
  explicit RankTracker(std::size_t columns);
  ~RankTracker();
  RankTracker(RankTracker&&) noexcept;
  RankTracker& operator=(RankTracker&&) noexcept;

  /// Adds a row; returns true iff it is independent of the rows so far.
  bool add(std::span<const std::int64_t> row);
  bool add(std::span<const std::int32_t> row);
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace dcoset

#endif  // DCOSET_LATTICE_HPP
