#include "dcoset/lattice.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt abs_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

std::int64_t combine(std::int64_t x, std::int64_t piv, std::int64_t y, std::int64_t lead) {
  return checked_sub(checked_mul(x, piv), checked_mul(y, lead));
}
BigInt combine(const BigInt& x, const BigInt& piv, const BigInt& y, const BigInt& lead) {
  return x * piv - y * lead;
}

template <typename T>
struct Echelon {
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;

  // Reduces `r` against the stored rows and appends it if nonzero.
  bool insert(std::vector<T> r) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const std::size_t p = pivots[k];
      if (r[p] == 0) continue;
      const T lead = r[p];
      const T piv = rows[k][p];
      T g = 0;
      for (std::size_t c = 0; c < r.size(); ++c) {
        r[c] = combine(r[c], piv, rows[k][c], lead);
        g = abs_gcd(g, r[c]);
      }
      if (g > 1) {
        for (auto& v : r) v /= g;
      }
    }
    auto it = std::find_if(r.begin(), r.end(), [](const T& v) { return v != 0; });
    if (it == r.end()) return false;
    pivots.push_back(static_cast<std::size_t>(it - r.begin()));
    rows.push_back(std::move(r));
    return true;
  }
};

}  // namespace

WeightSystem::WeightSystem(std::size_t rank, std::vector<Weight> weights,
                           std::vector<std::string> labels)
    : rank_(rank), weights_(std::move(weights)), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].size() != rank_) {
      throw LengthMismatch("weight " + std::to_string(i) + " has length " +
                           std::to_string(weights_[i].size()) + ", expected " +
                           std::to_string(rank_));
    }
  }
  if (!labels_.empty() && labels_.size() != weights_.size()) {
    throw LengthMismatch("labels: expected " + std::to_string(weights_.size()) + ", got " +
                         std::to_string(labels_.size()));
  }
}

WeightSystem WeightSystem::scaled(std::int64_t factor) const {
  std::vector<Weight> out = weights_;
  for (auto& w : out)
    for (auto& c : w) c *= factor;
  return WeightSystem(rank_, std::move(out), labels_);
}

WeightSystem WeightSystem::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != weights_.size()) throw LengthMismatch("permutation length mismatch");
  std::vector<Weight> out;
  std::vector<std::string> labels;
  out.reserve(perm.size());
  for (std::size_t i : perm) {
    out.push_back(weights_.at(i));
    if (!labels_.empty()) labels.push_back(labels_[i]);
  }
  return WeightSystem(rank_, std::move(out), std::move(labels));
}

WeightSystem from_e_basis(std::size_t ambient_rank,
                          const std::vector<std::vector<std::int64_t>>& combos,
                          std::vector<std::string> labels) {
  if (ambient_rank == 0) throw InvalidParameters("from_e_basis: ambient rank must be >= 1");
  const std::size_t rank = ambient_rank - 1;
  std::vector<Weight> weights;
  weights.reserve(combos.size());
  for (std::size_t i = 0; i < combos.size(); ++i) {
    const auto& c = combos[i];
    if (c.size() != ambient_rank) {
      throw LengthMismatch("combination " + std::to_string(i) + " has length " +
                           std::to_string(c.size()) + ", expected " +
                           std::to_string(ambient_rank));
    }
    Weight w(rank);
    for (std::size_t k = 0; k < rank; ++k) w[k] = c[k] - c[rank];
    weights.push_back(std::move(w));
  }
  return WeightSystem(rank, std::move(weights), std::move(labels));
}

WeightSystem clear_denominators(std::size_t rank,
                                const std::vector<std::vector<Rational>>& weights,
                                std::vector<std::string> labels) {
  std::int64_t lcm = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].size() != rank) {
      throw LengthMismatch("weight " + std::to_string(i) + " has length " +
                           std::to_string(weights[i].size()) + ", expected " +
                           std::to_string(rank));
    }
    for (const auto& q : weights[i]) lcm = std::lcm(lcm, q.denominator());
  }
  std::vector<Weight> out;
  out.reserve(weights.size());
  for (const auto& w : weights) {
    Weight iw(rank);
    for (std::size_t k = 0; k < rank; ++k) {
      iw[k] = w[k].numerator() * (lcm / w[k].denominator());
    }
    out.push_back(std::move(iw));
  }
  return WeightSystem(rank, std::move(out), std::move(labels));
}

std::size_t integer_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  RankTracker tracker(rows.front().size());
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw LengthMismatch("integer_rank: ragged matrix");
    tracker.add(std::span<const std::int64_t>(r));
  }
  return tracker.rank();
}

std::size_t weight_rank(const WeightSystem& ws) { return integer_rank(ws.weights()); }

bool closed_under_negation(const WeightSystem& ws) {
  std::vector<Weight> sorted = ws.weights();
  std::vector<Weight> negated = ws.weights();
  for (auto& w : negated)
    for (auto& c : w) c = -c;
  std::sort(sorted.begin(), sorted.end());
  std::sort(negated.begin(), negated.end());
  return sorted == negated;
}

struct RankTracker::Impl {
  std::size_t columns;
  bool big = false;
  Echelon<std::int64_t> small;
  Echelon<BigInt> large;

  void promote() {
    for (const auto& r : small.rows) large.rows.emplace_back(r.begin(), r.end());
    large.pivots = small.pivots;
    small = {};
    big = true;
  }
};

RankTracker::RankTracker(std::size_t columns) : impl_(std::make_unique<Impl>()) {
  impl_->columns = columns;
}
RankTracker::~RankTracker() = default;
RankTracker::RankTracker(RankTracker&&) noexcept = default;
RankTracker& RankTracker::operator=(RankTracker&&) noexcept = default;

bool RankTracker::add(std::span<const std::int64_t> row) {
  if (row.size() != impl_->columns) throw LengthMismatch("RankTracker: row length mismatch");
  if (!impl_->big) {
    try {
      return impl_->small.insert(std::vector<std::int64_t>(row.begin(), row.end()));
    } catch (const Overflow&) {
      impl_->promote();
    }
  }
  return impl_->large.insert(std::vector<BigInt>(row.begin(), row.end()));
}

bool RankTracker::add(std::span<const std::int32_t> row) {
  std::vector<std::int64_t> wide(row.begin(), row.end());
  return add(std::span<const std::int64_t>(wide));
}

std::size_t RankTracker::rank() const {
  return impl_->big ? impl_->large.rows.size() : impl_->small.rows.size();
}

}  // namespace dcoset
