#include "dcoset/monoid.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>

#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

thread_local CompletionStats g_stats;

void check_length(const WeightSystem& ws, const Relation& a) {
  if (a.size() != ws.size()) {
    throw LengthMismatch("relation has length " + std::to_string(a.size()) + ", expected " +
                         std::to_string(ws.size()));
  }
}

// Working set of partial vectors: exponents, their weight sums and a folded
// support mask, stored contiguously.
class Pool {
 public:
  Pool(std::size_t n, std::size_t r) : n_(n), r_(r) {}

  std::size_t size() const { return degree_.size(); }
  const std::int32_t* exps(std::size_t i) const { return exps_.data() + i * n_; }
  const std::int64_t* sums(std::size_t i) const { return sums_.data() + i * r_; }
  std::uint64_t mask(std::size_t i) const { return mask_[i]; }
  // Folded mask of the coordinates with exponent at least 2.
  std::uint64_t big(std::size_t i) const { return big_[i]; }
  std::int64_t degree(std::size_t i) const { return degree_[i]; }

  std::size_t push_unit(std::size_t coord, const Weight& w) {
    const std::size_t id = size();
    exps_.resize(exps_.size() + n_, 0);
    exps_[id * n_ + coord] = 1;
    sums_.insert(sums_.end(), w.begin(), w.end());
    mask_.push_back(std::uint64_t{1} << (coord % 64));
    big_.push_back(0);
    degree_.push_back(1);
    return id;
  }

  std::size_t push_copy(const Pool& from, std::size_t i) {
    const std::size_t id = size();
    exps_.insert(exps_.end(), from.exps(i), from.exps(i) + n_);
    sums_.insert(sums_.end(), from.sums(i), from.sums(i) + r_);
    mask_.push_back(from.mask(i));
    big_.push_back(from.big(i));
    degree_.push_back(from.degree(i));
    return id;
  }

  // Writes a + b into the scratch slot (one past the end).
  void stage_sum(std::size_t a, std::size_t b) {
    scratch_exps_.resize(n_);
    scratch_sums_.resize(r_);
    const std::int32_t* ea = exps(a);
    const std::int32_t* eb = exps(b);
    std::uint64_t big = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      scratch_exps_[k] = ea[k] + eb[k];
      if (scratch_exps_[k] > 1) big |= std::uint64_t{1} << (k % 64);
    }
    scratch_big_ = big;
    const std::int64_t* sa = sums(a);
    const std::int64_t* sb = sums(b);
    for (std::size_t k = 0; k < r_; ++k) scratch_sums_[k] = sa[k] + sb[k];
    scratch_mask_ = mask_[a] | mask_[b];
    scratch_degree_ = degree_[a] + degree_[b];
  }
  const std::int32_t* scratch_exps() const { return scratch_exps_.data(); }
  const std::int64_t* scratch_sums() const { return scratch_sums_.data(); }
  std::uint64_t scratch_mask() const { return scratch_mask_; }
  std::uint64_t scratch_big() const { return scratch_big_; }
  std::int64_t scratch_degree() const { return scratch_degree_; }

  std::size_t commit_scratch() {
    const std::size_t id = size();
    exps_.insert(exps_.end(), scratch_exps_.begin(), scratch_exps_.end());
    sums_.insert(sums_.end(), scratch_sums_.begin(), scratch_sums_.end());
    mask_.push_back(scratch_mask_);
    big_.push_back(scratch_big_);
    degree_.push_back(scratch_degree_);
    return id;
  }

  // True iff exps(i) <= v componentwise.
  bool below(std::size_t i, const std::int32_t* v) const {
    const std::int32_t* e = exps(i);
    for (std::size_t k = 0; k < n_; ++k) {
      if (e[k] > v[k]) return false;
    }
    return true;
  }

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<std::int32_t> exps_;
  std::vector<std::int64_t> sums_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> big_;
  std::vector<std::int64_t> degree_;
  std::vector<std::int32_t> scratch_exps_;
  std::vector<std::int64_t> scratch_sums_;
  std::uint64_t scratch_mask_ = 0;
  std::uint64_t scratch_big_ = 0;
  std::int64_t scratch_degree_ = 0;
};

// Ids with their masks stored side by side for fast filtering.
struct ReducerList {
  std::vector<std::size_t> ids;
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> bigs;

  void add(const Pool& pool, std::size_t id) {
    ids.push_back(id);
    masks.push_back(pool.mask(id));
    bigs.push_back(pool.big(id));
  }
};

// Reducer lists bucketed by the support restricted to a few key
// coordinates; a query visits only buckets whose key is a subset of the
// query's key.
class SubsetIndex {
 public:
  explicit SubsetIndex(std::size_t n) {
    const std::size_t width = std::min<std::size_t>(n, 64);
    const std::size_t keys = std::min<std::size_t>(width, 10);
    for (std::size_t j = 0; j < keys; ++j) bits_.push_back(static_cast<unsigned>(j * width / keys));
    buckets_.resize(std::size_t{1} << keys);
  }

  void add(const Pool& pool, std::size_t id) {
    buckets_[key(pool.mask(id))].add(pool, id);
    ids_.push_back(id);
  }

  const std::vector<std::size_t>& ids() const { return ids_; }

  template <class Scan>
  bool any(std::uint64_t mask, Scan&& scan) const {
    const std::uint32_t top = key(mask);
    for (std::uint32_t sub = top;; sub = (sub - 1) & top) {
      if (!buckets_[sub].ids.empty() && scan(buckets_[sub])) return true;
      if (sub == 0) return false;
    }
  }

 private:
  std::uint32_t key(std::uint64_t mask) const {
    std::uint32_t k = 0;
    for (std::size_t j = 0; j < bits_.size(); ++j) k |= static_cast<std::uint32_t>((mask >> bits_[j]) & 1U) << j;
    return k;
  }

  std::vector<unsigned> bits_;
  std::vector<ReducerList> buckets_;
  std::vector<std::size_t> ids_;
};

struct SpanHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// Closes `pool` under the linear form given by weight coordinate `coord`
// and returns a pool holding only the elements on which the form vanishes.
// conflicts[i] masks the coordinates j != i with weight j = -weight i; a
// vector using both i and j dominates the relation e_i + e_j.
Pool complete_coordinate(const Pool& in, std::size_t coord, std::uint64_t budget,
                         const std::vector<std::uint64_t>& conflicts) {
  Pool pool(in.n(), in.r());
  for (std::size_t i = 0; i < in.size(); ++i) pool.push_copy(in, i);

  auto form = [&](std::size_t i) { return pool.sums(i)[coord]; };

  SubsetIndex zero(pool.n()), pos(pool.n()), neg(pool.n());
  std::vector<std::vector<std::size_t>> pos_by_deg, neg_by_deg;
  auto file = [&](std::size_t id) {
    const std::int64_t v = form(id);
    const auto d = static_cast<std::size_t>(pool.degree(id));
    if (v == 0) {
      zero.add(pool, id);
    } else {
      auto& buckets = v > 0 ? pos_by_deg : neg_by_deg;
      (v > 0 ? pos : neg).add(pool, id);
      if (buckets.size() <= d) buckets.resize(d + 1);
      buckets[d].push_back(id);
    }
  };
  for (std::size_t i = 0; i < pool.size(); ++i) file(i);

  const bool exact_masks = pool.n() <= 64;
  auto conflict_mask = [&](std::size_t id) {
    std::uint64_t out = 0;
    const std::int32_t* e = pool.exps(id);
    for (std::size_t k = 0; k < pool.n(); ++k) {
      if (e[k] != 0) out |= conflicts[k];
    }
    return out;
  };
  std::vector<std::uint64_t> cmask(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) cmask[i] = conflict_mask(i);

  auto reduces = [&](std::size_t g, std::int64_t v, const std::int32_t* e, std::uint64_t m,
                     std::uint64_t b) {
    if (((pool.mask(g) & ~m) | (pool.big(g) & ~b)) != 0) return false;
    const std::int64_t w = pool.sums(g)[coord];
    if (v > 0 ? (w < 0 || w > v) : (w > 0 || w < v)) return false;
    return pool.below(g, e);
  };
  // Recently successful reducers, most recent first.
  constexpr std::size_t kRecent = 8;
  std::array<std::size_t, kRecent> recent{};
  std::size_t recent_count = 0;
  auto remember = [&](std::size_t g) {
    std::size_t at = std::find(recent.begin(), recent.begin() + recent_count, g) - recent.begin();
    if (at == recent_count) {
      if (recent_count < kRecent) ++recent_count;
      at = recent_count - 1;
    }
    for (; at > 0; --at) recent[at] = recent[at - 1];
    recent[0] = g;
  };
  auto reduced_by_recent = [&](std::int64_t v, const std::int32_t* e, std::uint64_t m,
                               std::uint64_t b) {
    for (std::size_t i = 0; i < recent_count; ++i) {
      if (reduces(recent[i], v, e, m, b)) {
        remember(recent[i]);
        return true;
      }
    }
    return false;
  };
  auto scan_list = [&](const ReducerList& list, std::int64_t v, const std::int32_t* e,
                       std::uint64_t m, std::uint64_t b) {
    const std::size_t size = list.ids.size();
    const std::uint64_t* masks = list.masks.data();
    const std::uint64_t* bigs = list.bigs.data();
    auto full_check = [&](std::size_t i) {
      const std::size_t g = list.ids[i];
      if (!reduces(g, v, e, m, b)) return false;
      remember(g);
      return true;
    };
    std::size_t i = 0;
    // Blocks of eight with a branch-free mask test.
    for (; i + 8 <= size; i += 8) {
      std::uint32_t hits = 0;
      for (std::uint32_t j = 0; j < 8; ++j) {
        hits |= static_cast<std::uint32_t>(((masks[i + j] & ~m) | (bigs[i + j] & ~b)) == 0) << j;
      }
      while (hits != 0) {
        const auto j = static_cast<std::size_t>(__builtin_ctz(hits));
        hits &= hits - 1;
        if (full_check(i + j)) return true;
      }
    }
    for (; i < size; ++i) {
      if (((masks[i] & ~m) | (bigs[i] & ~b)) == 0 && full_check(i)) return true;
    }
    return false;
  };

  auto reduced_by = [&](const SubsetIndex& index, std::int64_t v, const std::int32_t* e,
                        std::uint64_t m, std::uint64_t b) {
    return index.any(m, [&](const ReducerList& list) { return scan_list(list, v, e, m, b); });
  };

  auto max_deg = [](const std::vector<std::vector<std::size_t>>& b) -> std::size_t {
    for (std::size_t d = b.size(); d-- > 0;) {
      if (!b[d].empty()) return d;
    }
    return 0;
  };

  std::unordered_set<std::vector<std::int32_t>, SpanHash> level_seen;
  std::vector<std::int32_t> key;
  for (std::size_t d = 2;; ++d) {
    const std::size_t top_pos = max_deg(pos_by_deg);
    const std::size_t top_neg = max_deg(neg_by_deg);
    if (top_pos == 0 || top_neg == 0 || d > top_pos + top_neg) break;

    std::vector<std::size_t> fresh;
    level_seen.clear();
    for (std::size_t dp = 1; dp < d; ++dp) {
      const std::size_t dq = d - dp;
      if (dp >= pos_by_deg.size() || dq >= neg_by_deg.size()) continue;
      const auto& ps = pos_by_deg[dp];
      const auto& qs = neg_by_deg[dq];
      for (std::size_t p : ps) {
        for (std::size_t q : qs) {
          if (d > 2 && exact_masks && (cmask[p] & pool.mask(q)) != 0) continue;
          pool.stage_sum(p, q);
          ++g_stats.candidates;
          const std::int64_t v = pool.scratch_sums()[coord];
          const std::int32_t* e = pool.scratch_exps();
          const std::uint64_t m = pool.scratch_mask();
          const std::uint64_t b = pool.scratch_big();
          if (reduced_by_recent(v, e, m, b) || reduced_by(zero, v, e, m, b) ||
              (v > 0 && reduced_by(pos, v, e, m, b)) || (v < 0 && reduced_by(neg, v, e, m, b))) {
            continue;
          }
          key.assign(e, e + pool.n());
          if (!level_seen.insert(key).second) continue;
          fresh.push_back(pool.commit_scratch());
          cmask.push_back(conflict_mask(fresh.back()));
          if (++g_stats.stored > budget) {
            throw ComputationLimit("Hilbert basis completion exceeded the node budget of " +
                                   std::to_string(budget) + " partial vectors");
          }
        }
      }
    }
    for (std::size_t id : fresh) file(id);
  }

  Pool out(pool.n(), pool.r());
  for (std::size_t id : zero.ids()) out.push_copy(pool, id);
  return out;
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Determinant by fraction-free elimination; nullopt if it leaves int64.
std::optional<std::int64_t> determinant(std::vector<std::vector<__int128>> m) {
  const std::size_t k = m.size();
  __int128 prev = 1;
  int sign = 1;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && m[piv][c] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      for (std::size_t j = c + 1; j < k; ++j) {
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
        if (m[i][j] > kLimit || m[i][j] < -kLimit) return std::nullopt;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  const __int128 det = sign * (k == 0 ? 1 : m[k - 1][k - 1]);
  if (det > INT64_MAX || det < INT64_MIN) return std::nullopt;
  return static_cast<std::int64_t>(det);
}

// Linear forms spanning the same row space as the weight matrix, preferring
// forms that vanish on many weights (normals of hyperplanes spanned by
// weights). Returns the weights rewritten in these forms.
std::vector<Weight> sparse_forms(const WeightSystem& ws) {
  const std::size_t n = ws.size();
  const std::size_t r = ws.rank();

  std::vector<std::size_t> cols;
  RankTracker col_rank(n);
  std::vector<std::int64_t> column(n);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < n; ++i) column[i] = ws[i][k];
    if (col_rank.add(std::span<const std::int64_t>(column))) cols.push_back(k);
  }
  const std::size_t rho = cols.size();
  if (rho == 0) return std::vector<Weight>(n);

  std::vector<Weight> proj(n, Weight(rho));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rho; ++j) proj[i][j] = ws[i][cols[j]];

  // Distinct primitive directions up to sign.
  std::set<Weight> line_set;
  for (const auto& w : proj) {
    std::int64_t g = 0;
    for (auto x : w) g = gcd_abs(g, x);
    if (g == 0) continue;
    Weight d = w;
    for (auto& x : d) x /= g;
    const auto lead = std::find_if(d.begin(), d.end(), [](auto x) { return x != 0; });
    if (*lead < 0) {
      for (auto& x : d) x = -x;
    }
    line_set.insert(d);
  }
  const std::vector<Weight> lines(line_set.begin(), line_set.end());

  constexpr std::size_t kMaxSubsets = 50000;
  constexpr std::size_t kMaxSearchRank = 12;
  std::size_t visited = 0;
  std::set<std::vector<std::int64_t>> forms;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> walk = [&](std::size_t start) {
    if (visited >= kMaxSubsets) return;
    if (chosen.size() + 1 == rho) {
      ++visited;
      Weight y(rho);
      for (std::size_t j = 0; j < rho; ++j) {
        std::vector<std::vector<__int128>> minor;
        for (std::size_t c : chosen) {
          std::vector<__int128> row;
          for (std::size_t t = 0; t < rho; ++t) {
            if (t != j) row.push_back(lines[c][t]);
          }
          minor.push_back(std::move(row));
        }
        const auto det = determinant(std::move(minor));
        if (!det) return;
        y[j] = (j % 2 == 0) ? *det : -*det;
      }
      std::vector<std::int64_t> v(n, 0);
      std::int64_t g = 0;
      for (std::size_t i = 0; i < n; ++i) {
        __int128 dot = 0;
        for (std::size_t t = 0; t < rho; ++t) dot += static_cast<__int128>(y[t]) * proj[i][t];
        if (dot > INT32_MAX || dot < INT32_MIN) return;
        v[i] = static_cast<std::int64_t>(dot);
        g = gcd_abs(g, v[i]);
      }
      if (g == 0) return;
      for (auto& x : v) x /= g;
      const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
      if (*lead < 0) {
        for (auto& x : v) x = -x;
      }
      forms.insert(std::move(v));
      return;
    }
    for (std::size_t l = start; l < lines.size(); ++l) {
      chosen.push_back(l);
      walk(l + 1);
      chosen.pop_back();
    }
  };
  if (rho <= kMaxSearchRank) walk(0);

  std::vector<std::vector<std::int64_t>> ranked(forms.begin(), forms.end());
  auto cost = [](const std::vector<std::int64_t>& v) {
    std::int64_t nnz = 0, l1 = 0;
    for (auto x : v) {
      nnz += x != 0;
      l1 += x < 0 ? -x : x;
    }
    return std::pair{l1, nnz};
  };
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](const auto& a, const auto& b) { return cost(a) < cost(b); });
  for (std::size_t k : cols) {
    for (std::size_t i = 0; i < n; ++i) column[i] = ws[i][k];
    ranked.push_back(column);
  }

  std::vector<std::vector<std::int64_t>> picked;
  RankTracker basis(n);
  for (const auto& v : ranked) {
    if (picked.size() == rho) break;
    if (basis.add(std::span<const std::int64_t>(v))) picked.push_back(v);
  }

  std::vector<Weight> out(n, Weight(rho));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rho; ++j) out[i][j] = picked[j][i];
  return out;
}

}  // namespace

std::int64_t Relation::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::int64_t{0});
}

bool Relation::is_zero() const {
  return std::all_of(exponents.begin(), exponents.end(), [](auto x) { return x == 0; });
}

CompletionStats last_completion_stats() { return g_stats; }

bool is_invariant(const WeightSystem& ws, const Relation& a) {
  check_length(ws, a);
  for (std::size_t k = 0; k < ws.rank(); ++k) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) total += a.exponents[i] * ws[i][k];
    if (total != 0) return false;
  }
  return true;
}

HilbertBasis hilbert_basis(const WeightSystem& ws, const CompletionOptions& options) {
  g_stats = {};
  const std::size_t n = ws.size();
  const std::vector<Weight> forms = sparse_forms(ws);
  const std::size_t r = n == 0 ? 0 : forms.front().size();

  Pool pool(n, r);
  for (std::size_t i = 0; i < n; ++i) pool.push_unit(i, forms[i]);

  std::vector<std::uint64_t> conflicts(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool opposite = true;
      for (std::size_t k = 0; k < ws.rank() && opposite; ++k) opposite = ws[i][k] == -ws[j][k];
      if (opposite) conflicts[i] |= std::uint64_t{1} << (j % 64);
    }

  std::vector<bool> done(r, false);
  for (std::size_t step = 0; step < r; ++step) {
    // Next coordinate: the one with the fewest opposite-sign pairs.
    std::size_t best = r;
    std::uint64_t best_cost = 0;
    for (std::size_t k = 0; k < r; ++k) {
      if (done[k]) continue;
      std::uint64_t np = 0, nn = 0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        const std::int64_t v = pool.sums(i)[k];
        np += v > 0;
        nn += v < 0;
      }
      const std::uint64_t cost = np * nn;
      if (best == r || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    done[best] = true;
    pool = complete_coordinate(pool, best, options.node_budget, conflicts);
  }

  HilbertBasis hb;
  hb.context = ws;
  hb.elements.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    hb.elements.push_back(Relation{{pool.exps(i), pool.exps(i) + n}});
  }
  std::sort(hb.elements.begin(), hb.elements.end());
  RankTracker tracker(n);
  for (const auto& e : hb.elements) tracker.add(std::span<const std::int32_t>(e.exponents));
  hb.monoid_rank = tracker.rank();
  hb.quotient_dim = hb.monoid_rank;
  return hb;
}

std::vector<Relation> brute_force_irreducibles(const WeightSystem& ws, int max_degree) {
  if (max_degree < 0) throw InvalidParameters("max_degree must be >= 0");
  const std::size_t n = ws.size();
  const std::size_t r = ws.rank();
  std::vector<std::vector<Relation>> by_degree(static_cast<std::size_t>(max_degree) + 1);

  std::vector<std::int32_t> a(n, 0);
  std::vector<std::int64_t> total(r, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (i == n) {
      const int deg = max_degree - left;
      if (deg > 0 && std::all_of(total.begin(), total.end(), [](auto v) { return v == 0; })) {
        by_degree[static_cast<std::size_t>(deg)].push_back(Relation{a});
      }
      return;
    }
    for (int x = 0; x <= left; ++x) {
      a[i] = x;
      walk(i + 1, left - x);
      for (std::size_t k = 0; k < r; ++k) total[k] += ws[i][k];
    }
    for (std::size_t k = 0; k < r; ++k) total[k] -= (left + 1) * ws[i][k];
    a[i] = 0;
  };
  walk(0, max_degree);

  std::vector<Relation> irreducible;
  for (const auto& level : by_degree) {
    const std::size_t lower = irreducible.size();
    for (const auto& cand : level) {
      bool reducible = false;
      for (std::size_t j = 0; j < lower && !reducible; ++j) {
        const auto& b = irreducible[j].exponents;
        reducible = std::equal(b.begin(), b.end(), cand.exponents.begin(),
                               [](auto x, auto y) { return x <= y; });
      }
      if (!reducible) irreducible.push_back(cand);
    }
  }
  std::sort(irreducible.begin(), irreducible.end());
  return irreducible;
}

bool is_irreducible(const WeightSystem& ws, const Relation& a) {
  check_length(ws, a);
  if (a.is_zero()) throw ZeroRelation("the zero vector is not a candidate generator");
  if (!is_invariant(ws, a)) throw NotInvariant("exponent vector is not a relation among the weights");

  // Odometer over 0 <= b <= a, skipping b = 0 and b = a.
  Relation b{std::vector<std::int32_t>(a.size(), 0)};
  const std::size_t n = a.size();
  while (true) {
    std::size_t k = 0;
    while (k < n && b.exponents[k] == a.exponents[k]) {
      b.exponents[k] = 0;
      ++k;
    }
    if (k == n) return true;
    ++b.exponents[k];
    if (b != a && is_invariant(ws, b)) return false;
  }
}

FreenessReport freeness(const HilbertBasis& hb) {
  FreenessReport report;
  report.hb_size = hb.elements.size();
  report.monoid_rank = hb.monoid_rank;
  report.free = report.hb_size == report.monoid_rank;
  if (!report.free) {
    RankTracker tracker(hb.context.size());
    for (const auto& e : hb.elements) {
      if (!tracker.add(std::span<const std::int32_t>(e.exponents))) {
        report.witness = e;
        break;
      }
    }
  }
  return report;
}

FreenessReport freeness(const WeightSystem& ws, const CompletionOptions& options) {
  return freeness(hilbert_basis(ws, options));
}

}  // namespace dcoset
