#include "dcoset/pairs.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <utility>

#include "combo_format.hpp"
#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
  AmbientType type;
};

constexpr std::array<FamilyInfo, 23> kFamilyTable{{
    {Family::sgl_gl_in_sl, "sgl_gl_in_sl", 2, AmbientType::SL},
    {Family::sl_sl_in_sl, "sl_sl_in_sl", 2, AmbientType::SL},
    {Family::sp_in_sl_even, "sp_in_sl_even", 1, AmbientType::SL},
    {Family::kx_sp_in_sl, "kx_sp_in_sl", 1, AmbientType::SL},
    {Family::so_in_sl_even, "so_in_sl_even", 1, AmbientType::SL},
    {Family::so_in_sl_odd, "so_in_sl_odd", 1, AmbientType::SL},
    {Family::sp_in_sl_odd, "sp_in_sl_odd", 1, AmbientType::SL},
    {Family::sp_sp_in_sp, "sp_sp_in_sp", 2, AmbientType::Sp},
    {Family::sp_kx_in_sp, "sp_kx_in_sp", 1, AmbientType::Sp},
    {Family::gl_in_sp, "gl_in_sp", 1, AmbientType::Sp},
    {Family::gl_in_so_even, "gl_in_so_even", 1, AmbientType::SO},
    {Family::sl_in_so_even, "sl_in_so_even", 1, AmbientType::SO},
    {Family::gl_in_so_odd, "gl_in_so_odd", 1, AmbientType::SO},
    {Family::so_so_in_so, "so_so_in_so", 2, AmbientType::SO},
    {Family::so_odd_in_even, "so_odd_in_even", 1, AmbientType::SO},
    {Family::so_even_in_odd, "so_even_in_odd", 1, AmbientType::SO},
    {Family::spin7_in_so8, "spin7_in_so8", 0, AmbientType::SO},
    {Family::spin7_in_so9, "spin7_in_so9", 0, AmbientType::SO},
    {Family::spin7_so2_in_so10, "spin7_so2_in_so10", 0, AmbientType::SO},
    {Family::g2_in_so7, "g2_in_so7", 0, AmbientType::SO},
    {Family::g2_in_so8, "g2_in_so8", 0, AmbientType::SO},
    {Family::b4_in_f4, "b4_in_f4", 0, AmbientType::Exceptional},
    {Family::a2_in_g2, "a2_in_g2", 0, AmbientType::Exceptional},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilyTable) {
    if (fi.family == f) return fi;
  }
  throw std::logic_error("unknown family");
}

// Empty string when the parameters are valid, otherwise the reason.
std::string validity_error(Family f, const std::vector<int>& p) {
  const auto& fi = info(f);
  if (p.size() != fi.arity) {
    return std::string(fi.name) + " takes " + std::to_string(fi.arity) + " parameter(s), got " +
           std::to_string(p.size());
  }
  switch (f) {
    case Family::sgl_gl_in_sl:
      return p[0] >= p[1] && p[1] >= 1 ? "" : "requires n >= m >= 1";
    case Family::sl_sl_in_sl:
      return p[0] > p[1] && p[1] >= 1 ? "" : "requires n > m >= 1";
    case Family::sp_sp_in_sp:
      return p[0] >= 1 && p[0] <= p[1] ? "" : "requires 1 <= n <= m";
    case Family::so_so_in_so:
      return p[0] >= 2 && p[0] <= p[1] ? "" : "requires 2 <= n <= m";
    case Family::sl_in_so_even:
      // n = 2 degenerates: the slice weights vanish on the SL_2 torus.
      return p[0] >= 3 ? "" : "requires n >= 3";
    case Family::so_odd_in_even:
      return p[0] >= 2 ? "" : "requires n >= 2";
    default:
      if (fi.arity == 1 && p[0] < 1) return "requires a parameter >= 1";
      return "";
  }
}

int sl_dim(int k) { return k * k - 1; }
int so_dim(int k) { return k * (k - 1) / 2; }
int sp_dim(int k) { return k * (2 * k + 1); }  // Sp_{2k}

// Weight lists assembled from integer combinations of named basis characters.
class Combos {
 public:
  explicit Combos(std::vector<std::string> basis) : basis_(std::move(basis)) {}

  std::size_t dim() const { return basis_.size(); }
  std::vector<std::int64_t> zero() const { return std::vector<std::int64_t>(dim(), 0); }
  std::vector<std::int64_t> unit(std::size_t i, std::int64_t c = 1) const {
    auto v = zero();
    v[i] = c;
    return v;
  }

  void add(std::vector<std::int64_t> c) { combos_.push_back(std::move(c)); }
  void add_pm(const std::vector<std::int64_t>& c) {
    add(c);
    auto neg = c;
    for (auto& x : neg) x = -x;
    add(std::move(neg));
  }
  void append(const Combos& other) {
    combos_.insert(combos_.end(), other.combos_.begin(), other.combos_.end());
  }

  const std::vector<std::vector<std::int64_t>>& combos() const { return combos_; }

  std::vector<std::string> labels(std::string_view suffix = "") const {
    std::vector<std::string> out;
    for (const auto& c : combos_) out.push_back(format(c) + std::string(suffix));
    return out;
  }

  std::string format(const std::vector<std::int64_t>& c) const {
    return detail::format_combo(c, basis_);
  }

  WeightSystem free_system() const { return WeightSystem(dim(), combos_, labels()); }

 private:
  std::vector<std::string> basis_;
  std::vector<std::vector<std::int64_t>> combos_;
};

std::vector<std::string> names(std::string_view stem, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(std::string(stem) + std::to_string(first + i));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Reduces each block of coordinates modulo the sum of its basis vectors.
WeightSystem reduce_blocks(const Combos& c, const std::vector<std::size_t>& blocks) {
  std::vector<Weight> out(c.combos().size());
  std::size_t offset = 0;
  std::size_t rank = 0;
  for (std::size_t size : blocks) {
    std::vector<std::vector<std::int64_t>> part;
    for (const auto& combo : c.combos()) {
      part.emplace_back(combo.begin() + static_cast<std::ptrdiff_t>(offset),
                        combo.begin() + static_cast<std::ptrdiff_t>(offset + size));
    }
    const WeightSystem reduced = from_e_basis(size, part);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].insert(out[i].end(), reduced[i].begin(), reduced[i].end());
    }
    offset += size;
    rank += reduced.rank();
  }
  return WeightSystem(rank, std::move(out), c.labels());
}

// e_i + e_j for i < j over `n` basis characters.
void add_pairs_sum(Combos& c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = c.unit(i);
      v[j] += 1;
      c.add_pm(v);
    }
}

// e_i - e_j for i < j.
void add_pairs_diff(Combos& c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = c.unit(i);
      v[j] -= 1;
      c.add_pm(v);
    }
}

void add_doubles(Combos& c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) c.add_pm(c.unit(i, 2));
}

void add_units(Combos& c, std::size_t n, std::size_t first = 0) {
  for (std::size_t i = first; i < first + n; ++i) c.add_pm(c.unit(i));
}

// +-e_i +- f_j over two blocks of sizes n (offset 0) and m (offset n).
void add_cross(Combos& c, std::size_t n, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto plus = c.unit(i);
      plus[n + j] = 1;
      c.add_pm(plus);
      auto minus = c.unit(i);
      minus[n + j] = -1;
      c.add_pm(minus);
    }
}

Combos spin7_so9_combos() {
  Combos c(names("e", 3));
  add_doubles(c, 3);
  for (int s2 : {1, -1})
    for (int s3 : {1, -1}) c.add_pm({1, s2, s3});
  return c;
}

Combos g2_combos() {
  Combos c(names("e", 3));
  add_pairs_sum(c, 3);
  return c;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& fi : kFamilyTable) {
    if (fi.name == name) return fi.family;
  }
  return std::nullopt;
}

std::size_t family_arity(Family f) { return info(f).arity; }
AmbientType ambient_type(Family f) { return info(f).type; }

PairSpec::PairSpec(Family family, std::vector<int> params)
    : family_(family), params_(std::move(params)) {
  if (auto err = validity_error(family_, params_); !err.empty()) {
    throw InvalidParameters(std::string(family_name(family_)) + ": " + err);
  }
}

std::string PairSpec::name() const {
  std::string s(family_name(family_));
  if (params_.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params_[i]);
  }
  return s + ')';
}

int PairSpec::ambient_size() const {
  const auto& p = params_;
  switch (family_) {
    case Family::sgl_gl_in_sl:
    case Family::sl_sl_in_sl:
    case Family::so_so_in_so:
      return p[0] + p[1];
    case Family::sp_in_sl_even:
    case Family::so_in_sl_even:
    case Family::gl_in_sp:
    case Family::gl_in_so_even:
    case Family::sl_in_so_even:
    case Family::so_odd_in_even:
      return 2 * p[0];
    case Family::kx_sp_in_sl:
    case Family::so_in_sl_odd:
    case Family::sp_in_sl_odd:
    case Family::gl_in_so_odd:
    case Family::so_even_in_odd:
      return 2 * p[0] + 1;
    case Family::sp_sp_in_sp:
      return 2 * (p[0] + p[1]);
    case Family::sp_kx_in_sp:
      return 2 * p[0] + 2;
    case Family::spin7_in_so8:
    case Family::g2_in_so8:
      return 8;
    case Family::spin7_in_so9:
      return 9;
    case Family::spin7_so2_in_so10:
      return 10;
    case Family::g2_in_so7:
      return 7;
    case Family::b4_in_f4:
    case Family::a2_in_g2:
      return 0;
  }
  return 0;
}

std::string PairSpec::group_g() const {
  const std::string size = std::to_string(ambient_size());
  switch (ambient_type(family_)) {
    case AmbientType::SL:
      return "SL_" + size;
    case AmbientType::Sp:
      return "Sp_" + size;
    case AmbientType::SO:
      return "SO_" + size;
    case AmbientType::Exceptional:
      return family_ == Family::b4_in_f4 ? "F_4" : "G_2";
  }
  return {};
}

std::string PairSpec::group_h() const {
  auto s = [](int k) { return std::to_string(k); };
  const auto& p = params_;
  switch (family_) {
    case Family::sgl_gl_in_sl:
      return "S(GL_" + s(p[0]) + " x GL_" + s(p[1]) + ")";
    case Family::sl_sl_in_sl:
      return "SL_" + s(p[0]) + " x SL_" + s(p[1]);
    case Family::sp_in_sl_even:
    case Family::sp_in_sl_odd:
      return "Sp_" + s(2 * p[0]);
    case Family::kx_sp_in_sl:
      return "k* . Sp_" + s(2 * p[0]);
    case Family::so_in_sl_even:
      return "SO_" + s(2 * p[0]);
    case Family::so_in_sl_odd:
      return "SO_" + s(2 * p[0] + 1);
    case Family::sp_sp_in_sp:
      return "Sp_" + s(2 * p[0]) + " x Sp_" + s(2 * p[1]);
    case Family::sp_kx_in_sp:
      return "Sp_" + s(2 * p[0]) + " x k*";
    case Family::gl_in_sp:
    case Family::gl_in_so_even:
    case Family::gl_in_so_odd:
      return "GL_" + s(p[0]);
    case Family::sl_in_so_even:
      return "SL_" + s(p[0]);
    case Family::so_so_in_so:
      return "SO_" + s(p[0]) + " x SO_" + s(p[1]);
    case Family::so_odd_in_even:
      return "SO_" + s(2 * p[0] - 1);
    case Family::so_even_in_odd:
      return "SO_" + s(2 * p[0]);
    case Family::spin7_in_so8:
    case Family::spin7_in_so9:
      return "Spin_7";
    case Family::spin7_so2_in_so10:
      return "Spin_7 x SO_2";
    case Family::g2_in_so7:
    case Family::g2_in_so8:
      return "G_2";
    case Family::b4_in_f4:
      return "B_4";
    case Family::a2_in_g2:
      return "A_2";
  }
  return {};
}

PairSpec parse_pair(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  const auto open = compact.find('(');
  const std::string head = compact.substr(0, open);
  const auto family = family_from_name(head);
  if (!family) {
    std::string valid;
    for (const auto& fi : kFamilyTable) {
      if (!valid.empty()) valid += ", ";
      valid += fi.name;
    }
    throw ParseError("unknown family '" + head + "'; valid families: " + valid);
  }
  std::vector<int> params;
  if (open != std::string::npos) {
    if (compact.back() != ')') throw ParseError("missing ')' in '" + std::string(text) + "'");
    std::string_view body(compact);
    body = body.substr(open + 1, body.size() - open - 2);
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto tok = body.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("bad integer parameter '" + std::string(tok) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
      if (body.empty()) throw ParseError("trailing ',' in '" + std::string(text) + "'");
    }
  }
  return PairSpec(*family, std::move(params));
}

WeightSystem slice_weight_system(const PairSpec& pair) {
  const auto& p = pair.params();
  const auto n = p.empty() ? std::size_t{0} : static_cast<std::size_t>(p[0]);
  const auto m = p.size() < 2 ? std::size_t{0} : static_cast<std::size_t>(p[1]);
  switch (pair.family()) {
    case Family::sgl_gl_in_sl: {
      // +-(e_i - e_j), i <= n < j, over the full torus of SL_{n+m}.
      Combos c(names("e", static_cast<int>(n + m)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < n + m; ++j) {
          auto v = c.unit(i);
          v[j] = -1;
          c.add_pm(v);
        }
      return from_e_basis(n + m, c.combos(), c.labels());
    }
    case Family::sl_sl_in_sl: {
      Combos c(concat(names("e", static_cast<int>(n)), names("f", static_cast<int>(m))));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          auto v = c.unit(i);
          v[n + j] = -1;
          c.add_pm(v);
        }
      return reduce_blocks(c, {n, m});
    }
    case Family::sp_in_sl_even: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_diff(c, n);
      add_pairs_sum(c, n);
      return c.free_system();
    }
    case Family::kx_sp_in_sl: {
      // Weights over the double cover of T cap H; the extra character t
      // enters with coefficient 2m + 1.
      Combos c(concat(names("e", static_cast<int>(n)), {"t"}));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto diff = c.unit(i);
          diff[j] = -1;
          c.add_pm(diff);
          auto sum = c.unit(i);
          sum[j] = 1;
          c.add_pm(sum);
        }
      const auto lift = static_cast<std::int64_t>(2 * n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        auto plus = c.unit(n, lift);
        plus[i] = 1;
        c.add_pm(plus);
        auto minus = c.unit(n, lift);
        minus[i] = -1;
        c.add_pm(minus);
      }
      return c.free_system();
    }
    case Family::so_in_sl_even:
    case Family::so_in_sl_odd: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_diff(c, n);
      add_pairs_sum(c, n);
      add_doubles(c, n);
      if (pair.family() == Family::so_in_sl_odd) add_units(c, n);
      return c.free_system();
    }
    case Family::sp_in_sl_odd: {
      Combos c(names("e", static_cast<int>(n)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto diff = c.unit(i);
          diff[j] = -1;
          c.add_pm(diff);
          auto sum = c.unit(i);
          sum[j] = 1;
          c.add_pm(sum);
        }
      for (std::size_t k = 0; k < n; ++k) {
        c.add_pm(c.unit(k));
        c.add_pm(c.unit(k));
      }
      return c.free_system();
    }
    case Family::sp_sp_in_sp: {
      Combos c(concat(names("e", static_cast<int>(n)), names("d", static_cast<int>(m))));
      add_cross(c, n, m);
      return c.free_system();
    }
    case Family::sp_kx_in_sp: {
      Combos c(names("e", static_cast<int>(n + 1)));
      for (std::size_t i = 0; i < n; ++i) {
        auto plus = c.unit(i);
        plus[n] = 1;
        c.add_pm(plus);
        auto minus = c.unit(i);
        minus[n] = -1;
        c.add_pm(minus);
      }
      c.add_pm(c.unit(n, 2));
      return c.free_system();
    }
    case Family::gl_in_sp: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_sum(c, n);
      add_doubles(c, n);
      return c.free_system();
    }
    case Family::gl_in_so_even: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_sum(c, n);
      return c.free_system();
    }
    case Family::sl_in_so_even: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_sum(c, n);
      return from_e_basis(n, c.combos(), c.labels());
    }
    case Family::gl_in_so_odd: {
      Combos c(names("e", static_cast<int>(n)));
      add_pairs_sum(c, n);
      add_units(c, n);
      return c.free_system();
    }
    case Family::so_so_in_so: {
      const std::size_t r = n / 2;
      const std::size_t s = m / 2;
      Combos c(concat(names("e", static_cast<int>(r)), names("d", static_cast<int>(s))));
      add_cross(c, r, s);
      if (m % 2 == 1) add_units(c, r);
      if (n % 2 == 1) add_units(c, s, r);
      return c.free_system();
    }
    case Family::so_odd_in_even: {
      Combos c(names("e", static_cast<int>(n - 1)));
      add_units(c, n - 1);
      return c.free_system();
    }
    case Family::so_even_in_odd: {
      Combos c(names("e", static_cast<int>(n)));
      add_units(c, n);
      return c.free_system();
    }
    case Family::spin7_in_so8: {
      Combos c(names("e", 3));
      add_units(c, 3);
      return c.free_system();
    }
    case Family::spin7_in_so9:
      return spin7_so9_combos().free_system();
    case Family::spin7_so2_in_so10: {
      Combos c(concat(names("e", 3), {"d"}));
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          for (int sd : {1, -1}) c.add_pm({1, s2, s3, sd});
      add_doubles(c, 3);
      return c.free_system();
    }
    case Family::g2_in_so7: {
      const Combos c = g2_combos();
      return from_e_basis(3, c.combos(), c.labels());
    }
    case Family::g2_in_so8: {
      Combos c = g2_combos();
      c.append(g2_combos());
      return from_e_basis(3, c.combos(), c.labels());
    }
    case Family::b4_in_f4: {
      std::vector<std::vector<Rational>> half;
      std::vector<std::string> labels;
      Combos fmt(names("e", 4));
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          for (int s4 : {1, -1})
            for (int sign : {1, -1}) {
              std::vector<std::int64_t> c{sign, sign * s2, sign * s3, sign * s4};
              std::vector<Rational> w;
              for (auto x : c) w.emplace_back(x, 2);
              half.push_back(std::move(w));
              labels.push_back("(" + fmt.format(c) + ")/2");
            }
      return clear_denominators(4, half, std::move(labels));
    }
    case Family::a2_in_g2: {
      Combos c(names("e", 3));
      add_units(c, 3);
      return from_e_basis(3, c.combos(), c.labels());
    }
  }
  throw std::logic_error("unhandled family");
}

DimensionAudit dimension_audit(const PairSpec& pair) {
  const auto& p = pair.params();
  const int k = pair.ambient_size();
  DimensionAudit a;
  switch (ambient_type(pair.family())) {
    case AmbientType::SL:
      a.dim_g = sl_dim(k);
      a.rank_g = k - 1;
      break;
    case AmbientType::Sp:
      a.dim_g = sp_dim(k / 2);
      a.rank_g = k / 2;
      break;
    case AmbientType::SO:
      a.dim_g = so_dim(k);
      a.rank_g = k / 2;
      break;
    case AmbientType::Exceptional:
      if (pair.family() == Family::b4_in_f4) {
        a.dim_g = 52;
        a.rank_g = 4;
      } else {
        a.dim_g = 14;
        a.rank_g = 2;
      }
      break;
  }
  const int n = p.empty() ? 0 : p[0];
  const int m = p.size() < 2 ? 0 : p[1];
  switch (pair.family()) {
    case Family::sgl_gl_in_sl:
      a.dim_h = n * n + m * m - 1;
      a.rank_h = n + m - 1;
      break;
    case Family::sl_sl_in_sl:
      a.dim_h = sl_dim(n) + sl_dim(m);
      a.rank_h = n + m - 2;
      break;
    case Family::sp_in_sl_even:
    case Family::sp_in_sl_odd:
      a.dim_h = sp_dim(n);
      a.rank_h = n;
      break;
    case Family::kx_sp_in_sl:
      a.dim_h = sp_dim(n) + 1;
      a.rank_h = n + 1;
      break;
    case Family::so_in_sl_even:
      a.dim_h = so_dim(2 * n);
      a.rank_h = n;
      break;
    case Family::so_in_sl_odd:
      a.dim_h = so_dim(2 * n + 1);
      a.rank_h = n;
      break;
    case Family::sp_sp_in_sp:
      a.dim_h = sp_dim(n) + sp_dim(m);
      a.rank_h = n + m;
      break;
    case Family::sp_kx_in_sp:
      a.dim_h = sp_dim(n) + 1;
      a.rank_h = n + 1;
      break;
    case Family::gl_in_sp:
    case Family::gl_in_so_even:
    case Family::gl_in_so_odd:
      a.dim_h = n * n;
      a.rank_h = n;
      break;
    case Family::sl_in_so_even:
      a.dim_h = sl_dim(n);
      a.rank_h = n - 1;
      break;
    case Family::so_so_in_so:
      a.dim_h = so_dim(n) + so_dim(m);
      a.rank_h = n / 2 + m / 2;
      break;
    case Family::so_odd_in_even:
      a.dim_h = so_dim(2 * n - 1);
      a.rank_h = n - 1;
      break;
    case Family::so_even_in_odd:
      a.dim_h = so_dim(2 * n);
      a.rank_h = n;
      break;
    case Family::spin7_in_so8:
    case Family::spin7_in_so9:
      a.dim_h = 21;
      a.rank_h = 3;
      break;
    case Family::spin7_so2_in_so10:
      a.dim_h = 22;
      a.rank_h = 4;
      break;
    case Family::g2_in_so7:
    case Family::g2_in_so8:
      a.dim_h = 14;
      a.rank_h = 2;
      break;
    case Family::b4_in_f4:
      a.dim_h = 36;
      a.rank_h = 4;
      break;
    case Family::a2_in_g2:
      a.dim_h = 8;
      a.rank_h = 2;
      break;
  }
  a.dim_n = a.dim_g - a.dim_h - a.rank_g + a.rank_h;

  const WeightSystem ws = slice_weight_system(pair);
  if (static_cast<std::size_t>(a.dim_n) != ws.size()) {
    throw AuditFailure(pair.name() + ": dim N = " + std::to_string(a.dim_n) + " but the slice has " +
                       std::to_string(ws.size()) + " weights");
  }
  if (static_cast<std::size_t>(a.rank_h) != ws.rank()) {
    throw AuditFailure(pair.name() + ": rank of T cap H is " + std::to_string(a.rank_h) +
                       " but the slice lattice has rank " + std::to_string(ws.rank()));
  }
  return a;
}

CatalogueBounds parse_bounds(std::string_view text) {
  CatalogueBounds b;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("bounds item '" + std::string(item) + "' is not key=value");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "families") {
      std::set<Family> fams;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto plus = rest.find('+');
        const auto name = rest.substr(0, plus);
        const auto f = family_from_name(name);
        if (!f) throw ParseError("bounds: unknown family '" + std::string(name) + "'");
        fams.insert(*f);
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
      }
      b.families = std::move(fams);
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size() || v < 0) {
      throw ParseError("bounds: bad value '" + std::string(value) + "' for " + std::string(key));
    }
    if (key == "sl") {
      b.max_sl = v;
    } else if (key == "sp") {
      b.max_sp = v;
    } else if (key == "so") {
      b.max_so = v;
    } else if (key == "max_ambient_rank") {
      b.max_sl = b.max_sp = b.max_so = v;
    } else if (key == "exceptional") {
      b.exceptional = v != 0;
    } else {
      throw ParseError("bounds: unknown key '" + std::string(key) +
                       "' (expected sl, sp, so, max_ambient_rank, exceptional, families)");
    }
  }
  return b;
}

std::vector<PairSpec> catalogue(const CatalogueBounds& bounds) {
  std::vector<PairSpec> out;
  for (Family f : kAllFamilies) {
    if (bounds.families && !bounds.families->count(f)) continue;
    int cap = 0;
    switch (ambient_type(f)) {
      case AmbientType::SL:
        cap = bounds.max_sl;
        break;
      case AmbientType::Sp:
        cap = bounds.max_sp;
        break;
      case AmbientType::SO:
        cap = bounds.max_so;
        break;
      case AmbientType::Exceptional:
        if (bounds.exceptional) out.emplace_back(f);
        continue;
    }
    auto consider = [&](std::vector<int> params) {
      if (!validity_error(f, params).empty()) return;
      PairSpec pair(f, std::move(params));
      if (pair.ambient_size() <= cap) out.push_back(std::move(pair));
    };
    switch (family_arity(f)) {
      case 0:
        consider({});
        break;
      case 1:
        for (int a = 1; a <= cap; ++a) consider({a});
        break;
      default:
        for (int a = 1; a <= cap; ++a)
          for (int b = 1; b <= cap; ++b) consider({a, b});
        break;
    }
  }
  return out;
}

}  // namespace dcoset
