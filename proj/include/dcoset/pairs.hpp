#ifndef DCOSET_PAIRS_HPP
#define DCOSET_PAIRS_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dcoset/lattice.hpp"

namespace dcoset {

/// Catalogue families of pairs H in G. Parameters are listed in the
/// comment; G is named by its matrix size.
enum class Family {
  sgl_gl_in_sl,       // (n, m): S(GL_n x GL_m) in SL_{n+m}, n >= m >= 1
  sl_sl_in_sl,        // (n, m): SL_n x SL_m in SL_{n+m}, n > m >= 1
  sp_in_sl_even,      // (m): Sp_{2m} in SL_{2m}
  kx_sp_in_sl,        // (m): k* . Sp_{2m} in SL_{2m+1}
  so_in_sl_even,      // (m): SO_{2m} in SL_{2m}
  so_in_sl_odd,       // (m): SO_{2m+1} in SL_{2m+1}
  sp_in_sl_odd,       // (m): Sp_{2m} in SL_{2m+1}
  sp_sp_in_sp,        // (n, m): Sp_{2n} x Sp_{2m} in Sp_{2n+2m}, 1 <= n <= m
  sp_kx_in_sp,        // (n): Sp_{2n} x k* in Sp_{2n+2}
  gl_in_sp,           // (n): GL_n in Sp_{2n}
  gl_in_so_even,      // (n): GL_n in SO_{2n}
  sl_in_so_even,      // (n): SL_n in SO_{2n}, n >= 3
  gl_in_so_odd,       // (n): GL_n in SO_{2n+1}
  so_so_in_so,        // (n, m): SO_n x SO_m in SO_{n+m}, 2 <= n <= m
  so_odd_in_even,     // (n): SO_{2n-1} in SO_{2n}, n >= 2
  so_even_in_odd,     // (n): SO_{2n} in SO_{2n+1}
  spin7_in_so8,
  spin7_in_so9,
  spin7_so2_in_so10,
  g2_in_so7,
  g2_in_so8,
  b4_in_f4,
  a2_in_g2,
};

inline constexpr Family kAllFamilies[] = {
    Family::sgl_gl_in_sl,   Family::sl_sl_in_sl,   Family::sp_in_sl_even,
    Family::kx_sp_in_sl,    Family::so_in_sl_even, Family::so_in_sl_odd,
    Family::sp_in_sl_odd,   Family::sp_sp_in_sp,   Family::sp_kx_in_sp,
    Family::gl_in_sp,       Family::gl_in_so_even, Family::sl_in_so_even,
    Family::gl_in_so_odd,   Family::so_so_in_so,   Family::so_odd_in_even,
    Family::so_even_in_odd, Family::spin7_in_so8,  Family::spin7_in_so9,
    Family::spin7_so2_in_so10, Family::g2_in_so7,  Family::g2_in_so8,
    Family::b4_in_f4,       Family::a2_in_g2,
};

enum class AmbientType { SL, Sp, SO, Exceptional };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::size_t family_arity(Family f);
AmbientType ambient_type(Family f);

/// A validated catalogue entry.
class PairSpec {
 public:
  /// Throws InvalidParameters outside the family's validity range.
  PairSpec(Family family, std::vector<int> params = {});

  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  int param(std::size_t i) const { return params_.at(i); }

  /// Grammar form, e.g. "so_so_in_so(2,3)" or "spin7_in_so8".
  std::string name() const;
  std::string group_g() const;
  std::string group_h() const;
  /// Matrix size of G for classical G, 0 for exceptional G.
  int ambient_size() const;
  bool exceptional() const { return ambient_type(family_) == AmbientType::Exceptional; }

  bool operator==(const PairSpec&) const = default;

 private:
  Family family_;
  std::vector<int> params_;
};

/// Parses "family(p1,p2)" (whitespace tolerated). Throws ParseError listing
/// the valid families on unknown names, InvalidParameters on bad ranges.
PairSpec parse_pair(std::string_view text);

struct DimensionAudit {
  int dim_g = 0;
  int dim_h = 0;
  int rank_g = 0;  // dim T
  int rank_h = 0;  // dim T cap H
  int dim_n = 0;
};

/// Weights of the maximal torus of H on Lie G / (Lie T + Lie H), in the
/// family's canonical order (each weight followed by its negative where the
/// family is closed under negation).
WeightSystem slice_weight_system(const PairSpec& pair);

/// Group dimensions from the standard formulas. Throws AuditFailure if
/// dim_N disagrees with the slice weight count.
DimensionAudit dimension_audit(const PairSpec& pair);

/// Caps on the matrix size of G per classical type. Fixed-G families with
/// classical G obey the SO cap; exceptional G is a separate switch.
struct CatalogueBounds {
  int max_sl = 8;
  int max_sp = 12;
  int max_so = 10;
  bool exceptional = true;
  /// When set, only these families are enumerated.
  std::optional<std::set<Family>> families;
};

/// Parses "key=value" pairs separated by commas: sl, sp, so,
/// max_ambient_rank (sets all three), exceptional (0/1) and
/// families (names joined by '+'). Empty text gives the defaults.
CatalogueBounds parse_bounds(std::string_view text);

/// Every valid pair within bounds: families in declaration order, then
/// parameters in lexicographic order.
std::vector<PairSpec> catalogue(const CatalogueBounds& bounds = {});

}  // namespace dcoset

#endif  // DCOSET_PAIRS_HPP
