#ifndef DCOSET_SRC_COMBO_FORMAT_HPP
#define DCOSET_SRC_COMBO_FORMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dcoset::detail {

// "e1-2e3" style rendering of an integer combination of named characters.
inline std::string format_combo(const std::vector<std::int64_t>& c,
                                const std::vector<std::string>& basis) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] < 0) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    const auto mag = c[i] < 0 ? -c[i] : c[i];
    if (mag != 1) s += std::to_string(mag);
    s += basis[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace dcoset::detail

#endif  // DCOSET_SRC_COMBO_FORMAT_HPP
