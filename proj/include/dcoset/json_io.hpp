#ifndef DCOSET_JSON_IO_HPP
#define DCOSET_JSON_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dcoset/classify.hpp"
#include "dcoset/lattice.hpp"
#include "dcoset/monoid.hpp"

namespace dcoset {

/// Weight file:
///   {"rank": r, "weights": [[...], ...], "labels": [...],
///    "e_basis": {"ambient_rank": k}}
/// Entries are integers or strings "p/q". With e_basis the weights have
/// length k and "rank", if given, must be k - 1. Throws ParseError.
WeightSystem parse_weight_file(std::string_view text);
WeightSystem load_weight_file(const std::string& path);

nlohmann::json to_json(const Relation& r);
nlohmann::json to_json(const HilbertBasis& hb);
nlohmann::json to_json(const PairSpec& pair, const Verdict& v);
nlohmann::json to_json(const AppendixReport& report);
nlohmann::json to_json(const std::vector<TableRow>& rows);

/// Three columns G | H | dim, one row per AffineSpace verdict.
std::string table_markdown(const std::vector<TableRow>& rows);

}  // namespace dcoset

#endif  // DCOSET_JSON_IO_HPP
