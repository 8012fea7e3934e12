#include "dcoset/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dcoset/errors.hpp"

namespace dcoset {

namespace {

using nlohmann::json;

std::int64_t parse_int(std::string_view s, const std::string& where) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(where + ": not an integer: '" + std::string(s) + "'");
  return v;
}

Rational parse_entry(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(where + ": expected an integer or a \"p/q\" string");
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, where));
  const std::int64_t q = parse_int(std::string_view(s).substr(slash + 1), where);
  if (q == 0) throw ParseError(where + ": zero denominator");
  return Rational(parse_int(std::string_view(s).substr(0, slash), where), q);
}

}  // namespace

WeightSystem parse_weight_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("weight file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("weight file: top level must be an object");
  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    throw ParseError("weight file: missing array field \"weights\"");
  }

  std::optional<std::size_t> ambient;
  if (doc.contains("e_basis")) {
    const auto& e = doc["e_basis"];
    if (!e.is_object() || !e.contains("ambient_rank") || !e["ambient_rank"].is_number_unsigned() ||
        e["ambient_rank"].get<std::size_t>() == 0) {
      throw ParseError("weight file: e_basis needs a positive integer \"ambient_rank\"");
    }
    ambient = e["ambient_rank"].get<std::size_t>();
  }
  std::optional<std::size_t> rank;
  if (doc.contains("rank")) {
    if (!doc["rank"].is_number_unsigned()) throw ParseError("weight file: \"rank\" must be a nonnegative integer");
    rank = doc["rank"].get<std::size_t>();
  }
  if (!rank && !ambient) throw ParseError("weight file: missing field \"rank\"");
  if (rank && ambient && *rank + 1 != *ambient) {
    throw ParseError("weight file: rank must be ambient_rank - 1 when e_basis is given");
  }
  const std::size_t width = ambient ? *ambient : *rank;

  std::vector<std::vector<Rational>> rows;
  bool integral = true;
  for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
    const auto& w = doc["weights"][i];
    const std::string where = "weight " + std::to_string(i);
    if (!w.is_array()) throw ParseError(where + ": expected an array");
    if (w.size() != width) {
      throw ParseError(where + ": has length " + std::to_string(w.size()) + ", expected " +
                       std::to_string(width));
    }
    std::vector<Rational> row;
    for (const auto& x : w) {
      row.push_back(parse_entry(x, where));
      if (row.back().denominator() != 1) integral = false;
    }
    rows.push_back(std::move(row));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != rows.size()) {
      throw ParseError("weight file: \"labels\" must be an array with one string per weight");
    }
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("weight file: labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  WeightSystem cleared = integral ? WeightSystem() : clear_denominators(width, rows);
  std::vector<Weight> ints;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (integral) {
      Weight w;
      for (const auto& q : rows[i]) w.push_back(q.numerator());
      ints.push_back(std::move(w));
    } else {
      ints.push_back(cleared[i]);
    }
  }
  if (ambient) return from_e_basis(*ambient, ints, std::move(labels));
  return WeightSystem(width, std::move(ints), std::move(labels));
}

WeightSystem load_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open weight file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_weight_file(buf.str());
}

json to_json(const Relation& r) { return r.exponents; }

json to_json(const HilbertBasis& hb) {
  const FreenessReport f = freeness(hb);
  json basis = json::array();
  for (const auto& e : hb.elements) basis.push_back(to_json(e));
  return {{"n", hb.context.size()},
          {"rank", hb.context.rank()},
          {"monoid_rank", hb.monoid_rank},
          {"free", f.free},
          {"basis", std::move(basis)}};
}

json to_json(const PairSpec& pair, const Verdict& v) {
  return {{"pair", pair.name()},
          {"outcome", outcome_name(v.outcome)},
          {"dimension", v.dimension},
          {"hb_size", v.certificate.hb_size},
          {"monoid_rank", v.certificate.monoid_rank},
          {"justification", justification_name(v.justification)}};
}

json to_json(const AppendixReport& r) {
  return {{"case_id", r.case_id},
          {"title", r.title},
          {"listed_all_invariant", r.listed_all_invariant},
          {"listed_all_irreducible", r.listed_all_irreducible},
          {"listed_in_basis", r.listed_in_basis},
          {"listed_count", r.listed_count},
          {"hb_size", r.hb_size},
          {"quotient_dim", r.quotient_dim},
          {"singular_confirmed", r.singular_confirmed},
          {"notes", r.notes}};
}

json to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(to_json(row.pair, row.verdict));
  return out;
}

std::string table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| G | H | dim |\n|---|---|---|\n";
  for (const auto& row : rows) {
    if (row.verdict.outcome != Outcome::AffineSpace) continue;
    os << "| " << row.pair.group_g() << " | " << row.pair.group_h() << " | " << row.verdict.dimension
       << " |\n";
  }
  return os.str();
}

}  // namespace dcoset
