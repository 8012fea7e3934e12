#include "dcoset/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "dcoset/classify.hpp"
#include "dcoset/errors.hpp"
#include "dcoset/groupcheck.hpp"
#include "dcoset/json_io.hpp"

namespace dcoset::cli {

namespace {

std::string relation_text(const Relation& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    s += (i ? "," : "") + std::to_string(r.exponents[i]);
  }
  return s + ")";
}

void print_verdict(std::ostream& out, const PairSpec& pair, const Verdict& v) {
  out << pair.name() << ": " << outcome_name(v.outcome) << ", dim " << v.dimension << " (hb "
      << v.certificate.hb_size << ", rank " << v.certificate.monoid_rank << ", "
      << justification_name(v.justification) << ")\n";
}

void print_appendix(std::ostream& out, const AppendixReport& r) {
  out << "case " << r.case_id << ": " << r.title << "\n"
      << "  listed " << r.listed_count << ", hb " << r.hb_size << ", dim " << r.quotient_dim << ", "
      << (r.singular_confirmed ? "confirmed" : "NOT confirmed") << "\n"
      << "  invariant " << (r.listed_all_invariant ? "yes" : "no") << ", irreducible "
      << (r.listed_all_irreducible ? "yes" : "no") << ", in basis "
      << (r.listed_in_basis ? "yes" : "no") << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

struct Options {
  std::string pair;
  std::string input;
  bool oracle = false;
  int max_degree = 6;
  std::string bounds;
  std::string format = "md";
  std::optional<int> case_id;
  std::vector<int> params;
  std::string which;
  int n = 1;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  bool json = false;
  std::uint64_t budget = CompletionOptions{}.node_budget;
};

int do_classify(const Options& o, std::ostream& out, const CompletionOptions& copts) {
  const PairSpec pair = parse_pair(o.pair);
  const Verdict v = classify_pair(pair, copts);
  if (o.json) {
    out << to_json(pair, v).dump(2) << "\n";
  } else {
    print_verdict(out, pair, v);
  }
  return kExitOk;
}

int do_hilbert(const Options& o, std::ostream& out, const CompletionOptions& copts) {
  const WeightSystem ws = load_weight_file(o.input);
  const HilbertBasis hb = hilbert_basis(ws, copts);
  std::optional<bool> agrees;
  if (o.oracle) {
    std::vector<Relation> low;
    for (const auto& e : hb.elements) {
      if (e.degree() <= o.max_degree) low.push_back(e);
    }
    agrees = brute_force_irreducibles(ws, o.max_degree) == low;
  }
  if (o.json) {
    auto j = to_json(hb);
    if (agrees) j["oracle"] = {{"max_degree", o.max_degree}, {"agrees", *agrees}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const FreenessReport f = freeness(hb);
  out << "n " << ws.size() << ", rank " << ws.rank() << ", hb " << hb.elements.size()
      << ", monoid_rank " << hb.monoid_rank << ", " << (f.free ? "free" : "not free") << "\n";
  for (const auto& e : hb.elements) out << relation_text(e) << "\n";
  if (f.witness) out << "witness " << relation_text(*f.witness) << "\n";
  if (agrees) {
    out << "oracle to degree " << o.max_degree << ": " << (*agrees ? "agrees" : "DISAGREES") << "\n";
  }
  return kExitOk;
}

int do_table(const Options& o, std::ostream& out, const CompletionOptions& copts) {
  const auto rows = theorem_table(parse_bounds(o.bounds), copts);
  if (o.format == "json") {
    out << to_json(rows).dump(2) << "\n";
  } else {
    out << table_markdown(rows);
  }
  return kExitOk;
}

int do_appendix(const Options& o, std::ostream& out, const CompletionOptions& copts) {
  std::optional<std::pair<int, int>> params;
  if (!o.params.empty()) {
    if (!o.case_id) throw InvalidParameters("--params requires --case");
    if (o.params.size() > 2) throw InvalidParameters("--params takes at most two integers");
    params = std::pair{o.params[0], o.params.size() > 1 ? o.params[1] : 0};
  }
  std::vector<AppendixReport> reports;
  if (o.case_id) {
    reports.push_back(verify_appendix_case(*o.case_id, params, copts));
  } else {
    for (int id = 1; id <= kAppendixCases; ++id) reports.push_back(verify_appendix_case(id, {}, copts));
  }
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    out << (o.case_id ? j[0] : j).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_appendix(out, r);
  }
  return kExitOk;
}

int do_identity(const Options& o, std::ostream& out) {
  const auto which = identity_from_name(o.which);
  if (!which) throw InvalidParameters("--which must be minor, symplectic or quadric");
  const TrialReport r = run_trials(*which, o.n, o.trials, o.seed);
  out << identity_name(r.which) << " n=" << r.n << " seed=" << r.seed << ": " << r.trials
      << (r.which == Identity::Quadric ? " trials per parity, " : " trials, ") << r.failures.size()
      << " failures\n";
  for (const auto& f : r.failures) out << "  trial " << f.trial << ": " << f.input << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine-space test for double coset varieties T\\G//H", "dcoset"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "Node budget of the Hilbert basis completion")
      ->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Classify one catalogue pair");
  classify->add_option("--pair", o.pair, "Pair, e.g. \"sp_in_sl_even(2)\"")->required();
  classify->add_flag("--json", o.json);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a weight file");
  hilbert->add_option("--input", o.input, "Weight file (JSON)")->required();
  auto* oracle = hilbert->add_flag("--oracle", o.oracle, "Compare with exhaustive search");
  hilbert->add_option("--max-degree", o.max_degree, "Oracle degree bound")
      ->check(CLI::NonNegativeNumber)
      ->needs(oracle);
  hilbert->add_flag("--json", o.json);

  auto* table = app.add_subcommand("table", "Classify the catalogue");
  table->add_option("--bounds", o.bounds, "e.g. \"max_ambient_rank=8\" or \"sl=6,so=8\"");
  table->add_option("--format", o.format)->check(CLI::IsMember({"md", "json"}));

  auto* appendix = app.add_subcommand("appendix", "Verify the singular torus modules");
  appendix->add_option("--case", o.case_id, "Case id 1..16; all cases when omitted");
  appendix->add_option("--params", o.params, "n,m for case 1; n for case 7")->delimiter(',');
  appendix->add_flag("--json", o.json);

  auto* identity = app.add_subcommand("identity", "Seeded trials of the exact identities");
  identity->add_option("--which", o.which)->required()->check(
      CLI::IsMember({"minor", "symplectic", "quadric"}));
  identity->add_option("--n", o.n);
  identity->add_option("--trials", o.trials);
  identity->add_option("--seed", o.seed);

  for (auto* sub : {classify, hilbert, table, appendix, identity}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CompletionOptions copts{o.budget};
  try {
    if (*classify) return do_classify(o, out, copts);
    if (*hilbert) return do_hilbert(o, out, copts);
    if (*table) return do_table(o, out, copts);
    if (*appendix) return do_appendix(o, out, copts);
    return do_identity(o, out);
  } catch (const ComputationLimit& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dcoset::cli
