// Command-line front end: signatures, relations, simulacra searches, claim
// verification and table regeneration.
//
// Exit codes: 0 success / all checks pass / simulacra found,
//             1 verification failure / no simulacra found,
//             2 usage, parse or canonicalization error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simulacra/claims.hpp"
#include "simulacra/cone.hpp"
#include "simulacra/expression.hpp"
#include "simulacra/search.hpp"

namespace {

using nlohmann::json;
using namespace simulacra;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Kind> parse_kinds(const std::string& list) {
  std::vector<Kind> kinds;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string::npos) end = list.size();
    const std::string item = list.substr(pos, end - pos);
    if (item == "R" || item == "real") {
      kinds.push_back(Kind::RealPSD);
    } else if (item == "C" || item == "complex") {
      kinds.push_back(Kind::ComplexPSD);
    } else if (item == "H" || item == "quaternion") {
      kinds.push_back(Kind::QuaternionPSD);
    } else if (item == "O" || item == "octonion") {
      kinds.push_back(Kind::OctonionPSD);
    } else {
      throw UsageError("unknown factor kind '" + item + "' in --allow (use R,C,H,O)");
    }
    pos = end + 1;
  }
  return kinds;
}

json record_json(const Record& r) {
  json j{{"input", r.input}, {"expected", r.expected}, {"actual", r.actual},
         {"ok", r.ok}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

json report_json(const Report& rep) {
  json records = json::array();
  for (const Record& r : rep.records) records.push_back(record_json(r));
  return {{"claim", claim_name(rep.claim)},
          {"verdict", rep.pass ? "pass" : "fail"},
          {"records", std::move(records)},
          {"elapsed_ms", rep.elapsed.count()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

int cmd_signature(const std::string& expr) {
  const Cone c = parse_cone(expr);
  std::cout << "canonical: " << format_cone(c) << "\n"
            << "signature: " << to_string(signature(c)) << "\n";
  return kOk;
}

int cmd_relate(const std::string& a, const std::string& b) {
  const Cone x = parse_cone(a);
  const Cone y = parse_cone(b);
  std::cout << relation_name(relation(x, y)) << "\n"
            << format_cone(x) << ": " << to_string(signature(x)) << "\n"
            << format_cone(y) << ": " << to_string(signature(y)) << "\n";
  return kOk;
}

struct SimulacraArgs {
  std::string expr;
  bool lorentz_only = false;
  std::optional<Int> max_lorentz_part;
  std::optional<std::size_t> max_results;
  std::optional<std::string> allow;
  unsigned threads = 0;
};

int cmd_simulacra(const SimulacraArgs& args) {
  SearchPolicy policy;
  if (args.lorentz_only && args.allow) {
    throw UsageError("--lorentz-only contradicts --allow");
  }
  policy.allow_nonlorentz = !args.lorentz_only;
  if (args.allow) policy.allowed_kinds = parse_kinds(*args.allow);
  policy.max_lorentz_part = args.max_lorentz_part;
  policy.max_results = args.max_results;
  policy.threads = args.threads;
  try {
    policy.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Cone target = parse_cone(args.expr);
  const auto found = find_simulacra(target, policy);
  for (const Cone& c : found) std::cout << format_cone(c) << "\n";
  if (found.empty()) {
    std::cerr << "no simulacra of " << format_cone(target) << " "
              << to_string(signature(target)) << " under this policy\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& which, const std::optional<std::string>& json_path,
               unsigned threads) {
  std::vector<ClaimId> ids;
  if (which == "all") {
    ids.assign(all_claims().begin(), all_claims().end());
  } else if (auto id = parse_claim(which)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown claim '" + which + "'");
  }
  VerifyOptions options;
  options.threads = threads;
  bool pass = true;
  json reports = json::array();
  for (ClaimId id : ids) {
    const Report rep = verify_claim(id, options);
    for (const Record& r : rep.records) {
      json line = record_json(r);
      line["claim"] = claim_name(id);
      std::cout << line.dump() << "\n";
    }
    std::cerr << claim_name(id) << ": " << (rep.pass ? "pass" : "FAIL") << " ("
              << rep.records.size() << " records, " << rep.elapsed.count() << " ms)\n";
    pass = pass && rep.pass;
    reports.push_back(report_json(rep));
  }
  if (json_path) {
    std::ofstream out(*json_path);
    if (!out) throw std::runtime_error("cannot write " + *json_path);
    out << (reports.size() == 1 ? reports.front() : reports).dump(2) << "\n";
  }
  return pass ? kOk : kFailed;
}

int cmd_table(const std::string& which, const std::string& format, unsigned threads) {
  VerifyOptions options;
  options.threads = threads;
  const Table t = make_table(which, options);
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    std::cout << json{{"table", which},
                      {"matches_fixture", t.matches_fixture},
                      {"rows", std::move(rows)}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      std::cout << (i ? "," : "") << t.columns[i];
    }
    std::cout << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::cout << (i ? "," : "") << csv_field(row[i]);
      }
      std::cout << "\n";
    }
  }
  if (!t.matches_fixture) {
    std::cerr << "table " << which << " does not match the shipped fixture\n";
    return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric cone signatures, simulacra searches and claim checks"};
  app.require_subcommand(1);

  std::string expr_a;
  std::string expr_b;

  auto* sig = app.add_subcommand("signature", "Canonical form and (dim, rank) of a cone");
  sig->add_option("expr", expr_a, "cone expression, e.g. \"H3(C) + L5\"")->required();

  auto* rel = app.add_subcommand("relate", "Isomorphic | Simulacra | Distinct");
  rel->add_option("a", expr_a)->required();
  rel->add_option("b", expr_b)->required();

  SimulacraArgs sargs;
  auto* sim = app.add_subcommand("simulacra", "List simulacra of a cone");
  sim->add_option("expr", sargs.expr)->required();
  sim->add_flag("--lorentz-only", sargs.lorentz_only, "only sums of Lorentz cones");
  sim->add_option("--max-lorentz-part", sargs.max_lorentz_part,
                  "largest Lorentz factor size considered");
  sim->add_option("--max-results", sargs.max_results, "stop after N simulacra");
  sim->add_option("--allow", sargs.allow,
                  "comma-separated non-Lorentz kinds to admit: R,C,H,O");
  sim->add_option("--threads", sargs.threads, "worker threads (0 = all cores)");

  std::string claim;
  std::optional<std::string> json_path;
  unsigned verify_threads = 0;
  auto* ver = app.add_subcommand("verify", "Reproduce a claim (or 'all')");
  ver->add_option("claim", claim, "claim id")->required();
  ver->add_option("--json", json_path, "write the full report as JSON");
  ver->add_option("--threads", verify_threads, "worker threads (0 = all cores)");

  std::string table;
  std::string format = "csv";
  unsigned table_threads = 0;
  auto* tab = app.add_subcommand("table", "Regenerate table 1, 2, 3 or B");
  tab->add_option("which", table)->required()->check(CLI::IsMember({"1", "2", "3", "B"}));
  tab->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  tab->add_option("--threads", table_threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sig) return cmd_signature(expr_a);
    if (*rel) return cmd_relate(expr_a, expr_b);
    if (*sim) return cmd_simulacra(sargs);
    if (*ver) return cmd_verify(claim, json_path, verify_threads);
    if (*tab) return cmd_table(table, format, table_threads);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CanonicalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
