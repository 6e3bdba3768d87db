#include "gfp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <string>

#include "gfp/errors.hpp"
#include "gfp/gcd_theorems.hpp"
#include "gfp/identities.hpp"
#include "gfp/json_io.hpp"
#include "gfp/parallel.hpp"
#include "gfp/random_family.hpp"
#include "gfp/tables.hpp"

namespace gfp {

Family resolve_family(std::string_view selector) {
  if (!selector.empty() && selector.front() == '{') {
    Json j;
    try {
      j = Json::parse(selector);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("inline family: ") + e.what());
    }
    return family_from_json(j);
  }
  return builtin_family(selector);
}

namespace {

std::string partner_name(const Family& f) {
  try {
    return equivalent_family(f).name;
  } catch (const NoValidEquivalent&) {
    return "-";
  }
}

int cmd_families(std::ostream& out, bool json, const std::string& kind_filter) {
  std::vector<Family> rows;
  for (auto& f : builtin_families())
    if (kind_filter.empty() || to_string(f.kind) == kind_filter) rows.push_back(std::move(f));
  if (json) {
    Json arr = Json::array();
    for (const auto& f : rows) {
      Json j = to_json(f);
      j["equivalent"] = partner_name(f);
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
    return 0;
  }
  out << std::left << std::setw(18) << "name" << std::setw(11) << "kind" << std::setw(8) << "d" << std::setw(8)
      << "g" << std::setw(6) << "p0" << std::setw(8) << "p1"
      << "equivalent\n";
  for (const auto& f : rows)
    out << std::setw(18) << f.name << std::setw(11) << to_string(f.kind) << std::setw(8) << to_string(f.d)
        << std::setw(8) << to_string(f.g) << std::setw(6) << to_string(f.p0) << std::setw(8) << to_string(f.p1)
        << partner_name(f) << '\n';
  return 0;
}

int cmd_term(std::ostream& out, bool json, const std::string& selector, std::uint64_t n) {
  if (n > kMaxTermIndex) throw IndexTooLarge("term index is capped at " + std::to_string(kMaxTermIndex));
  Family f = resolve_family(selector);
  require_valid(f);
  const Poly t = compute_term(f, n);
  out << (json ? to_json(t).dump() : to_string(t)) << '\n';
  return 0;
}

bool same_family(const Family& a, const Family& b) {
  return a.kind == b.kind && same_recurrence(a, b) && a.p0 == b.p0 && a.p1 == b.p1;
}

int cmd_gcd(std::ostream& out, std::ostream& err, bool json, bool check, const std::string& sel_a, std::uint64_t m,
            const std::string& sel_b, std::uint64_t n) {
  if (m > kMaxGcdIndex || n > kMaxGcdIndex)
    throw IndexTooLarge("gcd indices are capped at " + std::to_string(kMaxGcdIndex));
  Family fa = resolve_family(sel_a);
  Family fb = resolve_family(sel_b);
  require_valid(fa);
  require_valid(fb);
  SequenceCache a(fa);
  SequenceCache b(fb);

  std::optional<ClosedForm> closed;
  if (m == 0 || n == 0) {
    err << "warning: closed forms need positive indices; running the oracle only\n";
  } else if (same_family(fa, fb)) {
    if (fa.kind == Kind::fibonacci)
      closed = ClosedForm{gcd_fib_closed(a, m, n), CaseTag::fib_strong};
    else
      closed = gcd_lucas_closed(a, m, n);
  } else if (fa.kind != fb.kind && same_recurrence(fa, fb)) {
    closed = fa.kind == Kind::fibonacci ? gcd_mixed_closed(a, b, m, n) : gcd_mixed_closed(b, a, n, m);
  } else {
    err << "warning: \"" << fa.name << "\" and \"" << fb.name
        << "\" are not the same family or an equivalent pair; running the oracle only\n";
  }

  GcdReport report;
  if (closed) {
    report = compare(a, b, m, n, closed->value, closed->tag);
  } else {
    report.m = m;
    report.n = n;
    report.oracle = oracle_gcd(a, b, m, n);
    report.agrees = true;
  }

  if (json) {
    out << to_json(report).dump() << '\n';
  } else {
    if (report.closed_form) {
      out << "closed_form: " << to_string(*report.closed_form) << '\n';
      out << "case: " << to_string(*report.case_tag) << '\n';
    }
    if (check || !report.closed_form) out << "oracle: " << to_string(report.oracle) << '\n';
    if (report.closed_form) out << "agrees: " << (report.agrees ? "true" : "false") << '\n';
  }
  return report.agrees ? 0 : 1;
}

std::vector<Family> select_families(const std::string& selector, std::uint64_t seed) {
  if (selector == "builtin") return builtin_families();
  std::vector<Family> out;
  if (selector.rfind("random:", 0) == 0) {
    std::size_t count = 0;
    try {
      count = std::stoul(selector.substr(7));
    } catch (const std::exception&) {
      throw ParseError("bad family selector \"" + selector + "\"");
    }
    for (auto& [fib, lucas] : random_pairs(count, seed)) {
      out.push_back(std::move(fib));
      out.push_back(std::move(lucas));
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = selector.find(',', start);
    out.push_back(builtin_family(selector.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_verify(std::ostream& out, bool json, bool summary_only, const std::string& identity,
               const std::string& families, std::uint64_t max_index, std::uint64_t seed) {
  if (max_index > kMaxTableIndex)
    throw IndexTooLarge("verify sweeps are capped at --max-index " + std::to_string(kMaxTableIndex));
  IdentityGrid grid;
  grid.groups = parse_identity_filter(identity);
  grid.max_index = max_index;
  grid.threads = thread_count_from_env();
  const auto reports = run_identity_grid(select_families(families, seed), grid);

  std::vector<std::string> order;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  for (const auto& r : reports) {
    if (!summary_only) out << to_json(r).dump() << '\n';
    auto [it, inserted] = tally.try_emplace(r.identity_id);
    if (inserted) order.push_back(r.identity_id);
    ++(r.pass ? it->second.first : it->second.second);
    ++(r.pass ? passed : failed);
  }
  if (json) {
    Json per = Json::object();
    for (const auto& id : order) per[id] = {{"passed", tally[id].first}, {"failed", tally[id].second}};
    Json summary = {{"passed", passed}, {"failed", failed}, {"identities", std::move(per)}};
    out << Json{{"summary", std::move(summary)}}.dump() << '\n';
  } else {
    for (const auto& id : order)
      out << std::left << std::setw(24) << id << tally[id].first << " passed, " << tally[id].second << " failed\n";
    out << std::left << std::setw(24) << "total" << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int cmd_table(std::ostream& out, bool json, int which, std::uint64_t max_index) {
  const auto rows = reproduce_table(which, max_index, thread_count_from_env());
  const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.ok(); });
  const char* first = which == 4 ? "equal_e2" : "dominant";
  const char* second = which == 4 ? "unequal_e2" : "otherwise";
  if (json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = {{"row", r.label}, {"comparisons", r.comparisons}, {"agreements", r.agreements}};
      if (which != 3) {
        j[first] = r.first_case;
        j[second] = r.second_case;
        j["literal_checks"] = r.literal_checks;
        j["literal_matches"] = r.literal_matches;
      }
      Json mismatches = Json::array();
      for (const auto& mm : r.mismatches) mismatches.push_back(to_json(mm));
      j["mismatches"] = std::move(mismatches);
      arr.push_back(std::move(j));
    }
    out << Json{{"table", which}, {"max_index", max_index}, {"rows", std::move(arr)}, {"ok", all_ok}}.dump()
        << '\n';
  } else {
    out << "table " << which << ", 1 <= m, n <= " << max_index << '\n';
    for (const auto& r : rows) {
      out << std::left << std::setw(36) << r.label << r.agreements << '/' << r.comparisons << " agree";
      if (which != 3)
        out << ", " << first << ' ' << r.first_case << ", " << second << ' ' << r.second_case << ", literal 1 "
            << r.literal_matches << '/' << r.literal_checks;
      out << '\n';
      for (const auto& mm : r.mismatches)
        out << "  mismatch m=" << mm.m << " n=" << mm.n << ": closed " << to_string(*mm.closed_form) << ", oracle "
            << to_string(mm.oracle) << '\n';
    }
    out << (all_ok ? "all rows agree" : "MISMATCH") << '\n';
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Fibonacci polynomials over Z[x]", "gfp"};
  app.require_subcommand(1);

  bool json = false;

  auto* families = app.add_subcommand("families", "List the builtin families");
  std::string kind_filter;
  families->add_flag("--json", json, "Machine-readable output");
  families->add_option("--kind", kind_filter, "Only one kind")->check(CLI::IsMember({"fibonacci", "lucas"}));

  auto* term = app.add_subcommand("term", "Print the n-th term of a family");
  std::string term_family;
  std::uint64_t term_n = 0;
  term->add_option("family", term_family, "Builtin name or inline JSON")->required();
  term->add_option("n", term_n, "Index")->required();
  term->add_flag("--json", json, "Machine-readable output");

  auto* gcd_cmd = app.add_subcommand("gcd", "gcd(A_m, B_n) by closed form and oracle");
  std::string fam_a;
  std::string fam_b;
  std::uint64_t gcd_m = 0;
  std::uint64_t gcd_n = 0;
  bool check = false;
  gcd_cmd->add_option("familyA", fam_a)->required();
  gcd_cmd->add_option("m", gcd_m)->required();
  gcd_cmd->add_option("familyB", fam_b)->required();
  gcd_cmd->add_option("n", gcd_n)->required();
  gcd_cmd->add_flag("--check", check, "Print the oracle value");
  gcd_cmd->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run the identity catalog over an index grid");
  std::string identity = "all";
  std::string family_sel = "builtin";
  std::uint64_t verify_max = 10;
  std::uint64_t seed = 0;
  bool summary_only = false;
  verify->add_option("--identity", identity, "all or a comma separated list of identity groups");
  verify->add_option("--families", family_sel, "builtin, random:k or a comma separated list of names");
  verify->add_option("--max-index", verify_max, "Largest index in the grid");
  verify->add_option("--seed", seed, "Seed for random families");
  verify->add_flag("--summary-only", summary_only, "Suppress per-report lines");
  verify->add_flag("--json", json, "Machine-readable summary");

  auto* table = app.add_subcommand("table", "Reproduce gcd table 3, 4 or 5");
  int which = 0;
  std::uint64_t table_max = 24;
  table->add_option("which", which, "3, 4 or 5")->required();
  table->add_option("--max-index", table_max, "Sweep 1 <= m, n <= N");
  table->add_flag("--json", json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*families) return cmd_families(out, json, kind_filter);
    if (*term) return cmd_term(out, json, term_family, term_n);
    if (*gcd_cmd) return cmd_gcd(out, err, json, check, fam_a, gcd_m, fam_b, gcd_n);
    if (*verify) return cmd_verify(out, json, summary_only, identity, family_sel, verify_max, seed);
    return cmd_table(out, json, which, table_max);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gfp
