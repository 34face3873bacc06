#include "phigroup/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "phigroup/constructions.hpp"
#include "phigroup/group_io.hpp"
#include "phigroup/numtheory.hpp"
#include "phigroup/powergraph.hpp"
#include "phigroup/report.hpp"
#include "phigroup/verify.hpp"

namespace phigroup::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint64_t n = 0;
  std::string range;
  std::string group;
  std::string format = "text";
  std::string out_path;
  std::size_t cap = kDefaultOrderCap;
  unsigned jobs = 1;
  std::uint64_t limit = 0;
};

struct Range {
  std::uint64_t lo, hi;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range expects A..B, got '" + text + "'");
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw UsageError("--range expects positive bounds, got '" + text + "'");
    return v;
  };
  const std::string_view view(text);
  Range r{number(view.substr(0, dots)), number(view.substr(dots + 2))};
  if (r.hi < r.lo) throw UsageError("--range upper bound is below the lower bound");
  return r;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("format '" + o.format + "' is not available for this command (use " + list + ")");
}

GroupLimits limits_of(const Options& o) {
  GroupLimits limits;
  limits.order_cap = o.cap;
  return limits;
}

FiniteGroup require_group(const Options& o) {
  if (o.group.empty()) throw UsageError("--group SPEC is required");
  return parse_group_spec(o.group, limits_of(o));
}

Range n_or_range(const Options& o) {
  if (!o.range.empty() && o.n != 0) throw UsageError("give either --n or --range, not both");
  if (!o.range.empty()) return parse_range(o.range);
  if (o.n == 0) throw UsageError("--n N or --range A..B is required");
  return {o.n, o.n};
}

struct Output {
  std::string text;
  int code = kOk;
};

Output cmd_phi(const Options& o) {
  require_format(o, {"text", "json"});
  if (!o.group.empty() && o.n != 0) throw UsageError("give either --group or --n, not both");
  nlohmann::ordered_json j;
  std::string value;
  if (!o.group.empty()) {
    const FiniteGroup g = require_group(o);
    value = std::to_string(phi_of_group(g));
    j = {{"group", g.name()}, {"order", g.order()}, {"phi", phi_of_group(g)}, {"is_cyclic", is_cyclic(g)}};
  } else {
    if (o.n == 0) throw UsageError("--group SPEC or --n N is required");
    value = phi_cyclic_sum(o.n).str();
    j = {{"group", "C" + std::to_string(o.n)}, {"order", o.n}, {"phi", value}, {"is_cyclic", true}};
  }
  return {o.format == "json" ? j.dump(2) + "\n" : value + "\n"};
}

Output cmd_q(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.n == 0) throw UsageError("--n N is required");
  const Rational q = q_of(o.n);
  if (o.format == "json") {
    nlohmann::ordered_json j = {{"n", o.n}, {"primes", factorize(o.n).primes()}, {"Q", q.str()}};
    return {j.dump(2) + "\n"};
  }
  return {q.str() + "\n"};
}

Output cmd_graph(const Options& o) {
  require_format(o, {"text", "json", "dot"});
  const PowerGraph pg = PowerGraph::build(require_group(o));
  if (o.format == "dot") return {export_dot(pg)};
  if (o.format == "json") return {export_json(pg)};
  std::ostringstream os;
  os << "group " << pg.group().name() << ": n = " << pg.group().order()
     << ", directed edges = " << pg.directed_edge_count() << ", undirected edges = " << pg.undirected_edge_count()
     << "\n";
  return {os.str()};
}

Output cmd_verify_main(const Options& o) {
  require_format(o, {"text", "json", "csv"});
  const Range r = n_or_range(o);
  const auto reports = verify_main_range(r.lo, r.hi, limits_of(o), o.jobs);
  bool pass = true;
  for (const auto& rep : reports) pass = pass && rep.passed();
  std::string text = o.format == "json" ? reports_json(reports) : o.format == "csv" ? reports_csv(reports)
                                                                                     : reports_text(reports);
  return {std::move(text), pass ? kOk : kVerdictFailed};
}

Output cmd_criterion(const Options& o) {
  require_format(o, {"text", "json"});
  std::vector<CriterionReport> reports;
  if (!o.group.empty()) {
    if (!o.range.empty() || o.n != 0) throw UsageError("give either --group or a catalog range, not both");
    reports.push_back(verify_criterion(require_group(o)));
  } else {
    const Range r = n_or_range(o);
    reports = verify_criterion_range(r.lo, r.hi, limits_of(o), o.jobs);
  }
  bool pass = true;
  for (const auto& rep : reports) pass = pass && rep.passed();
  return {o.format == "json" ? criterion_json(reports) : criterion_text(reports), pass ? kOk : kVerdictFailed};
}

Output cmd_tables(const Options& o) {
  require_format(o, {"text", "json"});
  const auto t1 = table1();
  const auto t2 = table2_spot_check();
  VerdictMap verdicts = table2_verdicts(t2);
  verdicts["table-1"] = verify_table1();
  const std::string text = o.format == "json" ? tables_json(t1, t2, verdicts) : tables_text(t1, t2, verdicts);
  return {text, all_pass(verdicts) ? kOk : kVerdictFailed};
}

Output cmd_sweep(const Options& o) {
  require_format(o, {"text", "json"});
  if (o.limit == 0) throw UsageError("--limit N is required");
  const VerdictMap verdicts = verify_numtheory_sweep(o.limit, o.jobs);
  return {o.format == "json" ? verdicts_json(verdicts) : verdicts_text(verdicts),
          all_pass(verdicts) ? kOk : kVerdictFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Totient sums, power graphs and normal Sylow checks for finite groups", "phigroup"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json, csv or dot (per command)");
    sub->add_option("--out", o.out_path, "write output to PATH instead of stdout");
    sub->add_option("--cap", o.cap, "order cap for constructed groups")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", o.jobs, "worker threads for range commands")->check(CLI::PositiveNumber);
  };

  auto* phi = app.add_subcommand("phi", "totient sum phi(G), or phi(C_n) with --n");
  phi->add_option("--group", o.group, "group spec");
  phi->add_option("--n", o.n, "order of the cyclic group")->check(CLI::PositiveNumber);
  common(phi);

  auto* q = app.add_subcommand("q", "Q = prod (p+1)/(p-1) over the primes dividing n");
  q->add_option("--n", o.n, "positive integer")->check(CLI::PositiveNumber);
  common(q);

  auto* graph = app.add_subcommand("graph", "directed power graph of a group");
  graph->add_option("--group", o.group, "group spec");
  common(graph);

  auto* verify = app.add_subcommand("verify-main", "compare phi(G) with phi(C_n) over the catalog");
  verify->add_option("--n", o.n, "group order")->check(CLI::PositiveNumber);
  verify->add_option("--range", o.range, "orders A..B");
  common(verify);

  auto* criterion = app.add_subcommand("criterion", "witnesses n < Q phi(o(g)) and the normal Sylow criterion");
  criterion->add_option("--group", o.group, "group spec");
  criterion->add_option("--n", o.n, "catalog order")->check(CLI::PositiveNumber);
  criterion->add_option("--range", o.range, "catalog orders A..B");
  common(criterion);

  auto* tables = app.add_subcommand("tables", "special values of Q and the exceptional-case spot checks");
  common(tables);

  auto* sweep = app.add_subcommand("sweep", "number-theoretic statements over 1..limit");
  sweep->add_option("--limit,--n", o.limit, "upper end of the sweep (<= 10^6)")->check(CLI::Range(1, 1'000'000));
  common(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  Output result;
  try {
    if (phi->parsed()) result = cmd_phi(o);
    else if (q->parsed()) result = cmd_q(o);
    else if (graph->parsed()) result = cmd_graph(o);
    else if (verify->parsed()) result = cmd_verify_main(o);
    else if (criterion->parsed()) result = cmd_criterion(o);
    else if (tables->parsed()) result = cmd_tables(o);
    else result = cmd_sweep(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupSpecError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const OrderCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GroupAxiomError& e) {
    err << "error: invalid group table: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  if (o.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsageError;
    }
    file << result.text;
  }
  if (result.code == kVerdictFailed) err << "one or more verdicts failed\n";
  return result.code;
}

}  // namespace phigroup::cli
