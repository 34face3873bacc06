#include "phigroup/report.hpp"

#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace phigroup {

using ojson = nlohmann::ordered_json;

namespace {

std::string join(std::span<const Element> xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

ojson verdict_to_json(const Verdict& v) {
  ojson j;
  j["pass"] = v.pass;
  j["checked"] = v.checked;
  if (v.counterexample) {
    j["counterexample"] = {{"group", v.counterexample->group},
                           {"elements", v.counterexample->elements},
                           {"detail", v.counterexample->detail}};
  }
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

ojson verdicts_to_json(const VerdictMap& verdicts) {
  ojson j = ojson::object();
  for (const auto& [id, v] : verdicts) j[id] = verdict_to_json(v);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string verdicts_text(const VerdictMap& verdicts) {
  std::ostringstream os;
  for (const auto& [id, v] : verdicts) {
    if (v.pass) {
      os << "PASS " << id << " (checked " << v.checked << ")";
      if (v.vacuous()) os << " vacuous";
    } else {
      os << "FAIL " << id << ": " << v.counterexample->group;
      if (!v.counterexample->elements.empty()) os << " [" << join(v.counterexample->elements, " ") << "]";
      os << " " << v.counterexample->detail;
    }
    os << "\n";
    for (const auto& note : v.notes) os << "  note: " << note << "\n";
  }
  return os.str();
}

std::string verdicts_json(const VerdictMap& verdicts) { return verdicts_to_json(verdicts).dump(2) + "\n"; }

std::string reports_csv(std::span<const VerificationReport> reports) {
  std::ostringstream os;
  os << "n,group,phi_G,is_cyclic,undirected_edges,verdict,max_phi_order,witnesses\n";
  for (const auto& r : reports)
    for (const auto& row : r.rows)
      os << r.n << ',' << csv_field(row.name) << ',' << row.phi_G << ',' << (row.is_cyclic ? "true" : "false") << ','
         << row.undirected_edges << ',' << (row.pass ? "pass" : "fail") << ',' << row.max_phi_order << ','
         << join(row.witnesses, " ") << '\n';
  return os.str();
}

std::string reports_json(std::span<const VerificationReport> reports) {
  ojson j;
  bool pass = true;
  ojson list = ojson::array();
  for (const auto& r : reports) {
    ojson rows = ojson::array();
    for (const auto& row : r.rows)
      rows.push_back({{"group", row.name},
                      {"phi_G", row.phi_G},
                      {"is_cyclic", row.is_cyclic},
                      {"undirected_edges", row.undirected_edges},
                      {"max_phi_order", row.max_phi_order},
                      {"witnesses", row.witnesses},
                      {"pass", row.pass}});
    list.push_back({{"n", r.n}, {"rows", rows}, {"verdicts", verdicts_to_json(r.verdicts)}});
    pass = pass && r.passed();
  }
  j["pass"] = pass;
  j["reports"] = list;
  return j.dump(2) + "\n";
}

std::string reports_text(std::span<const VerificationReport> reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "n = " << r.n << "\n";
    for (const auto& row : r.rows)
      os << "  " << std::left << std::setw(16) << row.name << " phi=" << row.phi_G
         << " cyclic=" << (row.is_cyclic ? "yes" : "no") << " edges=" << row.undirected_edges
         << " witnesses=" << row.witnesses.size() << (row.pass ? "" : "  FAIL") << "\n";
    std::istringstream verdict_lines(verdicts_text(r.verdicts));
    for (std::string line; std::getline(verdict_lines, line);) os << "  " << line << "\n";
  }
  return os.str();
}

std::string criterion_summary(const CriterionReport& r) {
  std::ostringstream os;
  const Rational n(r.n);
  if (r.outcomes.empty()) {
    os << "no witness; ";
    if (r.max_q_phi == n)
      os << "n = Qφ(o(g)) = " << r.n;
    else
      os << "max Qφ(o(g)) = " << r.max_q_phi << " < n = " << r.n;
  } else {
    os << r.outcomes.size() << " witness" << (r.outcomes.size() == 1 ? "" : "es") << "; max Qφ(o(g)) = " << r.max_q_phi
       << " > n = " << r.n;
  }
  if (r.n > 1) os << "; Sylow-" << r.largest_prime << " count = " << r.sylow_count;
  return os.str();
}

std::string criterion_text(std::span<const CriterionReport> reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.group << " (n = " << r.n << ", Q = " << r.q << ")\n";
    os << "  " << criterion_summary(r) << "\n";
    for (const auto& o : r.outcomes)
      os << "  witness " << o.witness << ": Sylow-" << o.sylow_prime << " of order " << o.sylow_order
         << " unique=" << (o.unique ? "yes" : "no") << " normal=" << (o.normal ? "yes" : "no")
         << " in<g>=" << (o.contained_in_gen ? "yes" : "no") << "\n";
    std::istringstream verdict_lines(verdicts_text(r.verdicts));
    for (std::string line; std::getline(verdict_lines, line);) os << "  " << line << "\n";
  }
  return os.str();
}

std::string criterion_json(std::span<const CriterionReport> reports) {
  ojson list = ojson::array();
  bool pass = true;
  for (const auto& r : reports) {
    ojson outcomes = ojson::array();
    for (const auto& o : r.outcomes)
      outcomes.push_back({{"witness", o.witness},
                          {"sylow_prime", o.sylow_prime},
                          {"sylow_order", o.sylow_order},
                          {"unique", o.unique},
                          {"normal", o.normal},
                          {"contained_in_gen", o.contained_in_gen}});
    list.push_back({{"group", r.group},
                    {"n", r.n},
                    {"Q", r.q.str()},
                    {"max_q_phi", r.max_q_phi.str()},
                    {"largest_prime", r.largest_prime},
                    {"sylow_count", r.sylow_count},
                    {"summary", criterion_summary(r)},
                    {"witnesses", outcomes},
                    {"verdicts", verdicts_to_json(r.verdicts)}});
    pass = pass && r.passed();
  }
  ojson j;
  j["pass"] = pass;
  j["groups"] = list;
  return j.dump(2) + "\n";
}

std::string table2_phrase(const Table2Row& row) {
  const std::string shown = row.printed_value_matches ? row.spec.printed_value : row.ratio.str();
  std::string phrase = shown + " " + row.relation + " Q " + (row.relation_reproduced ? "reproduced" : "NOT reproduced");
  if (!row.printed_value_matches) phrase += "; printed " + row.spec.printed_value + " unmatched";
  return phrase;
}

std::string tables_text(const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2,
                        const VerdictMap& verdicts) {
  std::ostringstream os;
  os << "Special values of Q\n";
  os << std::left << std::setw(4) << "l" << std::setw(7) << "pi(l)" << std::setw(10) << "Q(F_l)" << "Q(S_l)\n";
  for (const auto& row : t1)
    os << std::setw(4) << row.ell << std::setw(7) << row.prime << std::setw(10) << row.q_first.str()
       << (row.q_skip ? row.q_skip->str() : "*") << "\n";

  os << "\nExceptional cases at minimal exponents\n";
  os << std::setw(3) << "k" << std::setw(8) << "n/o(g)" << std::setw(6) << "case" << std::setw(10) << "n"
     << std::setw(9) << "o(g)" << std::setw(9) << "phi(o)" << std::setw(16) << "n/phi(o(g))" << std::setw(8) << "Q"
     << "verdict\n";
  for (const auto& row : t2)
    os << std::setw(3) << row.spec.k << std::setw(8) << row.spec.cofactor << std::setw(6) << row.spec.case_label
       << std::setw(10) << row.n.str() << std::setw(9) << row.order_g.str() << std::setw(9) << row.phi_order.str()
       << std::setw(16) << row.ratio.str() << std::setw(8) << row.q.str() << table2_phrase(row) << "\n";
  os << "\n" << verdicts_text(verdicts);
  return os.str();
}

std::string tables_json(const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2,
                        const VerdictMap& verdicts) {
  ojson table1 = ojson::array();
  for (const auto& row : t1)
    table1.push_back({{"l", row.ell},
                      {"prime", row.prime},
                      {"Q_F", row.q_first.str()},
                      {"Q_S", row.q_skip ? ojson(row.q_skip->str()) : ojson(nullptr)}});
  ojson table2 = ojson::array();
  for (const auto& row : t2)
    table2.push_back({{"k", row.spec.k},
                      {"n_over_order", row.spec.cofactor},
                      {"case", row.spec.case_label},
                      {"n", row.n.str()},
                      {"order_g", row.order_g.str()},
                      {"phi_order", row.phi_order.str()},
                      {"ratio", row.ratio.str()},
                      {"ratio_floor", row.ratio_floor.str()},
                      {"Q", row.q.str()},
                      {"relation", std::string(1, row.relation)},
                      {"printed", row.spec.printed_value},
                      {"printed_relation", std::string(1, row.spec.printed_relation)},
                      {"relation_reproduced", row.relation_reproduced},
                      {"printed_value_matches", row.printed_value_matches},
                      {"verdict", table2_phrase(row)},
                      {"notes", row.notes}});
  ojson j;
  j["table1"] = table1;
  j["table2"] = table2;
  j["verdicts"] = verdicts_to_json(verdicts);
  return j.dump(2) + "\n";
}

}  // namespace phigroup
