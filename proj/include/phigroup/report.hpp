#pragma once

#include <span>
#include <string>
#include <vector>

#include "phigroup/numtheory.hpp"
#include "phigroup/verify.hpp"

namespace phigroup {

/// One line per verdict: "PASS id (checked N)" or "FAIL id: group [elements] detail".
std::string verdicts_text(const VerdictMap& verdicts);
std::string verdicts_json(const VerdictMap& verdicts);

/// Header `n,group,phi_G,is_cyclic,undirected_edges,verdict,max_phi_order,witnesses`.
std::string reports_csv(std::span<const VerificationReport> reports);
std::string reports_json(std::span<const VerificationReport> reports);
std::string reports_text(std::span<const VerificationReport> reports);

/// Summary line such as "no witness; n = Qφ(o(g)) = 12; Sylow-3 count = 4".
std::string criterion_summary(const CriterionReport& report);
std::string criterion_text(std::span<const CriterionReport> reports);
std::string criterion_json(std::span<const CriterionReport> reports);

/// Verdict phrase for one exceptional-case row, e.g. "6 = Q reproduced".
std::string table2_phrase(const Table2Row& row);
std::string tables_text(const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2, const VerdictMap& verdicts);
std::string tables_json(const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2, const VerdictMap& verdicts);

}  // namespace phigroup
