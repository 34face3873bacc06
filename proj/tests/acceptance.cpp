// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "phigroup/constructions.hpp"
#include "phigroup/numtheory.hpp"
#include "phigroup/powergraph.hpp"
#include "phigroup/verify.hpp"

using namespace phigroup;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string failing(const VerdictMap& v) {
  for (const auto& [id, verdict] : v)
    if (!verdict.pass) {
      std::string s = id;
      if (verdict.counterexample) s += " at " + verdict.counterexample->group + ": " + verdict.counterexample->detail;
      return s;
    }
  return {};
}

Outcome table1_values() {
  const std::vector<std::string> first{"3", "6", "9", "12", "72/5", "84/5", "189/10", "21", "252/11"};
  const std::vector<std::string> skip{"2", "9/2", "8", "54/5", "14", "81/5", "56/3", "1134/55"};
  Outcome o;
  const auto rows = table1();
  o.require(rows.size() == 9, "row count");
  for (std::size_t i = 0; i < rows.size() && i < 9; ++i) {
    o.require(rows[i].q_first == Rational::parse(first[i]), "Q(F" + std::to_string(i + 1) + ") = " + rows[i].q_first.str());
    o.require(q_of_primes(first_primes(i + 1)) == Rational::parse(first[i]), "q_of over F" + std::to_string(i + 1));
    if (i < 8) {
      o.require(rows[i].q_skip && *rows[i].q_skip == Rational::parse(skip[i]), "Q(S" + std::to_string(i + 1) + ")");
      o.require(q_of_primes(skip_primes(i + 1)) == Rational::parse(skip[i]), "q_of over S" + std::to_string(i + 1));
    }
  }
  o.detail = o.ok ? "17 values exact" : o.detail;
  return o;
}

Outcome coincidence() {
  Outcome o;
  const auto a = phi_of_group(abelian(std::vector<std::uint64_t>{4, 4}));
  const auto b = phi_of_group(direct_product(cyclic(2), dicyclic(2)));
  o.require(a == 28, "phi(C4xC4) = " + std::to_string(a));
  o.require(b == 28, "phi(C2xDic2) = " + std::to_string(b));
  if (o.ok) o.detail = "phi(C4xC4) = phi(C2xQ8) = 28";
  return o;
}

Outcome a4_tight() {
  Outcome o;
  const auto a4 = alternating(4);
  o.require(q_of(12) == 6, "Q(12)");
  std::uint64_t best = 0;
  for (Element g = 0; g < a4.order(); ++g) best = std::max(best, totient(a4.element_order(g)));
  o.require(best == 2, "max phi(o(g)) = " + std::to_string(best));
  o.require(q_of(12) * Rational(best) == 12, "n != Q phi(o(g))");
  o.require(count_sylow(a4, 3) == 4, "Sylow-3 count");
  const auto rep = verify_criterion(a4);
  o.require(rep.outcomes.empty() && rep.passed(), "criterion report");
  if (o.ok) o.detail = "Q = 6, max phi = 2, 12 = Q*2, four Sylow 3-subgroups";
  return o;
}

Outcome main_sweep() {
  Outcome o;
  std::size_t groups = 0;
  for (const auto& r : verify_main_range(1, 100, {}, jobs())) {
    o.require(r.passed(), "n = " + std::to_string(r.n) + ": " + failing(r.verdicts));
    o.require(!r.rows.empty() && r.rows.front().is_cyclic && r.rows.front().phi_G == oracle::phi_cyclic(r.n),
              "cyclic row at n = " + std::to_string(r.n));
    for (const auto& row : r.rows) {
      o.require(row.phi_G <= r.rows.front().phi_G && (row.phi_G == r.rows.front().phi_G) == row.is_cyclic,
                row.name + " against C" + std::to_string(r.n));
      o.require(row.undirected_edges <= r.rows.front().undirected_edges, row.name + " edge count");
    }
    groups += r.rows.size();
  }
  if (o.ok) o.detail = std::to_string(groups) + " catalog groups, 0 counterexamples";
  return o;
}

Outcome numtheory() {
  Outcome o;
  const auto v = verify_numtheory_sweep(100000, jobs());
  for (const char* id : {"eq-5", "eq-6", "lem-2.6", "lem-2.4ii"}) {
    auto it = v.find(id);
    o.require(it != v.end() && it->second.pass && !it->second.vacuous(), id);
  }
  o.require(v.at("eq-5").checked == 100000, "eq-5 coverage");
  o.require(v.at("eq-6").checked == 99999, "eq-6 coverage");
  std::size_t non_power = 0, odd = 0;
  for (std::uint64_t n = 2; n <= 100000; ++n) {
    non_power += !is_power_of_two(n);
    odd += n % 2;
  }
  o.require(v.at("lem-2.6").checked == non_power, "lem-2.6 coverage");
  o.require(v.at("lem-2.4ii").checked == odd, "lem-2.4ii coverage");
  if (o.ok)
    o.detail = "n <= 100000: eq-5 " + std::to_string(v.at("eq-5").checked) + ", eq-6 " +
               std::to_string(v.at("eq-6").checked) + ", lem-2.6 " + std::to_string(non_power) + ", lem-2.4ii " +
               std::to_string(odd);
  return o;
}

Outcome criterion() {
  Outcome o;
  std::size_t groups = 0, witnessed = 0, contra = 0;
  for (const auto& r : verify_criterion_range(1, 200, {}, jobs())) {
    ++groups;
    o.require(r.passed(), r.group + ": " + failing(r.verdicts));
    for (const auto& w : r.outcomes)
      if (r.n > 2) o.require(w.unique && w.normal && w.contained_in_gen, r.group + " witness " + std::to_string(w.witness));
    witnessed += !r.outcomes.empty();
    contra += r.sylow_count > 1;
    if (r.sylow_count > 1) o.require(r.outcomes.empty(), r.group + " has a witness and several Sylow subgroups");
  }
  if (o.ok)
    o.detail = std::to_string(groups) + " groups, " + std::to_string(witnessed) + " with witnesses, " +
               std::to_string(contra) + " contrapositive instances";
  return o;
}

Outcome product_lemmas() {
  Outcome o;
  std::size_t specs = 0;
  for (std::uint64_t a = 1; a <= 200; ++a)
    for (std::uint64_t b = 1; a * b <= 200; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (auto r : enumerate_semidirect_units(a, b)) {
        const auto v = verify_semidirect_lemmas({a, b, r});
        o.require(all_pass(v), "sdp:" + std::to_string(a) + ":" + std::to_string(b) + ":" + std::to_string(r) + " " + failing(v));
        ++specs;
      }
    }

  using V = std::vector<std::uint64_t>;
  const std::vector<std::pair<FiniteGroup, FiniteGroup>> grid{
      {cyclic(2), cyclic(3)},          {cyclic(4), cyclic(9)},          {symmetric(3), cyclic(5)},
      {alternating(4), cyclic(5)},     {dihedral(5), cyclic(3)},        {abelian(V{2, 2}), cyclic(4)},
      {abelian(V{2, 2}), symmetric(3)}, {cyclic(2), dicyclic(2)},        {abelian(V{2, 2, 2}), dihedral(4)},
      {cyclic(2), cyclic(2)},          {cyclic(6), dihedral(5)},        {cyclic(2), cyclic(6)},
      {symmetric(3), cyclic(10)},      {cyclic(6), cyclic(4)},          {dihedral(3), dihedral(7)},
      {cyclic(4), cyclic(4)},          {cyclic(3), cyclic(3)},          {dicyclic(2), cyclic(4)},
      {alternating(4), cyclic(6)},     {abelian(V{2, 2}), abelian(V{2, 2})}};
  VerdictMap merged;
  for (const auto& [u, t] : grid) {
    const auto v = verify_product_lemmas(u, t);
    o.require(all_pass(v), u.name() + " x " + t.name() + ": " + failing(v));
    merge_verdicts(merged, v);
  }
  for (const char* id : {"lem-3.1-coprime", "lem-3.1-elem2", "lem-3.1-twice-odd"})
    o.require(merged.count(id) && !merged.at(id).vacuous(), std::string(id) + " never exercised");
  if (o.ok)
    o.detail = std::to_string(specs) + " semidirect specs; 20 pairs (coprime " +
               std::to_string(merged.at("lem-3.1-coprime").checked) + ", elem2 " +
               std::to_string(merged.at("lem-3.1-elem2").checked) + ", twice-odd " +
               std::to_string(merged.at("lem-3.1-twice-odd").checked) + ")";
  return o;
}

Outcome degree_law() {
  Outcome o;
  std::size_t elements = 0;
  for (std::uint64_t n = 1; n <= 100; ++n)
    for (const auto& g : catalog(n)) {
      const auto pg = PowerGraph::build(g);
      std::vector<std::set<Element>> gen(n);
      for (Element x = 0; x < n; ++x) gen[x] = oracle::powers(g, x);
      for (Element x = 0; x < n; ++x) {
        std::size_t mutual = 0;
        for (Element y = 0; y < n; ++y) mutual += y != x && gen[x].count(y) && gen[y].count(x);
        const auto want = oracle::totient(oracle::order(g, x)) - 1;
        o.require(mutual == want, g.name() + " oracle at " + std::to_string(x));
        o.require(pg.undirected_degree(x) == mutual, g.name() + " degree at " + std::to_string(x));
        ++elements;
      }
    }
  if (o.ok) o.detail = std::to_string(elements) + " elements";
  return o;
}

Outcome table2() {
  Outcome o;
  const auto rows = table2_spot_check();
  const auto v = table2_verdicts(rows);
  o.require(all_pass(v), failing(v));
  std::size_t flagged = 0;
  for (const auto& r : rows) {
    o.require(r.relation_reproduced, "k=" + std::to_string(r.spec.k) + " n/o(g)=" + std::to_string(r.spec.cofactor));
    if (r.spec.printed_value == "7.4") {
      o.require(r.ratio == Rational::parse("15/2") && r.q == 9 && r.relation == '<', "7.4 row");
      o.require(!r.printed_value_matches, "7.4 row not flagged");
    }
    flagged += !r.printed_value_matches;
  }
  if (o.ok)
    o.detail = std::to_string(rows.size()) + " rows reproduced; " + std::to_string(flagged) +
               " printed values flagged (7.4 -> 15/2 < 9)";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "special values of Q", 1, table1_values},
      {2, "phi coincidence at order 16", 1, coincidence},
      {3, "A4 tightness", 1, a4_tight},
      {4, "main theorem for n <= 100", 60, main_sweep},
      {5, "number theory sweep to 1e5", 60, numtheory},
      {6, "normal Sylow criterion for n <= 200", 300, criterion},
      {7, "product and semidirect lemmas", 60, product_lemmas},
      {8, "power graph degree law for n <= 100", 60, degree_law},
      {9, "exceptional-case spot checks", 1, table2},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    failures += !o.ok;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
                c.limit_s);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
