#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phigroup/constructions.hpp"
#include "phigroup/group.hpp"
#include "phigroup/rational.hpp"

namespace phigroup {

struct Counterexample {
  std::string group;
  std::vector<Element> elements;
  std::string detail;
};

/// Outcome of one checked statement, accumulated over every instance it was
/// evaluated on. A failing verdict always carries the first counterexample.
struct Verdict {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  bool vacuous() const noexcept { return checked == 0; }

  template <typename MakeCounterexample>
  void check(bool ok, MakeCounterexample&& make) {
    ++checked;
    if (ok) return;
    if (pass) counterexample = make();
    pass = false;
  }

  void note(std::string text);
  void merge(const Verdict& other);
};

/// Keyed by statement id ("thm-main", "lem-3.5", "table-2-k3", ...).
using VerdictMap = std::map<std::string, Verdict>;

void merge_verdicts(VerdictMap& into, const VerdictMap& from);
bool all_pass(const VerdictMap& verdicts);

struct GroupRow {
  std::string name;
  std::uint64_t phi_G = 0;
  bool is_cyclic = false;
  std::size_t undirected_edges = 0;
  std::uint64_t max_phi_order = 0;     ///< max over g of phi(o(g))
  std::vector<Element> witnesses;      ///< g with n < Q phi(o(g))
  bool pass = true;                    ///< this group satisfied every per-group check
};

struct VerificationReport {
  std::uint64_t n = 0;
  std::vector<GroupRow> rows;
  VerdictMap verdicts;

  bool passed() const { return all_pass(verdicts); }
};

/// For every catalog group G of order n: phi(C_n) >= phi(G) with equality
/// exactly when G is cyclic, the cyclic entry has the most undirected power
/// graph edges, and each edge count is (phi(G) - n) / 2.
VerificationReport verify_main(std::uint64_t n, const GroupLimits& limits = {});

/// verify_main over [lo, hi], fanned out over `jobs` threads; the result is
/// in ascending n.
std::vector<VerificationReport> verify_main_range(std::uint64_t lo, std::uint64_t hi,
                                                  const GroupLimits& limits = {}, unsigned jobs = 1);

/// Data for one witness g (n < Q phi(o(g))) about the Sylow p-subgroup,
/// p the largest prime divisor of n.
struct CriterionOutcome {
  Element witness = 0;
  std::uint64_t sylow_prime = 0;
  std::uint64_t sylow_order = 0;
  bool unique = false;
  bool normal = false;
  bool contained_in_gen = false;
};

/// Every witness of G, compared exactly as rationals.
std::vector<CriterionOutcome> check_witnesses(const FiniteGroup& g);

struct CriterionReport {
  std::string group;
  std::uint64_t n = 0;
  Rational q;
  Rational max_q_phi;           ///< max over g of Q phi(o(g))
  std::uint64_t largest_prime = 0;
  std::size_t sylow_count = 0;  ///< Sylow count for largest_prime; 0 when n == 1
  std::vector<CriterionOutcome> outcomes;
  VerdictMap verdicts;

  bool passed() const { return all_pass(verdicts); }
};

/// check_witnesses plus the consequences a witness must satisfy (non-identity
/// unless n = 2, generates G when n > 2 is a prime power, p^a | o(g),
/// n/o(g) < p when o(g) is even) and the contrapositive statement.
CriterionReport verify_criterion(const FiniteGroup& g);

/// verify_criterion over every catalog group with order in [lo, hi],
/// ascending by order then catalog position.
std::vector<CriterionReport> verify_criterion_range(std::uint64_t lo, std::uint64_t hi,
                                                    const GroupLimits& limits = {}, unsigned jobs = 1);

/// If the largest prime p | n has more than one Sylow p-subgroup, then
/// n >= Q phi(o(g)) for all g.
Verdict verify_contrapositive(const FiniteGroup& g);

/// phi(U x T) <= phi(U) phi(T), with equality checked whenever |U|, |T| are
/// coprime, a factor is an elementary abelian 2-group, or gcd(|U|, |T|) = 2
/// and a factor has order twice an odd number.
VerdictMap verify_product_lemmas(const FiniteGroup& u, const FiniteGroup& t, const GroupLimits& limits = {});

/// Compares C_a x|_r C_b with C_a x C_b element by element. Requires
/// gcd(a, b) = 1 and a valid r (std::invalid_argument otherwise).
VerdictMap verify_semidirect_lemmas(const SemidirectSpec& spec, const GroupLimits& limits = {});

/// One case of the exceptional-case table, instantiated at its smallest
/// admissible exponents.
struct Table2Case {
  unsigned k;                       ///< number of distinct primes
  std::uint64_t cofactor;           ///< n / o(g)
  unsigned two_exponent;            ///< exponent of 2 in n
  std::string case_label;           ///< "all", "a2=1", ...
  std::vector<unsigned> exponents;  ///< exponents of the first k primes
  std::string printed_value;        ///< value shown in the last column
  char printed_relation;            ///< '<', '=' or '>' against Q
};

struct Table2Row {
  Table2Case spec;
  BigInt n;
  BigInt order_g;
  BigInt phi_order;
  Rational ratio;  ///< n / phi(o(g))
  BigInt ratio_floor;
  Rational q;
  char relation = '?';
  bool relation_reproduced = false;
  bool printed_value_matches = false;
  std::vector<std::string> notes;
};

const std::vector<Table2Case>& table2_cases();
std::vector<Table2Row> table2_spot_check();
/// "table-2-k2" .. "table-2-k8" (printed relations against Q) and
/// "table-2-coverage" (the listed cofactors are exactly the even integers in
/// [p+1, Q)).
VerdictMap table2_verdicts(const std::vector<Table2Row>& rows);

/// Reference values of Q over F_l (l = 1..9) and S_l (l = 1..8).
const std::vector<std::string>& reference_q_first();
const std::vector<std::string>& reference_q_skip();
Verdict verify_table1();

/// Every number-theoretic statement over 1..limit (divisibility and
/// multiplicativity of the totient on the capped sub-ranges 1..10^4 and
/// 1..10^3). Rejects limit > 10^6.
VerdictMap verify_numtheory_sweep(std::uint64_t limit, unsigned jobs = 1);

}  // namespace phigroup
