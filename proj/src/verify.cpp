#include "phigroup/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "phigroup/numtheory.hpp"
#include "phigroup/powergraph.hpp"

namespace phigroup {

void Verdict::note(std::string text) {
  if (std::find(notes.begin(), notes.end(), text) == notes.end()) notes.push_back(std::move(text));
}

void Verdict::merge(const Verdict& other) {
  checked += other.checked;
  if (pass && !other.pass) counterexample = other.counterexample;
  pass = pass && other.pass;
  for (const auto& n : other.notes) note(n);
}

void merge_verdicts(VerdictMap& into, const VerdictMap& from) {
  for (const auto& [id, verdict] : from) into[id].merge(verdict);
}

bool all_pass(const VerdictMap& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.pass; });
}

namespace {

Counterexample numeric_counterexample(std::uint64_t n, std::string detail) {
  return {"n=" + std::to_string(n), {}, std::move(detail)};
}

std::string str(const BigInt& v) { return v.str(); }

/// Q phi(o(g)) for every element, sharing one value per order.
std::vector<Rational> q_phi_by_element(const FiniteGroup& g, const Rational& q) {
  std::vector<Rational> by_order(g.order() + 1);
  std::vector<char> known(g.order() + 1, 0);
  std::vector<Rational> out;
  out.reserve(g.order());
  for (std::uint64_t o : g.element_orders()) {
    if (!known[o]) {
      by_order[o] = q * Rational(totient(o));
      known[o] = 1;
    }
    out.push_back(by_order[o]);
  }
  return out;
}

std::vector<Element> witnesses_of(const FiniteGroup& g, const std::vector<Rational>& q_phi) {
  std::vector<Element> out;
  const Rational n(g.order());
  for (Element x = 0; x < g.order(); ++x)
    if (n < q_phi[x]) out.push_back(x);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Main theorem over the catalog

VerificationReport verify_main(std::uint64_t n, const GroupLimits& limits) {
  VerificationReport report;
  report.n = n;
  const auto groups = catalog(n, limits);
  const BigInt phi_cn_big = phi_cyclic_sum(n);
  const auto phi_cn = phi_cn_big.convert_to<std::uint64_t>();
  const Rational q = q_of(n);

  auto& main = report.verdicts["thm-main"];
  auto& equality = report.verdicts["thm-main-equality"];
  auto& edges_law = report.verdicts["eq-3"];
  auto& degree_law = report.verdicts["cor-1.5"];
  auto& max_edges = report.verdicts["thm-1.6"];
  auto& cyclic_row = report.verdicts["report-cyclic-row"];

  for (const auto& g : groups) {
    const PowerGraph pg = PowerGraph::build(g);
    GroupRow row;
    row.name = g.name();
    row.phi_G = phi_of_group(g);
    row.is_cyclic = is_cyclic(g);
    row.undirected_edges = pg.undirected_edge_count();
    for (std::uint64_t o : g.element_orders()) row.max_phi_order = std::max(row.max_phi_order, totient(o));
    row.witnesses = witnesses_of(g, q_phi_by_element(g, q));

    auto fail_here = [&](std::string detail) {
      row.pass = false;
      return Counterexample{g.name(), {}, std::move(detail)};
    };
    main.check(row.phi_G <= phi_cn, [&] {
      return fail_here("phi(G) = " + std::to_string(row.phi_G) + " > phi(C_n) = " + std::to_string(phi_cn));
    });
    equality.check((row.phi_G == phi_cn) == row.is_cyclic, [&] {
      return fail_here("phi(G) = " + std::to_string(row.phi_G) + ", phi(C_n) = " + std::to_string(phi_cn) +
                       ", cyclic = " + (row.is_cyclic ? "yes" : "no"));
    });
    edges_law.check(2 * row.undirected_edges + n == row.phi_G, [&] {
      return fail_here(std::to_string(row.undirected_edges) + " undirected edges, phi(G) = " +
                       std::to_string(row.phi_G));
    });
    for (Element x = 0; x < g.order(); ++x) {
      const std::uint64_t expected = totient(g.element_order(x)) - 1;
      degree_law.check(pg.undirected_degree(x) == expected, [&] {
        auto cx = fail_here("degree " + std::to_string(pg.undirected_degree(x)) + " != phi(o(g)) - 1 = " +
                            std::to_string(expected));
        cx.elements = {x};
        return cx;
      });
    }
    if (row.is_cyclic)
      cyclic_row.check(row.phi_G == phi_cn, [&] {
        return fail_here("cyclic row phi = " + std::to_string(row.phi_G) + " but the divisor sum gives " +
                         std::to_string(phi_cn));
      });
    report.rows.push_back(std::move(row));
  }

  const auto cyclic_it =
      std::find_if(report.rows.begin(), report.rows.end(), [](const GroupRow& r) { return r.is_cyclic; });
  const std::uint64_t expected_edges = (phi_cn - n) / 2;
  max_edges.check(cyclic_it != report.rows.end(), [&] {
    return Counterexample{"C" + std::to_string(n), {}, "catalog has no cyclic entry"};
  });
  if (cyclic_it != report.rows.end()) {
    max_edges.check(cyclic_it->undirected_edges == expected_edges, [&] {
      return Counterexample{cyclic_it->name, {}, "cyclic edge count " + std::to_string(cyclic_it->undirected_edges) +
                                                     " != (phi(C_n) - n)/2 = " + std::to_string(expected_edges)};
    });
    for (auto& row : report.rows)
      max_edges.check(row.undirected_edges <= cyclic_it->undirected_edges, [&] {
        row.pass = false;
        return Counterexample{row.name, {}, std::to_string(row.undirected_edges) + " undirected edges exceed the cyclic " +
                                                std::to_string(cyclic_it->undirected_edges)};
      });
  }
  main.note("catalog coverage: " + std::to_string(groups.size()) + " group(s) of order " + std::to_string(n));
  return report;
}

std::vector<VerificationReport> verify_main_range(std::uint64_t lo, std::uint64_t hi, const GroupLimits& limits,
                                                  unsigned jobs) {
  if (lo == 0) lo = 1;
  if (hi < lo) return {};
  return detail::parallel_map(hi - lo + 1, jobs, [&](std::size_t i) { return verify_main(lo + i, limits); });
}

// ---------------------------------------------------------------------------
// Normal Sylow criterion

std::vector<CriterionOutcome> check_witnesses(const FiniteGroup& g) {
  const std::uint64_t n = g.order();
  const Factorization f = factorize(n);
  const Rational q = q_of_primes(f.primes());
  const auto witnesses = witnesses_of(g, q_phi_by_element(g, q));
  if (witnesses.empty()) return {};

  const std::uint64_t p = f.largest_prime();
  const Subgroup sylow = sylow_subgroup(g, p);
  const bool unique = count_sylow(g, p) == 1;
  const bool normal = is_normal(g, sylow);

  std::vector<CriterionOutcome> out;
  for (Element x : witnesses)
    out.push_back({x, p, sylow.order(), unique, normal, sylow.is_subset_of(cyclic_subgroup(g, x))});
  return out;
}

Verdict verify_contrapositive(const FiniteGroup& g) {
  Verdict v;
  const std::uint64_t n = g.order();
  if (n == 1) {
    v.note("trivial group: no prime divisor");
    return v;
  }
  const Factorization f = factorize(n);
  const std::uint64_t p = f.largest_prime();
  const std::size_t count = count_sylow(g, p);
  if (count <= 1) {
    v.note("vacuous: unique Sylow " + std::to_string(p) + "-subgroup");
    return v;
  }
  const Rational q = q_of_primes(f.primes());
  const auto q_phi = q_phi_by_element(g, q);
  for (Element x = 0; x < n; ++x)
    v.check(Rational(n) >= q_phi[x], [&] {
      return Counterexample{g.name(), {x}, std::to_string(count) + " Sylow " + std::to_string(p) +
                                               "-subgroups but n < Q phi(o(g)) = " + q_phi[x].str()};
    });
  return v;
}

CriterionReport verify_criterion(const FiniteGroup& g) {
  CriterionReport r;
  r.group = g.name();
  r.n = g.order();
  const Factorization f = factorize(r.n);
  r.q = q_of_primes(f.primes());
  r.largest_prime = f.largest_prime();
  const auto q_phi = q_phi_by_element(g, r.q);
  r.max_q_phi = *std::max_element(q_phi.begin(), q_phi.end());
  if (r.n > 1) r.sylow_count = count_sylow(g, r.largest_prime);
  r.outcomes = check_witnesses(g);

  auto& overall = r.verdicts["thm-overall"];
  auto& non_identity = r.verdicts["lem-2.7"];
  auto& generates = r.verdicts["lem-2.8"];
  auto& p_alpha_divides = r.verdicts["lem-2.9"];
  auto& even_index = r.verdicts["lem-even-index"];

  const std::uint64_t n = r.n;
  const std::uint64_t p = r.largest_prime;
  const std::uint64_t p_alpha = n > 1 ? prime_part(n, p) : 1;
  const bool prime_power = f.distinct_primes() == 1;

  for (const auto& o : r.outcomes) {
    const Element x = o.witness;
    const std::uint64_t ord = g.element_order(x);
    auto cx = [&](std::string detail) { return Counterexample{g.name(), {x}, std::move(detail)}; };

    if (n == 2 && x == g.identity()) {
      // The identity is a witness in C2; the statement is only claimed for
      // non-identity witnesses there.
      overall.note("n = 2: identity witness excluded (the only admitted exception)");
      non_identity.note("n = 2: identity is a witness, as admitted");
    } else {
      overall.check(o.unique && o.normal && o.contained_in_gen, [&] {
        return cx("Sylow " + std::to_string(p) + "-subgroup: unique=" + std::to_string(o.unique) +
                  " normal=" + std::to_string(o.normal) + " inside <g>=" + std::to_string(o.contained_in_gen));
      });
      non_identity.check(x != g.identity(), [&] { return cx("identity is a witness"); });
    }
    if (n > 2 && prime_power)
      generates.check(ord == n, [&] { return cx("witness of order " + std::to_string(ord) + " does not generate"); });
    if (n > 2)
      p_alpha_divides.check(ord % p_alpha == 0, [&] {
        return cx(std::to_string(p_alpha) + " does not divide o(g) = " + std::to_string(ord));
      });
    if (ord % 2 == 0)
      even_index.check(n / ord < p, [&] {
        return cx("n/o(g) = " + std::to_string(n / ord) + " is not below p = " + std::to_string(p));
      });
  }
  if (r.outcomes.empty()) overall.note("no witness");
  r.verdicts["cor-contrapositive"] = verify_contrapositive(g);
  return r;
}

std::vector<CriterionReport> verify_criterion_range(std::uint64_t lo, std::uint64_t hi, const GroupLimits& limits,
                                                    unsigned jobs) {
  if (lo == 0) lo = 1;
  if (hi < lo) return {};
  auto per_order = detail::parallel_map(hi - lo + 1, jobs, [&](std::size_t i) {
    std::vector<CriterionReport> reports;
    for (const auto& g : catalog(lo + i, limits)) reports.push_back(verify_criterion(g));
    return reports;
  });
  std::vector<CriterionReport> out;
  for (auto& chunk : per_order)
    for (auto& r : chunk) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace {

bool elementary_abelian_2(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  return std::all_of(orders.begin(), orders.end(), [](std::uint64_t o) { return o <= 2; });
}

}  // namespace

VerdictMap verify_product_lemmas(const FiniteGroup& u, const FiniteGroup& t, const GroupLimits& limits) {
  VerdictMap out;
  const FiniteGroup g = direct_product(u, t, limits);
  const std::uint64_t lhs = phi_of_group(g);
  const std::uint64_t rhs = phi_of_group(u) * phi_of_group(t);
  const std::string name = g.name();
  auto cx = [&](std::string detail) { return Counterexample{name, {}, std::move(detail)}; };
  const std::string values = "phi(UxT) = " + std::to_string(lhs) + ", phi(U)phi(T) = " + std::to_string(rhs);

  auto& ineq = out["lem-3.1"];
  const std::size_t nt = t.order();
  for (Element x = 0; x < g.order(); ++x) {
    const std::uint64_t bound =
        totient(u.element_order(static_cast<Element>(x / nt))) * totient(t.element_order(static_cast<Element>(x % nt)));
    ineq.check(totient(g.element_order(x)) <= bound, [&] {
      auto c = cx("phi(o(u,t)) exceeds phi(o(u)) phi(o(t))");
      c.elements = {x};
      return c;
    });
  }
  ineq.check(lhs <= rhs, [&] { return cx(values); });

  const std::uint64_t a = u.order(), b = t.order();
  auto& coprime = out["lem-3.1-coprime"];
  if (std::gcd(a, b) == 1) coprime.check(lhs == rhs, [&] { return cx(values); });

  auto& elem2 = out["lem-3.1-elem2"];
  if (elementary_abelian_2(u) || elementary_abelian_2(t)) elem2.check(lhs == rhs, [&] { return cx(values); });

  auto& twice_odd = out["lem-3.1-twice-odd"];
  if (std::gcd(a, b) == 2 && (a % 4 == 2 || b % 4 == 2)) twice_odd.check(lhs == rhs, [&] { return cx(values); });

  for (auto& [id, v] : out)
    if (v.vacuous()) v.note("hypothesis not met");
  return out;
}

VerdictMap verify_semidirect_lemmas(const SemidirectSpec& spec, const GroupLimits& limits) {
  spec.validate();
  if (!spec.coprime()) throw std::invalid_argument("semidirect lemmas need gcd(a, b) = 1");
  VerdictMap out;
  const FiniteGroup g = semidirect_cyclic(spec, limits);
  const FiniteGroup h = semidirect_cyclic({spec.a, spec.b, 1}, limits);  // C_a x C_b on the same pairs
  auto cx = [&](std::vector<Element> els, std::string detail) {
    return Counterexample{g.name(), std::move(els), std::move(detail)};
  };

  auto& divides = out["lem-3.2"];
  auto& phi_divides = out["cor-3.3"];
  for (Element x = 0; x < g.order(); ++x) {
    const std::uint64_t og = g.element_order(x), oh = h.element_order(x);
    divides.check(oh % og == 0, [&] {
      return cx({x}, "o_G = " + std::to_string(og) + " does not divide o_(AxB) = " + std::to_string(oh));
    });
    phi_divides.check(totient(oh) % totient(og) == 0, [&] {
      return cx({x}, "phi(" + std::to_string(og) + ") does not divide phi(" + std::to_string(oh) + ")");
    });
  }
  const std::uint64_t phi_g = phi_of_group(g), phi_h = phi_of_group(h);
  const std::string values = "phi(sdp) = " + std::to_string(phi_g) + ", phi(direct) = " + std::to_string(phi_h);
  phi_divides.check(phi_g <= phi_h, [&] { return cx({}, values); });

  const bool trivial_action = spec.a == 1 || spec.r % spec.a == 1;
  auto& equality = out["lem-3.5"];
  equality.check((phi_g == phi_h) == trivial_action, [&] { return cx({}, values); });
  equality.check(is_cyclic(g) == trivial_action, [&] {
    return cx({}, std::string("cyclic = ") + (is_cyclic(g) ? "yes" : "no") + " with r = " + std::to_string(spec.r));
  });
  return out;
}

// ---------------------------------------------------------------------------
// Tables

const std::vector<std::string>& reference_q_first() {
  static const std::vector<std::string> values{"3", "6", "9", "12", "72/5", "84/5", "189/10", "21", "252/11"};
  return values;
}

const std::vector<std::string>& reference_q_skip() {
  static const std::vector<std::string> values{"2", "9/2", "8", "54/5", "14", "81/5", "56/3", "1134/55"};
  return values;
}

Verdict verify_table1() {
  Verdict v;
  for (const auto& row : table1()) {
    const auto& first = reference_q_first()[row.ell - 1];
    v.check(row.q_first == Rational::parse(first), [&] {
      return Counterexample{"F" + std::to_string(row.ell), {}, "Q = " + row.q_first.str() + ", expected " + first};
    });
    if (row.q_skip) {
      const auto& skip = reference_q_skip()[row.ell - 1];
      v.check(*row.q_skip == Rational::parse(skip), [&] {
        return Counterexample{"S" + std::to_string(row.ell), {}, "Q = " + row.q_skip->str() + ", expected " + skip};
      });
    }
  }
  return v;
}

const std::vector<Table2Case>& table2_cases() {
  static const std::vector<Table2Case> cases{
      {2, 4, 2, "all", {2, 1}, "6", '='},
      {3, 6, 1, "a2=1", {1, 1, 1}, "7.4", '<'},
      {3, 6, 1, "a2>1", {1, 2, 1}, "11", '>'},
      {3, 8, 3, "all", {3, 1, 1}, "15", '>'},
      {4, 8, 3, "all", {3, 1, 1, 1}, "17", '>'},
      {4, 10, 1, "a3=1", {1, 1, 1, 1}, "14", '>'},
      {4, 10, 1, "a3>1", {1, 1, 2, 1}, "21", '>'},
      {5, 12, 2, "a2=1", {2, 1, 1, 1, 1}, "19", '>'},
      {5, 12, 2, "a2>1", {2, 2, 1, 1, 1}, "28", '>'},
      {5, 14, 1, "a4=1", {1, 1, 1, 1, 1}, "28", '>'},
      {5, 14, 1, "a4>1", {1, 1, 1, 2, 1}, "33", '>'},
      {6, 14, 1, "a4=1", {1, 1, 1, 1, 1, 1}, "62", '>'},
      {6, 14, 1, "a4>1", {1, 1, 1, 2, 1, 1}, "36", '>'},
      {6, 16, 4, "all", {4, 1, 1, 1, 1, 1}, "41", '>'},
      {7, 18, 1, "a2=2", {1, 2, 1, 1, 1, 1, 1}, "33", '>'},
      {7, 18, 1, "a2>2", {1, 3, 1, 1, 1, 1, 1}, "49", '>'},
      {8, 20, 2, "a3=1", {2, 1, 1, 1, 1, 1, 1, 1}, "46", '>'},
      {8, 20, 2, "a3>1", {2, 1, 2, 1, 1, 1, 1, 1}, "58", '>'},
  };
  return cases;
}

namespace {

char compare_char(const Rational& a, const Rational& b) {
  if (a < b) return '<';
  if (a > b) return '>';
  return '=';
}

BigInt totient_big(BigInt m) {
  BigInt result = m;
  for (BigInt d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    result -= result / d;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

std::vector<Table2Row> table2_spot_check() {
  std::vector<Table2Row> rows;
  for (const auto& c : table2_cases()) {
    Table2Row row;
    row.spec = c;
    row.n = 1;
    for (unsigned i = 0; i < c.exponents.size(); ++i)
      row.n *= boost::multiprecision::pow(BigInt(nth_prime(i + 1)), c.exponents[i]);
    row.order_g = row.n / c.cofactor;
    row.phi_order = totient_big(row.order_g);
    row.ratio = Rational(row.n, row.phi_order);
    row.ratio_floor = row.ratio.floor();
    row.q = q_of_primes(first_primes(c.k));
    row.relation = compare_char(row.ratio, row.q);
    row.relation_reproduced = row.relation == c.printed_relation;

    const Rational printed = Rational::parse(c.printed_value);
    row.printed_value_matches = printed.is_integer() ? printed == Rational(row.ratio_floor) : printed == row.ratio;
    if (!row.printed_value_matches)
      row.notes.push_back("printed value " + c.printed_value + " unmatched: n/phi(o(g)) = " + row.ratio.str() +
                          " (floor " + str(row.ratio_floor) + ")");
    if (c.k == 2)
      row.notes.push_back("o(g) read as the 3-part 3^a2; the 2-part of n is 2^2");
    rows.push_back(std::move(row));
  }
  return rows;
}

VerdictMap table2_verdicts(const std::vector<Table2Row>& rows) {
  VerdictMap out;
  std::map<unsigned, std::set<std::uint64_t>> cofactors;
  for (const auto& row : rows) {
    const auto& c = row.spec;
    auto& v = out["table-2-k" + std::to_string(c.k)];
    const std::string where = "k=" + std::to_string(c.k) + " n/o(g)=" + std::to_string(c.cofactor) + " " + c.case_label;
    auto cx = [&](std::string detail) { return Counterexample{where, {}, std::move(detail)}; };
    const std::uint64_t p = nth_prime(c.k);

    v.check(row.relation_reproduced, [&] {
      return cx(std::string("n/phi(o(g)) = ") + row.ratio.str() + " " + row.relation + " Q = " + row.q.str() +
                ", printed " + c.printed_relation);
    });
    v.check(row.n % c.cofactor == 0 && row.order_g % 2 == 1, [&] { return cx("o(g) is not an odd divisor of n"); });
    const BigInt p_alpha = boost::multiprecision::pow(BigInt(p), c.exponents.back());
    v.check(row.order_g % p_alpha == 0, [&] { return cx("p^a does not divide o(g)"); });
    v.check(prime_part(c.cofactor, 2) == ipow(2, c.two_exponent) && c.exponents.front() == c.two_exponent,
            [&] { return cx("2-part of n/o(g) does not match the listed exponent"); });
    for (const auto& note : row.notes) v.note(where + ": " + note);
    cofactors[c.k].insert(c.cofactor);
  }

  auto& coverage = out["table-2-coverage"];
  for (unsigned k = 2; k <= 8; ++k) {
    const std::uint64_t p = nth_prime(k);
    const Rational q = q_of_primes(first_primes(k));
    std::set<std::uint64_t> expected;
    for (std::uint64_t c = p + 1; Rational(c) < q; ++c)
      if (c % 2 == 0) expected.insert(c);
    coverage.check(expected == cofactors[k], [&] {
      return Counterexample{"k=" + std::to_string(k), {}, "listed values of n/o(g) differ from the even integers in [p+1, Q)"};
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Number-theory sweep

namespace {

constexpr std::uint64_t kDivisibilityCap = 10'000;
constexpr std::uint64_t kMultiplicativityCap = 1'000;

VerdictMap sweep_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t limit) {
  VerdictMap out;
  auto& two_forms = out["eq-5"];
  auto& strict_bound = out["eq-6"];
  auto& rewrite = out["eq-7"];
  auto& adjacent = out["eq-8"];
  auto& odd_bound = out["eq-9"];
  auto& q_le = out["lem-2.4i"];
  auto& q_lt = out["lem-2.4ii"];
  auto& n_geq = out["lem-2.6"];
  auto& n_phi = out["eq-n-phi"];
  auto& phi_div = out["phi-divides"];
  auto& phi_mult = out["phi-multiplicative"];

  const std::uint64_t div_cap = std::min(limit, kDivisibilityCap);
  const std::uint64_t mult_cap = std::min(limit, kMultiplicativityCap);

  for (std::uint64_t n = lo; n <= hi; ++n) {
    const Factorization f = factorize(n);
    const auto primes = f.primes();
    const Rational q = q_of_primes(primes);
    auto cx = [&](std::string detail) { return numeric_counterexample(n, std::move(detail)); };

    const BigInt sum = phi_cyclic_sum(n), product = phi_cyclic_product(n);
    two_forms.check(sum == product, [&] { return cx("sum form " + str(sum) + " != product form " + str(product)); });

    const std::uint64_t phi_n = totient(f);
    Rational rebuilt(phi_n);
    for (std::uint64_t p : primes) rebuilt *= Rational(BigInt(p), BigInt(p - 1));
    n_phi.check(rebuilt == Rational(n), [&] { return cx("phi(n) prod p/(p-1) = " + rebuilt.str()); });

    if (n >= 2) {
      const auto bound = q_lower_bound_check(n);
      strict_bound.check(bound.holds, [&] { return cx("phi(C_n) - n^2/Q = " + bound.gap.str()); });

      Rational rewritten = Rational(BigInt(1), BigInt(primes.front() - 1)) * Rational(primes.back() + 1);
      for (std::size_t h = 1; h < primes.size(); ++h) {
        const Rational ratio(BigInt(primes[h - 1] + 1), BigInt(primes[h] - 1));
        rewritten *= ratio;
        if (!(primes[h - 1] == 2 && primes[h] == 3))
          adjacent.check(ratio <= Rational(1), [&] { return cx("(p_(h-1)+1)/(p_h-1) = " + ratio.str()); });
      }
      rewrite.check(rewritten == q, [&] { return cx("rewritten Q = " + rewritten.str() + " != " + q.str()); });

      const QBounds qb = lemma_q_bounds(n);
      if (qb.q_le_p_plus_1) q_le.check(*qb.q_le_p_plus_1, [&] { return cx("Q = " + q.str() + " > p + 1"); });
      if (qb.q_lt_p_odd) q_lt.check(*qb.q_lt_p_odd, [&] { return cx("Q = " + q.str() + " >= p"); });
      if (n % 2 == 1) {
        const Rational cap(BigInt(primes.back() + 1), BigInt(primes.front() - 1));
        odd_bound.check(q <= cap, [&] { return cx("Q = " + q.str() + " > (p+1)/(p_1-1) = " + cap.str()); });
      }
      if (!is_power_of_two(n)) {
        const NGeqCheck c = lemma_n_geq_check(n);
        n_geq.check(c.holds && c.equality == is_2a3b(n), [&] {
          return cx("Q phi(n/p^a) p^(a-1) = " + c.rhs.str() + (c.equality ? " (equality)" : ""));
        });
      }
    }

    if (n <= div_cap)
      for (std::uint64_t a : divisors(n))
        phi_div.check(phi_n % totient(a) == 0, [&] {
          return cx("phi(" + std::to_string(a) + ") does not divide phi(" + std::to_string(n) + ")");
        });

    if (n <= mult_cap)
      for (std::uint64_t m = 1; m <= mult_cap; ++m)
        if (std::gcd(n, m) == 1)
          phi_mult.check(totient(n * m) == phi_n * totient(m), [&] {
            return cx("phi(" + std::to_string(n) + " * " + std::to_string(m) + ") is not multiplicative");
          });
  }
  return out;
}

}  // namespace

VerdictMap verify_numtheory_sweep(std::uint64_t limit, unsigned jobs) {
  if (limit > 1'000'000) throw std::invalid_argument("numtheory sweep limit must be at most 10^6");
  VerdictMap out;
  out["table-1"] = verify_table1();
  if (limit == 0) return out;

  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(limit, 64));
  const std::uint64_t width = (limit + chunks - 1) / chunks;
  auto parts = detail::parallel_map(chunks, jobs, [&](std::size_t i) {
    const std::uint64_t lo = 1 + i * width;
    const std::uint64_t hi = std::min(limit, lo + width - 1);
    return lo <= hi ? sweep_range(lo, hi, limit) : VerdictMap{};
  });
  for (const auto& part : parts) merge_verdicts(out, part);
  for (auto& [id, v] : out)
    if (v.vacuous()) v.note("vacuous below the sweep limit");
  return out;
}

}  // namespace phigroup
