#include "phigroup/group.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "phigroup/numtheory.hpp"

namespace phigroup {

namespace {

std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

[[noreturn]] void axiom_error(AxiomFailure failure, std::vector<std::size_t> witnesses,
                              const std::string& detail) {
  throw GroupAxiomError(failure, std::move(witnesses),
                        std::string(to_string(failure)) + ": " + detail);
}

void require_parent(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_id() != g.id())
    throw std::invalid_argument("subgroup does not belong to group '" + g.name() + "'");
}

bool is_q_power(std::uint64_t m, std::uint64_t q) { return prime_part(m, q) == m; }

}  // namespace

const char* to_string(AxiomFailure failure) noexcept {
  switch (failure) {
    case AxiomFailure::NotSquare: return "NotSquare";
    case AxiomFailure::NotClosed: return "NotClosed";
    case AxiomFailure::NoIdentity: return "NoIdentity";
    case AxiomFailure::NoInverse: return "NoInverse";
    case AxiomFailure::NotAssociative: return "NotAssociative";
  }
  return "Unknown";
}

void check_order_cap(std::size_t order, const GroupLimits& limits) {
  if (order > limits.order_cap)
    throw OrderCapExceeded("group order " + std::to_string(order) + " exceeds the order cap " +
                           std::to_string(limits.order_cap));
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<std::int64_t>>& table,
                                     std::int64_t identity, std::string name,
                                     std::vector<std::string> labels, const GroupLimits& limits) {
  const std::size_t n = table.size();
  if (n == 0) axiom_error(AxiomFailure::NotSquare, {}, "empty table");
  check_order_cap(n, limits);
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      axiom_error(AxiomFailure::NotSquare, {i}, "row " + std::to_string(i) + " has length " +
                                                    std::to_string(table[i].size()));
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n)
        axiom_error(AxiomFailure::NotClosed, {i, j},
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        std::to_string(v) + " is not an element index");
      flat.push_back(static_cast<Element>(v));
    }
  }
  if (identity < 0 || static_cast<std::uint64_t>(identity) >= n)
    axiom_error(AxiomFailure::NoIdentity, {}, "identity index out of range");
  return from_flat(n, std::move(flat), static_cast<Element>(identity), std::move(name),
                   std::move(labels), limits);
}

FiniteGroup FiniteGroup::from_flat(std::size_t n, std::vector<Element> table, Element identity,
                                   std::string name, std::vector<std::string> labels,
                                   const GroupLimits& limits) {
  if (n == 0 || table.size() != n * n)
    axiom_error(AxiomFailure::NotSquare, {}, "table size does not match order");
  check_order_cap(n, limits);
  for (std::size_t idx = 0; idx < table.size(); ++idx)
    if (table[idx] >= n)
      axiom_error(AxiomFailure::NotClosed, {idx / n, idx % n}, "entry out of range");
  if (identity >= n) axiom_error(AxiomFailure::NoIdentity, {}, "identity index out of range");

  auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

  for (std::size_t i = 0; i < n; ++i)
    if (at(identity, i) != i || at(i, identity) != i)
      axiom_error(AxiomFailure::NoIdentity, {i},
                  "element " + std::to_string(identity) + " is not a two-sided identity at " +
                      std::to_string(i));

  std::vector<Element> inverses(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j < n && at(i, j) != identity) ++j;
    if (j == n) axiom_error(AxiomFailure::NoInverse, {i}, "element " + std::to_string(i) + " has no inverse");
    inverses[i] = static_cast<Element>(j);
  }

  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (at(at(i, j), k) != at(i, at(j, k)))
      axiom_error(AxiomFailure::NotAssociative, {i, j, k},
                  "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" + std::to_string(k) +
                      " != " + std::to_string(i) + "*(" + std::to_string(j) + "*" +
                      std::to_string(k) + ")");
  };
  const std::size_t full_limit = std::max(limits.full_associativity_limit, kFullAssociativityLimit);
  if (n <= full_limit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = at(i, j);
        const Element* row_j = &table[j * n];
        const Element* row_ij = &table[ij * n];
        for (std::size_t k = 0; k < n; ++k)
          if (row_ij[k] != at(i, row_j[k])) check_triple(i, j, k);
      }
  } else {
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < limits.spot_checks; ++s) check_triple(pick(rng), pick(rng), pick(rng));
  }

  std::vector<std::uint64_t> orders(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::uint64_t m = 1;
    Element x = static_cast<Element>(g);
    while (x != identity) {
      x = at(x, g);
      if (++m > n) axiom_error(AxiomFailure::NotAssociative, {g}, "powers never reach the identity");
    }
    orders[g] = m;
  }

  if (!labels.empty() && labels.size() != n)
    throw std::invalid_argument("label count does not match group order");

  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->table = std::move(table);
  impl->identity = identity;
  impl->inverses = std::move(inverses);
  impl->orders = std::move(orders);
  impl->labels = std::move(labels);
  impl->name = std::move(name);
  impl->id = next_group_id();
  return FiniteGroup(std::move(impl));
}

std::string FiniteGroup::label(Element g) const {
  require_valid(g);
  if (impl_->labels.empty()) return std::to_string(g);
  return impl_->labels[g];
}

void FiniteGroup::require_valid(Element g) const {
  if (g >= impl_->n)
    throw std::out_of_range("element index " + std::to_string(g) + " out of range for group of order " +
                            std::to_string(impl_->n));
}

Element FiniteGroup::inverse(Element g) const {
  require_valid(g);
  return impl_->inverses[g];
}

Element FiniteGroup::power(Element g, std::uint64_t k) const {
  require_valid(g);
  k %= impl_->orders[g];
  Element result = impl_->identity;
  Element base = g;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::uint64_t FiniteGroup::element_order(Element g) const {
  require_valid(g);
  return impl_->orders[g];
}

std::vector<std::vector<Element>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Element>> rows(impl_->n);
  for (std::size_t i = 0; i < impl_->n; ++i)
    rows[i].assign(impl_->table.begin() + static_cast<std::ptrdiff_t>(i * impl_->n),
                   impl_->table.begin() + static_cast<std::ptrdiff_t>((i + 1) * impl_->n));
  return rows;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  return FiniteGroup(std::move(impl));
}

// ---------------------------------------------------------------------------

Subgroup unchecked_subgroup(const FiniteGroup& g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subgroup(g.id(), g.order(), std::move(members));
}

Subgroup Subgroup::make(const FiniteGroup& parent, std::vector<Element> members) {
  for (Element x : members)
    if (!parent.valid(x)) throw std::invalid_argument("subgroup member out of range");
  Subgroup h = unchecked_subgroup(parent, std::move(members));
  if (h.members_.empty() || !h.contains(parent.identity()))
    throw std::invalid_argument("subgroup must contain the identity");
  for (Element a : h.members_) {
    if (!h.contains(parent.inverse(a))) throw std::invalid_argument("subgroup not closed under inverses");
    for (Element b : h.members_)
      if (!h.contains(parent.mul(a, b))) throw std::invalid_argument("subgroup not closed under products");
  }
  if (parent.order() % h.order() != 0) throw std::logic_error("subgroup order does not divide group order");
  return h;
}

bool Subgroup::contains(Element g) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return parent_id_ == other.parent_id_ &&
         std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return unchecked_subgroup(g, {g.identity()}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return unchecked_subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element x : gens) g.require_valid(x);
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> members{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Element s : gens) {
      const Element y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  Subgroup h = unchecked_subgroup(g, std::move(members));
  if (g.order() % h.order() != 0) throw std::logic_error("Lagrange violated by generated subgroup");
  return h;
}

Subgroup cyclic_subgroup(const FiniteGroup& g, Element x) {
  g.require_valid(x);
  std::vector<Element> powers{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) powers.push_back(y);
  return unchecked_subgroup(g, std::move(powers));
}

bool is_cyclic(const FiniteGroup& g) {
  const auto orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  return std::any_of(h.members().begin(), h.members().end(),
                     [&](Element x) { return g.element_order(x) == h.order(); });
}

bool is_abelian(const FiniteGroup& g) {
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::uint64_t phi_of_group(const FiniteGroup& g) {
  // Element orders divide |G|, so one totient per divisor suffices.
  std::vector<std::uint64_t> cache(g.order() + 1, 0);
  std::uint64_t sum = 0;
  for (std::uint64_t o : g.element_orders()) {
    if (cache[o] == 0) cache[o] = totient(o);
    sum += cache[o];
  }
  return sum;
}

std::vector<std::size_t> order_census(const FiniteGroup& g) {
  std::vector<std::size_t> census(g.order() + 1, 0);
  for (std::uint64_t o : g.element_orders()) ++census[o];
  return census;
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (std::all_of(h.members().begin(), h.members().end(),
                    [&](Element y) { return g.mul(x, y) == g.mul(y, x); }))
      out.push_back(x);
  return unchecked_subgroup(g, std::move(out));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, whole_group(g)); }

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  require_parent(g, h);
  std::vector<char> in_h(g.order(), 0);
  for (Element y : h.members()) in_h[y] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    const Element x_inv = g.inverse(x);
    if (std::all_of(h.members().begin(), h.members().end(),
                    [&](Element y) { return in_h[g.mul(g.mul(x, y), x_inv)] != 0; }))
      out.push_back(x);
  }
  return unchecked_subgroup(g, std::move(out));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, h).order() == g.order(); }

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("sylow_subgroup: " + std::to_string(q) + " is not prime");
  const std::uint64_t target = prime_part(g.order(), q);
  if (target == 1) return trivial_subgroup(g);

  Element start = g.identity();
  for (Element x = 0; x < g.order(); ++x) {
    const std::uint64_t o = g.element_order(x);
    if (is_q_power(o, q) && o > g.element_order(start)) start = x;
  }
  Subgroup h = cyclic_subgroup(g, start);

  while (h.order() < target) {
    const Subgroup n_h = normalizer(g, h);
    bool grown = false;
    for (Element x : n_h.members()) {
      if (h.contains(x) || !is_q_power(g.element_order(x), q) || !h.contains(g.power(x, q))) continue;
      // x normalizes h and x^q lies in h, so h<x> is the union of the cosets h x^i.
      std::vector<Element> members;
      members.reserve(h.order() * q);
      Element xi = g.identity();
      for (std::uint64_t i = 0; i < q; ++i, xi = g.mul(xi, x))
        for (Element y : h.members()) members.push_back(g.mul(y, xi));
      h = unchecked_subgroup(g, std::move(members));
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no q-element extends the current q-subgroup");
  }
  if (h.order() != target) throw std::logic_error("sylow_subgroup: overshot the q-part");
  return h;
}

std::size_t count_sylow(const FiniteGroup& g, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("count_sylow: " + std::to_string(q) + " is not prime");
  if (g.order() % q != 0)
    throw std::invalid_argument("count_sylow: " + std::to_string(q) + " does not divide the group order");
  const Subgroup p = sylow_subgroup(g, q);
  const std::size_t count = normalizer(g, p).index();
  if (count % q != 1 % q || (g.order() / p.order()) % count != 0)
    throw std::logic_error("count_sylow: Sylow count " + std::to_string(count) + " violates Sylow's theorem");
  return count;
}

bool is_p_complement(const FiniteGroup& g, const Subgroup& h, std::uint64_t p) {
  require_parent(g, h);
  return h.index() == prime_part(g.order(), p);
}

}  // namespace phigroup
