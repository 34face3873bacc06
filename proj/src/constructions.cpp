#include "phigroup/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "phigroup/numtheory.hpp"

namespace phigroup {

namespace {

std::size_t checked_order(std::uint64_t n, const GroupLimits& limits) {
  if (n == 0) throw std::invalid_argument("group order must be positive");
  check_order_cap(n, limits);
  return static_cast<std::size_t>(n);
}

using MulFn = std::function<Element(Element, Element)>;

FiniteGroup tabulate(std::size_t n, const MulFn& mul, Element identity, std::string name,
                     std::vector<std::string> labels, const GroupLimits& limits) {
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) table[std::size_t{i} * n + j] = mul(i, j);
  return FiniteGroup::from_flat(n, std::move(table), identity, std::move(name), std::move(labels), limits);
}

std::string cyclic_name(std::uint64_t n) { return "C" + std::to_string(n); }

std::string join_factors(std::span<const std::uint64_t> factors) {
  std::string name;
  for (std::uint64_t d : factors) name += (name.empty() ? "" : "x") + cyclic_name(d);
  return name;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::string permutation_label(const std::vector<unsigned>& perm) {
  std::string out;
  std::vector<char> seen(perm.size(), 0);
  for (unsigned start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    for (unsigned x = start; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      if (out.back() != '(') out += " ";
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

bool is_even_permutation(const std::vector<unsigned>& perm) {
  unsigned inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

FiniteGroup permutation_group(unsigned k, bool even_only, const GroupLimits& limits) {
  if (k < 1 || k > 6) throw std::invalid_argument("permutation degree must be between 1 and 6");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (!even_only || is_even_permutation(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = checked_order(perms.size(), limits);

  std::map<std::vector<unsigned>, Element> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(perms[i], static_cast<Element>(i));
    labels.push_back(permutation_label(perms[i]));
  }
  // (s t)(x) = s(t(x)): apply t first.
  auto mul = [&](Element s, Element t) {
    std::vector<unsigned> c(k);
    for (unsigned x = 0; x < k; ++x) c[x] = perms[s][perms[t][x]];
    return index.at(c);
  };
  return tabulate(n, mul, 0, (even_only ? "A" : "S") + std::to_string(k), std::move(labels), limits);
}

void partitions(unsigned total, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(total, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(total - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

FiniteGroup cyclic(std::uint64_t n, const GroupLimits& limits) {
  const std::size_t order = checked_order(n, limits);
  auto mul = [order](Element a, Element b) { return static_cast<Element>((a + b) % order); };
  return tabulate(order, mul, 0, cyclic_name(n), {}, limits);
}

FiniteGroup abelian(std::span<const std::uint64_t> factors, const GroupLimits& limits) {
  if (factors.empty()) return cyclic(1, limits);
  std::uint64_t total = 1;
  for (std::uint64_t d : factors) {
    if (d == 0) throw std::invalid_argument("abelian: factor must be positive");
    total *= d;
    check_order_cap(total, limits);
  }
  if (factors.size() == 1) return cyclic(factors[0], limits);
  const std::size_t n = checked_order(total, limits);

  // Mixed radix with the last factor varying fastest.
  std::vector<std::uint64_t> digits_of(n * factors.size());
  std::vector<std::string> labels(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = factors.size(); f-- > 0;) {
      digits_of[idx * factors.size() + f] = rest % factors[f];
      rest /= factors[f];
    }
    std::string label = "(";
    for (std::size_t f = 0; f < factors.size(); ++f)
      label += (f ? "," : "") + std::to_string(digits_of[idx * factors.size() + f]);
    labels[idx] = label + ")";
  }
  auto mul = [&](Element a, Element b) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      idx = idx * factors[f] +
            (digits_of[a * factors.size() + f] + digits_of[b * factors.size() + f]) % factors[f];
    return static_cast<Element>(idx);
  };
  return tabulate(n, mul, 0, join_factors(factors), std::move(labels), limits);
}

FiniteGroup dihedral(std::uint64_t m, const GroupLimits& limits) {
  if (m == 0) throw std::invalid_argument("dihedral: m must be positive");
  const std::size_t n = checked_order(2 * m, limits);
  const auto mm = static_cast<Element>(m);
  std::vector<std::string> labels(n);
  for (Element i = 0; i < mm; ++i) {
    labels[i] = "r^" + std::to_string(i);
    labels[mm + i] = "s r^" + std::to_string(i);
  }
  auto mul = [mm](Element a, Element b) -> Element {
    const bool sa = a >= mm, sb = b >= mm;
    const Element i = a % mm, j = b % mm;
    if (!sa && !sb) return (i + j) % mm;
    if (!sa && sb) return mm + (j + mm - i) % mm;  // r^i s r^j = s r^(j-i)
    if (sa && !sb) return mm + (i + j) % mm;
    return (j + mm - i) % mm;  // s r^i s r^j = r^(j-i)
  };
  return tabulate(n, mul, 0, "D" + std::to_string(m), std::move(labels), limits);
}

FiniteGroup dicyclic(std::uint64_t m, const GroupLimits& limits) {
  if (m == 0) throw std::invalid_argument("dicyclic: m must be positive");
  const std::size_t n = checked_order(4 * m, limits);
  const auto half = static_cast<Element>(2 * m);
  const auto mm = static_cast<Element>(m);
  std::vector<std::string> labels(n);
  for (Element i = 0; i < half; ++i) {
    labels[i] = "a^" + std::to_string(i);
    labels[half + i] = "a^" + std::to_string(i) + " x";
  }
  auto mul = [half, mm](Element a, Element b) -> Element {
    const bool xa = a >= half, xb = b >= half;
    const Element i = a % half, j = b % half;
    if (!xa && !xb) return (i + j) % half;
    if (!xa && xb) return half + (i + j) % half;
    if (xa && !xb) return half + (i + half - j) % half;  // a^i x a^j = a^(i-j) x
    return (i + half - j + mm) % half;                   // a^i x a^j x = a^(i-j+m)
  };
  return tabulate(n, mul, 0, "Dic" + std::to_string(m), std::move(labels), limits);
}

FiniteGroup symmetric(unsigned k, const GroupLimits& limits) { return permutation_group(k, false, limits); }

FiniteGroup alternating(unsigned k, const GroupLimits& limits) { return permutation_group(k, true, limits); }

FiniteGroup direct_product(const FiniteGroup& u, const FiniteGroup& t, const GroupLimits& limits) {
  const std::size_t nu = u.order(), nt = t.order();
  const std::size_t n = checked_order(std::uint64_t{nu} * nt, limits);
  std::vector<std::string> labels(n);
  for (Element a = 0; a < nu; ++a)
    for (Element b = 0; b < nt; ++b) labels[a * nt + b] = "(" + u.label(a) + "," + t.label(b) + ")";
  auto mul = [&](Element x, Element y) {
    return static_cast<Element>(u.mul(static_cast<Element>(x / nt), static_cast<Element>(y / nt)) * nt +
                                t.mul(static_cast<Element>(x % nt), static_cast<Element>(y % nt)));
  };
  FiniteGroup g = tabulate(n, mul, static_cast<Element>(u.identity() * nt + t.identity()),
                           u.name() + "x" + t.name(), std::move(labels), limits);

  for (Element x = 0; x < n; ++x) {
    const std::uint64_t ou = u.element_order(static_cast<Element>(x / nt));
    const std::uint64_t ot = t.element_order(static_cast<Element>(x % nt));
    if (g.element_order(x) != std::lcm(ou, ot))
      throw std::logic_error("direct_product: element order is not the lcm of component orders");
  }
  return g;
}

bool SemidirectSpec::valid() const noexcept {
  if (a == 0 || b == 0) return false;
  return std::gcd(r, a) == 1 && powmod(r, b, a) == 1 % a;
}

bool SemidirectSpec::coprime() const noexcept { return std::gcd(a, b) == 1; }

void SemidirectSpec::validate() const {
  if (a == 0 || b == 0) throw std::invalid_argument("semidirect: a and b must be positive");
  if (std::gcd(r, a) != 1)
    throw std::invalid_argument("semidirect: r = " + std::to_string(r) + " is not a unit mod " + std::to_string(a));
  if (powmod(r, b, a) != 1 % a)
    throw std::invalid_argument("semidirect: r^b is not 1 mod a for r = " + std::to_string(r));
}

FiniteGroup semidirect_cyclic(const SemidirectSpec& spec, const GroupLimits& limits) {
  spec.validate();
  const std::uint64_t a = spec.a, b = spec.b;
  const std::size_t n = checked_order(a * b, limits);
  std::vector<std::uint64_t> r_pow(b);
  for (std::uint64_t t = 0; t < b; ++t) r_pow[t] = powmod(spec.r, t, a);
  std::vector<std::string> labels(n);
  for (std::uint64_t u = 0; u < a; ++u)
    for (std::uint64_t t = 0; t < b; ++t)
      labels[u * b + t] = "(" + std::to_string(u) + "," + std::to_string(t) + ")";
  auto mul = [&](Element x, Element y) {
    const std::uint64_t u1 = x / b, t1 = x % b, u2 = y / b, t2 = y % b;
    return static_cast<Element>(((u1 + r_pow[t1] * u2) % a) * b + (t1 + t2) % b);
  };
  const std::uint64_t shown_r = a == 1 ? 1 : spec.r % a;
  const std::string name = cyclic_name(a) + ":" + cyclic_name(b) + "[r=" + std::to_string(shown_r) + "]";
  return tabulate(n, mul, 0, name, std::move(labels), limits);
}

std::vector<std::uint64_t> enumerate_semidirect_units(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("semidirect units: a and b must be positive");
  if (a <= 2) return {1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r < a; ++r)
    if (SemidirectSpec{a, b, r}.valid()) out.push_back(r);
  return out;
}

std::vector<std::vector<std::uint64_t>> abelian_invariant_factors(std::uint64_t n) {
  const Factorization f = factorize(n);
  // One list of partitions per prime; combine every choice.
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  for (const auto& [p, e] : f.factors) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> current;
    partitions(e, e, current, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::size_t> choice(per_prime.size(), 0);
  while (true) {
    std::size_t length = 1;
    for (std::size_t i = 0; i < per_prime.size(); ++i) length = std::max(length, per_prime[i][choice[i]].size());
    // Partitions are non-increasing, so the j-th largest parts combine into
    // the j-th largest invariant factor.
    std::vector<std::uint64_t> factors(length, 1);
    for (std::size_t i = 0; i < per_prime.size(); ++i) {
      const auto& part = per_prime[i][choice[i]];
      for (std::size_t j = 0; j < part.size(); ++j) factors[j] *= ipow(f.factors[i].prime, part[j]);
    }
    std::reverse(factors.begin(), factors.end());
    out.push_back(std::move(factors));

    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == per_prime[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  // The all-largest-part choice (first) is the cyclic group.
  return out;
}

std::vector<FiniteGroup> catalog(std::uint64_t n, const GroupLimits& limits) {
  checked_order(n, limits);
  std::vector<FiniteGroup> out;
  std::set<std::string> names;
  auto add = [&](FiniteGroup g) {
    if (names.insert(g.name()).second) out.push_back(std::move(g));
  };

  for (const auto& factors : abelian_invariant_factors(n)) add(abelian(factors, limits));
  if (n % 2 == 0 && n / 2 >= 3) add(dihedral(n / 2, limits));
  if (n % 4 == 0 && n / 4 >= 2) add(dicyclic(n / 4, limits));
  std::uint64_t factorial = 1;
  for (unsigned k = 1; k <= 6; ++k) {
    factorial *= k;
    if (k >= 3 && factorial == n) add(symmetric(k, limits));
    if (k >= 3 && factorial / 2 == n) add(alternating(k, limits));
  }
  for (std::uint64_t a : divisors(n)) {
    const std::uint64_t b = n / a;
    if (a < 2 || b < 2 || std::gcd(a, b) != 1) continue;
    for (std::uint64_t r : enumerate_semidirect_units(a, b)) add(semidirect_cyclic({a, b, r}, limits));
  }
  return out;
}

}  // namespace phigroup
