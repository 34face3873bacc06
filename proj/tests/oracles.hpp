#pragma once
// Slow reference implementations. They deliberately share no code with the
// library beyond FiniteGroup::mul and identity().

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "phigroup/group.hpp"

namespace oracle {

inline std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; n > 1; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  return out;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m <= n; ++m)
    if (std::gcd(m, n) == 1) ++count;
  return count;
}

inline std::uint64_t phi_cyclic(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += totient(d) * totient(d);
  return s;
}

inline std::uint64_t order(const phigroup::FiniteGroup& g, phigroup::Element x) {
  std::uint64_t k = 1;
  for (phigroup::Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline std::set<phigroup::Element> powers(const phigroup::FiniteGroup& g, phigroup::Element x) {
  std::set<phigroup::Element> s{g.identity()};
  for (phigroup::Element y = x; y != g.identity(); y = g.mul(y, x)) s.insert(y);
  return s;
}

// naive fixpoint over all pairwise products
inline std::set<phigroup::Element> closure(const phigroup::FiniteGroup& g, std::vector<phigroup::Element> gens) {
  std::set<phigroup::Element> s(gens.begin(), gens.end());
  s.insert(g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<phigroup::Element> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur) grew |= s.insert(g.mul(a, b)).second;
  }
  return s;
}

inline std::uint64_t phi_of_group(const phigroup::FiniteGroup& g) {
  std::uint64_t s = 0;
  for (phigroup::Element x = 0; x < g.order(); ++x) s += totient(order(g, x));
  return s;
}

// number of subgroups of order q^m among conjugates of h, found by scanning
inline std::size_t conjugate_count(const phigroup::FiniteGroup& g, const std::set<phigroup::Element>& h) {
  std::set<std::set<phigroup::Element>> seen;
  for (phigroup::Element x = 0; x < g.order(); ++x) {
    phigroup::Element xinv = 0;
    while (g.mul(x, xinv) != g.identity()) ++xinv;
    std::set<phigroup::Element> c;
    for (auto y : h) c.insert(g.mul(g.mul(x, y), xinv));
    seen.insert(c);
  }
  return seen.size();
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracle
