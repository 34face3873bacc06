#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "phigroup/group.hpp"

namespace phigroup {

/// C_n, elements 0..n-1 under addition mod n.
FiniteGroup cyclic(std::uint64_t n, const GroupLimits& limits = {});

/// C_{d1} x ... x C_{dj}. A single factor is named like cyclic(); the empty
/// list gives the trivial group.
FiniteGroup abelian(std::span<const std::uint64_t> factors, const GroupLimits& limits = {});

/// Symmetries of the regular m-gon, order 2m. Elements r^i then s r^i.
FiniteGroup dihedral(std::uint64_t m, const GroupLimits& limits = {});

/// Dic_m = <a, x | a^(2m), x^2 = a^m, x a x^-1 = a^-1>, order 4m.
/// dicyclic(2) is the quaternion group.
FiniteGroup dicyclic(std::uint64_t m, const GroupLimits& limits = {});

/// S_k and A_k on {1..k} for 1 <= k <= 6, permutations in lexicographic order.
FiniteGroup symmetric(unsigned k, const GroupLimits& limits = {});
FiniteGroup alternating(unsigned k, const GroupLimits& limits = {});

/// Componentwise product; (u, t) has index u*|T| + t.
FiniteGroup direct_product(const FiniteGroup& u, const FiniteGroup& t, const GroupLimits& limits = {});

/// Parameters of C_a x|_r C_b, where t in C_b acts on C_a by u -> r^t u.
struct SemidirectSpec {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t r = 1;

  /// gcd(r, a) == 1 and r^b == 1 (mod a).
  bool valid() const noexcept;
  bool coprime() const noexcept;
  /// Throws std::invalid_argument when !valid().
  void validate() const;

  friend bool operator==(const SemidirectSpec&, const SemidirectSpec&) = default;
};

/// Pairs (u, t) with (u1,t1)(u2,t2) = (u1 + r^t1 u2 mod a, t1 + t2 mod b),
/// indexed u*b + t so the layout matches direct_product(cyclic(a), cyclic(b)).
FiniteGroup semidirect_cyclic(const SemidirectSpec& spec, const GroupLimits& limits = {});

/// Every r in [1, a) with gcd(r, a) = 1 and r^b = 1 mod a, ascending.
/// Always contains 1.
std::vector<std::uint64_t> enumerate_semidirect_units(std::uint64_t a, std::uint64_t b);

/// Invariant-factor lists d1 | d2 | ... | dj, one per abelian group of
/// order n, with the cyclic group first.
std::vector<std::vector<std::uint64_t>> abelian_invariant_factors(std::uint64_t n);

/// Constructible groups of order n: every abelian group, dihedral and
/// dicyclic groups, S_k / A_k for k <= 6, and C_a x|_r C_b for every
/// coprime split n = a*b (a, b >= 2) and every admissible r. Entries are
/// unique by name and the cyclic group comes first. This is not a complete
/// list of the groups of order n.
std::vector<FiniteGroup> catalog(std::uint64_t n, const GroupLimits& limits = {});

}  // namespace phigroup
