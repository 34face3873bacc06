#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "phigroup/rational.hpp"

namespace phigroup {

/// Raised when an inequality is evaluated outside the range where it is
/// stated (for example the n >= Q.phi(n/p^a).p^(a-1) bound at a power of 2).
class HypothesisViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty iff n == 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::size_t distinct_primes() const noexcept { return factors.size(); }
  /// Largest prime factor and its exponent; both 0 for n == 1.
  std::uint64_t largest_prime() const noexcept { return factors.empty() ? 0 : factors.back().prime; }
  unsigned largest_exponent() const noexcept { return factors.empty() ? 0 : factors.back().exponent; }
  std::vector<std::uint64_t> primes() const;
};

Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n) noexcept;
bool is_power_of_two(std::uint64_t n) noexcept;
/// True iff n = 2^a 3^b with a, b >= 1.
bool is_2a3b(std::uint64_t n) noexcept;

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Largest power of `prime` dividing n.
std::uint64_t prime_part(std::uint64_t n, std::uint64_t prime) noexcept;

/// Divisors in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Euler totient. Rejects n == 0.
std::uint64_t totient(std::uint64_t n);
std::uint64_t totient(const Factorization& f);

/// Totient sum of the cyclic group of order n, as the sum of phi(d)^2 over
/// the divisors d of n.
BigInt phi_cyclic_sum(std::uint64_t n);

/// The same quantity through the product over prime powers
/// (p^(2a)(p-1) + 2) / (p+1); every factor is integral.
BigInt phi_cyclic_product(std::uint64_t n);

/// Q = prod over distinct primes p | n of (p+1)/(p-1). Q(1) = 1.
Rational q_of(std::uint64_t n);
Rational q_of_primes(std::span<const std::uint64_t> primes);

/// i-th prime, 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(unsigned i);

enum class PrimeSetKind { FirstPrimes, SkipPrimes, Other };

/// Classifies a set of distinct primes as F_l (the first l primes), S_l (the
/// first l-1 primes plus the (l+1)-th) or neither.
struct PrimeSetTag {
  PrimeSetKind kind = PrimeSetKind::Other;
  unsigned ell = 0;

  friend bool operator==(const PrimeSetTag&, const PrimeSetTag&) = default;
};

std::vector<std::uint64_t> first_primes(unsigned ell);
std::vector<std::uint64_t> skip_primes(unsigned ell);
PrimeSetTag classify_prime_set(std::span<const std::uint64_t> sorted_primes);

struct StrictBoundCheck {
  bool applicable = false;  ///< false only at n == 1
  bool holds = false;
  Rational gap;  ///< phi(C_n) - n^2/Q
};

/// Exact comparison phi(C_n) > n^2 / Q.
StrictBoundCheck q_lower_bound_check(std::uint64_t n);

struct QBounds {
  std::optional<bool> q_le_p_plus_1;  ///< empty when k < 9 and the primes are F_k
  std::optional<bool> q_lt_p_odd;     ///< empty when n is even
};

/// Q <= p+1 and, for odd n, Q < p, where p is the largest prime factor.
/// Rejects n < 2.
QBounds lemma_q_bounds(std::uint64_t n);

struct NGeqCheck {
  bool holds = false;
  bool equality = false;
  Rational rhs;  ///< Q * phi(n / p^a) * p^(a-1)
};

/// n >= Q phi(n/p^a) p^(a-1). Throws HypothesisViolation for n < 2 or n a
/// power of 2.
NGeqCheck lemma_n_geq_check(std::uint64_t n);

struct Table1Row {
  unsigned ell;
  std::uint64_t prime;  ///< the ell-th prime
  Rational q_first;
  std::optional<Rational> q_skip;  ///< not reported for ell == 9
};

/// Q over F_l and S_l for l = 1..9.
std::vector<Table1Row> table1();

}  // namespace phigroup
