#include "phigroup/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace phigroup {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be positive");
}

}  // namespace

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

Factorization factorize(std::uint64_t n) {
  require_positive(n, "factorize");
  Factorization f{n, {}};
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d <= m / d; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    f.factors.push_back({d, e});
  }
  if (m > 1) f.factors.push_back({m, 1});
  return f;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

bool is_2a3b(std::uint64_t n) noexcept {
  if (n == 0 || n % 6 != 0) return false;
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t prime_part(std::uint64_t n, std::uint64_t prime) noexcept {
  if (n == 0 || prime < 2) return 1;
  std::uint64_t part = 1;
  while (n % prime == 0) {
    n /= prime;
    part *= prime;
  }
  return part;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization f = factorize(n);
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t totient(const Factorization& f) {
  std::uint64_t r = 1;
  for (const auto& [p, e] : f.factors) r *= ipow(p, e - 1) * (p - 1);
  return r;
}

std::uint64_t totient(std::uint64_t n) {
  require_positive(n, "totient");
  return totient(factorize(n));
}

BigInt phi_cyclic_sum(std::uint64_t n) {
  require_positive(n, "phi_cyclic_sum");
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n)) {
    BigInt t = totient(d);
    sum += t * t;
  }
  return sum;
}

BigInt phi_cyclic_product(std::uint64_t n) {
  require_positive(n, "phi_cyclic_product");
  BigInt product = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    BigInt numer = boost::multiprecision::pow(BigInt(p), 2 * e) * (p - 1) + 2;
    BigInt q, r;
    boost::multiprecision::divide_qr(numer, BigInt(p + 1), q, r);
    if (r != 0) throw std::logic_error("non-integral factor in cyclic totient product");
    product *= q;
  }
  return product;
}

Rational q_of_primes(std::span<const std::uint64_t> primes) {
  BigInt num = 1, den = 1;
  for (std::uint64_t p : primes) {
    num *= p + 1;
    den *= p - 1;
  }
  return {num, den};
}

Rational q_of(std::uint64_t n) {
  require_positive(n, "q_of");
  const auto primes = factorize(n).primes();
  return q_of_primes(primes);
}

std::uint64_t nth_prime(unsigned i) {
  if (i == 0) throw std::invalid_argument("nth_prime: index is 1-based");
  std::uint64_t candidate = 1;
  while (i > 0) {
    ++candidate;
    if (is_prime(candidate)) --i;
  }
  return candidate;
}

std::vector<std::uint64_t> first_primes(unsigned ell) {
  std::vector<std::uint64_t> out;
  for (unsigned i = 1; i <= ell; ++i) out.push_back(nth_prime(i));
  return out;
}

std::vector<std::uint64_t> skip_primes(unsigned ell) {
  if (ell == 0) return {};
  std::vector<std::uint64_t> out = first_primes(ell - 1);
  out.push_back(nth_prime(ell + 1));
  return out;
}

PrimeSetTag classify_prime_set(std::span<const std::uint64_t> sorted_primes) {
  const auto ell = static_cast<unsigned>(sorted_primes.size());
  if (ell == 0) return {};
  auto same = [&](const std::vector<std::uint64_t>& v) {
    return std::equal(v.begin(), v.end(), sorted_primes.begin(), sorted_primes.end());
  };
  if (same(first_primes(ell))) return {PrimeSetKind::FirstPrimes, ell};
  if (same(skip_primes(ell))) return {PrimeSetKind::SkipPrimes, ell};
  return {};
}

StrictBoundCheck q_lower_bound_check(std::uint64_t n) {
  require_positive(n, "q_lower_bound_check");
  StrictBoundCheck out;
  const BigInt nn = BigInt(n) * n;
  out.gap = Rational(phi_cyclic_sum(n)) - Rational(nn) / q_of(n);
  out.applicable = n > 1;
  out.holds = out.gap > 0;
  return out;
}

QBounds lemma_q_bounds(std::uint64_t n) {
  if (n < 2) throw HypothesisViolation("lemma_q_bounds: requires n >= 2");
  const Factorization f = factorize(n);
  const auto primes = f.primes();
  const Rational q = q_of_primes(primes);
  const std::uint64_t p = f.largest_prime();

  QBounds out;
  const bool is_first = classify_prime_set(primes).kind == PrimeSetKind::FirstPrimes;
  if (f.distinct_primes() >= 9 || !is_first) out.q_le_p_plus_1 = q <= Rational(p + 1);
  if (n % 2 == 1) out.q_lt_p_odd = q < Rational(p);
  return out;
}

NGeqCheck lemma_n_geq_check(std::uint64_t n) {
  if (n < 2) throw HypothesisViolation("lemma_n_geq_check: requires n >= 2");
  if (is_power_of_two(n)) throw HypothesisViolation("lemma_n_geq_check: n is a power of 2");
  const Factorization f = factorize(n);
  const std::uint64_t p = f.largest_prime();
  const unsigned alpha = f.largest_exponent();
  const std::uint64_t p_alpha = ipow(p, alpha);

  NGeqCheck out;
  out.rhs = q_of_primes(f.primes()) * Rational(totient(n / p_alpha)) * Rational(p_alpha / p);
  const Rational lhs(n);
  out.holds = lhs >= out.rhs;
  out.equality = lhs == out.rhs;
  return out;
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (unsigned ell = 1; ell <= 9; ++ell) {
    Table1Row row{ell, nth_prime(ell), q_of_primes(first_primes(ell)), std::nullopt};
    if (ell < 9) row.q_skip = q_of_primes(skip_primes(ell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace phigroup
