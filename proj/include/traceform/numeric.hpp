#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace traceform {

// All exact arithmetic in the library runs over GMP integers.
using Int = mpz_class;

// (a * b) mod m and (a ^ e) mod m without overflow, m < 2^63.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Deterministic Miller-Rabin over the full int64 range.
bool is_prime(std::int64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs in
// ascending prime order. Intended for moderate n (conductors, p-1, degrees).
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_squarefree(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);                      // 0 on non-squarefree n
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending

// Order of a modulo p divides p-1; t generates (Z/pZ)* iff no proper
// quotient (p-1)/q kills it.
bool is_primitive_root(std::int64_t t, std::int64_t p);
std::int64_t smallest_primitive_root(std::int64_t p);

}  // namespace traceform
