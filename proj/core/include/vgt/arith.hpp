#pragma once

#include <cstdint>
#include <vector>

namespace vgt {

// Elementary integer arithmetic shared by the field and sieve layers.
// Everything here is deterministic; Miller-Rabin uses a fixed witness set
// that is exact for all 64-bit inputs.

// (x * y) mod m without overflow, m < 2^63.
uint64_t mulmod(uint64_t x, uint64_t y, uint64_t m);

// (x ^ e) mod m by square-and-multiply, m < 2^63.
uint64_t powmod(uint64_t x, uint64_t e, uint64_t m);

bool is_prime(uint64_t n);

// Smallest prime > n.  Throws Error if the search would leave uint64 range.
uint64_t next_prime(uint64_t n);

// Distinct prime factors of |n| in increasing order; n must be nonzero.
// Plain trial division, intended for desk-scale inputs.
std::vector<int64_t> prime_factors(int64_t n);

// Largest divisor d of |n| with n/d a perfect square, carrying the sign of
// n.  squarefree_part(-12) == -3, squarefree_part(1) == 1.  n must be
// nonzero.
int64_t squarefree_part(int64_t n);

bool is_perfect_square(int64_t n);

// Jacobi symbol (n | m) for odd positive m, via binary quadratic
// reciprocity.  Equals the Legendre symbol when m is an odd prime.
int jacobi(int64_t n, uint64_t m);

}  // namespace vgt
