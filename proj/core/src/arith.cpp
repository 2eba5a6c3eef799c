#include "vgt/arith.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "vgt/errors.hpp"

namespace vgt {

uint64_t mulmod(uint64_t x, uint64_t y, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(x) * y) % m);
}

uint64_t powmod(uint64_t x, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t acc = 1;
  x %= m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, x, m);
    x = mulmod(x, x, m);
    e >>= 1;
  }
  return acc;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic Miller-Rabin for n < 2^64 with the standard 12-witness
  // set; all candidates below are coprime to the witnesses by the trial
  // division above.
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t w : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime(uint64_t n) {
  if (n >= std::numeric_limits<uint64_t>::max() - 2) {
    throw Error("next_prime: search would overflow");
  }
  uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) ++c;
  while (!is_prime(c)) {
    if (c > std::numeric_limits<uint64_t>::max() - 2) {
      throw Error("next_prime: search would overflow");
    }
    c += 2;
  }
  return c;
}

std::vector<int64_t> prime_factors(int64_t n) {
  if (n == 0) throw Error("prime_factors: zero input");
  uint64_t m = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
  std::vector<int64_t> out;
  for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      out.push_back(static_cast<int64_t>(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(static_cast<int64_t>(m));
  return out;
}

int64_t squarefree_part(int64_t n) {
  if (n == 0) throw Error("squarefree_part: zero input");
  int64_t sign = n < 0 ? -1 : 1;
  uint64_t m = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
  int64_t core = 1;
  for (uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e & 1) core *= static_cast<int64_t>(p);
    }
  }
  if (m > 1) core *= static_cast<int64_t>(m);
  return sign * core;
}

bool is_perfect_square(int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  auto u = static_cast<uint64_t>(n);
  // Integer floor sqrt seeded from the double approximation, then fixed up.
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(u)));
  while (r > 0 && r * r > u) --r;
  while ((r + 1) * (r + 1) <= u) ++r;
  return r * r == u;
}

int jacobi(int64_t n, uint64_t m) {
  if (m == 0 || (m & 1) == 0) throw Error("jacobi: modulus must be odd and positive");
  uint64_t a;
  int sign = 1;
  if (n < 0) {
    a = static_cast<uint64_t>(-(n + 1)) + 1;
    // (-1 | m) = (-1)^((m-1)/2).
    if (((m - 1) / 2) & 1) sign = -sign;
  } else {
    a = static_cast<uint64_t>(n);
  }
  a %= m;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      // (2 | m) = (-1)^((m^2-1)/8).
      uint64_t r = m & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, m);
    if ((a & 3) == 3 && (m & 3) == 3) sign = -sign;
    a %= m;
  }
  return m == 1 ? sign : 0;
}

}  // namespace vgt
