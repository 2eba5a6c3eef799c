#include "vgt/counting.hpp"

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"

namespace vgt {

FiberCubic fiber_cubic(const Field& f, const Fq& a, const ProjPoint& t) {
  if (t.is_infinity()) {
    // Fiber at infinity in the s = 1/t chart: Y^2 = X (X^2 + 2a X + 1).
    return FiberCubic{f.mul(f.from_int(2), a), f.one(), f.zero()};
  }
  const Fq& tv = t.value();
  Fq t2 = f.mul(tv, tv);
  // Y^2 = X (X^2 + 2 (a + 1 + a t^2) X + t^4), the original fiber with
  // (X, Y) scaled by (t^2, t^3).  At t = 0 this degenerates to
  // X^2 (X + 2(a+1)) in the same coordinates.
  Fq c2 = f.mul(f.from_int(2), f.add(f.add(a, f.one()), f.mul(a, t2)));
  return FiberCubic{c2, f.mul(t2, t2), f.zero()};
}

QuadCharTable::QuadCharTable(const Field& f) : f_(f) {
  uint64_t p = f.p();
  std::vector<int8_t> leg(p, -1);
  leg[0] = 0;
  for (uint64_t x = 1; x <= (p - 1) / 2; ++x) leg[(x * x) % p] = 1;
  if (f.r() == 1) {
    tab_ = std::move(leg);
    return;
  }
  // chi(x) in F_{p^2} is the prime-field character of the norm, so one
  // pass over coordinate pairs with precomputed squares fills the table.
  uint64_t d = f.nonresidue();
  std::vector<uint64_t> sq(p);
  for (uint64_t c = 0; c < p; ++c) sq[c] = (c * c) % p;
  tab_.resize(f.q());
  for (uint64_t c1 = 0; c1 < p; ++c1) {
    uint64_t dc1 = (d * sq[c1]) % p;
    int8_t* row = tab_.data() + c1 * p;
    for (uint64_t c0 = 0; c0 < p; ++c0) {
      row[c0] = leg[(sq[c0] + p - dc1) % p];
    }
  }
}

namespace {

// Character sums in raw coordinates.  Coordinates stay below 2^31, so
// two-factor products fit uint64 and short sums of reduced terms do too.

int64_t charsum_prime(uint64_t p, uint64_t s2, uint64_t s1, const QuadCharTable& chi) {
  int64_t sum = 0;
  for (uint64_t x = 0; x < p; ++x) {
    uint64_t w = ((x * x) % p + (s2 * x) % p + s1) % p;
    sum += chi.at_index((x * w) % p);
  }
  return sum;
}

int64_t charsum_quadratic(const Field& f, const FiberCubic& c, const QuadCharTable& chi) {
  uint64_t p = f.p();
  uint64_t d = f.nonresidue();
  uint64_t b0 = c.c2.c0, b1 = c.c2.c1;
  uint64_t a0 = c.c1.c0, a1 = c.c1.c1;
  int64_t sum = 0;
  for (uint64_t x1 = 0; x1 < p; ++x1) {
    uint64_t dx1sq = (d * ((x1 * x1) % p)) % p;
    uint64_t b0x1 = (b0 * x1) % p;
    uint64_t b1x1d = (d * ((b1 * x1) % p)) % p;
    for (uint64_t x0 = 0; x0 < p; ++x0) {
      // w = x^2 + c2 x + c1, then v = x w, in (c0, c1) coordinates.
      uint64_t w0 = ((x0 * x0) % p + dx1sq + (b0 * x0) % p + b1x1d + a0) % p;
      uint64_t w1 = ((2 * x0 * x1) % p + b0x1 + (b1 * x0) % p + a1) % p;
      uint64_t v0 = ((x0 * w0) % p + (d * ((x1 * w1) % p)) % p) % p;
      uint64_t v1 = ((x0 * w1) % p + (x1 * w0) % p) % p;
      sum += chi.at_index(v0 + v1 * p);
    }
  }
  return sum;
}

int64_t charsum_generic(const Field& f, const FiberCubic& c) {
  int64_t sum = 0;
  for (uint64_t i = 0; i < f.q(); ++i) {
    Fq x = f.from_index(i);
    Fq w = f.add(f.mul(x, f.add(x, c.c2)), c.c1);
    sum += f.quad_char(f.mul(x, w));
  }
  return sum;
}

FiberCount finish(const Field& f, const Fq& a, const ProjPoint& t, int64_t n) {
  FiberClass cls = classify_fiber(f, a, t);
  bool smooth = cls == FiberClass::General || cls == FiberClass::SpecialInfinity;
  return FiberCount{n, t, cls, smooth};
}

}  // namespace

FiberCount fiber_count_charsum(const Field& f, const Fq& a, const ProjPoint& t,
                               const QuadCharTable* chi) {
  FiberCubic c = fiber_cubic(f, a, t);
  auto base = static_cast<int64_t>(f.q()) + 1;
  if (chi != nullptr) {
    if (!(chi->field() == f)) throw FieldMismatch("character table built for another field");
  } else if (f.q() > 512) {
    QuadCharTable local(f);
    int64_t s = f.r() == 1 ? charsum_prime(f.p(), c.c2.c0, c.c1.c0, local)
                           : charsum_quadratic(f, c, local);
    return finish(f, a, t, base + s);
  } else {
    return finish(f, a, t, base + charsum_generic(f, c));
  }
  int64_t s = f.r() == 1 ? charsum_prime(f.p(), c.c2.c0, c.c1.c0, *chi)
                         : charsum_quadratic(f, c, *chi);
  return finish(f, a, t, base + s);
}

FiberCount fiber_count_naive(const Field& f, const Fq& a, const ProjPoint& t,
                             uint64_t oracle_bound) {
  if (f.q() > oracle_bound) {
    throw OracleBoundExceeded("naive count over q = " + std::to_string(f.q()) +
                              " exceeds bound " + std::to_string(oracle_bound));
  }
  FiberCubic c = fiber_cubic(f, a, t);
  std::vector<uint32_t> roots(f.q(), 0);
  for (uint64_t i = 0; i < f.q(); ++i) {
    Fq y = f.from_index(i);
    roots[f.index(f.mul(y, y))]++;
  }
  int64_t n = 1;
  for (uint64_t i = 0; i < f.q(); ++i) {
    Fq x = f.from_index(i);
    Fq v = f.mul(x, f.add(f.mul(x, f.add(x, c.c2)), c.c1));
    n += roots[f.index(v)];
  }
  return finish(f, a, t, n);
}

}  // namespace vgt
