#include "vgt/ff.hpp"

#include "vgt/arith.hpp"
#include "vgt/errors.hpp"

namespace vgt {

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ull << 31) || !is_prime(p)) {
    throw BadPrime("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

int legendre(int64_t n, const PrimeModulus& p) {
  return jacobi(n, p.value());
}

int legendre(const Rational& x, const PrimeModulus& p) {
  auto pv = static_cast<int64_t>(p.value());
  if (x.num() % pv == 0 || x.den() % pv == 0) return 0;
  uint64_t prod = mulmod(static_cast<uint64_t>(x.num() % pv + pv),
                         static_cast<uint64_t>(x.den() % pv), p.value());
  return jacobi(static_cast<int64_t>(prod), p.value());
}

uint64_t find_nonresidue(const PrimeModulus& p) {
  for (uint64_t n = 2; n < p.value(); ++n) {
    if (jacobi(static_cast<int64_t>(n), p.value()) == -1) return n;
  }
  // Unreachable for p >= 3: half the nonzero residues are nonresidues.
  throw Error("find_nonresidue: no nonresidue found");
}

Field::Field(uint64_t p, int r) : p_(p), r_(r), q_(r == 1 ? p : p * p), d_(0) {
  if (r == 2) d_ = find_nonresidue(PrimeModulus(p));
  two_exp_ = 0;
  odd_part_ = q_ - 1;
  while ((odd_part_ & 1) == 0) {
    odd_part_ >>= 1;
    ++two_exp_;
  }
  // First element in index order with quad_char == -1, raised to the odd
  // part of q - 1.  Fixing the scan order here fixes sqrt() output.
  Fq z{};
  for (uint64_t i = 2; i < q_; ++i) {
    Fq c = from_index(i);
    if (quad_char(c) == -1) {
      z = c;
      break;
    }
  }
  sylow_gen_ = pow(z, odd_part_);
}

Field Field::prime(const PrimeModulus& p) { return Field(p.value(), 1); }

Field Field::quadratic(const PrimeModulus& p) { return Field(p.value(), 2); }

void Field::check(const Fq& x) const {
  if (x.c0 >= p_ || (r_ == 1 ? x.c1 != 0 : x.c1 >= p_)) {
    throw FieldMismatch("element (" + std::to_string(x.c0) + "," + std::to_string(x.c1) +
                        ") is not in canonical form for F_" + std::to_string(p_) +
                        (r_ == 2 ? "^2" : ""));
  }
}

Fq Field::from_int(int64_t n) const {
  auto pv = static_cast<int64_t>(p_);
  int64_t c = n % pv;
  if (c < 0) c += pv;
  return Fq{static_cast<uint64_t>(c), 0};
}

Fq Field::from_rational(const Rational& x) const {
  return Fq{x.mod(p_), 0};
}

Fq Field::make(uint64_t c0, uint64_t c1) const {
  Fq x{c0, c1};
  check(x);
  return x;
}

Fq Field::add(const Fq& x, const Fq& y) const {
  check(x);
  check(y);
  uint64_t a = x.c0 + y.c0;
  uint64_t b = x.c1 + y.c1;
  return Fq{a >= p_ ? a - p_ : a, b >= p_ ? b - p_ : b};
}

Fq Field::sub(const Fq& x, const Fq& y) const {
  check(x);
  check(y);
  uint64_t a = x.c0 + p_ - y.c0;
  uint64_t b = x.c1 + p_ - y.c1;
  return Fq{a >= p_ ? a - p_ : a, b >= p_ ? b - p_ : b};
}

Fq Field::neg(const Fq& x) const {
  check(x);
  return Fq{x.c0 == 0 ? 0 : p_ - x.c0, x.c1 == 0 ? 0 : p_ - x.c1};
}

Fq Field::mul(const Fq& x, const Fq& y) const {
  check(x);
  check(y);
  if (r_ == 1) return Fq{(x.c0 * y.c0) % p_, 0};
  // (a0 + a1 w)(b0 + b1 w) with w^2 = d.  Coordinates are < 2^31, so each
  // product fits uint64 and the two-term sums fit after one reduction.
  uint64_t t0 = (x.c0 * y.c0 + (x.c1 * y.c1) % p_ * d_) % p_;
  uint64_t t1 = (x.c0 * y.c1 + x.c1 * y.c0) % p_;
  return Fq{t0, t1};
}

Fq Field::inv(const Fq& x) const {
  check(x);
  if (is_zero(x)) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
  if (r_ == 1) return Fq{powmod(x.c0, p_ - 2, p_), 0};
  // 1 / (c0 + c1 w) = (c0 - c1 w) / N(x); the norm is nonzero off zero
  // because d is a nonresidue.
  uint64_t n = norm(x);
  uint64_t ninv = powmod(n, p_ - 2, p_);
  Fq conj{x.c0, x.c1 == 0 ? 0 : p_ - x.c1};
  return Fq{(conj.c0 * ninv) % p_, (conj.c1 * ninv) % p_};
}

Fq Field::div(const Fq& x, const Fq& y) const { return mul(x, inv(y)); }

Fq Field::pow(const Fq& x, uint64_t e) const {
  check(x);
  Fq acc = one();
  Fq base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint64_t Field::norm(const Fq& x) const {
  check(x);
  if (r_ == 1) return x.c0;
  // N(c0 + c1 w) = c0^2 - d c1^2, the product with the Frobenius conjugate.
  uint64_t s = (x.c0 * x.c0) % p_;
  uint64_t t = ((x.c1 * x.c1) % p_ * d_) % p_;
  return (s + p_ - t) % p_;
}

int Field::quad_char(const Fq& x) const {
  check(x);
  if (is_zero(x)) return 0;
  // x^((q-1)/2) = N(x)^((p-1)/2) since (q-1)/2 = (p+1) * (p-1)/2 when
  // r == 2, so the prime-field Legendre symbol of the norm decides it.
  return jacobi(static_cast<int64_t>(norm(x)), p_);
}

Fq Field::sqrt(const Fq& x) const {
  check(x);
  if (is_zero(x)) return zero();
  if (quad_char(x) != 1) {
    throw NotASquare("sqrt of nonresidue " + str(x) + " in F_" + std::to_string(p_) +
                     (r_ == 2 ? "^2" : ""));
  }
  Fq y;
  if ((q_ & 3) == 3) {
    y = pow(x, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks with the precomputed 2-Sylow generator.
    int big_m = two_exp_;
    Fq c = sylow_gen_;
    Fq t = pow(x, odd_part_);
    y = pow(x, (odd_part_ + 1) / 2);
    while (!(t == one())) {
      Fq probe = t;
      int i = 0;
      while (!(probe == one())) {
        probe = mul(probe, probe);
        ++i;
      }
      Fq b = c;
      for (int k = 0; k < big_m - i - 1; ++k) b = mul(b, b);
      y = mul(y, b);
      c = mul(b, b);
      t = mul(t, c);
      big_m = i;
    }
  }
  // Of y and -y, return the smaller in (c1, c0) lex order so results do
  // not depend on the path taken above.
  Fq other = neg(y);
  if (other.c1 < y.c1 || (other.c1 == y.c1 && other.c0 < y.c0)) y = other;
  if (!(mul(y, y) == x)) throw Error("sqrt: self-check failed");
  return y;
}

uint64_t Field::index(const Fq& x) const {
  check(x);
  return x.c0 + x.c1 * p_;
}

Fq Field::from_index(uint64_t i) const {
  if (i >= q_) {
    throw FieldMismatch("index " + std::to_string(i) + " out of range for field of size " +
                        std::to_string(q_));
  }
  return Fq{i % p_, i / p_};
}

std::string Field::str(const Fq& x) const {
  check(x);
  if (x.c1 == 0) return std::to_string(x.c0);
  std::string w = x.c1 == 1 ? "w" : std::to_string(x.c1) + "*w";
  if (x.c0 == 0) return w;
  return std::to_string(x.c0) + "+" + w;
}

}  // namespace vgt
