#pragma once

#include <cstdint>
#include <string>

#include "vgt/rational.hpp"

namespace vgt {

// Prime and prime-square finite fields F_p and F_{p^2}, p an odd prime.
//
// F_{p^2} is realized as F_p[w] / (w^2 - d) where d is the smallest
// quadratic nonresidue mod p, so an element is a coordinate pair
// (c0, c1) = c0 + c1*w with both coordinates reduced mod p.  Prime-field
// elements use the same pair with c1 == 0.  The canonical enumeration
// order is by index(x) = c0 + c1*p; everything downstream (element
// iteration, square-root sign choice, report ordering) refers back to it,
// which is what makes reports byte-identical across runs and thread
// counts.

// Validated odd prime modulus.  The bound p < 2^31 keeps q = p^2 and all
// coordinate products inside uint64 without wide intermediates in hot
// loops; it is far beyond the sizes this engine is meant for.
class PrimeModulus {
 public:
  explicit PrimeModulus(uint64_t p);
  uint64_t value() const { return p_; }
  bool operator==(const PrimeModulus& o) const = default;

 private:
  uint64_t p_;
};

// Element of F_p or F_{p^2} in canonical coordinates.  Plain data; the
// owning Field interprets it.
struct Fq {
  uint64_t c0 = 0;
  uint64_t c1 = 0;
  bool operator==(const Fq& o) const = default;
};

class Field {
 public:
  static Field prime(const PrimeModulus& p);
  static Field quadratic(const PrimeModulus& p);

  uint64_t p() const { return p_; }
  int r() const { return r_; }
  uint64_t q() const { return q_; }
  // Defining nonresidue d of the quadratic extension; 0 in the prime case.
  uint64_t nonresidue() const { return d_; }

  Fq zero() const { return Fq{0, 0}; }
  Fq one() const { return Fq{1, 0}; }
  Fq from_int(int64_t n) const;
  Fq from_rational(const Rational& x) const;
  // Builds an element from coordinates, validating canonical range.
  Fq make(uint64_t c0, uint64_t c1) const;

  bool is_zero(const Fq& x) const { return x.c0 == 0 && x.c1 == 0; }

  Fq add(const Fq& x, const Fq& y) const;
  Fq sub(const Fq& x, const Fq& y) const;
  Fq neg(const Fq& x) const;
  Fq mul(const Fq& x, const Fq& y) const;
  Fq inv(const Fq& x) const;
  Fq div(const Fq& x, const Fq& y) const;
  Fq pow(const Fq& x, uint64_t e) const;

  // Norm to the prime subfield: x itself when r == 1, x * x^p when r == 2.
  uint64_t norm(const Fq& x) const;

  // Quadratic character: 0 on zero, +1 on nonzero squares, -1 otherwise.
  int quad_char(const Fq& x) const;

  // Deterministic square root: of the two roots y, -y returns the one with
  // lexicographically smaller (c1, c0).  Throws NotASquare on nonresidues.
  Fq sqrt(const Fq& x) const;

  // Enumeration index c0 + c1*p, a bijection onto [0, q).
  uint64_t index(const Fq& x) const;
  Fq from_index(uint64_t i) const;

  // "7" or "3+2*w" style rendering.
  std::string str(const Fq& x) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && r_ == o.r_; }

 private:
  Field(uint64_t p, int r);
  // Throws FieldMismatch on coordinates outside canonical range.
  void check(const Fq& x) const;

  uint64_t p_;
  int r_;
  uint64_t q_;
  uint64_t d_;
  // q - 1 = 2^e * m with m odd, and a fixed generator of the 2-Sylow
  // subgroup, precomputed for Tonelli-Shanks.
  int two_exp_;
  uint64_t odd_part_;
  Fq sylow_gen_;
};

// Legendre symbol (n | p) for an odd prime p.
int legendre(int64_t n, const PrimeModulus& p);

// Legendre symbol of a rational m/n in lowest terms, defined as (mn | p);
// in particular 0 when p divides either the numerator or the denominator.
int legendre(const Rational& x, const PrimeModulus& p);

// Smallest quadratic nonresidue mod p.
uint64_t find_nonresidue(const PrimeModulus& p);

}  // namespace vgt
